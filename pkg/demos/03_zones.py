"""
Zero and low ambiguity zones.

Search the largest clean rectangle for quadratic families of growing size
and compare it with the ``4N/M`` ceiling. Then show what a failed zone
check reports.
"""

import math

from lazkit import Zone, generic_cubic, is_zone, max_zone, quadratic_family, zaz_capacity
from lazkit.seqcore import SequenceFamily

for m in (1, 2, 4, 8):
    res = max_zone(quadratic_family(32, 2, m), 0.0)
    print(f"N=32 M={m}: zone ({res.zone.zx},{res.zone.zy}), area {res.area}, "
          f"ceiling {zaz_capacity(32, m)[1]:g}")

chk = is_zone(quadratic_family(32, 2, 2), Zone(5, 4), 0.0)
print("zone (5,4) at theta 0:", chk.ok, "witness (tau, nu, |AF|) =", chk.witness)

pair = SequenceFamily([generic_cubic(31, 1, 0, 0), generic_cubic(31, 1, 0, 15)])
print("cubic pair, zone (31,15) at sqrt(31):", is_zone(pair, Zone(31, 15), math.sqrt(31)).ok)
