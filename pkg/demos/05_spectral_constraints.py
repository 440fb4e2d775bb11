"""
Sequences that only use some carriers.

A cyclic difference set picks the admissible carriers; the resulting
sequence has three ambiguity levels. A comb upsampling of DFT rows gives a
family whose ambiguity vanishes off every k-th Doppler bin.
"""

import numpy as np

from lazkit import (comb_scs_family, dft_orthogonal_family, difference_set_catalog, max_zone,
                    periodic_grid, scs_from_difference_set, theta_stats, certify, validate_family)

for ds in difference_set_catalog():
    scs = scs_from_difference_set(ds)
    levels = np.unique(np.round(periodic_grid(scs.sequence, scs.sequence).mags, 8))
    cert = certify(scs.family, theta_stats(scs.family))
    print(f"{ds.params}: levels {levels.tolist()}, certificate {cert.verdict}")

fam = comb_scs_family(dft_orthogonal_family(4)[[0, 2]], 2)
print("comb family mask ok:", validate_family(fam).ok)
res = max_zone(fam, 0.0)
print(f"comb family zero zone ({res.zone.zx},{res.zone.zy}), area {res.area}")
