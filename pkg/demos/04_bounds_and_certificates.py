"""
Lower bounds and how measured families compare with them.
"""

from lazkit import (certify, cubic_family, f_pi, laz_bound_unimodular, quadratic_family, theta_stats,
                    welch_bound, Zone)
from lazkit.bounds import ding_af_bound, global_af_bound
from lazkit.seqcore import SequenceFamily

n = 31
print(f"N={n}: welch(M=31) {welch_bound(n, 31).value:.4f}, ding(M=1) {ding_af_bound(n, 1).value:.4f}, "
      f"global {global_af_bound(n).value:.4f}")

# the zone bound grows as the zone does and reaches sqrt(N) at the full lattice
for zx, zy in [(4, 4), (16, 8), (31, 15), (31, 31)]:
    print(f"  laz bound M=2 zone ({zx},{zy}): {laz_bound_unimodular(n, 2, zx, zy).value:.4f}")

# one cubic sequence sits exactly on the global bound; the whole family does not,
# because its members are Doppler shifts of each other and collide at tau = 0
fam = cubic_family(n)
for label, f in (("single cubic", SequenceFamily([fam[0]])), ("all 31 shifts", fam)):
    stats = theta_stats(f)
    cert = certify(f, stats)
    print(f"{label}: theta_max {stats.theta_max:.4f} vs {cert.bound.name} {cert.bound.value:.4f} -> {cert.verdict}")

q = quadratic_family(32, 2, 2)
cert = certify(q, f_pi(q, Zone(4, 4)), zone=Zone(4, 4))
print(f"quadratic pair N=32, zone (4,4): measured {cert.measured:.1e} vs {cert.bound.value} -> {cert.verdict}")
