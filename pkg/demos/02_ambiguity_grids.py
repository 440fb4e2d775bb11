"""
Ambiguity grids of a chirp-like pair.

The auto grid of ``exp(2j*pi*2 t^2/32)`` is zero except on the line
``nu = 4 tau (mod 32)``; the cross grid with the ``b = 16`` shift moves that
line down by 16 Doppler bins. We print where the peaks sit and how long the
fast path takes compared with direct summation.
"""

import time

import numpy as np

from lazkit import periodic_grid, periodic_grid_naive, quadratic_family

fam = quadratic_family(32, 2, 2)
u, v = fam[0], fam[1]

for label, (a, b) in {"auto u,u": (u, u), "cross u,v": (u, v)}.items():
    block = periodic_grid(a, b).block
    taus, nus = np.nonzero(block > 1e-6)
    print(f"{label}: {len(taus)} peaks of height {block.max():.1f}; first few (tau, nu):",
          list(zip(taus[:4].tolist(), nus[:4].tolist())))

rng = np.random.default_rng(0)
x = np.exp(2j * np.pi * rng.random(128))
t0 = time.perf_counter()
fast = periodic_grid(x, x)
t1 = time.perf_counter()
slow = periodic_grid_naive(x, x)
t2 = time.perf_counter()
print(f"N=128 fast {1e3 * (t1 - t0):.1f} ms, naive {1e3 * (t2 - t1):.1f} ms, "
      f"max difference {np.max(np.abs(fast.mags - slow.mags)):.1e}")
