"""
Rebuild the five worked examples and check the published values.

Each ``exampleN()`` returns a list of :class:`Check` rows; a reproduction
passes when every row passes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any

import numpy as np

from .af import dft, family_grid, periodic_grid, theta_stats
from .bounds import aperiodic_laz_bound, certify, global_af_bound, scs_global_bounds, scs_laz_bound, zaz_capacity
from .constructions import (comb_scs_family, dft_orthogonal_family, example5_sequence, generic_cubic,
                            quadratic_family, scs_from_difference_set, verify_difference_set)
from .seqcore import SequenceFamily, Zone, validate_family
from .zones import is_zone, max_zone

__all__ = ["Check", "example1", "example2", "example3", "example4", "example5", "EXAMPLES",
           "EXAMPLE5_ZONE_MAX"]

# in-zone maximum of the 128-chip sequence over (-4,4)x(-4,4), origin
# excluded, from the naive aperiodic oracle
EXAMPLE5_ZONE_MAX = 3.3745826169865882


@dataclass
class Check:
    name: str
    expected: Any
    measured: Any
    passed: bool

    def to_json(self) -> dict:
        def plain(v):
            if isinstance(v, (np.floating, np.integer)):
                return v.item()
            if isinstance(v, (list, tuple)):
                return [plain(x) for x in v]
            return v
        return {"check": self.name, "expected": plain(self.expected),
                "measured": plain(self.measured), "pass": bool(self.passed)}


def _classes(mags: np.ndarray, targets, tol: float) -> bool:
    flat = mags.ravel()
    near = np.zeros(flat.size, dtype=bool)
    for t in targets:
        near |= np.abs(flat - t) <= tol
    return bool(near.all())


def example1() -> list:
    """Two quadratic sequences of period 32 with a zero ambiguity zone of area 64."""
    fam = quadratic_family(32, 2, 2)
    checks = [Check("family validates", True, validate_family(fam).ok, validate_family(fam).ok)]
    grid = family_grid(fam)
    res = max_zone(fam, 0.0, grid=grid)
    checks.append(Check("max zero zone", [4, 4], [res.zone.zx, res.zone.zy], res.zone == Zone(4, 4)))
    _, cap = zaz_capacity(32, 2)
    checks.append(Check("zone area equals 4N/M", cap, res.area, res.area == cap))
    every = all(_classes(periodic_grid(a, b).mags, (0.0, 32.0), 1e-7) for a in fam for b in fam)
    checks.append(Check("grid magnitudes in {0, 32}", [0, 32], "all" if every else "other", every))
    cert = certify(fam, res.in_zone_max, zone=res.zone)
    checks.append(Check("zone certificate", "optimal", cert.verdict, cert.verdict == "optimal"))
    return checks


def example2() -> list:
    """Cubic sequences of prime period 31."""
    p = 31
    u = generic_cubic(p, 1, 0, 0)
    v = generic_cubic(p, 1, 0, 15)
    mags = periodic_grid(u, u).mags
    ok = _classes(mags, (p, 0.0, math.sqrt(p)), 1e-7)
    checks = [Check("auto magnitudes in {31, 0, sqrt 31}", [p, 0, math.sqrt(p)], "all" if ok else "other", ok)]
    stats = theta_stats(SequenceFamily([u]))
    bound = global_af_bound(p).value
    checks.append(Check("theta_max equals sqrt(N)", bound, stats.theta_max,
                        abs(stats.theta_max - bound) <= 1e-6 * p))
    cert = certify(SequenceFamily([u]), stats)
    checks.append(Check("global certificate", "optimal", cert.verdict, cert.verdict == "optimal"))
    chk = is_zone(SequenceFamily([u, v]), Zone(31, 15), math.sqrt(p))
    checks.append(Check("pair has LAZ (-31,31)x(-15,15) at sqrt 31", True, chk.ok, chk.ok))
    return checks


def example3() -> list:
    """Spectrally constrained sequence on the (13,4,1) difference set {4,5,8,10}."""
    ds = verify_difference_set(13, [4, 5, 8, 10])
    scs = scs_from_difference_set(ds)
    h = math.sqrt(13 / 4)
    literal = np.array([0, 0, 0, 0, h, -h, 0, 0, h, 0, h, 0, 0])
    checks = [Check("difference set parameters", [13, 4, 1], list(ds.params), ds.params == (13, 4, 1))]
    checks.append(Check("frequency vector", literal.tolist(), scs.freq.real.tolist(),
                        bool(np.allclose(scs.freq, literal, atol=1e-12))))
    classes = (13.0, 13 * math.sqrt(3) / 4, 13 / 4)
    mags = periodic_grid(scs.sequence, scs.sequence).mags
    ok = _classes(mags, classes, 1e-7)
    checks.append(Check("auto magnitudes in {13, 13 sqrt3/4, 13/4}", list(classes), "all" if ok else "other", ok))
    fam = scs.family
    checks.append(Check("mask compliance", True, validate_family(fam).ok, validate_family(fam).ok))
    stats = theta_stats(fam)
    auto_bound, _ = scs_global_bounds(13, 4)
    checks.append(Check("theta_A meets the SCS bound", auto_bound.value, stats.theta_a,
                        abs(stats.theta_a - auto_bound.value) <= 1e-6 * 13))
    cert = certify(fam, stats)
    checks.append(Check("global SCS certificate", "optimal", cert.verdict, cert.verdict == "optimal"))
    return checks


def example4() -> list:
    """Comb-spectrum family of period 8 with a zero ambiguity zone (-2,2)x(-2,2)."""
    rows = dft_orthogonal_family(4)[[0, 2]]
    fam = comb_scs_family(rows, 2)
    t1 = math.sqrt(2) * np.array([1, 0, 1, 0, 1, 0, 1, 0])
    t2 = math.sqrt(2) * np.array([1, 0, -1, 0, 1, 0, -1, 0])
    ok = np.allclose(dft(fam[0]), t1, atol=1e-12) and np.allclose(dft(fam[1]), t2, atol=1e-12)
    checks = [Check("frequency-domain members", "T1, T2", "match" if ok else "differ", bool(ok))]
    checks.append(Check("mask compliance", True, validate_family(fam).ok, validate_family(fam).ok))
    res = max_zone(fam, 0.0)
    contains = res.zone.zx >= 2 and res.zone.zy >= 2
    checks.append(Check("max zero zone contains (-2,2)x(-2,2)", [2, 2], [res.zone.zx, res.zone.zy], contains))
    # the general comb guarantee is only (-1,1)x(-k,k), area 4k
    checks.append(Check("zone area at least the comb guarantee 4k", 8, res.area, res.area >= 8))
    b = scs_laz_bound(8, 2, 2, 2)
    checks.append(Check("SCS zone bound met with equality", 0.0, res.in_zone_max,
                        b.value == 0.0 and res.in_zone_max <= 1e-9 * 8))
    return checks


def example5() -> list:
    """128-chip binary sequence with a low aperiodic ambiguity zone."""
    s = example5_sequence()
    fam = SequenceFamily([s])
    chips = set(np.round(s.values.real).astype(int).tolist())
    checks = [Check("length 128, entries +-1", [128, [-1, 1]], [s.n, sorted(chips)],
                    s.n == 128 and chips == {-1, 1} and not np.any(s.values.imag))]
    chk = is_zone(fam, Zone(4, 4), EXAMPLE5_ZONE_MAX, kind="aperiodic")
    checks.append(Check("aperiodic in-zone max over (-4,4)x(-4,4)", EXAMPLE5_ZONE_MAX, chk.in_zone_max,
                        abs(chk.in_zone_max - EXAMPLE5_ZONE_MAX) <= 1e-9 and chk.ok))
    b = aperiodic_laz_bound(128, 1, 4, 4)
    checks.append(Check("aperiodic zone bound is vacuous", {"value": 0.0, "applicable": False},
                        {"value": b.value, "applicable": b.applicable},
                        b.value == 0.0 and not b.applicable))
    return checks


EXAMPLES = {1: example1, 2: example2, 3: example3, 4: example4, 5: example5}
