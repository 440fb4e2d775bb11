"""
Search for the largest origin-centred rectangle on which a family's
ambiguity magnitudes stay under a threshold.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional

import numpy as np

from .af import family_grid, f_pi
from .bounds import aperiodic_laz_bound, certify, laz_bound_unimodular, scs_laz_bound, zaz_capacity
from .seqcore import AmbiguityGrid, SequenceFamily, Zone

__all__ = ["ZoneSearchResult", "ZoneCheck", "max_zone", "is_zone", "zone_report", "zone_max_table"]


def _tol(n: int) -> float:
    return 1e-9 * n


def zone_max_table(grid: AmbiguityGrid) -> np.ndarray:
    """
    ``table[zx-1, zy-1]`` is the largest magnitude with ``|tau| <= zx-1``
    and ``|nu| <= zy-1``.
    """
    n = grid.n
    c = n - 1
    m = grid.mags
    # fold the four sign quadrants onto |tau|, |nu|
    folded = np.maximum.reduce([
        m[c:, c:],
        m[c::-1, c:],
        m[c:, c::-1],
        m[c::-1, c::-1],
    ])
    return np.maximum.accumulate(np.maximum.accumulate(folded, axis=0), axis=1)


@dataclass(frozen=True)
class ZoneSearchResult:
    zone: Zone
    theta: float
    in_zone_max: float

    @property
    def area(self) -> int:
        return self.zone.area

    def to_json(self) -> dict:
        return {"zone": self.zone.to_json(), "theta": self.theta,
                "in_zone_max": self.in_zone_max}


def max_zone(family: SequenceFamily, theta: float = 0.0, kind: str = "periodic",
             grid: Optional[AmbiguityGrid] = None) -> ZoneSearchResult:
    """
    Largest-area zone whose in-zone maximum is at most ``theta``.

    Candidates are all ``(zx, zy)`` with ``1 <= zx, zy <= n``. Ties in area
    go to the larger ``zx`` and then the larger ``zy``. Zone ``(1, 1)``
    holds only the excluded auto origin (and the cross origins), so some
    zone always qualifies when ``theta`` exceeds the cross-origin values.
    """
    if theta < 0:
        raise ValueError("theta must be nonnegative")
    if grid is None:
        grid = family_grid(family, kind)
    n = grid.n
    table = zone_max_table(grid)
    ok = table <= theta + _tol(n)
    if not ok.any():
        raise ValueError("no zone meets the threshold; cross ambiguity at the origin exceeds it")
    zx, zy = np.meshgrid(np.arange(1, n + 1), np.arange(1, n + 1), indexing="ij")
    area = np.where(ok, zx * zy, -1)
    best = area.max()
    cand = np.argwhere(area == best)
    # lexicographic max on (zx, zy)
    i, j = max(map(tuple, cand))
    return ZoneSearchResult(Zone(i + 1, j + 1), float(theta), float(table[i, j]))


class ZoneCheck(NamedTuple):
    ok: bool
    in_zone_max: float
    witness: Optional[tuple]


def is_zone(family: SequenceFamily, zone: Zone, theta: float = 0.0, kind: str = "periodic",
            grid: Optional[AmbiguityGrid] = None) -> ZoneCheck:
    """
    Check whether ``zone`` is a low ambiguity zone at level ``theta``.

    On failure ``witness`` is ``(tau, nu, magnitude)`` of the largest
    in-zone magnitude.
    """
    if grid is None:
        grid = family_grid(family, kind)
    n = grid.n
    if zone.zx > n or zone.zy > n:
        raise ValueError(f"zone {zone} exceeds the lattice of period {n}")
    c = n - 1
    window = grid.mags[c - zone.zx + 1: c + zone.zx, c - zone.zy + 1: c + zone.zy]
    peak = float(window.max())
    if peak <= theta + _tol(n):
        return ZoneCheck(True, peak, None)
    i, j = np.unravel_index(np.argmax(window), window.shape)
    return ZoneCheck(False, peak, (int(i) - zone.zx + 1, int(j) - zone.zy + 1, peak))


def zone_report(family: SequenceFamily, zone: Zone, kind: str = "periodic",
                grid: Optional[AmbiguityGrid] = None) -> dict:
    """Measured in-zone maximum, zone area, capacity slack and the matching bound."""
    n, m = family.n, family.m
    if grid is None:
        grid = family_grid(family, kind)
    measured = f_pi(family, zone, kind, grid=grid)
    _, area_cap = zaz_capacity(n, m)
    if kind == "aperiodic":
        bound = aperiodic_laz_bound(n, m, zone.zx, zone.zy)
    elif family.mask is not None:
        bound = scs_laz_bound(n, m, zone.zx, zone.zy)
    else:
        bound = laz_bound_unimodular(n, m, zone.zx, zone.zy)
    cert = certify(family, measured, zone=zone, kind=kind, bound=bound.name)
    return {
        "format": 1,
        "n": n,
        "m": m,
        "kind": kind,
        "zone": zone.to_json(),
        "in_zone_max": measured,
        "area": zone.area,
        "capacity_area": area_cap,
        "capacity_slack": area_cap - zone.area,
        "certificate": cert.to_json(),
    }
