"""
Periodic and aperiodic ambiguity functions.

The cross ambiguity function of ``a`` against ``b`` is

    AF(tau, nu) = sum_t a(t) * conj(b(t + tau)) * exp(2j*pi*nu*t/n)

with ``t + tau`` taken modulo ``n`` (periodic) or with zeros outside
``0..n-1`` (aperiodic). Every grid routine has two paths: a naive
direct summation kept as the reference, and an FFT path that treats
each Doppler row as a circular (or zero-padded) cross-correlation.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product

import numpy as np
import scipy.fft

from .seqcore import AmbiguityGrid, PolyphaseSequence, SequenceFamily, Zone, roots_of_unity

__all__ = [
    "periodic_af",
    "aperiodic_af",
    "periodic_grid",
    "periodic_grid_naive",
    "aperiodic_grid",
    "aperiodic_grid_naive",
    "dft",
    "idft",
    "frequency_domain_af",
    "correlation",
    "ThetaStats",
    "theta_stats",
    "family_grid",
    "f_pi",
]


def _workers():
    env = os.environ.get("LAZ_KIT_THREADS")
    if not env:
        return None
    try:
        return max(1, int(env))
    except ValueError:
        return None


def _as_array(x) -> np.ndarray:
    if isinstance(x, PolyphaseSequence):
        return x.values
    return np.asarray(x, dtype=np.complex128)


def _pair(a, b):
    a, b = _as_array(a), _as_array(b)
    if a.shape != b.shape or a.ndim != 1:
        raise ValueError(f"period mismatch: {a.shape} vs {b.shape}")
    return a, b


def periodic_af(a, b, tau: int, nu: int) -> complex:
    """Single point of the periodic cross ambiguity function."""
    a, b = _pair(a, b)
    n = a.size
    t = np.arange(n)
    w = roots_of_unity(n)[(nu * t) % n]
    return complex(np.sum(a * np.conj(b[(t + tau) % n]) * w))


def aperiodic_af(a, b, tau: int, nu: int) -> complex:
    """Single point of the aperiodic cross ambiguity function (zero for ``|tau| >= n``)."""
    a, b = _pair(a, b)
    n = a.size
    if abs(tau) >= n:
        return 0j
    if tau >= 0:
        t = np.arange(0, n - tau)
    else:
        t = np.arange(-tau, n)
    w = roots_of_unity(n)[(nu * t) % n]
    return complex(np.sum(a[t] * np.conj(b[t + tau]) * w))


def correlation(a, b, tau: int) -> complex:
    """Periodic cross-correlation; the ``nu = 0`` slice of :func:`periodic_af`."""
    return periodic_af(a, b, tau, 0)


def _doppler_table(n: int) -> np.ndarray:
    # exp(2j*pi*nu*t/n) indexed [nu, t], built from exact residues
    idx = np.outer(np.arange(n), np.arange(n)) % n
    return roots_of_unity(n)[idx]


def periodic_grid_naive(a, b) -> AmbiguityGrid:
    """Direct O(n^3) evaluation of the periodic grid; reference for the fast path."""
    a, b = _pair(a, b)
    n = a.size
    t = np.arange(n)
    doppler = _doppler_table(n)
    block = np.empty((n, n))
    for tau in range(n):
        prod = a * np.conj(b[(t + tau) % n])
        block[tau] = np.abs(doppler @ prod)
    return AmbiguityGrid.from_block(block, "periodic")


def _periodic_block(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    n = a.size
    workers = _workers()
    # row nu is the circular cross-correlation of a*exp(2j*pi*nu*t/n) with b
    modulated = a[None, :] * _doppler_table(n)
    spec_x = scipy.fft.fft(modulated, axis=1, workers=workers)
    spec_b = scipy.fft.fft(b)
    corr = np.conj(scipy.fft.ifft(spec_b[None, :] * np.conj(spec_x), axis=1, workers=workers))
    return corr.T  # [tau, nu]


def periodic_grid(a, b, method: str = "fft") -> AmbiguityGrid:
    """
    Periodic ambiguity magnitudes over the full delay-Doppler lattice.

    Parameters
    ----------
    a, b : PolyphaseSequence or array_like
        Sequences of a common period ``n``.
    method : {'fft', 'naive'}
        ``'fft'`` costs O(n^2 log n); ``'naive'`` is the direct sum.
    """
    if method == "naive":
        return periodic_grid_naive(a, b)
    if method != "fft":
        raise ValueError(f"unknown method {method!r}")
    a, b = _pair(a, b)
    return AmbiguityGrid.from_block(np.abs(_periodic_block(a, b)), "periodic")


def _signed_doppler(rows: np.ndarray, n: int) -> np.ndarray:
    # rows[tau_index, nu] for nu in 0..n-1 -> signed nu via periodicity in nu
    signed = np.arange(-(n - 1), n) % n
    return rows[:, signed]


def aperiodic_grid_naive(a, b) -> AmbiguityGrid:
    """Direct O(n^3) evaluation of the aperiodic grid, one branch per sign of ``tau``."""
    a, b = _pair(a, b)
    n = a.size
    doppler = _doppler_table(n)
    rows = np.empty((2 * n - 1, n))
    for i, tau in enumerate(range(-(n - 1), n)):
        t = np.arange(0, n - tau) if tau >= 0 else np.arange(-tau, n)
        prod = a[t] * np.conj(b[t + tau])
        rows[i] = np.abs(doppler[:, t] @ prod)
    return AmbiguityGrid(n, "aperiodic", _signed_doppler(rows, n))


def aperiodic_grid(a, b, method: str = "fft") -> AmbiguityGrid:
    """
    Aperiodic ambiguity magnitudes for ``|tau| <= n-1``.

    The fast path zero-pads both sequences so that circular correlation of
    length at least ``2n-1`` equals linear correlation.
    """
    if method == "naive":
        return aperiodic_grid_naive(a, b)
    if method != "fft":
        raise ValueError(f"unknown method {method!r}")
    a, b = _pair(a, b)
    n = a.size
    size = scipy.fft.next_fast_len(2 * n - 1)
    workers = _workers()
    modulated = a[None, :] * _doppler_table(n)
    spec_x = scipy.fft.fft(modulated, n=size, axis=1, workers=workers)
    spec_b = scipy.fft.fft(b, n=size)
    corr = np.conj(scipy.fft.ifft(spec_b[None, :] * np.conj(spec_x), axis=1, workers=workers))
    lags = np.arange(-(n - 1), n) % size
    rows = np.abs(corr[:, lags]).T  # [tau_index, nu]
    return AmbiguityGrid(n, "aperiodic", _signed_doppler(rows, n))


def dft(seq) -> np.ndarray:
    """Unitary DFT: ``A(f) = n**-0.5 * sum_t a(t) exp(-2j*pi*f*t/n)``."""
    return scipy.fft.fft(_as_array(seq), norm="ortho")


def idft(freq) -> np.ndarray:
    """Inverse of :func:`dft`."""
    return scipy.fft.ifft(np.asarray(freq, dtype=np.complex128), norm="ortho")


def frequency_domain_af(A, B, tau: int, nu: int) -> complex:
    """
    Ambiguity function evaluated from frequency duals,
    ``sum_f A(f - nu) * conj(B(f)) * exp(-2j*pi*f*tau/n)``.
    """
    A, B = _pair(A, B)
    n = A.size
    f = np.arange(n)
    w = np.conj(roots_of_unity(n)[(f * tau) % n])
    return complex(np.sum(A[(f - nu) % n] * np.conj(B) * w))


def _grid(a, b, kind: str) -> AmbiguityGrid:
    if kind == "periodic":
        return periodic_grid(a, b)
    if kind == "aperiodic":
        return aperiodic_grid(a, b)
    raise ValueError(f"unknown grid kind {kind!r}")


@dataclass(frozen=True)
class ThetaStats:
    theta_a: float
    theta_c: float

    @property
    def theta_max(self) -> float:
        return max(self.theta_a, self.theta_c)

    def to_json(self) -> dict:
        return {"theta_a": self.theta_a, "theta_c": self.theta_c, "theta_max": self.theta_max}


def _pair_grids(family: SequenceFamily, kind: str):
    for i, j in product(range(family.m), repeat=2):
        yield i, j, _grid(family[i], family[j], kind)


def theta_stats(family: SequenceFamily, kind: str = "periodic") -> ThetaStats:
    """
    Maximal auto (origin excluded) and cross ambiguity magnitudes of a family.

    ``theta_c`` is 0 for a single-sequence family.
    """
    theta_a = theta_c = 0.0
    origin = family.n - 1
    for i, j, grid in _pair_grids(family, kind):
        if i == j:
            mags = grid.mags.copy()
            mags[origin, origin] = 0.0
            theta_a = max(theta_a, float(mags.max()))
        else:
            theta_c = max(theta_c, float(grid.mags.max()))
    return ThetaStats(theta_a, theta_c)


def family_grid(family: SequenceFamily, kind: str = "periodic") -> AmbiguityGrid:
    """
    Elementwise maximum over all ordered member pairs, with the auto
    ambiguity origin left out. This is the quantity zone searches bound.
    """
    n = family.n
    acc = np.zeros((2 * n - 1, 2 * n - 1))
    for i, j, grid in _pair_grids(family, kind):
        mags = grid.mags
        if i == j:
            mags = mags.copy()
            mags[n - 1, n - 1] = 0.0
        np.maximum(acc, mags, out=acc)
    return AmbiguityGrid(n, kind, acc)


def f_pi(family: SequenceFamily, zone: Zone, kind: str = "periodic", grid: AmbiguityGrid = None) -> float:
    """Largest ambiguity magnitude inside ``zone`` (auto origin excluded)."""
    n = family.n
    if zone.zx > n or zone.zy > n:
        raise ValueError(f"zone {zone} exceeds the (-{n}, {n}) lattice")
    if grid is None:
        grid = family_grid(family, kind)
    c = n - 1
    window = grid.mags[c - zone.zx + 1: c + zone.zx, c - zone.zy + 1: c + zone.zy]
    return float(window.max())
