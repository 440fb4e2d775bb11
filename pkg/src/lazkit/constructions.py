"""
Sequence constructions with provable ambiguity properties.

- cubic phase sequences ``w^(a t^3 + b t^2 + c t)`` over a prime period,
- quadratic phase (chirp-like) sequences and families with a zero
  ambiguity zone,
- spectrally constrained sequences from cyclic difference sets and from
  comb-like upsampling of an orthogonal family,
- a catalogue of small cyclic difference sets and a 128-chip binary
  sequence with a low aperiodic ambiguity zone.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .af import dft, idft
from .seqcore import PolyphaseSequence, SequenceFamily, SpectralMask, Zone, make_polyphase

__all__ = [
    "is_prime",
    "cubic_family",
    "generic_cubic",
    "predicted_cubic_cross_af",
    "quadratic_sequence",
    "quadratic_family",
    "predicted_quadratic_zaz",
    "DifferenceSet",
    "verify_difference_set",
    "scs_from_difference_set",
    "comb_scs_family",
    "dft_orthogonal_family",
    "difference_set_catalog",
    "example5_sequence",
    "ScsConstruction",
]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    return all(n % d for d in range(3, math.isqrt(n) + 1, 2))


def _require_cubic_prime(n: int):
    if not (n >= 5 and is_prime(n)):
        raise ValueError(f"n must be an odd prime >= 5, got {n}")


def generic_cubic(n: int, a: int, b: int = 0, c: int = 0) -> PolyphaseSequence:
    """
    The sequence ``u(t) = exp(2j*pi*(a t^3 + b t^2 + c t)/n)`` for prime ``n``.

    Its auto ambiguity magnitude is ``n`` at the origin, 0 elsewhere on the
    zero-delay axis and ``sqrt(n)`` everywhere else.
    """
    _require_cubic_prime(n)
    if a % n == 0:
        raise ValueError("a must be nonzero mod n; use quadratic_sequence for a = 0")
    t = np.arange(n, dtype=np.int64)
    return make_polyphase(n, (a * t ** 3 + b * t ** 2 + c * t) % n)


def cubic_family(n: int) -> SequenceFamily:
    """
    All ``n`` linear-phase shifts ``w^(t^3 + j t)``, ``j = 0..n-1``.

    Member counts of ``n - 1`` are also quoted for this family (leaving out
    one shift); the provenance records both.
    """
    _require_cubic_prime(n)
    members = [generic_cubic(n, 1, 0, j) for j in range(n)]
    return SequenceFamily(members, provenance={"construction": "cubic", "n": n, "size": n,
                                                    "size_without_one_shift": n - 1})


def predicted_cubic_cross_af(p: int, params1: Sequence[int], params2: Sequence[int],
                             tau: int, nu: int) -> tuple:
    """
    Predicted cross ambiguity magnitude between two generic cubic sequences.

    Parameters
    ----------
    p : int
        Odd prime period.
    params1, params2 : (a, b, c)
        Coefficients of the two sequences.

    Returns
    -------
    (str, float)
        ``('exact', value)`` when the leading coefficients agree, and
        ``('ceiling', 2*sqrt(p))`` when they differ and only an upper bound
        is known.
    """
    if not (p > 2 and is_prime(p)):
        raise ValueError("p must be an odd prime")
    a1, b1, c1 = params1
    a2, b2, c2 = params2
    if (a1 - a2) % p:
        return "ceiling", 2 * math.sqrt(p)
    x = (b1 - 3 * a2 * tau - b2) % p
    y = (c1 - 3 * a2 * tau * tau - 2 * b2 * tau - c2 + nu) % p
    if x:
        return "exact", math.sqrt(p)
    return "exact", float(p) if y == 0 else 0.0


def quadratic_sequence(n: int, a: int, b: int = 0) -> PolyphaseSequence:
    """``u(t) = exp(2j*pi*(a t^2 + b t)/n)``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    t = np.arange(n, dtype=np.int64)
    return make_polyphase(n, (a * t * t + b * t) % n)


def quadratic_family(n: int, a: int, m: int) -> SequenceFamily:
    """
    ``m`` quadratic phase sequences sharing ``a`` with linear terms
    ``b_i = i * floor(n/m)``.

    When ``m`` divides ``n`` the family has a zero ambiguity zone of area
    ``4n/m``, which is the largest any ``m``-member unimodular family can have.
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    step = n // m
    if step == 0:
        raise ValueError("m cannot exceed n")
    members = [quadratic_sequence(n, a, i * step) for i in range(m)]
    return SequenceFamily(members, provenance={"construction": "quadratic", "n": n, "a": a, "m": m})


def predicted_quadratic_zaz(n: int, a: int) -> Zone:
    """Zero auto ambiguity zone ``(-n/r, n/r) x (-r, r)`` of a quadratic sequence, ``r = gcd(2a, n)``."""
    r = math.gcd(2 * a, n)
    if r <= 1:
        raise ValueError(f"gcd(2a, n) = {r}; the zero-zone prediction needs r > 1")
    return Zone(n // r, r)


@dataclass(frozen=True)
class DifferenceSet:
    n: int
    d_set: tuple
    lam: int

    @property
    def size(self) -> int:
        return len(self.d_set)

    @property
    def params(self) -> tuple:
        return self.n, self.size, self.lam


def _difference_function(n: int, d_set) -> np.ndarray:
    ind = np.zeros(n, dtype=np.int64)
    ind[list(d_set)] = 1
    # d(eps) = |(eps + D) ∩ D|
    return np.array([int(np.dot(np.roll(ind, eps), ind)) for eps in range(n)])


def verify_difference_set(n: int, d_set) -> DifferenceSet:
    """
    Check that every nonzero cyclic shift of ``d_set`` meets it in the same
    number of points.

    Raises
    ------
    ValueError
        If the difference function is not constant on nonzero shifts.
    """
    elems = sorted({int(d) % n for d in d_set})
    if not elems:
        raise ValueError("difference set must be nonempty")
    if len(elems) != len(list(d_set)):
        raise ValueError("difference set has repeated residues")
    counts = _difference_function(n, elems)[1:]
    if counts.size and not np.all(counts == counts[0]):
        raise ValueError(f"not a cyclic difference set mod {n}: counts {counts.tolist()}")
    lam = int(counts[0]) if counts.size else 0
    return DifferenceSet(n, tuple(elems), lam)


@dataclass(frozen=True)
class ScsConstruction:
    """Frequency vector, time-domain sequence and mask of a difference-set SCS."""

    freq: np.ndarray
    sequence: PolyphaseSequence
    mask: SpectralMask
    diff_set: DifferenceSet

    @property
    def family(self) -> SequenceFamily:
        n, k, _ = self.diff_set.params
        return SequenceFamily([self.sequence], mask=self.mask,
                              provenance={"construction": "diffset-scs", "n": n,
                                          "set": list(self.diff_set.d_set)})


def scs_from_difference_set(ds: DifferenceSet) -> ScsConstruction:
    """
    Spectrally constrained sequence supported on an ``(N, n, 1)`` difference set.

    ``C(f) = sqrt(N/n) * (-1)^f`` on the set and 0 elsewhere; the time
    sequence is its inverse unitary DFT and has energy ``N``.
    """
    if ds.lam != 1:
        raise ValueError(f"construction needs lambda = 1, got {ds.lam}")
    n, k = ds.n, ds.size
    freq = np.zeros(n, dtype=np.complex128)
    for f in ds.d_set:
        freq[f] = math.sqrt(n / k) * (-1) ** f
    seq = PolyphaseSequence(idft(freq))
    mask = SpectralMask(n, set(range(n)) - set(ds.d_set))
    return ScsConstruction(freq, seq, mask, ds)


def dft_orthogonal_family(n0: int) -> np.ndarray:
    """Rows ``f -> exp(2j*pi*i*f/n0)``, ``i = 0..n0-1``: unimodular and pairwise orthogonal."""
    if n0 < 1:
        raise ValueError("n0 must be >= 1")
    idx = np.outer(np.arange(n0), np.arange(n0)) % n0
    rows = np.exp(2j * np.pi * idx / n0)
    # snap the real/imaginary parts that are exact zeros or +-1 for small n0
    rows.real[np.abs(rows.real) < 1e-15] = 0.0
    rows.imag[np.abs(rows.imag) < 1e-15] = 0.0
    return rows


def comb_scs_family(o_family, k: int) -> SequenceFamily:
    """
    Upsample each frequency-domain row by ``k``, zeroing the ``k-1`` carriers
    in between, and return the time-domain duals.

    The result has period ``k*n0`` and no ambiguity whenever ``k`` does not
    divide the Doppler shift. Distinct members are orthogonal at zero delay,
    so the family has a zero ambiguity zone containing ``(-1,1) x (-k,k)``.

    Parameters
    ----------
    o_family : array_like, shape (m, n0)
        Unimodular, pairwise orthogonal frequency-domain rows.
    k : int
        Comb factor.
    """
    rows = np.atleast_2d(np.asarray(o_family, dtype=np.complex128))
    m, n0 = rows.shape
    if k < 1:
        raise ValueError("k must be >= 1")
    if np.max(np.abs(np.abs(rows) - 1.0)) > 1e-12:
        raise ValueError("input rows must be unimodular")
    gram = rows @ rows.conj().T
    if np.max(np.abs(gram - n0 * np.eye(m))) > 1e-9 * n0:
        raise ValueError("input rows are not pairwise orthogonal")
    n = k * n0
    members = []
    for row in rows:
        spec = np.zeros(n, dtype=np.complex128)
        spec[::k] = math.sqrt(k) * row
        members.append(PolyphaseSequence(idft(spec)))
    mask = SpectralMask(n, {f for f in range(n) if f % k})
    return SequenceFamily(members, mask=mask,
                          provenance={"construction": "comb-scs", "n0": n0, "k": k, "m": m})


_CATALOG = (
    (7, (1, 2, 4)),
    (13, (4, 5, 8, 10)),
    (21, (3, 6, 7, 12, 14)),
    (31, (1, 5, 11, 24, 25, 27)),
    (57, (0, 1, 3, 13, 32, 36, 43, 52)),
    (73, (1, 2, 4, 8, 16, 32, 37, 55, 64)),
)


def difference_set_catalog() -> list:
    """Small Singer difference sets with ``lambda = 1``, each checked on the way out."""
    return [verify_difference_set(n, d) for n, d in _CATALOG]


_EXAMPLE5 = (
    "-+--++-+-++++++---+--++"
    "-+---++-+-++++++--++-+-"
    "---+-+++--+-----++-+-++"
    "++--+---+-+++--+-+++++-"
    "+--+++-+++--+-+++++--+-"
    "+++-+++++---+"
)


def example5_sequence() -> PolyphaseSequence:
    """Length-128 binary sequence with aperiodic low ambiguity zone ``(-4,4) x (-4,4)``."""
    chips = np.array([1.0 if c == "+" else -1.0 for c in _EXAMPLE5])
    assert chips.size == 128
    return PolyphaseSequence(chips.astype(np.complex128))
