"""
Brute-force checks of the exact identities behind the constructions:
quadratic Gauss-type sums, the zero-delay ambiguity axis of unimodular
sequences, the value distribution of difference-set sequences and the
Weil bound for polynomial character sums over a prime field.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .af import frequency_domain_af, periodic_grid
from .constructions import DifferenceSet, is_prime, scs_from_difference_set
from .seqcore import PolyphaseSequence, roots_of_unity

__all__ = [
    "v_sum_bruteforce",
    "v_sum_closed",
    "Lemma1Result",
    "lemma1_check",
    "lemma4_predicted",
    "lemma4_check",
    "weil_check",
    "selftest",
]


def v_sum_bruteforce(n: int, x: int, y: int) -> complex:
    """``sum_t exp(2j*pi*(x t^2 + y t)/n)`` summed term by term."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    t = np.arange(n, dtype=np.int64)
    return complex(np.sum(roots_of_unity(n)[(x * t * t + y * t) % n]))


def v_sum_closed(n: int, x: int, y: int) -> float:
    """Magnitude of the same sum: ``sqrt(n*g)`` if ``g = gcd(x, n)`` divides ``y``, else 0."""
    if n < 1 or n % 2 == 0:
        raise ValueError("n must be odd and positive")
    g = math.gcd(x, n)
    return math.sqrt(n * g) if y % g == 0 else 0.0


@dataclass(frozen=True)
class Lemma1Result:
    max_off_axis: float
    max_energy_error: float

    def passed(self, n: int) -> bool:
        return self.max_off_axis <= 1e-9 * n and self.max_energy_error <= 1e-6


def lemma1_check(seq) -> Lemma1Result:
    """
    For a unimodular sequence, the zero-delay column of the auto ambiguity
    function vanishes off the origin, and every delay row carries Doppler
    energy ``n^2``.

    Returns the largest ``|AF(0, nu)|`` over ``nu != 0`` and the largest
    relative deviation of ``sum_nu |AF(tau, nu)|^2`` from ``n^2``.
    """
    values = seq.values if isinstance(seq, PolyphaseSequence) else np.asarray(seq, complex)
    n = values.size
    if np.max(np.abs(np.abs(values) - 1)) > 1e-12:
        raise ValueError("sequence is not unimodular")
    block = periodic_grid(values, values).mags[n - 1:, n - 1:]  # tau, nu in 0..n-1
    off_axis = float(block[0, 1:].max()) if n > 1 else 0.0
    energy = np.sum(block ** 2, axis=1)
    err = float(np.max(np.abs(energy - n * n)) / (n * n))
    return Lemma1Result(off_axis, err)


def lemma4_predicted(n: int, n_size: int) -> tuple:
    """Magnitude classes ``(N, N*sqrt(n-1)/n, N/n)`` for an ``(N, n, 1)`` difference-set sequence."""
    return float(n), n * math.sqrt(n_size - 1) / n_size, n / n_size


def lemma4_check(ds: DifferenceSet) -> bool:
    """
    Compare every grid point of the difference-set sequence with its class:
    the origin, the rest of the zero-Doppler row, and everything else.

    The grid is evaluated from the frequency dual, so this stays independent
    of the time-domain FFT path.
    """
    scs = scs_from_difference_set(ds)
    n = ds.n
    peak, row, rest = lemma4_predicted(n, ds.size)
    tol = 1e-9 * n
    for tau in range(n):
        for nu in range(n):
            mag = abs(frequency_domain_af(scs.freq, scs.freq, tau, nu))
            if tau == 0 and nu == 0:
                want = peak
            elif nu == 0:
                want = row
            else:
                want = rest
            if abs(mag - want) > tol:
                return False
    return True


def weil_check(p: int, coeffs) -> tuple:
    """
    Measured ``|sum_x exp(2j*pi*f(x)/p)|`` and the Weil ceiling ``(d-1)*sqrt(p)``.

    Parameters
    ----------
    p : int
        Prime.
    coeffs : sequence of int
        ``f(x) = coeffs[0] + coeffs[1] x + ... + coeffs[d] x^d``.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    coeffs = [int(c) % p for c in coeffs]
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    d = len(coeffs) - 1
    if d < 1:
        raise ValueError("polynomial degree must be >= 1")
    if math.gcd(d, p) != 1:
        raise ValueError("degree must be coprime to p")
    x = np.arange(p, dtype=np.int64)
    val = np.zeros(p, dtype=np.int64)
    for c in reversed(coeffs):
        val = (val * x + c) % p
    measured = abs(complex(np.sum(roots_of_unity(p)[val])))
    return measured, (d - 1) * math.sqrt(p)


def selftest(seed: int = 0) -> list:
    """
    Run every oracle at desk scale.

    Returns
    -------
    list of (str, bool)
        Check name and outcome.
    """
    from .constructions import difference_set_catalog, generic_cubic

    rng = np.random.default_rng(seed)
    results = []

    ok = all(
        abs(abs(v_sum_bruteforce(n, x, y)) - v_sum_closed(n, x, y)) <= 1e-9 * n
        for n in range(1, 26, 2) for x in range(n) for y in range(n)
    )
    results.append(("quadratic sum closed form, odd n <= 25", ok))

    ok = True
    for _ in range(20):
        n = int(rng.integers(2, 65))
        seq = np.exp(2j * np.pi * rng.random(n))
        ok &= lemma1_check(seq).passed(n)
    ok &= lemma1_check(generic_cubic(31, 1)).passed(31)
    results.append(("zero-delay axis and Doppler energy", bool(ok)))

    ok = all(lemma4_check(ds) for ds in difference_set_catalog() if ds.lam == 1)
    results.append(("difference-set sequence value classes", ok))

    ok = True
    for _ in range(200):
        p = int(rng.choice([5, 7, 11, 13]))
        coeffs = [int(c) for c in rng.integers(0, p, size=3)] + [int(rng.integers(1, p))]
        measured, ceiling = weil_check(p, coeffs)
        ok &= measured <= ceiling + 1e-9
    results.append(("Weil bound, random cubics", bool(ok)))
    return results
