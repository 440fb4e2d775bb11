"""
Closed-form lower bounds on correlation and ambiguity magnitudes, and
optimality certificates for measured families.

Every bound returns a :class:`BoundValue`. A negative radicand means the
bound is vacuous for those parameters; the value is then clamped to 0
and ``applicable`` is False.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

from .seqcore import SequenceFamily, Zone

__all__ = [
    "BoundValue",
    "Certificate",
    "welch_bound",
    "sarwate_tradeoff_deficit",
    "scs_correlation_bound",
    "ding_af_bound",
    "laz_bound_unimodular",
    "zaz_capacity",
    "global_af_bound",
    "sarwate_af_deficit",
    "scs_laz_bound",
    "scs_lcz_bound",
    "scs_global_bounds",
    "aperiodic_laz_bound",
    "certify",
    "BOUNDS",
]

NEAR_OPTIMAL_REL = 0.05


@dataclass(frozen=True)
class BoundValue:
    name: str
    value: float
    applicable: bool
    inputs: dict = field(default_factory=dict)

    def __float__(self):
        return self.value

    def to_json(self) -> dict:
        return {"bound": self.name, "inputs": self.inputs, "value": self.value,
                "applicable": self.applicable}


def _sqrt_bound(name, radicand, inputs, scale=1.0) -> BoundValue:
    if radicand is None or radicand < 0:
        return BoundValue(name, 0.0, False, inputs)
    return BoundValue(name, scale * math.sqrt(radicand), True, inputs)


def _check_positive(**kw):
    for k, v in kw.items():
        if v < 1:
            raise ValueError(f"{k} must be >= 1, got {v}")


def welch_bound(n: int, m: int) -> BoundValue:
    """Welch bound on the maximum periodic correlation of ``m`` sequences of period ``n``."""
    _check_positive(n=n, m=m)
    inputs = {"n": n, "m": m}
    if n * m == 1:
        return BoundValue("welch", 0.0, False, inputs)
    return _sqrt_bound("welch", (m - 1) / (n * m - 1), inputs, n)


def sarwate_tradeoff_deficit(n: int, m: int, lambda_a: float, lambda_c: float) -> float:
    """
    Left side minus one of the Sarwate auto/cross correlation trade-off.

    Any genuine family gives a value of at least ~0.
    """
    if m == 1:
        raise ValueError("the Sarwate trade-off needs m >= 2")
    _check_positive(n=n, m=m)
    return (n - 1) / (n * (m - 1)) * (lambda_a ** 2 / n) + lambda_c ** 2 / n - 1.0


def scs_correlation_bound(n: int, m: int, l: int) -> BoundValue:
    """Correlation bound for spectrally constrained families with ``l`` admissible carriers."""
    _check_positive(n=n, m=m, l=l)
    if l > n:
        raise ValueError("l cannot exceed n")
    inputs = {"n": n, "m": m, "l": l}
    if n * m == 1:
        return BoundValue("scs-correlation", 0.0, False, inputs)
    return _sqrt_bound("scs-correlation", (n * (m - 1) + n - l) / (l * (n * m - 1)), inputs, n)


def ding_af_bound(n: int, m: int) -> BoundValue:
    """Welch-type bound on the global maximum ambiguity magnitude."""
    _check_positive(n=n, m=m)
    inputs = {"n": n, "m": m}
    den = n * n * m - 1
    if den == 0:
        return BoundValue("ding", 0.0, False, inputs)
    return _sqrt_bound("ding", (n * m - 1) / den, inputs, n)


def laz_bound_unimodular(n: int, m: int, zx: int, zy: int) -> BoundValue:
    """
    Lower bound on the in-zone maximum ambiguity magnitude of a unimodular
    family over the zone ``(-zx, zx) x (-zy, zy)``.

    Vacuous (0) when ``m*zx*zy <= n``; that is exactly when a zero ambiguity
    zone of that size may exist.

    Equivalent to ``theta^2 >= n (m zx zy - n) / (m zx zy - zy)``: for
    unimodular members the whole zero-delay column drops out of the
    counting, not only the origin. Compare :func:`scs_laz_bound`, where only
    the origin does and the denominator is ``m zx zy - 1``.
    """
    _check_positive(n=n, m=m, zx=zx, zy=zy)
    inputs = {"n": n, "m": m, "zx": zx, "zy": zy}
    if m * zx == 1:
        return BoundValue("laz", 0.0, False, inputs)
    rad = (m * zx * zy / n - 1) / (m * zx - 1)
    return _sqrt_bound("laz", rad, inputs, n / math.sqrt(zy))


def zaz_capacity(n: int, m: int) -> tuple:
    """
    Largest ``zx*zy`` product and largest area a zero ambiguity zone of an
    ``m``-member unimodular family of period ``n`` can have.

    Returns
    -------
    (int, float)
        ``floor(n/m)`` and ``4n/m``.
    """
    _check_positive(n=n, m=m)
    return n // m, 4 * n / m


def global_af_bound(n: int) -> BoundValue:
    """``sqrt(n)``: no unimodular family beats this global maximum ambiguity magnitude."""
    _check_positive(n=n)
    return BoundValue("global", math.sqrt(n), True, {"n": n})


def sarwate_af_deficit(n: int, m: int, theta_a: float, theta_c: float) -> float:
    """Left side minus one of the auto/cross ambiguity trade-off; >= 0 for real families."""
    _check_positive(n=n, m=m)
    den = m * n - 1
    if den == 0:
        raise ValueError("trade-off undefined for n = m = 1")
    return (n - 1) * theta_a ** 2 / (den * n) + (m - 1) * theta_c ** 2 / den - 1.0


def scs_laz_bound(n: int, m: int, zx: int, zy: int) -> BoundValue:
    """In-zone ambiguity bound for spectrally constrained families."""
    _check_positive(n=n, m=m, zx=zx, zy=zy)
    inputs = {"n": n, "m": m, "zx": zx, "zy": zy}
    p = m * zx * zy
    if p == 1:
        return BoundValue("scs-laz", 0.0, False, inputs)
    return _sqrt_bound("scs-laz", n * (p - n) / (p - 1), inputs)


def scs_lcz_bound(n: int, m: int, l: int, zx: int) -> BoundValue:
    """Low-correlation-zone bound for spectrally constrained families (``zy = 1``)."""
    _check_positive(n=n, m=m, l=l, zx=zx)
    if l > n:
        raise ValueError("l cannot exceed n")
    inputs = {"n": n, "m": m, "l": l, "zx": zx}
    if m * zx == 1:
        return BoundValue("scs-lcz", 0.0, False, inputs)
    return _sqrt_bound("scs-lcz", (m * zx - l) / (l * (m * zx - 1)), inputs, n)


def scs_global_bounds(n: int, l: int) -> tuple:
    """
    Global bounds on the auto and cross ambiguity maxima of spectrally
    constrained sequences with ``l`` admissible carriers.

    Returns
    -------
    (BoundValue, BoundValue)
        Bounds on ``theta_a`` and ``theta_c``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    _check_positive(l=l)
    if l > n:
        raise ValueError("l cannot exceed n")
    inputs = {"n": n, "l": l}
    common = n * math.sqrt((l - 1) / (l * (n - 1)))
    auto = max(n * math.sqrt((n - l) / (l * (n - 1))), common)
    cross = max(n / math.sqrt(l), common)
    return (BoundValue("scs-global-auto", auto, True, inputs),
            BoundValue("scs-global-cross", cross, True, inputs))


def aperiodic_laz_bound(n: int, m: int, zx: int, zy: int) -> BoundValue:
    """In-zone bound on the aperiodic ambiguity magnitude of a unimodular family."""
    _check_positive(n=n, m=m, zx=zx, zy=zy)
    inputs = {"n": n, "m": m, "zx": zx, "zy": zy}
    if m * zx == 1:
        return BoundValue("aperiodic-laz", 0.0, False, inputs)
    num = m * zx * zy - n - zx + 1
    den = (n + zx - 1) * (m * zx - 1) * zy
    return _sqrt_bound("aperiodic-laz", num / den, inputs, n)


BOUNDS = {
    "welch": welch_bound,
    "scs-correlation": scs_correlation_bound,
    "ding": ding_af_bound,
    "laz": laz_bound_unimodular,
    "global": global_af_bound,
    "scs-laz": scs_laz_bound,
    "scs-lcz": scs_lcz_bound,
    "aperiodic-laz": aperiodic_laz_bound,
}


@dataclass(frozen=True)
class Certificate:
    bound: BoundValue
    measured: float
    tol: float

    @property
    def gap(self) -> float:
        return self.measured - self.bound.value

    @property
    def verdict(self) -> str:
        gap = self.gap
        if abs(gap) <= self.tol:
            return "optimal"
        if gap < 0:
            # measured below a lower bound: the input was not what the bound assumes
            return "violates-bound"
        if gap <= NEAR_OPTIMAL_REL * self.bound.value:
            return "near-optimal"
        return "suboptimal"

    def to_json(self) -> dict:
        return {
            "bound": self.bound.name,
            "inputs": self.bound.inputs,
            "bound_value": self.bound.value,
            "applicable": self.bound.applicable,
            "measured": self.measured,
            "gap": self.gap,
            "verdict": self.verdict,
        }


def _select_bound(family: SequenceFamily, zone: Optional[Zone], kind: str, name: Optional[str]):
    n, m = family.n, family.m
    if name is None:
        if kind == "aperiodic":
            name = "aperiodic-laz"
        elif family.mask is not None:
            name = "scs-laz" if zone is not None else "scs-global"
        else:
            name = "laz" if zone is not None else "global"

    if name == "scs-global":
        l = family.mask.admissible_count if family.mask is not None else n
        auto, cross = scs_global_bounds(n, l)
        if m == 1:
            return auto
        return max(auto, cross, key=lambda b: b.value)
    if name in ("laz", "scs-laz", "aperiodic-laz"):
        z = zone if zone is not None else Zone(n, n)
        return BOUNDS[name](n, m, z.zx, z.zy)
    if name == "global":
        return global_af_bound(n)
    if name in ("welch", "ding"):
        return BOUNDS[name](n, m)
    if name == "scs-lcz":
        l = family.mask.admissible_count if family.mask is not None else n
        z = zone if zone is not None else Zone(n, 1)
        return scs_lcz_bound(n, m, l, z.zx)
    if name == "scs-correlation":
        l = family.mask.admissible_count if family.mask is not None else n
        return scs_correlation_bound(n, m, l)
    raise ValueError(f"unknown bound {name!r}")


def certify(family: SequenceFamily, measured: float, zone: Optional[Zone] = None,
            kind: str = "periodic", bound: Optional[str] = None) -> Certificate:
    """
    Compare a measured maximum with the bound that applies to the family.

    Parameters
    ----------
    family : SequenceFamily
        The family the measurement was taken on.
    measured : float
        ``theta_max`` for a global certificate or the in-zone maximum
        (see :func:`lazkit.af.f_pi`) when ``zone`` is given.
    zone : Zone, optional
        Zone the measurement refers to. Omit for a global certificate.
    kind : {'periodic', 'aperiodic'}
    bound : str, optional
        Bound name to force instead of selecting from the family metadata.
    """
    chosen = _select_bound(family, zone, kind, bound)
    if hasattr(measured, "theta_max"):
        measured = measured.theta_max
    return Certificate(chosen, float(measured), 1e-6 * family.n)
