"""
Domain types shared by the rest of the package.

Sequences are finite, length-``n`` complex vectors treated as one period.
Sequences built from integer phases keep those phases so that values can
always be regenerated exactly, which matters when a test wants to tell a
true zero of the ambiguity function from round-off.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional, Sequence

import numpy as np

UNIMODULAR_TOL = 1e-12
DISTINCT_TOL = 1e-9
MASK_ZERO_TOL = 1e-18
MASK_LEVEL_TOL = 1e-9

__all__ = [
    "PolyphaseSequence",
    "SequenceFamily",
    "SpectralMask",
    "Zone",
    "AmbiguityGrid",
    "ValidationReport",
    "make_polyphase",
    "validate_family",
    "roots_of_unity",
]


def roots_of_unity(n: int) -> np.ndarray:
    """Table of ``exp(2j*pi*k/n)`` for ``k = 0..n-1``."""
    k = np.arange(n)
    return np.exp(2j * np.pi * k / n)


def _frozen(arr: np.ndarray) -> np.ndarray:
    arr = np.array(arr, copy=True)
    arr.setflags(write=False)
    return arr


@dataclass(frozen=True, eq=False)
class PolyphaseSequence:
    """
    One period of a complex sequence.

    Parameters
    ----------
    values : array_like of complex
        The ``n`` samples ``u(0), ..., u(n-1)``.
    exact_phases : array_like of int, optional
        Integer phase numerators modulo ``n``; ``u(t) = exp(2j*pi*p(t)/n)``.
        When given, ``values`` must agree with them to within 1e-12.
    """

    values: np.ndarray
    exact_phases: Optional[np.ndarray] = None
    unimodular: bool = field(init=False)

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.complex128)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("sequence values must be a non-empty 1-D array")
        n = values.size
        if self.exact_phases is not None:
            phases = np.asarray(self.exact_phases)
            if phases.shape != (n,):
                raise ValueError(f"expected {n} phases, got shape {phases.shape}")
            if not np.issubdtype(phases.dtype, np.integer):
                raise TypeError("exact phases must be integers")
            phases = np.mod(phases.astype(np.int64), n)
            expected = roots_of_unity(n)[phases]
            if np.max(np.abs(expected - values)) > UNIMODULAR_TOL:
                raise ValueError("values do not match exact phases")
            object.__setattr__(self, "exact_phases", _frozen(phases))
        object.__setattr__(self, "values", _frozen(values))
        unimodular = bool(np.all(np.abs(np.abs(values) - 1.0) <= UNIMODULAR_TOL))
        object.__setattr__(self, "unimodular", unimodular)

    @property
    def n(self) -> int:
        return self.values.size

    @property
    def energy(self) -> float:
        return float(np.sum(np.abs(self.values) ** 2))

    def __len__(self):
        return self.n

    def __array__(self, dtype=None, copy=None):
        return np.asarray(self.values, dtype=dtype)

    def __repr__(self):
        kind = "exact" if self.exact_phases is not None else "complex"
        return f"PolyphaseSequence(n={self.n}, {kind}, unimodular={self.unimodular})"

    def to_json(self) -> dict:
        out = {"n": self.n}
        if self.exact_phases is not None:
            out["phases"] = [int(p) for p in self.exact_phases]
        else:
            out["values"] = [[float(v.real), float(v.imag)] for v in self.values]
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "PolyphaseSequence":
        n = int(obj["n"])
        if obj.get("phases") is not None:
            return make_polyphase(n, obj["phases"])
        if obj.get("values") is None:
            raise ValueError("sequence JSON needs 'phases' or 'values'")
        pairs = np.asarray(obj["values"], dtype=float)
        if pairs.shape != (n, 2):
            raise ValueError(f"'values' must be {n} [re, im] pairs")
        return cls(pairs[:, 0] + 1j * pairs[:, 1])


def make_polyphase(n: int, phases: Sequence[int]) -> PolyphaseSequence:
    """
    Build the sequence ``exp(2j*pi*phases[t]/n)`` with exact phases kept.

    Examples
    --------
    >>> make_polyphase(5, [0, 1, 3, 2, 4]).exact_phases.tolist()
    [0, 1, 3, 2, 4]
    """
    phases = np.asarray(phases)
    if phases.shape != (n,):
        raise ValueError(f"expected {n} phases, got {phases.size}")
    if not np.issubdtype(phases.dtype, np.integer):
        raise TypeError("phases must be integers")
    phases = np.mod(phases.astype(np.int64), n)
    return PolyphaseSequence(roots_of_unity(n)[phases], phases)


@dataclass(frozen=True)
class SpectralMask:
    """Forbidden carrier set of a spectrally constrained family."""

    n: int
    forbidden: frozenset

    def __post_init__(self):
        forbidden = frozenset(int(f) for f in self.forbidden)
        if any(f < 0 or f >= self.n for f in forbidden):
            raise ValueError("forbidden carriers must lie in 0..n-1")
        if len(forbidden) >= self.n:
            raise ValueError("mask leaves no admissible carrier")
        object.__setattr__(self, "forbidden", forbidden)

    @property
    def admissible_count(self) -> int:
        return self.n - len(self.forbidden)

    @property
    def admissible(self) -> list:
        return [f for f in range(self.n) if f not in self.forbidden]

    def complies(self, seq: PolyphaseSequence) -> bool:
        """True when the sequence's spectrum is zero on the mask and flat elsewhere."""
        if seq.n != self.n:
            return False
        power = np.abs(np.fft.fft(seq.values, norm="ortho")) ** 2
        forbidden = np.zeros(self.n, dtype=bool)
        forbidden[list(self.forbidden)] = True
        level = seq.n / self.admissible_count
        return bool(
            np.all(power[forbidden] <= MASK_ZERO_TOL)
            and np.all(np.abs(power[~forbidden] - level) <= MASK_LEVEL_TOL)
        )

    def to_json(self) -> dict:
        return {"forbidden": sorted(self.forbidden)}


@dataclass(frozen=True)
class SequenceFamily:
    """
    A set of sequences sharing one period, optionally spectrally constrained.

    The constructor only requires a non-empty member list; use
    :func:`validate_family` to check periods, distinctness and the mask.
    """

    members: tuple
    mask: Optional[SpectralMask] = None
    provenance: Optional[dict] = None

    def __post_init__(self):
        members = tuple(s if isinstance(s, PolyphaseSequence) else PolyphaseSequence(s)
                        for s in self.members)
        if not members:
            raise ValueError("a family needs at least one member")
        object.__setattr__(self, "members", members)

    @property
    def n(self) -> int:
        return self.members[0].n

    @property
    def m(self) -> int:
        return len(self.members)

    def __len__(self):
        return self.m

    def __iter__(self) -> Iterator[PolyphaseSequence]:
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]

    def to_json(self) -> dict:
        out = {
            "format": 1,
            "n": self.n,
            "members": [s.to_json() for s in self.members],
        }
        if self.mask is not None:
            out["mask"] = self.mask.to_json()
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out

    @classmethod
    def from_json(cls, obj: dict) -> "SequenceFamily":
        n = int(obj["n"])
        members = [PolyphaseSequence.from_json(m) for m in obj["members"]]
        mask = None
        if obj.get("mask") is not None:
            mask = SpectralMask(n, obj["mask"]["forbidden"])
        return cls(members, mask=mask, provenance=obj.get("provenance"))


@dataclass
class ValidationReport:
    period_consistent: bool
    unimodular: list
    distinct: bool
    duplicate_pairs: list
    mask_compliant: Optional[list] = None
    problems: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "period_consistent": self.period_consistent,
            "unimodular": self.unimodular,
            "distinct": self.distinct,
            "duplicate_pairs": [list(p) for p in self.duplicate_pairs],
            "mask_compliant": self.mask_compliant,
            "problems": self.problems,
        }


def validate_family(family: SequenceFamily) -> ValidationReport:
    """
    Check a family and report every failure instead of raising.

    Non-unimodular members are reported but are not a failure by
    themselves; spectrally constrained sequences are not unimodular.
    """
    problems = []
    n = family.n
    periods = {s.n for s in family.members}
    period_ok = len(periods) == 1
    if not period_ok:
        problems.append(f"members have different periods {sorted(periods)}")

    unimodular = [s.unimodular for s in family.members]

    dups = []
    if period_ok:
        for i, j in combinations(range(family.m), 2):
            diff = np.max(np.abs(family[i].values - family[j].values))
            if diff <= DISTINCT_TOL:
                dups.append((i, j))
    for i, j in dups:
        problems.append(f"members {i} and {j} are identical")

    compliant = None
    if family.mask is not None:
        if family.mask.n != n:
            problems.append("mask period differs from family period")
            compliant = [False] * family.m
        else:
            compliant = [family.mask.complies(s) for s in family.members]
            for i, ok in enumerate(compliant):
                if not ok:
                    problems.append(f"member {i} violates the spectral mask")

    return ValidationReport(period_ok, unimodular, not dups, dups, compliant, problems)


@dataclass(frozen=True)
class Zone:
    """
    Origin-centred open rectangle ``(-zx, zx) x (-zy, zy)`` on the integer
    delay-Doppler lattice.
    """

    zx: int
    zy: int

    def __post_init__(self):
        for v in (self.zx, self.zy):
            if int(v) != v or v < 1:
                raise ValueError("zone half-extents must be positive integers")
        object.__setattr__(self, "zx", int(self.zx))
        object.__setattr__(self, "zy", int(self.zy))

    @property
    def area(self) -> int:
        return 4 * self.zx * self.zy

    def contains(self, tau: int, nu: int) -> bool:
        return abs(tau) <= self.zx - 1 and abs(nu) <= self.zy - 1

    def points(self) -> Iterator[tuple]:
        for tau in range(1 - self.zx, self.zx):
            for nu in range(1 - self.zy, self.zy):
                yield tau, nu

    def to_json(self) -> dict:
        return {"zx": self.zx, "zy": self.zy, "area": self.area}


@dataclass(frozen=True, eq=False)
class AmbiguityGrid:
    """
    Ambiguity magnitudes on the signed lattice.

    ``mags[tau + n - 1, nu + n - 1]`` holds ``|AF(tau, nu)|`` for
    ``tau, nu`` in ``[-(n-1), n-1]``.
    """

    n: int
    kind: str
    mags: np.ndarray

    def __post_init__(self):
        if self.kind not in ("periodic", "aperiodic"):
            raise ValueError(f"unknown grid kind {self.kind!r}")
        size = 2 * self.n - 1
        mags = np.asarray(self.mags, dtype=float)
        if mags.shape != (size, size):
            raise ValueError(f"grid must be {size}x{size}, got {mags.shape}")
        object.__setattr__(self, "mags", _frozen(mags))

    @classmethod
    def from_block(cls, block: np.ndarray, kind: str = "periodic") -> "AmbiguityGrid":
        """Extend an ``n x n`` block indexed by ``tau, nu mod n`` to the signed lattice."""
        n = block.shape[0]
        signed = np.arange(-(n - 1), n) % n
        return cls(n, kind, block[np.ix_(signed, signed)])

    @property
    def taus(self) -> np.ndarray:
        return np.arange(-(self.n - 1), self.n)

    @property
    def nus(self) -> np.ndarray:
        return self.taus

    @property
    def block(self) -> np.ndarray:
        """The ``n x n`` quadrant ``tau, nu in [0, n-1]``; it determines a periodic grid."""
        return self.mags[self.n - 1:, self.n - 1:]

    def at(self, tau: int, nu: int) -> float:
        n = self.n
        if abs(tau) >= n:
            if self.kind == "aperiodic":
                return 0.0
            tau %= n
        # integer Doppler is periodic in nu for both kinds
        if abs(nu) >= n:
            nu %= n
        return float(self.mags[tau + n - 1, nu + n - 1])

    def to_json(self) -> dict:
        return {"format": 1, "n": self.n, "kind": self.kind, "mags": self.mags.tolist()}

    @classmethod
    def from_json(cls, obj: dict) -> "AmbiguityGrid":
        return cls(int(obj["n"]), obj["kind"], np.asarray(obj["mags"], dtype=float))

    def to_csv(self) -> str:
        lines = ["tau,nu,mag"]
        for i, tau in enumerate(self.taus):
            for j, nu in enumerate(self.nus):
                lines.append(f"{tau},{nu},{self.mags[i, j]:.17g}")
        return "\n".join(lines) + "\n"
