"""Unitary characters on ideals of the two principal rings and the
q-expansions they generate as sums over ideals.

Five conductor cases are supported, one per weight residue class for the
Eisenstein ring plus the single case for Z[sqrt(-2)].  Evaluation is on a
generator of the ideal; the case formulas are invariant under replacing the
generator by a unit multiple, which the property tests exercise at scale.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import isqrt

from .quadint import QuadInt, Ring, canonical_associate


class ConductorCase(Enum):
    EISEN_C1 = "eisen-c1"  # weight = 1 (mod 6), conductor (1)
    EISEN_C2 = "eisen-c2"  # weight = 4 (mod 6), conductor (1+w)
    EISEN_C3 = "eisen-c3"  # weight = 3, 5 (mod 6), conductor (2)
    EISEN_C4 = "eisen-c4"  # weight = 0, 2 (mod 6), conductor (2+2w)
    SQRTM2_C1 = "sqrtm2-c1"  # odd weight >= 3, conductor (1)


_CASE_FOR_RESIDUE = {
    1: ConductorCase.EISEN_C1,
    4: ConductorCase.EISEN_C2,
    3: ConductorCase.EISEN_C3,
    5: ConductorCase.EISEN_C3,
    0: ConductorCase.EISEN_C4,
    2: ConductorCase.EISEN_C4,
}

_LEVEL = {
    ConductorCase.EISEN_C1: 3,
    ConductorCase.EISEN_C2: 9,
    ConductorCase.EISEN_C3: 12,
    ConductorCase.EISEN_C4: 36,
    ConductorCase.SQRTM2_C1: 8,
}

_NEBENTYPUS_LABEL = {
    ConductorCase.EISEN_C1: "(-3/.)",
    ConductorCase.EISEN_C2: "trivial",
    ConductorCase.EISEN_C3: "(-3/.)",
    ConductorCase.EISEN_C4: "trivial",
    ConductorCase.SQRTM2_C1: "(-8/.)",
}


@dataclass(frozen=True)
class HeckeCharSpec:
    """Field, weight and conductor case selecting one character construction."""

    ring: Ring
    weight: int
    case: ConductorCase

    def __post_init__(self) -> None:
        if self.ring is Ring.EISEN:
            if self.weight < 2:
                raise ValueError("weight must be >= 2")
            if _CASE_FOR_RESIDUE[self.weight % 6] is not self.case:
                raise ValueError(f"case {self.case} does not match weight {self.weight} (mod 6)")
        elif self.ring is Ring.SQRTM2:
            if self.case is not ConductorCase.SQRTM2_C1:
                raise ValueError("the sqrt(-2) ring has a single conductor case")
            if self.weight < 3 or self.weight % 2 == 0:
                raise ValueError("the sqrt(-2) family needs odd weight >= 3")
        else:
            raise ValueError("ideal-sum expansions cover the EISEN and SQRTM2 rings only")

    @classmethod
    def for_weight(cls, ring: Ring, weight: int) -> "HeckeCharSpec":
        if ring is Ring.EISEN:
            return cls(ring, weight, _CASE_FOR_RESIDUE[weight % 6])
        if ring is Ring.SQRTM2:
            return cls(ring, weight, ConductorCase.SQRTM2_C1)
        raise ValueError("ideal-sum expansions cover the EISEN and SQRTM2 rings only")

    @property
    def level(self) -> int:
        return _LEVEL[self.case]

    @property
    def nebentypus_label(self) -> str:
        return _NEBENTYPUS_LABEL[self.case]


@dataclass(frozen=True)
class QExpansion:
    """Integer coefficients a(1..nmax) with weight/level/character metadata."""

    label: str
    weight: int
    level: int | None
    nmax: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.nmax:
            raise ValueError("need exactly nmax coefficients a(1..nmax)")
        if self.coeffs and self.coeffs[0] != 1:
            raise ValueError("expansions are normalized to a(1) = 1")

    def a(self, n: int) -> int:
        if not 1 <= n <= self.nmax:
            raise IndexError(f"index {n} outside 1..{self.nmax}")
        return self.coeffs[n - 1]


def chi3(x: int, y: int, m: int) -> int:
    """+1 if x + 2y = m (mod 3), -1 otherwise; both must be nonzero mod 3."""
    if (x + 2 * y) % 3 == 0 or m % 3 == 0:
        raise ValueError("arguments must be prime to 3")
    return 1 if (x + 2 * y - m) % 3 == 0 else -1


def psi_unit(x: int, y: int) -> QuadInt:
    """The sixth root of unity attached to the parity class of x + y*w."""
    if x % 2 == 0 and y % 2 == 0:
        raise ValueError("x and y must not both be even")
    if x % 2 == 1 and y % 2 == 0:
        return QuadInt(Ring.EISEN, 1, 0)
    if x % 2 == 0:
        return QuadInt(Ring.EISEN, -1, 1)  # w^2
    return QuadInt(Ring.EISEN, 0, -1)  # w^4


def coprime_to_conductor(alpha: QuadInt, spec: HeckeCharSpec) -> bool:
    """Whether the principal ideal (alpha) is prime to the conductor."""
    if alpha.is_zero():
        raise ValueError("alpha must be nonzero")
    x, y = alpha.x, alpha.y
    case = spec.case
    if case in (ConductorCase.EISEN_C1, ConductorCase.SQRTM2_C1):
        return True
    prime_to_3 = (x + 2 * y) % 3 != 0
    prime_to_2 = x % 2 == 1 or y % 2 == 1
    if case is ConductorCase.EISEN_C2:
        return prime_to_3
    if case is ConductorCase.EISEN_C3:
        return prime_to_2
    return prime_to_2 and prime_to_3


def phi_eval(alpha: QuadInt, spec: HeckeCharSpec) -> QuadInt:
    """Character value on the ideal (alpha); independent of the generator."""
    if not coprime_to_conductor(alpha, spec):
        raise ValueError(f"{alpha} is not prime to the conductor of {spec.case}")
    k = spec.weight
    value = alpha ** (k - 1)
    case = spec.case
    if case in (ConductorCase.EISEN_C2, ConductorCase.EISEN_C4):
        value = value * chi3(alpha.x, alpha.y, 1)
    if case in (ConductorCase.EISEN_C3, ConductorCase.EISEN_C4):
        value = value * psi_unit(alpha.x, alpha.y) ** (k - 1)
    return value


def _lattice_bound(ring: Ring, nmax: int) -> int:
    if ring is Ring.EISEN:
        # norm(x+yw) >= 3*y^2/4 and >= 3*x^2/4 by symmetry
        return isqrt(4 * nmax // 3) + 1
    return isqrt(nmax) + 1


def enumerate_ideals(spec: HeckeCharSpec, nmax: int) -> list[tuple[QuadInt, int]]:
    """One canonical generator per ideal of norm <= nmax prime to the conductor.

    Scans all lattice coordinates within the norm bound and deduplicates unit
    multiples through the canonical associate, sorted by (norm, x, y).
    """
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    ring = spec.ring
    bound = _lattice_bound(ring, nmax)
    seen: set[QuadInt] = set()
    for x in range(-bound, bound + 1):
        for y in range(-bound, bound + 1):
            if x == 0 and y == 0:
                continue
            alpha = QuadInt(ring, x, y)
            if alpha.norm() > nmax:
                continue
            if not coprime_to_conductor(alpha, spec):
                continue
            seen.add(canonical_associate(alpha))
    return sorted(((g, g.norm()) for g in seen), key=lambda t: (t[1], t[0].x, t[0].y))


def q_expansion_ideal_sum(spec: HeckeCharSpec, nmax: int) -> QExpansion:
    """a(n) = sum of character values over the ideals of norm n."""
    sums = [QuadInt.from_int(spec.ring, 0) for _ in range(nmax + 1)]
    for gen, norm in enumerate_ideals(spec, nmax):
        sums[norm] = sums[norm] + phi_eval(gen, spec)
    coeffs = []
    for n in range(1, nmax + 1):
        total = sums[n]
        if not total.is_rational_integer():
            raise AssertionError(f"ideal sum at n={n} is not a rational integer: {total}")
        coeffs.append(total.x)
    return QExpansion(
        label=f"ideal-sum {spec.case.value} k={spec.weight}",
        weight=spec.weight,
        level=spec.level,
        nmax=nmax,
        coeffs=tuple(coeffs),
    )
