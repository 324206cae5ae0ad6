"""Exact arithmetic in three imaginary quadratic rings.

Supported rings, each with integral basis (1, g):

* ``Ring.GAUSS``  -- Z[i],       g = i,            g**2 = -1
* ``Ring.SQRTM2`` -- Z[sqrt(-2)], g = sqrt(-2),    g**2 = -2
* ``Ring.EISEN``  -- Z[w],       g = w = (1+sqrt(-3))/2,  g**2 = g - 1

Elements are stored as exact integer pairs (x, y) meaning x + y*g, so
Eisenstein elements never carry half-integer coordinates.  All values are
immutable and every operation is a pure function.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class Ring(Enum):
    GAUSS = "gauss"
    SQRTM2 = "sqrt-2"
    EISEN = "eisenstein"


@dataclass(frozen=True)
class QuadInt:
    """An element x + y*g of one of the three quadratic rings."""

    ring: Ring
    x: int
    y: int

    def __post_init__(self) -> None:
        if not isinstance(self.x, int) or not isinstance(self.y, int):
            raise TypeError("coordinates must be integers")

    @classmethod
    def from_int(cls, ring: Ring, n: int) -> "QuadInt":
        return cls(ring, n, 0)

    def is_zero(self) -> bool:
        return self.x == 0 and self.y == 0

    def is_rational_integer(self) -> bool:
        return self.y == 0

    def _require_same_ring(self, other: "QuadInt") -> None:
        if self.ring is not other.ring:
            raise ValueError(f"ring mismatch: {self.ring} vs {other.ring}")

    def __add__(self, other: "QuadInt") -> "QuadInt":
        self._require_same_ring(other)
        return QuadInt(self.ring, self.x + other.x, self.y + other.y)

    def __sub__(self, other: "QuadInt") -> "QuadInt":
        self._require_same_ring(other)
        return QuadInt(self.ring, self.x - other.x, self.y - other.y)

    def __neg__(self) -> "QuadInt":
        return QuadInt(self.ring, -self.x, -self.y)

    def __mul__(self, other: "QuadInt | int") -> "QuadInt":
        if isinstance(other, int):
            return QuadInt(self.ring, self.x * other, self.y * other)
        self._require_same_ring(other)
        a, b, c, d = self.x, self.y, other.x, other.y
        if self.ring is Ring.GAUSS:
            return QuadInt(self.ring, a * c - b * d, a * d + b * c)
        if self.ring is Ring.SQRTM2:
            return QuadInt(self.ring, a * c - 2 * b * d, a * d + b * c)
        # EISEN: w**2 = w - 1
        return QuadInt(self.ring, a * c - b * d, a * d + b * c + b * d)

    def __rmul__(self, other: int) -> "QuadInt":
        return self * other

    def __pow__(self, e: int) -> "QuadInt":
        if e < 0:
            raise ValueError("negative exponents are not defined in the ring")
        result = QuadInt.from_int(self.ring, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def norm(self) -> int:
        x, y = self.x, self.y
        if self.ring is Ring.GAUSS:
            return x * x + y * y
        if self.ring is Ring.SQRTM2:
            return x * x + 2 * y * y
        return x * x + x * y + y * y

    def conj(self) -> "QuadInt":
        """Galois conjugate; for EISEN, conj(w) = 1 - w."""
        if self.ring is Ring.EISEN:
            return QuadInt(self.ring, self.x + self.y, -self.y)
        return QuadInt(self.ring, self.x, -self.y)

    def trace(self) -> int:
        """self + conj(self), as a rational integer."""
        if self.ring is Ring.EISEN:
            return 2 * self.x + self.y
        return 2 * self.x

    def __repr__(self) -> str:
        sym = {Ring.GAUSS: "i", Ring.SQRTM2: "s", Ring.EISEN: "w"}[self.ring]
        return f"QuadInt({self.ring.value}: {self.x}{self.y:+}{sym})"


OMEGA = QuadInt(Ring.EISEN, 0, 1)

_UNITS = {
    Ring.GAUSS: (
        QuadInt(Ring.GAUSS, 1, 0),
        QuadInt(Ring.GAUSS, 0, 1),
        QuadInt(Ring.GAUSS, -1, 0),
        QuadInt(Ring.GAUSS, 0, -1),
    ),
    Ring.SQRTM2: (
        QuadInt(Ring.SQRTM2, 1, 0),
        QuadInt(Ring.SQRTM2, -1, 0),
    ),
    # The six powers of w, in order w**0 .. w**5.
    Ring.EISEN: (
        QuadInt(Ring.EISEN, 1, 0),
        QuadInt(Ring.EISEN, 0, 1),
        QuadInt(Ring.EISEN, -1, 1),
        QuadInt(Ring.EISEN, -1, 0),
        QuadInt(Ring.EISEN, 0, -1),
        QuadInt(Ring.EISEN, 1, -1),
    ),
}


def units(ring: Ring) -> tuple[QuadInt, ...]:
    """The unit group of the ring (4, 2 and 6 elements respectively)."""
    return _UNITS[ring]


def _in_fundamental_sector(a: QuadInt) -> bool:
    # One sector per unit, tiling C* under the unit action:
    #   EISEN:  complex argument in [0, pi/3)   <=>  x > 0 and y >= 0
    #   GAUSS:  complex argument in [0, pi/2)   <=>  x > 0 and y >= 0
    #   SQRTM2: upper half plane plus positive reals
    if a.ring is Ring.SQRTM2:
        return a.y > 0 or (a.y == 0 and a.x > 0)
    return a.x > 0 and a.y >= 0


def canonical_associate(a: QuadInt) -> QuadInt:
    """The unique unit multiple of ``a`` lying in the fundamental sector."""
    if a.is_zero():
        raise ValueError("zero has no canonical associate")
    matches = [u * a for u in units(a.ring) if _in_fundamental_sector(u * a)]
    if len(matches) != 1:
        raise AssertionError(f"sector predicate matched {len(matches)} associates of {a}")
    return matches[0]
