"""Normalized representations of primes by the forms x^2+y^2, c^2+2d^2, a^2+3b^2.

Each ``rep_*`` function brute-forces the bounded second coordinate and checks
for a perfect square; at desk-scale prime bounds this is fast and obviously
correct.  The returned pair is unique once the stated normalization is fixed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .nt import is_prime
from .quadint import QuadInt, Ring


class NotRepresentable(ValueError):
    """The prime is not represented by the requested quadratic form."""


@dataclass(frozen=True)
class PrimeRep:
    """A prime p = u^2 + M*v^2 with the normalization fixed per form.

    form "m1": u^2 +   v^2 = p, u odd, u > 0, v > 0
    form "m2": u^2 + 2*v^2 = p, u > 0, v > 0 (u = 0 only for p = 2)
    form "m3": u^2 + 3*v^2 = p, u = 1 (mod 3), v > 0
    """

    p: int
    form: str
    u: int
    v: int

    def as_quadint(self) -> QuadInt:
        """The ring element with norm p built from this representation."""
        if self.form == "m1":
            return QuadInt(Ring.GAUSS, self.u, self.v)
        if self.form == "m2":
            return QuadInt(Ring.SQRTM2, self.u, self.v)
        # u + v*sqrt(-3) = (u - v) + 2v*w on the (1, w) basis
        return QuadInt(Ring.EISEN, self.u - self.v, 2 * self.v)


def _check_prime(p: int) -> None:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def rep_m3(p: int) -> PrimeRep:
    """p = u^2 + 3 v^2 with u = 1 (mod 3) and v > 0; needs p = 1 (mod 6)."""
    _check_prime(p)
    if p % 6 != 1:
        raise NotRepresentable(f"{p} is not of the form u^2+3v^2 with p = 1 (mod 6)")
    for v in range(1, isqrt(p // 3) + 1):
        t = p - 3 * v * v
        s = isqrt(t)
        if s * s == t:
            u = s if s % 3 == 1 else -s
            return PrimeRep(p, "m3", u, v)
    raise AssertionError(f"no representation found for prime {p} = 1 (mod 6)")


def rep_m2(p: int) -> PrimeRep:
    """p = u^2 + 2 v^2, u, v > 0; needs p = 2 or p = 1, 3 (mod 8)."""
    _check_prime(p)
    if p == 2:
        return PrimeRep(2, "m2", 0, 1)
    if p % 8 not in (1, 3):
        raise NotRepresentable(f"{p} is not of the form u^2+2v^2")
    for v in range(1, isqrt(p // 2) + 1):
        t = p - 2 * v * v
        s = isqrt(t)
        if s * s == t:
            return PrimeRep(p, "m2", s, v)
    raise AssertionError(f"no representation found for prime {p} = 1,3 (mod 8)")


def rep_m1(p: int) -> PrimeRep:
    """p = u^2 + v^2 with u odd, u, v > 0; needs p = 1 (mod 4)."""
    _check_prime(p)
    if p % 4 != 1:
        raise NotRepresentable(f"{p} is not a sum of two squares with odd part")
    # u odd forces v even
    for v in range(2, isqrt(p) + 1, 2):
        t = p - v * v
        s = isqrt(t)
        if s * s == t:
            return PrimeRep(p, "m1", s, v)
    raise AssertionError(f"no representation found for prime {p} = 1 (mod 4)")
