"""Closed-form prime coefficients for the three CM families and their
extension to all indices through eigenform multiplicativity.

Families (all coefficients are rational integers):

* GAMMA -- CM by sqrt(-3), any weight k >= 2
* BETA  -- CM by sqrt(-2), odd weight k >= 3
* ALPHA -- CM by i, any weight k >= 2

A prime coefficient is a power sum z^(k-1) + conj(z)^(k-1) for the ring
element z of norm p given by the relevant quadratic-form representation
(zero if p is not represented), with ramified primes and a sign factor for
the ALPHA family handled separately.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import comb

from .hecke import QExpansion
from .nt import kronecker, primes_up_to
from .primerep import NotRepresentable, rep_m1, rep_m2, rep_m3


class Family(Enum):
    GAMMA = "gamma"
    BETA = "beta"
    ALPHA = "alpha"


@dataclass(frozen=True)
class FamilyTag:
    family: Family
    weight: int

    def __post_init__(self) -> None:
        if self.weight < 2:
            raise ValueError("weight must be >= 2")
        if self.family is Family.BETA and (self.weight % 2 == 0 or self.weight < 3):
            raise ValueError("the sqrt(-2) family needs odd weight >= 3")


def gamma_prime(k: int, p: int) -> int:
    """p-th coefficient of the weight-k sqrt(-3) family member."""
    if k < 2:
        raise ValueError("weight must be >= 2")
    if p == 3:
        return (-3) ** ((k - 1) // 2) if k % 2 == 1 else 0
    try:
        z = rep_m3(p).as_quadint()
    except NotRepresentable:
        return 0
    return (z ** (k - 1)).trace()


def beta_prime(k: int, p: int) -> int:
    """p-th coefficient of the odd-weight-k sqrt(-2) family member."""
    if k % 2 == 0 or k < 3:
        raise ValueError("the sqrt(-2) family needs odd weight >= 3")
    if p == 2:
        return (-2) ** ((k - 1) // 2)
    try:
        z = rep_m2(p).as_quadint()
    except NotRepresentable:
        return 0
    return (z ** (k - 1)).trace()


def alpha_prime(k: int, p: int) -> int:
    """p-th coefficient of the weight-k Z[i] family member.

    Carries the parity-dependent sign (-1)^((x+y-1)(k-1)/2); with the fixed
    normalization x odd, x, y > 0 the exponent is always integral.  p = 2 is
    ramified with coefficient 0 (the weight-3 eta expansion is supported on
    indices 1 mod 4).
    """
    if k < 2:
        raise ValueError("weight must be >= 2")
    if p == 2:
        return 0
    try:
        rep = rep_m1(p)
    except NotRepresentable:
        return 0
    z = rep.as_quadint()
    sign = -1 if ((rep.u + rep.v - 1) * (k - 1) // 2) % 2 else 1
    return sign * (z ** (k - 1)).trace()


_PRIME_FN = {Family.GAMMA: gamma_prime, Family.BETA: beta_prime, Family.ALPHA: alpha_prime}


def _level(tag: FamilyTag) -> int | None:
    if tag.family is Family.GAMMA:
        return {1: 3, 4: 9, 3: 12, 5: 12, 0: 36, 2: 36}[tag.weight % 6]
    if tag.family is Family.BETA:
        return 8
    return None  # ALPHA levels are powers of two; only the 2-part matters here


def nebentypus(tag: FamilyTag, p: int) -> int:
    """Character value at the prime p: 0 at bad primes, else a Kronecker symbol
    ((-3/.), (-8/.), (-4/.)) or 1 for the even-weight trivial characters."""
    level = _level(tag)
    if tag.family is Family.ALPHA:
        if p == 2:
            return 0
    elif p != 0 and level % p == 0:
        return 0
    if tag.weight % 2 == 0:
        return 1
    disc = {Family.GAMMA: -3, Family.BETA: -8, Family.ALPHA: -4}[tag.family]
    return kronecker(disc, p)


def extend_coefficients(tag: FamilyTag, nmax: int) -> QExpansion:
    """a(1..nmax) from prime values via the eigenform recursion
    a(p^(r+1)) = a(p) a(p^r) - eps(p) p^(k-1) a(p^(r-1)) and coprime
    multiplicativity.  At bad primes eps vanishes, so a(p^r) = a(p)^r."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    k = tag.weight
    fn = _PRIME_FN[tag.family]
    a = [0] * (nmax + 1)
    a[1] = 1
    spf = _smallest_prime_factor(nmax)
    for p in primes_up_to(nmax):
        a[p] = fn(k, p)
        eps_pk = nebentypus(tag, p) * p ** (k - 1)
        prev, cur = 1, a[p]
        pe = p
        while pe * p <= nmax:
            prev, cur = cur, a[p] * cur - eps_pk * prev
            pe *= p
            a[pe] = cur
    for n in range(2, nmax + 1):
        p = spf[n]
        pe = p
        m = n // p
        while m % p == 0:
            pe *= p
            m //= p
        if m > 1:
            a[n] = a[pe] * a[m]
    label = {
        Family.GAMMA: f"sqrt(-3) family k={k}",
        Family.BETA: f"sqrt(-2) family k={k}",
        Family.ALPHA: f"Z[i] family k={k}",
    }[tag.family]
    return QExpansion(label=label, weight=k, level=_level(tag), nmax=nmax, coeffs=tuple(a[1:]))


def _smallest_prime_factor(nmax: int) -> list[int]:
    spf = list(range(nmax + 1))
    for p in range(2, int(nmax**0.5) + 1):
        if spf[p] == p:
            for m in range(p * p, nmax + 1, p):
                if spf[m] == m:
                    spf[m] = p
    return spf


def power_identity_gamma(k: int, p: int, r: int) -> tuple[int, int]:
    """Both sides of the exact power expansion for the sqrt(-3) family, p > 3."""
    if p <= 3:
        raise ValueError("the identity is stated for primes p > 3")
    if r < 1:
        raise ValueError("power must be >= 1")
    lhs = gamma_prime(k, p) ** r
    rhs = sum(
        comb(r, t) * p ** (t * (k - 1)) * gamma_prime((r - 2 * t) * (k - 1) + 1, p)
        for t in range(r // 2 + (r % 2))
    )
    if r % 2 == 0 and p % 6 == 1:
        rhs += comb(r, r // 2) * p ** (r // 2 * (k - 1))
    return lhs, rhs


def power_identity_beta(k: int, p: int, r: int) -> tuple[int, int]:
    """Both sides of the exact power expansion for the sqrt(-2) family, p > 2."""
    if p <= 2:
        raise ValueError("the identity is stated for primes p > 2")
    if r < 1:
        raise ValueError("power must be >= 1")
    lhs = beta_prime(k, p) ** r
    rhs = sum(
        comb(r, t) * p ** (t * (k - 1)) * beta_prime((r - 2 * t) * (k - 1) + 1, p)
        for t in range(r // 2 + (r % 2))
    )
    if r % 2 == 0 and p % 8 in (1, 3):
        rhs += comb(r, r // 2) * p ** (r // 2 * (k - 1))
    return lhs, rhs


def ramified_identity_gamma(k: int, r: int) -> tuple[int, int]:
    """gamma_k(3)^r versus gamma_(r(k-1)+1)(3), exact for odd k."""
    if k % 2 == 0:
        raise ValueError("the ramified identity needs odd weight")
    return gamma_prime(k, 3) ** r, gamma_prime(r * (k - 1) + 1, 3)


def ramified_identity_beta(k: int, r: int) -> tuple[int, int]:
    """beta_k(2)^r versus beta_(r(k-1)+1)(2), exact for odd k."""
    return beta_prime(k, 2) ** r, beta_prime(r * (k - 1) + 1, 2)
