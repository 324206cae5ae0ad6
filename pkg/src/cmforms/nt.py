"""Small number-theory helpers: primality, prime sieves, Kronecker symbol."""

from __future__ import annotations

from math import isqrt


def is_prime(n: int) -> bool:
    """Deterministic trial division; fine at desk scale (n < 10**12)."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    if n % 3 == 0:
        return n == 3
    f = 5
    top = isqrt(n)
    while f <= top:
        if n % f == 0 or n % (f + 2) == 0:
            return False
        f += 6
    return True


def primes_up_to(limit: int) -> list[int]:
    """All primes <= limit, by sieve of Eratosthenes."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            start = p * p
            sieve[start : limit + 1 : p] = bytearray(len(range(start, limit + 1, p)))
    return [i for i, flag in enumerate(sieve) if flag]


def primes_in(lo: int, hi: int) -> list[int]:
    """Primes p with lo <= p < hi."""
    return [p for p in primes_up_to(hi - 1) if p >= lo]


def kronecker(a: int, n: int) -> int:
    """Kronecker symbol (a/n), the completely multiplicative extension of Jacobi."""
    if n == 0:
        return 1 if a in (1, -1) else 0
    result = 1
    if n < 0:
        n = -n
        if a < 0:
            result = -result
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            result = -result
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0
