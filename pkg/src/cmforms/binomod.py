"""Binomial coefficients modulo odd prime powers, vectorized.

Uses the generalized Lucas theorem (Granville): with n = k + r written in
base p, e_j the number of base-p carries at digit positions >= j when adding
k and r, and (m!)_p the product of the integers up to m that are prime to p,

    binom(n, k) = p^{e_0} * (-1)^{e_{q-1}}
                  * prod_j (N_j!)_p / ((K_j!)_p (R_j!)_p)   (mod p^q)

where N_j = floor(n / p^j) mod p^q, similarly K_j, R_j.  The (-1) sign is
correct for odd p, the only case used here.  For q = 1 this reduces to the
classical Lucas theorem.

The factorial-like tables are cached per (p, q); lookups are done with numpy
over whole index arrays so that million-term binomial sums stay fast.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

_CHUNK = 1 << 19


@lru_cache(maxsize=64)
def _tables(p: int, q: int) -> tuple[np.ndarray, np.ndarray]:
    """F[m] = (m!)_p mod p^q and its elementwise modular inverse."""
    mod = p**q
    fwd = np.ones(mod, dtype=np.int64)
    acc = 1
    for i in range(1, mod):
        if i % p:
            acc = acc * i % mod
        fwd[i] = acc
    inv = np.ones(mod, dtype=np.int64)
    acc = pow(int(fwd[mod - 1]), -1, mod)
    inv[mod - 1] = acc
    for i in range(mod - 1, 0, -1):
        if i % p:
            acc = acc * i % mod
        inv[i - 1] = acc
    return fwd, inv


def binom_mod_vec(ns, ks, p: int, q: int) -> np.ndarray:
    """binom(ns, ks) mod p^q elementwise; p odd prime, p^q < 2**31."""
    if p == 2:
        raise ValueError("only odd primes are supported")
    mod = p**q
    fwd, inv = _tables(p, q)
    ks = np.asarray(ks, dtype=np.int64)
    ns = np.asarray(ns, dtype=np.int64)
    rs = ns - ks
    if (ks < 0).any() or (rs < 0).any():
        raise ValueError("need 0 <= k <= n")
    res = np.ones(np.broadcast(ns, ks).shape, dtype=np.int64)
    carries = np.zeros_like(res)
    high_carries = np.zeros_like(res)  # carries at digit positions >= q-1
    nmax = int(ns.max()) if ns.size else 0
    pj = 1
    j = 0
    while pj <= nmax:
        res = res * fwd[(ns // pj) % mod] % mod
        res = res * inv[(ks // pj) % mod] % mod
        res = res * inv[(rs // pj) % mod] % mod
        pj1 = pj * p
        carry = ((ks % pj1) + (rs % pj1) >= pj1).astype(np.int64)
        carries += carry
        if j >= q - 1:
            high_carries += carry
        pj = pj1
        j += 1
    res = np.where(high_carries & 1, -res % mod, res)
    res = res * np.power(p, np.minimum(carries, q)) % mod
    return np.where(carries >= q, 0, res)


def binom_mod(n: int, k: int, p: int, q: int) -> int:
    """Scalar convenience wrapper around :func:`binom_mod_vec`."""
    return int(binom_mod_vec(np.int64(n), np.int64(k), p, q))


def _chunked_sum(n: int, p: int, q: int, term) -> int:
    mod = p**q
    total = 0
    for lo in range(0, n + 1, _CHUNK):
        k = np.arange(lo, min(lo + _CHUNK, n + 1), dtype=np.int64)
        total = (total + int(term(k).sum() % mod)) % mod
    return total


def apery_a_mod(n: int, p: int, q: int) -> int:
    """sum_k binom(n,k)^2 binom(n+k,k) mod p^q."""
    mod = p**q

    def term(k):
        b = binom_mod_vec(n, k, p, q)
        c = binom_mod_vec(n + k, k, p, q)
        return b * b % mod * c % mod

    return _chunked_sum(n, p, q, term)


def apery_b_mod(n: int, p: int, q: int) -> int:
    """sum_k binom(n,k)^2 binom(n+k,k)^2 mod p^q."""
    mod = p**q

    def term(k):
        b = binom_mod_vec(n, k, p, q)
        c = binom_mod_vec(n + k, k, p, q)
        return b * b % mod * (c * c % mod) % mod

    return _chunked_sum(n, p, q, term)


def seq_c_mod(n: int, p: int, q: int) -> int:
    """sum_k binom(n,k)^2 binom(2k,k) mod p^q."""
    mod = p**q

    def term(k):
        b = binom_mod_vec(n, k, p, q)
        c = binom_mod_vec(2 * k, k, p, q)
        return b * b % mod * c % mod

    return _chunked_sum(n, p, q, term)


def seq_d_mod(n: int, p: int, q: int) -> int:
    """sum_k binom(n,k)^3 mod p^q."""
    mod = p**q

    def term(k):
        b = binom_mod_vec(n, k, p, q)
        return b * b % mod * b % mod

    return _chunked_sum(n, p, q, term)
