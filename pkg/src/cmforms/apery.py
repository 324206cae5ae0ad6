"""The four binomial-sum sequences, their odd-index wrappers, and the
three-term recurrence engine.

All exact values use arbitrary-precision integers; no floating point is
involved anywhere.  Values at large indices, needed for the prime-power
congruence sweeps, are evaluated modulo a prime power via the vectorized
binomial machinery in :mod:`cmforms.binomod`; the two paths are compared on
their overlap by the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import binomod

_EXACT_LIMIT = 1200  # exact evaluation below this index, modular above


def apery_a(n: int) -> int:
    """sum_k binom(n,k)^2 binom(n+k,k)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    total = 0
    b = c = 1  # binom(n,k), binom(n+k,k)
    for k in range(n + 1):
        if k:
            b = b * (n - k + 1) // k
            c = c * (n + k) // k
        total += b * b * c
    return total


def apery_b(n: int) -> int:
    """sum_k binom(n,k)^2 binom(n+k,k)^2."""
    if n < 0:
        raise ValueError("index must be >= 0")
    total = 0
    b = c = 1
    for k in range(n + 1):
        if k:
            b = b * (n - k + 1) // k
            c = c * (n + k) // k
        total += b * b * c * c
    return total


def seq_c(n: int) -> int:
    """sum_k binom(n,k)^2 binom(2k,k)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    total = 0
    b = c = 1  # binom(n,k), binom(2k,k)
    for k in range(n + 1):
        if k:
            b = b * (n - k + 1) // k
            c = c * (2 * k) * (2 * k - 1) // (k * k)
        total += b * b * c
    return total


def seq_d(n: int) -> int:
    """sum_k binom(n,k)^3 (the cube-sum sequence)."""
    if n < 0:
        raise ValueError("index must be >= 0")
    total = 0
    b = 1
    for k in range(n + 1):
        if k:
            b = b * (n - k + 1) // k
        total += b**3
    return total


_SEQ = {"A": apery_a, "B": apery_b, "C": seq_c, "D": seq_d}
_SEQ_MOD = {
    "A": binomod.apery_a_mod,
    "B": binomod.apery_b_mod,
    "C": binomod.seq_c_mod,
    "D": binomod.seq_d_mod,
}


@dataclass(frozen=True)
class IntegerSequence:
    """A named prefix u(0..N) of one of the integer sequences."""

    name: str
    terms: tuple[int, ...]


def sequence(name: str, count: int) -> IntegerSequence:
    """Terms u(0..count) of the named sequence (A, B, C or D)."""
    try:
        fn = _SEQ[name]
    except KeyError:
        raise ValueError(f"unknown sequence {name!r}") from None
    return IntegerSequence(name, tuple(fn(n) for n in range(count + 1)))


@lru_cache(maxsize=4096)
def sequence_value_mod(name: str, n: int, p: int, q: int) -> int:
    """u(n) mod p^q, exactly for small n and via base-p digit blocks above."""
    if n <= _EXACT_LIMIT:
        return _SEQ[name](n) % p**q
    return _SEQ_MOD[name](n, p, q)


def u_m(m_tag: int, n: int) -> int:
    """The odd-support wrappers: reindexed, sign-adjusted A, C, D.

    U_2(n) = (-1)^((n-1)/2) D((n-1)/2), U_3(n) = C((n-1)/2),
    U_4(n) = (-1)^((n-1)/2) A((n-1)/2) for odd n; 0 at even n.
    """
    if m_tag not in (2, 3, 4):
        raise ValueError("wrapper tag must be 2, 3 or 4")
    if n < 1:
        raise ValueError("index must be >= 1")
    if n % 2 == 0:
        return 0
    idx = (n - 1) // 2
    if m_tag == 3:
        return seq_c(idx)
    sign = -1 if idx % 2 else 1
    return sign * (seq_d(idx) if m_tag == 2 else apery_a(idx))


def u_m_mod(m_tag: int, n: int, p: int, q: int) -> int:
    """u_m(m_tag, n) reduced mod p^q, usable at million-scale indices."""
    if m_tag not in (2, 3, 4):
        raise ValueError("wrapper tag must be 2, 3 or 4")
    if n % 2 == 0:
        return 0
    idx = (n - 1) // 2
    name = {2: "D", 3: "C", 4: "A"}[m_tag]
    val = sequence_value_mod(name, idx, p, q)
    if m_tag != 3 and idx % 2:
        val = -val % p**q
    return val


@dataclass(frozen=True)
class RecurrenceTriple:
    """Parameters of b(n+1)^2 u(n+1) + (a n^2 + a n - lam) u(n) + n^2 u(n-1) = 0."""

    a: int
    b: int
    lam: int

    def __post_init__(self) -> None:
        if self.b == 0:
            raise ValueError("leading coefficient b must be nonzero")


def recurrence_check(seq: IntegerSequence, triple: RecurrenceTriple, nmax: int) -> bool:
    """Whether the three-term relation holds exactly for 1 <= n <= nmax."""
    u = seq.terms
    if len(u) < nmax + 2:
        raise ValueError(f"need terms through u({nmax + 1}), have {len(u) - 1}")
    a, b, lam = triple.a, triple.b, triple.lam
    for n in range(1, nmax + 1):
        if b * (n + 1) ** 2 * u[n + 1] + (a * n * n + a * n - lam) * u[n] + n * n * u[n - 1]:
            return False
    return True


def _solve3(rows: list[list[Fraction]]) -> list[Fraction] | None:
    # Gaussian elimination on a 3x4 augmented system; None if singular/inconsistent.
    m = [row[:] for row in rows]
    for col in range(3):
        pivot = next((r for r in range(col, 3) if m[r][col] != 0), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        piv = m[col][col]
        m[col] = [v / piv for v in m[col]]
        for r in range(3):
            if r != col and m[r][col]:
                factor = m[r][col]
                m[r] = [v - factor * w for v, w in zip(m[r], m[col])]
    return [m[r][3] for r in range(3)]


def fit_triple(seq: IntegerSequence) -> RecurrenceTriple | None:
    """Recover an integral triple from u(0..4), or None if there is none.

    Solves the exact linear system given by n = 1, 2, 3 for rational
    (a, b, lam), rejects non-integral solutions, and validates the candidate
    against every further available term.
    """
    u = seq.terms
    if len(u) < 5:
        raise ValueError("need terms u(0..4) at least")
    rows = []
    for n in (1, 2, 3):
        # a*(n^2+n)*u(n) + b*(n+1)^2*u(n+1) - lam*u(n) = -n^2*u(n-1)
        rows.append(
            [
                Fraction((n * n + n) * u[n]),
                Fraction((n + 1) ** 2 * u[n + 1]),
                Fraction(-u[n]),
                Fraction(-n * n * u[n - 1]),
            ]
        )
    sol = _solve3(rows)
    if sol is None:
        return None
    a, b, lam = sol
    if any(v.denominator != 1 for v in (a, b, lam)) or b == 0:
        return None
    triple = RecurrenceTriple(int(a), int(b), int(lam))
    if not recurrence_check(seq, triple, len(u) - 2):
        return None
    return triple


@dataclass(frozen=True)
class MonicTriple:
    """Parameters of (n+1)^2 u(n+1) - (a n^2 + a n + b) u(n) + lam n^2 u(n-1) = 0.

    The classical search normalization: the leading coefficient is monic and
    the trailing coefficient carries the free integer parameter, so sequences
    whose trailing coefficient is not +-n^2 still admit integral parameters.
    """

    a: int
    b: int
    lam: int


def monic_recurrence_check(seq: IntegerSequence, triple: MonicTriple, nmax: int) -> bool:
    u = seq.terms
    if len(u) < nmax + 2:
        raise ValueError(f"need terms through u({nmax + 1}), have {len(u) - 1}")
    a, b, lam = triple.a, triple.b, triple.lam
    for n in range(1, nmax + 1):
        if (n + 1) ** 2 * u[n + 1] - (a * n * n + a * n + b) * u[n] + lam * n * n * u[n - 1]:
            return False
    return True


def fit_monic_triple(seq: IntegerSequence) -> MonicTriple | None:
    """Like :func:`fit_triple` but in the monic normalization."""
    u = seq.terms
    if len(u) < 5:
        raise ValueError("need terms u(0..4) at least")
    rows = []
    for n in (1, 2, 3):
        # a*(n^2+n)*u(n) + b*u(n) - lam*n^2*u(n-1) = (n+1)^2*u(n+1)
        rows.append(
            [
                Fraction((n * n + n) * u[n]),
                Fraction(u[n]),
                Fraction(-n * n * u[n - 1]),
                Fraction((n + 1) ** 2 * u[n + 1]),
            ]
        )
    sol = _solve3(rows)
    if sol is None:
        return None
    a, b, lam = sol
    if any(v.denominator != 1 for v in (a, b, lam)):
        return None
    triple = MonicTriple(int(a), int(b), int(lam))
    if not monic_recurrence_check(seq, triple, len(u) - 2):
        return None
    return triple
