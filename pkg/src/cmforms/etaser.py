"""Truncated integer power series and the weight-3 eta-product expansion.

The series q * prod_{n>=1} (1 - q^{4n})^6 is the q-expansion of the unique
weight-3 CM newform used as the independent oracle for the Z[i] coefficient
family at weight 3.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb


@dataclass(frozen=True)
class PowerSeries:
    """sum_{n=0}^{trunc} coeffs[n] * q^n + O(q^(trunc+1)), exact integers."""

    trunc: int
    coeffs: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.coeffs) != self.trunc + 1:
            raise ValueError("coefficient list must have length trunc + 1")

    @classmethod
    def from_list(cls, coeffs: list[int]) -> "PowerSeries":
        return cls(len(coeffs) - 1, tuple(coeffs))

    @classmethod
    def one(cls, trunc: int) -> "PowerSeries":
        return cls(trunc, (1,) + (0,) * trunc)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.trunc:
            raise IndexError(f"index {n} beyond truncation order {self.trunc}")
        return self.coeffs[n]

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")
        n = self.trunc
        out = [0] * (n + 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j in range(n + 1 - i):
                cj = other.coeffs[j]
                if cj:
                    out[i + j] += ci * cj
        return PowerSeries(n, tuple(out))

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        if self.trunc != other.trunc:
            raise ValueError("truncation orders differ")
        return PowerSeries(self.trunc, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def shift(self, k: int) -> "PowerSeries":
        """Multiply by q^k, truncating at the same order."""
        out = (0,) * k + self.coeffs[: self.trunc + 1 - k]
        return PowerSeries(self.trunc, out)


def _mul_sparse(dense: list[int], sparse: list[tuple[int, int]], trunc: int) -> list[int]:
    # dense * (sum c q^e for (e, c) in sparse), truncated
    out = [0] * (trunc + 1)
    for e, c in sparse:
        for i in range(trunc + 1 - e):
            d = dense[i]
            if d:
                out[i + e] += c * d
    return out


@lru_cache(maxsize=8)
def eta_product_h(trunc: int) -> PowerSeries:
    """q * prod_{n>=1} (1 - q^{4n})^6 through q^trunc."""
    if trunc < 1:
        raise ValueError("truncation order must be >= 1")
    acc = [1] + [0] * (trunc - 1)
    m = 4
    while m <= trunc - 1:
        # (1 - q^m)^6 expanded by the binomial theorem
        factor = [(m * j, (-1) ** j * comb(6, j)) for j in range(7) if m * j <= trunc - 1]
        acc = _mul_sparse(acc, factor, trunc - 1)
        m += 4
    return PowerSeries(trunc, (0,) + tuple(acc))


def alpha_from_eta(p: int, trunc: int) -> int:
    """Coefficient of q^p in the eta product; the weight-3 oracle value."""
    if p > trunc:
        raise ValueError(f"prime {p} beyond series truncation {trunc}")
    return eta_product_h(trunc)[p]
