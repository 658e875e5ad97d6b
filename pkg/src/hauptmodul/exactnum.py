"""Exact rationals and the small amount of elementary number theory the
q-expansions need (Bernoulli numbers, divisor sums, Moebius, totient,
partitions into parts >= 2)."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

# Fractions are normalized on construction and immutable, which is exactly the
# contract the coefficient domain needs.
Rational = Fraction


def as_rational(x) -> Fraction:
    """Parse an int, Fraction or "num/den" string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {type(x).__name__} to a rational")


def rational_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@lru_cache(maxsize=None)
def bernoulli(m: int) -> Fraction:
    """B_m for even m >= 0, with B_0 = 1 (B_1 = -1/2 is used internally)."""
    if m < 0:
        raise ValueError("Bernoulli index must be non-negative")
    if m == 1:
        return Fraction(-1, 2)
    if m % 2:
        raise ValueError(f"odd Bernoulli index {m} is not supported")
    if m == 0:
        return Fraction(1)
    # sum_{k=0}^{m} C(m+1, k) B_k = 0
    s = sum(comb(m + 1, k) * bernoulli(k) for k in range(m) if k < 2 or k % 2 == 0)
    return -s / (m + 1)


def factorize(n: int) -> dict[int, int]:
    """Trial division; levels here are tiny."""
    if n < 1:
        raise ValueError("n must be positive")
    out: dict[int, int] = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1 if p == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n).items():
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n) == {n: 1}


def is_squarefree(n: int) -> bool:
    return n >= 1 and all(e == 1 for e in factorize(n).values())


def sigma(n: int, alpha: int = 1) -> int:
    """Sum of alpha-th powers of the divisors of n."""
    if n < 1:
        raise ValueError("sigma is defined for n >= 1")
    total = 1
    for p, e in factorize(n).items():
        total *= sum(p ** (alpha * k) for k in range(e + 1))
    return total


def sigma_table(n_max: int, alpha: int) -> list[int]:
    """[0, sigma_alpha(1), ..., sigma_alpha(n_max)] by a divisor sieve."""
    table = [0] * (n_max + 1)
    for d in range(1, n_max + 1):
        dp = d**alpha
        for m in range(d, n_max + 1, d):
            table[m] += dp
    return table


def moebius(n: int) -> int:
    f = factorize(n)
    if any(e > 1 for e in f.values()):
        return 0
    return -1 if len(f) % 2 else 1


def euler_phi(n: int) -> int:
    result = n
    for p in factorize(n):
        result = result // p * (p - 1)
    return result


@dataclass(frozen=True)
class PartitionSet:
    target: int
    parts: tuple[tuple[int, ...], ...]

    @property
    def count(self) -> int:
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __len__(self):
        return len(self.parts)


def _partitions_desc(n: int, largest: int) -> list[tuple[int, ...]]:
    if n == 0:
        return [()]
    out = []
    for first in range(min(n, largest), 1, -1):
        for rest in _partitions_desc(n - first, first):
            out.append((first,) + rest)
    return out


@lru_cache(maxsize=None)
def partitions_ge2(n: int) -> PartitionSet:
    """All partitions of n into parts >= 2.

    Parts are listed in descending order and the partitions themselves in
    descending lexicographic order, e.g. 6 -> (6), (4, 2), (3, 3), (2, 2, 2).
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    return PartitionSet(n, tuple(_partitions_desc(n, n)))


@lru_cache(maxsize=None)
def count_partitions_ge2(n: int) -> int:
    """Number of partitions of n into parts >= 2, without enumerating them."""
    if n < 0:
        return 0
    # coefficient of x^n in prod_{k>=2} 1/(1-x^k)
    ways = [1] + [0] * n
    for k in range(2, n + 1):
        for m in range(k, n + 1):
            ways[m] += ways[m - k]
    return ways[n]
