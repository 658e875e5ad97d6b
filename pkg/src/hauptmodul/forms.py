"""q-expansions of the modular objects on Gamma_0(N)^+: classical and
level-N Eisenstein series, eta products, the Kronecker limit function
Delta_N, the weight-two family built from E_2, and the level constants."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .exactnum import (
    bernoulli,
    divisors,
    euler_phi,
    factorize,
    is_prime,
    is_squarefree,
    moebius,
    sigma,
    sigma_table,
)
from .qseries import QSeries
from .tables import GENUS_ZERO_LEVELS, TABLE1


class LevelError(ValueError):
    pass


@dataclass(frozen=True)
class LevelData:
    N: int
    primes: tuple[int, ...]
    r: int
    sigmaN: int
    ellN: int
    kN: int
    kappaN: int | None
    vInf: int
    volOver2Pi: Fraction
    genus_zero: bool

    @property
    def divisors(self) -> list[int]:
        return divisors(self.N)


@lru_cache(maxsize=None)
def level_constants(N: int) -> LevelData:
    if not is_squarefree(N):
        raise LevelError(f"level {N} is not square-free")
    primes = tuple(sorted(factorize(N)))
    r = len(primes)
    s = sigma(N)
    two_r1 = Fraction(2) ** (r - 1)
    inner = two_r1 * Fraction(24, gcd(24, s))
    if inner.denominator != 1:
        raise AssertionError(f"non-integral lcm argument at N={N}")
    k = lcm(4, int(inner))
    ell = Fraction(2) ** (1 - r) * k
    if ell.denominator != 1:
        raise AssertionError(f"non-integral ell at N={N}")
    v = Fraction(s) * ell / 24
    if v.denominator != 1:
        raise AssertionError(f"non-integral vanishing order at N={N}")
    genus_zero = N in TABLE1
    return LevelData(
        N=N,
        primes=primes,
        r=r,
        sigmaN=s,
        ellN=int(ell),
        kN=k,
        kappaN=TABLE1[N].kappa if genus_zero else None,
        vInf=int(v),
        volOver2Pi=Fraction(s) / (12 * two_r1),
        genus_zero=genus_zero,
    )


def genus_zero_levels() -> tuple[int, ...]:
    return GENUS_ZERO_LEVELS


# -- Eisenstein series ------------------------------------------------------


@lru_cache(maxsize=256)
def classical_eisenstein(k2: int, trunc: int) -> QSeries:
    """E_{k2}(z) = 1 - (2 k2 / B_{k2}) sum sigma_{k2-1}(n) q^n."""
    if k2 < 4 or k2 % 2:
        raise ValueError(f"classical Eisenstein series need even weight >= 4, got {k2}")
    c = -Fraction(2 * k2) / bernoulli(k2)
    sig = sigma_table(max(trunc, 0), k2 - 1)
    return QSeries([Fraction(1)] + [c * sig[n] for n in range(1, trunc + 1)], 0, trunc)


@lru_cache(maxsize=1024)
def eisenstein_plus(N: int, k2: int, trunc: int) -> QSeries:
    """E_{k2}^{(N)} = sigma_k(N)^{-1} sum_{v | N} v^k E_{k2}(vz), with k = k2/2."""
    level_constants(N)
    k = k2 // 2
    base = classical_eisenstein(k2, trunc)
    cs = [Fraction(0)] * (trunc + 1)
    for v in divisors(N):
        w = v**k
        for n in range(0, trunc // v + 1):
            cs[n * v] += w * base.coeffs[n]
    s = sigma(N, k)
    return QSeries([c / s for c in cs], 0, trunc)


# -- eta products -----------------------------------------------------------


@dataclass(frozen=True)
class EtaProduct:
    """prod eta(v z)^e over ``factors``; ``prefactor24`` is the exponent of q^(1/24)."""

    factors: tuple[tuple[int, int], ...]
    prefactor24: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple((int(v), int(e)) for v, e in self.factors))
        for v, _ in self.factors:
            if v < 1:
                raise ValueError("eta dilations must be positive")
        object.__setattr__(self, "prefactor24", sum(v * e for v, e in self.factors))

    @property
    def weight(self) -> Fraction:
        return Fraction(sum(e for _, e in self.factors), 2)

    def __mul__(self, other: "EtaProduct") -> "EtaProduct":
        return EtaProduct(self.factors + other.factors)

    def __pow__(self, e: int) -> "EtaProduct":
        return EtaProduct(tuple((v, x * e) for v, x in self.factors))

    def inverse(self) -> "EtaProduct":
        return self**-1


class FractionalExponentError(ValueError):
    pass


@lru_cache(maxsize=64)
def euler_product(trunc: int) -> QSeries:
    """prod_{n>=1} (1 - q^n) by the pentagonal number theorem."""
    terms: dict[int, int] = {0: 1}
    k = 1
    while True:
        a = k * (3 * k - 1) // 2
        if a > trunc:
            break
        sign = -1 if k % 2 else 1
        terms[a] = sign
        b = k * (3 * k + 1) // 2
        if b <= trunc:
            terms[b] = sign
        k += 1
    return QSeries.from_dict(terms, trunc)


@lru_cache(maxsize=256)
def _euler_power(e: int, trunc: int) -> QSeries:
    p = euler_product(trunc)
    if e < 0:
        p = p.inverse()
        e = -e
    return p**e


def eta_product(spec: EtaProduct, trunc: int) -> QSeries:
    if spec.prefactor24 % 24:
        raise FractionalExponentError(
            f"eta product has q-exponent {spec.prefactor24}/24 (residue {spec.prefactor24 % 24} mod 24)"
        )
    off = spec.prefactor24 // 24
    n = trunc - off  # relative precision needed for the unit part
    if n < 0:
        return QSeries.zero(trunc)
    return eta_unit(spec, n).shift(off)


def eta_unit(spec: EtaProduct, n: int) -> QSeries:
    """prod (q^v; q^v)_inf^e through q^n, i.e. the eta product without its q^(1/24) prefactor."""
    unit = QSeries.constant(1, n)
    for v, e in spec.factors:
        if e == 0:
            continue
        unit = unit * _euler_power(e, n // v).dilate(v).truncate(n)
    return unit


def kronecker_limit(N: int, trunc: int) -> QSeries:
    """Delta_N = (prod_{v|N} eta(v z))^ell_N."""
    L = level_constants(N)
    return _kronecker_cached(N, L.ellN, trunc)


@lru_cache(maxsize=128)
def _kronecker_cached(N: int, ell: int, trunc: int) -> QSeries:
    return eta_product(EtaProduct(tuple((v, ell) for v in divisors(N))), trunc)


def kronecker_eta(N: int) -> EtaProduct:
    L = level_constants(N)
    return EtaProduct(tuple((v, L.ellN) for v in divisors(N)))


# -- the weight-two family ---------------------------------------------------


@lru_cache(maxsize=64)
def e2_series(trunc: int) -> QSeries:
    sig = sigma_table(max(trunc, 0), 1)
    return QSeries([1] + [-24 * sig[n] for n in range(1, trunc + 1)], 0, trunc)


def e2_p(p: int, trunc: int) -> QSeries:
    """(p E_2(pz) - E_2(z)) / (p - 1), holomorphic of weight 2 on Gamma_0(p)."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    e2 = e2_series(trunc)
    return (e2.dilate(p).truncate(trunc) * p - e2) / (p - 1)


def e2_N(N: int, trunc: int) -> QSeries:
    """((-1)^r / phi(N)) sum_{v|N} mu(v) v E_2(vz)."""
    L = level_constants(N)
    e2 = e2_series(trunc)
    total = QSeries.zero(trunc)
    for v in divisors(N):
        total = total + e2.dilate(v).truncate(trunc) * (moebius(v) * v)
    return total * Fraction((-1) ** L.r, euler_phi(N))


def e4_N(N: int, trunc: int) -> QSeries:
    return e2_N(N, trunc) ** 2


def tilde_delta(N: int, trunc: int) -> QSeries:
    """E_4^{(N)} - E_{4,N}: a weight-four cusp form for square-free N >= 5."""
    return eisenstein_plus(N, 4, trunc) - e4_N(N, trunc)
