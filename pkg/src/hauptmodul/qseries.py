"""Truncated Laurent series in q with exact rational coefficients.

A ``QSeries`` stands for  sum_{n >= offset} c_n q^n  where every c_n with
n <= trunc is known exactly and nothing is claimed beyond ``trunc``.  Leading
zeros are stripped on construction so ``offset`` is the true valuation (the
identically-zero series keeps a single zero coefficient at ``trunc``).
"""

from __future__ import annotations

import cmath
import math
from fractions import Fraction
from functools import reduce
from math import lcm
from typing import Iterable, Sequence

from .exactnum import as_rational, rational_str


class TruncationError(ValueError):
    """Raised when a coefficient beyond the provable truncation is requested."""


class QSeries:
    __slots__ = ("offset", "trunc", "coeffs")

    def __init__(self, coeffs: Iterable, offset: int = 0, trunc: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if trunc is None:
            trunc = offset + len(cs) - 1
        n = trunc - offset + 1
        if n < 1:
            raise ValueError(f"trunc {trunc} below offset {offset}")
        if len(cs) > n:
            cs = cs[:n]
        elif len(cs) < n:
            cs.extend([Fraction(0)] * (n - len(cs)))
        lead = 0
        while lead < n - 1 and cs[lead] == 0:
            lead += 1
        self.offset = offset + lead
        self.trunc = trunc
        self.coeffs = tuple(cs[lead:])

    # -- constructors -----------------------------------------------------
    @classmethod
    def constant(cls, c, trunc: int) -> "QSeries":
        return cls([c], 0, trunc)

    @classmethod
    def monomial(cls, n: int, trunc: int, c=1) -> "QSeries":
        return cls([c], n, trunc)

    @classmethod
    def zero(cls, trunc: int) -> "QSeries":
        return cls([0], trunc, trunc)

    @classmethod
    def from_dict(cls, terms: dict[int, object], trunc: int) -> "QSeries":
        lo = min((k for k in terms if k <= trunc), default=trunc)
        cs = [0] * (trunc - lo + 1)
        for k, v in terms.items():
            if k <= trunc:
                cs[k - lo] = v
        return cls(cs, lo, trunc)

    # -- inspection -------------------------------------------------------
    def coeff(self, n: int) -> Fraction:
        if n > self.trunc:
            raise TruncationError(f"coefficient of q^{n} requested, series known only through q^{self.trunc}")
        if n < self.offset:
            return Fraction(0)
        return self.coeffs[n - self.offset]

    def __getitem__(self, n: int) -> Fraction:
        return self.coeff(n)

    def coefficients(self, lo: int, hi: int) -> list[Fraction]:
        """Dense list of coefficients for exponents lo..hi inclusive."""
        if hi > self.trunc:
            raise TruncationError(f"need q^{hi}, series known only through q^{self.trunc}")
        return [self.coeff(n) for n in range(lo, hi + 1)]

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    @property
    def valuation(self) -> int | None:
        return None if self.is_zero() else self.offset

    @property
    def leading_coefficient(self) -> Fraction:
        return self.coeffs[0]

    def is_integral(self) -> bool:
        return all(c.denominator == 1 for c in self.coeffs)

    def truncate(self, trunc: int) -> "QSeries":
        if trunc > self.trunc:
            raise TruncationError(f"cannot extend truncation from {self.trunc} to {trunc}")
        if trunc < self.offset:
            return QSeries.zero(trunc)
        return QSeries(self.coeffs[: trunc - self.offset + 1], self.offset, trunc)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.trunc == other.trunc and self.offset == other.offset and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.offset, self.trunc, self.coeffs))

    def agrees_with(self, other: "QSeries", through: int | None = None) -> bool:
        """Coefficientwise equality up to ``through`` (default: the common truncation)."""
        t = min(self.trunc, other.trunc) if through is None else through
        lo = min(self.offset, other.offset)
        return all(self.coeff(n) == other.coeff(n) for n in range(lo, t + 1))

    def first_mismatch(self, other: "QSeries", through: int | None = None) -> int | None:
        t = min(self.trunc, other.trunc) if through is None else through
        for n in range(min(self.offset, other.offset), t + 1):
            if self.coeff(n) != other.coeff(n):
                return n
        return None

    def __repr__(self):
        shown = []
        for i, c in enumerate(self.coeffs[:6]):
            if c:
                shown.append(f"{rational_str(c)}*q^{self.offset + i}")
        body = " + ".join(shown) if shown else "0"
        return f"QSeries({body} + O(q^{self.trunc + 1}))"

    # -- arithmetic -------------------------------------------------------
    def __neg__(self):
        return QSeries([-c for c in self.coeffs], self.offset, self.trunc)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_add(self, other)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = QSeries.constant(other, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_add(self, -other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return QSeries([c * x for x in self.coeffs], self.offset, self.trunc)
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_mul(self, other)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (1 / Fraction(other))
        if not isinstance(other, QSeries):
            return NotImplemented
        return qs_mul(self, qs_invert(other))

    def __pow__(self, e: int):
        return qs_pow(self, e)

    def shift(self, k: int) -> "QSeries":
        """Multiply by q^k."""
        return QSeries(self.coeffs, self.offset + k, self.trunc + k)

    def dilate(self, v: int) -> "QSeries":
        return qs_dilate(self, v)

    def inverse(self) -> "QSeries":
        return qs_invert(self)

    # -- serialization ----------------------------------------------------
    def to_json(self) -> dict:
        return {
            "offset": self.offset,
            "trunc": self.trunc,
            "coeffs": [rational_str(c) for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc: dict) -> "QSeries":
        return cls([Fraction(s) for s in doc["coeffs"]], int(doc["offset"]), int(doc["trunc"]))


def _common_denominator(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    d = reduce(lcm, (c.denominator for c in cs), 1)
    return [c.numerator * (d // c.denominator) for c in cs], d


def _convolve(a: list[int], b: list[int], n: int) -> list[int]:
    """First n coefficients of the integer product a*b."""
    out = [0] * n
    nb = len(b)
    for i, ai in enumerate(a[:n]):
        if ai == 0:
            continue
        lim = min(nb, n - i)
        for j in range(lim):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def qs_add(a: QSeries, b: QSeries) -> QSeries:
    t = min(a.trunc, b.trunc)
    lo = min(a.offset, b.offset)
    if lo > t:
        return QSeries.zero(t)
    return QSeries([a.coeff(n) + b.coeff(n) for n in range(lo, t + 1)], lo, t)


def qs_mul(a: QSeries, b: QSeries) -> QSeries:
    t = min(a.trunc + b.offset, b.trunc + a.offset)
    off = a.offset + b.offset
    if a.is_zero() or b.is_zero():
        return QSeries.zero(t)
    n = t - off + 1
    an, ad = _common_denominator(a.coeffs)
    bn, bd = _common_denominator(b.coeffs)
    prod = _convolve(an, bn, n)
    d = ad * bd
    return QSeries([Fraction(x, d) for x in prod], off, t)


def qs_pow(a: QSeries, e: int) -> QSeries:
    if e < 0:
        raise ValueError("negative exponent; invert first")
    if e == 0:
        # 1 is known to the same relative precision as a's unit part
        return QSeries.constant(1, a.trunc - a.offset)
    result = None
    base = a
    while e:
        if e & 1:
            result = base if result is None else qs_mul(result, base)
        e >>= 1
        if e:
            base = qs_mul(base, base)
    return result


def qs_dilate(a: QSeries, v: int) -> QSeries:
    """Substitute q -> q^v.

    Exponents strictly between trunc*v and (trunc+1)*v cannot occur, so the
    result is known through (trunc+1)*v - 1.
    """
    if v < 1:
        raise ValueError("dilation factor must be positive")
    if v == 1:
        return a
    cs = [Fraction(0)] * ((len(a.coeffs) - 1) * v + 1)
    cs[::v] = a.coeffs
    return QSeries(cs, a.offset * v, (a.trunc + 1) * v - 1)


def qs_invert(a: QSeries) -> QSeries:
    if a.is_zero():
        raise ZeroDivisionError("cannot invert a series that is zero to its truncation")
    v = a.offset
    t = a.trunc - 2 * v
    n = a.trunc - v + 1  # known coefficients of the unit part
    if t < -v:
        raise TruncationError("not enough known coefficients to invert")
    un, ud = _common_denominator(a.coeffs)
    u0 = un[0]
    # b = ud / u(q) with u = sum un[i] q^i (integer). Work over Fractions for exactness.
    inv = [Fraction(0)] * n
    inv[0] = Fraction(ud, u0)
    for k in range(1, n):
        s = Fraction(0)
        for i in range(1, k + 1):
            ui = un[i]
            if ui:
                s += ui * inv[k - i]
        inv[k] = -s / u0
    return QSeries(inv, -v, t)


def qs_eval(a: QSeries, z: complex) -> tuple[complex, float]:
    """Floating-point value of the truncated series at z, plus a tail bound.

    The bound is |q|^(trunc+1)/(1-|q|) * max|c_n|, i.e. what the omitted tail
    would contribute if its coefficients were no larger than the known ones.
    """
    z = complex(z)
    if z.imag <= 0:
        raise ValueError("z must lie in the upper half plane")
    if a.offset < 0:
        raise ValueError("evaluation of series with a pole is not supported")
    q = cmath.exp(2j * math.pi * z)
    total = 0j
    qn = q**a.offset
    for c in a.coeffs:
        if c:
            total += float(c) * qn
        qn *= q
    aq = abs(q)
    cmax = max(abs(float(c)) for c in a.coeffs)
    bound = aq ** (a.trunc + 1) / (1 - aq) * cmax
    return total, bound
