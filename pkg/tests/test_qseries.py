from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hauptmodul.qseries import QSeries, TruncationError, qs_dilate, qs_eval

coeff = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def series(draw, unit=False, trunc=12):
    off = 0 if unit else draw(st.integers(-3, 3))
    cs = draw(st.lists(coeff, min_size=1, max_size=trunc - off + 1))
    if unit:
        cs[0] = draw(coeff.filter(lambda x: x != 0))
    return QSeries(cs, off, trunc)


def same(a, b):
    t = min(a.trunc, b.trunc)
    return a.truncate(t) == b.truncate(t)


@given(series(), series())
def test_add_commutes(a, b):
    assert a + b == b + a


@given(series(), series())
def test_mul_commutes(a, b):
    assert a * b == b * a


@given(series(), series(), series())
def test_mul_associates(a, b, c):
    assert same((a * b) * c, a * (b * c))


@given(series(), series(), series())
def test_distributes(a, b, c):
    assert same(a * (b + c), a * b + a * c)


@given(series(unit=True))
def test_inverse(a):
    one = a * a.inverse()
    assert same(one, QSeries.constant(1, one.trunc))


@given(series(unit=True), st.integers(0, 5))
def test_pow_is_repeated_product(a, e):
    p = QSeries.constant(1, a.trunc)
    for _ in range(e):
        p = p * a
    assert same(a**e, p)


@given(series(), series(), st.integers(1, 4))
def test_dilate_is_ring_map(a, b, v):
    assert same(qs_dilate(a * b, v), qs_dilate(a, v) * qs_dilate(b, v))


@given(series(), series(), coeff)
def test_truncation_soundness(a, b, noise):
    """Changing either factor beyond its truncation never changes the known part of the product."""
    p = a * b
    a2 = QSeries(list(a.coeffs) + [noise] * 3, a.offset, a.trunc + 3)
    b2 = QSeries(list(b.coeffs) + [noise] * 3, b.offset, b.trunc + 3)
    assert (a2 * b2).truncate(p.trunc) == p


def test_product_truncation_rule():
    a = QSeries([1, 2, 3], -1, 1)  # q^-1 + 2 + 3q
    b = QSeries([1, 1, 1, 1, 1], 0, 4)
    assert (a * b).trunc == 1  # limited by a: 1 + 0
    c = QSeries([1, 1], 2, 3)
    assert (b * c).trunc == 3  # min(4 + 2, 3 + 0)


def test_coefficient_beyond_trunc_raises():
    s = QSeries([1, 2], 0, 1)
    with pytest.raises(TruncationError):
        s.coeff(2)
    with pytest.raises(TruncationError):
        s.truncate(5)


def test_leading_zeros_stripped():
    s = QSeries([0, 0, 5, 1], -1, 2)
    assert s.offset == 1 and s.valuation == 1 and s.leading_coefficient == 5


def test_json_roundtrip():
    s = QSeries([Fraction(1, 3), 0, -2], -1, 1)
    assert QSeries.from_json(s.to_json()) == s


def test_eval_geometric():
    s = QSeries([1] * 80, 0, 79)
    z = 1j
    val, bound = qs_eval(s, z)
    import cmath

    q = cmath.exp(2j * cmath.pi * z)
    assert abs(val - 1 / (1 - q)) < 1e-12
    assert bound >= 0


def test_eval_rejects_lower_half_plane():
    with pytest.raises(ValueError):
        qs_eval(QSeries([1], 0, 0), -1j)
