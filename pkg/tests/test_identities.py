from fractions import Fraction

import pytest

from hauptmodul import identities as ids
from hauptmodul.forms import EtaProduct, FractionalExponentError
from hauptmodul.identities import FracSeries, ThetaSpec, theta_series
from hauptmodul.qseries import QSeries

# brute-force lattice counts
THETA_X2_XY_3Y2 = [1, 2, 0, 4, 2, 4, 0, 0, 0]
# sum over odd x minus sum over odd y of q^((x^2 + 17 y^2)/4), in powers of q^(1/4)
THETA17_ODD_DIFF = {1: 2, 9: 2, 17: -2, 21: -4, 25: 2, 33: -4}


def test_theta_binary_form():
    t = theta_series(ThetaSpec(2, 2, 6), 8)
    assert t.d == 1
    assert [t.coeff(n) for n in range(9)] == THETA_X2_XY_3Y2


def test_theta_odd_difference_quarter_powers():
    s = ids._odd_diff(Fraction(1, 2), 0, Fraction(17, 2), 10)
    assert s.d == 4
    for e in range(41):
        assert s.series.coeff(e) == THETA17_ODD_DIFF.get(e, 0), e


def test_theta_rejects_indefinite():
    with pytest.raises(ValueError):
        ThetaSpec(1, 3, 1)
    with pytest.raises(ValueError):
        ThetaSpec(1, 0, 1, parity="z-odd")


def test_theta_swap_symmetry():
    a = theta_series(ThetaSpec(1, 1, 3, "x-odd"), 10)
    b = theta_series(ThetaSpec(1, 1, 3, "x-odd").swapped(), 10)
    assert a.series == b.series


def test_eta_frac_keeps_fractional_prefactor():
    e = ids.eta_frac(EtaProduct(((1, 1),)), 5)
    assert e.offset == Fraction(1, 24)
    # pentagonal numbers: 1 - q - q^2 + q^5
    assert [e.coeff(Fraction(1, 24) + n) for n in range(6)] == [1, -1, -1, 0, 0, 1]


def test_eta_quotient_integral():
    # (eta/eta_2)^24 = q^-1 - 24 + 276 q - 2048 q^2 + 11202 q^3 - 49152 q^4 (sympy)
    s = ids.eta_quotient([(1, 24)], [(2, 24)], 4).to_qseries()
    assert [s.coeff(n) for n in range(-1, 5)] == [1, -24, 276, -2048, 11202, -49152]


def test_to_qseries_rejects_fractional_terms():
    with pytest.raises(FractionalExponentError):
        ids.eta_frac(EtaProduct(((1, 1),)), 3).to_qseries()


def test_frac_series_arithmetic_aligns_denominators():
    a = FracSeries(QSeries([1, 1], 0, 4), 2)  # 1 + q^(1/2), through q^2
    b = FracSeries(QSeries([1, 0, 1], 0, 6), 3)  # 1 + q^(2/3), through q^2
    c = a * b
    assert c.d == 6
    assert c.coeff(Fraction(7, 6)) == 1 and c.coeff(Fraction(1, 2)) == 1 and c.coeff(1) == 0


def test_classical_suite():
    assert ids.classical_suite(50).ok


def test_table3_cheap_levels():
    for N in (2, 3, 5, 6, 10, 13, 17, 22, 30, 46):
        r = ids.crosscheck_hauptmodul(N)
        assert r.ok, r


def test_table3_known_constants():
    want = {2: (-24,), 3: (-12,), 5: (-6,), 6: (-4, -6, 12), 10: (-2, -4, 6), 30: (-3, -1, 1, 2)}
    for N, consts in want.items():
        assert ids.crosscheck_hauptmodul(N).constants == tuple(Fraction(c) for c in consts)


def test_table3_level15_erratum():
    assert ids.crosscheck_hauptmodul(15).ok
    printed, note = ids.TABLE3_ERRATA[(15, 1)]
    j = ids.hauptmodul_series(15)
    t = printed(40 + ids._T3_MARGIN).to_qseries().truncate(40)
    diff = t - j.truncate(40)
    assert (diff - diff.coeff(0)).first_mismatch(QSeries.zero(40)) == 1
    assert "w^3 - w^-3" in note


def test_table3_groups_are_mutually_constant():
    for N in (6, 10, 30):
        forms = ids.table3_series(N, 30)
        for f in forms[1:]:
            d = f - forms[0]
            assert (d - d.coeff(0)).first_mismatch(QSeries.zero(30)) is None


def test_dimensions():
    rep = ids.dimension_report(24)
    assert rep.ok, rep.text()
    assert ids.dimension_rank(2, 8) == 2 and ids.dimension_rank(3, 12) == 3


def test_level5_dimension_notes_are_reported():
    value, note = ids._closed_dimension(5, 6)
    assert value == 1 and note


def test_divisor_sum_identity():
    assert ids.divisor_sum_identity_check(200).ok
    assert ids.A2(1, 2) == 1 + 2 + 2 * 1


def test_e8_level3():
    r = ids.e8_level3_rational_check()
    assert (r.c1, r.c2) == (Fraction(-41, 1728), Fraction(1, 288))
    assert r.first_bad is None and r.cusp_constants == (0, 0)


@pytest.mark.parametrize("N", [2, 3, 5, 6, 17, 30])
def test_fricke(N):
    assert ids.fricke_residual(N) < 1e-8
    assert ids.fricke_residual(N, z=0.3 + 0.8j) < 1e-8


def test_report_json():
    rep = ids.divisor_sum_identity_check(10)
    doc = rep.to_json()
    assert doc["ok"] and doc["checks"][0]["status"] == "pass"
