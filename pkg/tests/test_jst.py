from fractions import Fraction

import pytest

from hauptmodul.forms import kronecker_limit, level_constants
from hauptmodul.jst import (
    ONE,
    JstError,
    Monomial,
    candidate_set,
    enumerate_monomials,
    equation_count,
    modular_function,
    run_jst,
    verify_identity,
)
from hauptmodul.tables import TABLE1, TABLE2_WEIGHTS

E = Monomial.from_exponents


def test_table_has_44_levels():
    assert len(TABLE1) == 44


@pytest.mark.parametrize("N", sorted(TABLE1))
def test_equation_counts_and_poles(N):
    row = TABLE1[N]
    v = level_constants(N).vInf
    for variant in ("jst2", "jst3"):
        run = getattr(row, variant)
        assert equation_count(N, run.M, variant) == run.equations
        assert run.M * v == run.pole
    assert level_constants(N).kN == row.weight


def test_candidate_sets():
    assert [str(m) for m in enumerate_monomials(1, 1)] == [str(m) for m in candidate_set(1, 1, "jst3")]
    assert len(candidate_set(1, 1, "jst3")) == 4
    assert candidate_set(1, 1, "jst2")[-1] == ONE
    with pytest.raises(ValueError):
        candidate_set(1, 1, "jst9")


def test_modular_function_weight_check():
    with pytest.raises(ValueError):
        modular_function(1, E({4: 1}), 1, 5)


def test_level_one_jst3_by_hand():
    # j Delta = a E4^3 + b E6^2 with a + b = 1 and 744 a + (744 - 1728) b = 0
    r = run_jst(1, "jst3")
    assert r.table_row() == (1, 1, 4, 1)
    assert r.hauptmodul.coefficients == {E({4: 3}): Fraction(41, 72), E({6: 2}): Fraction(31, 72)}
    assert r.kronecker_power.coefficients == {E({4: 3}): Fraction(1, 1728), E({6: 2}): Fraction(-1, 1728)}
    j = r.hauptmodul_series
    assert [j.coeff(n) for n in range(-1, 3)] == [1, 0, 196884, 21493760]


def test_level_one_jst2():
    r = run_jst(1, "jst2")
    assert r.table_row() == (1, 1, 5, 1)
    assert r.hauptmodul.coefficients == {E({4: 3}): 1, ONE: -744}


def test_level_two_jst2_constant():
    # E4^(2) = 1 + 48 q + ..., 1/Delta_2 = q^-1 + 8 + ...
    r = run_jst(2, "jst2")
    assert r.hauptmodul.coefficients == {E({4: 2}): 1, ONE: -104}


@pytest.mark.parametrize("N", [2, 3, 5, 6, 7])
@pytest.mark.parametrize("variant", ["jst2", "jst3"])
def test_small_levels_match_table(N, variant):
    r = run_jst(N, variant)
    t = getattr(TABLE1[N], variant)
    assert (r.M, r.equations, r.pole) == tuple(t)
    k = level_constants(N).kN
    for ident in (r.hauptmodul, r.kronecker_power):
        if variant == "jst3":
            assert ident.is_homogeneous()
        else:  # homogeneous once each term carries its Delta_N power
            assert all(m.total_weight % k == 0 and m.total_weight <= r.M * k for m, _ in ident.terms)
    assert set(r.generator_weights) <= set(TABLE2_WEIGHTS[N])


def test_identities_close():
    r = run_jst(5, "jst3")
    assert verify_identity(r.kronecker_power, None, r.kappa) is None
    assert verify_identity(r.hauptmodul, r.hauptmodul_series, r.kappa) is None
    lhs = r.kronecker_power.expand(r.kappa)
    assert lhs.first_mismatch(kronecker_limit(5, r.kappa) ** r.M, r.kappa) is None


def test_hauptmodul_is_integral_through_kappa():
    for N in (2, 3, 5):
        j = run_jst(N, "jst3").hauptmodul_series
        assert j.trunc >= TABLE1[N].kappa
        assert j.is_integral()
        assert j.coeff(-1) == 1 and j.coeff(0) == 0


def test_t5_oracle():
    # q^-1 - 6 + 134 q + 760 q^2 + ... is (eta/eta_5)^6 + 125 (eta_5/eta)^6 (sympy); j_5 has zero constant
    j = run_jst(5, "jst2").hauptmodul_series
    assert [j.coeff(n) for n in range(-1, 5)] == [1, 0, 134, 760, 3345, 12256]


def test_priority_rules_give_valid_identities():
    a = run_jst(3, "jst3", priority_rule="maxweight")
    b = run_jst(3, "jst3", priority_rule="lexasc")
    assert a.table_row() == b.table_row()
    assert a.hauptmodul_series == b.hauptmodul_series


def test_strategies_agree_on_hauptmodul():
    a = run_jst(5, "jst3", strategy="column")
    b = run_jst(5, "jst3", strategy="greedy")
    assert a.hauptmodul_series == b.hauptmodul_series
    assert a.table_row() == b.table_row()


def test_rejects_bad_inputs():
    from hauptmodul.forms import LevelError

    with pytest.raises(JstError):
        run_jst(37, "jst3")  # square-free, not genus zero for the Atkin-Lehner extension
    with pytest.raises(LevelError):
        run_jst(4, "jst3")
    with pytest.raises(ValueError):
        run_jst(2, "jst4")


def test_modular_function_level_one_is_j():
    # E4^3 / Delta = j = q^-1 + 744 + 196884 q
    f = modular_function(1, E({4: 3}), 1, 2)
    assert [f.coeff(n) for n in range(-1, 3)] == [1, 744, 196884, 21493760]
