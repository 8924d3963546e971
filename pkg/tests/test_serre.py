import pytest

from covering_serre import suites
from covering_serre.arith import PI, ONE, QPiLaurent
from covering_serre.serre import (HalfPowerResidue, RangeError, SerreParams, TooManyFj,
                                  a_i_closed, a_i_numerator, a_j_closed, a_j_numerator,
                                  eval_T_classical, eval_T_literal, eval_T_substitution,
                                  extract_S, fj_idem, qserre_coefficients, relator_element,
                                  s_left_Fj, serre_sum, serre_sweep, sqrt_pi_substitute,
                                  t_audit, t_range, verify_iserre)

SWEEP = [(m, par, pj) for m in range(0, 3) for par in ("ev", "odd") for pj in (0, 1)]


@pytest.mark.parametrize("mserre,parity,pj", SWEEP)
def test_iserre_relation(mserre, parity, pj):
    for lam in serre_sweep(mserre):
        ok, witness = verify_iserre(SerreParams(mserre, pj, parity, lam))
        assert ok, witness


@pytest.mark.slow
@pytest.mark.parametrize("parity", ["ev", "odd"])
@pytest.mark.parametrize("pj", [0, 1])
def test_iserre_relation_degree_seven(parity, pj):
    for lam in serre_sweep(3):
        assert verify_iserre(SerreParams(3, pj, parity, lam))[0]


def test_smallest_relation_explicitly():
    got = serre_sum(SerreParams(0, 1, "ev", 0))
    want = relator_element(0, 1, 0)
    assert got == want
    assert str(got) == "1 * E^(0) F^(0) F_j F^(1) [1_0] + -pi * E^(0) F^(1) F_j F^(0) [1_0]"


def test_uniform_sign_only_matches_for_odd_j():
    for lam in serre_sweep(1):
        assert verify_iserre(SerreParams(1, 1, "ev", lam), form="uniform")[0]
    assert not all(verify_iserre(SerreParams(1, 0, "ev", lam), form="uniform")[0]
                   for lam in serre_sweep(1))


def test_sweep_has_4n_plus_1_points():
    assert len(serre_sweep(2)) == 4 * 5 + 1


def test_single_fj():
    with pytest.raises(TooManyFj):
        s_left_Fj(fj_idem(1, 0, 0))


def test_range_errors():
    p = SerreParams(1, 0, "ev", 0)
    with pytest.raises(RangeError):
        extract_S(0, 0, 0, p)
    with pytest.raises(RangeError):
        extract_S(0, 2, 1, p)
    with pytest.raises(RangeError):
        eval_T_substitution(3, 0, 0)
    with pytest.raises(ValueError):
        SerreParams(-1, 0, "ev", 0)


@pytest.mark.parametrize("mserre", [0, 1, 2])
def test_s_equals_t(mserre):
    for pj in (0, 1):
        for lam in serre_sweep(mserre):
            assert suites.chk_extract_S(mserre, pj, lam) == (True, None)


def test_t_identity_grid():
    bad = [t for t in t_range(-8, 8, 6) if eval_T_substitution(*t)]
    assert bad == []
    assert len(list(t_range(-6, 6, 5))) == 13 * 20


def test_t_reduces_to_the_classical_sum_at_pi_one():
    from covering_serre.classical import from_qpi
    for w, u, ell in t_range(-4, 4, 4):
        assert from_qpi(eval_T_literal(w, u, ell)) == from_qpi(eval_T_classical(w, u, ell))


def test_literal_t_summand_is_not_zero():
    assert eval_T_literal(0, 0, 1) == ONE - PI
    assert t_audit(0, 0, 1)


def test_half_power_guard():
    with pytest.raises(HalfPowerResidue):
        sqrt_pi_substitute(QPiLaurent({1: 1}), 0)


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_qserre_coefficients(m):
    ai, aj = qserre_coefficients(m)
    assert ai == a_i_closed(m) and aj == a_j_closed(m)
    assert ai == a_i_numerator(m)


def test_simplified_aj_form_is_off():
    assert a_j_numerator(3, drop_pi=True) != a_j_closed(3)
    assert a_j_numerator(3) == a_j_closed(3)
