"""The pi-free oracle against the engine specialized at pi = 1."""
import pytest
from hypothesis import given, strategies as st

from covering_serre import classical as C
from covering_serre import suites
from covering_serre.arith import QPiLaurent


def test_classical_laurent_division():
    a = C.Laurent({2: 1, 0: 3, -1: -2})
    b = C.Laurent({1: 1, -1: 1})
    assert C.c_div(a * b, b) == a
    with pytest.raises(ArithmeticError):
        C.c_div(C.Laurent({1: 1}) + 1, C.Laurent({2: 1, 0: 1}))


def test_classical_binomial_row():
    assert C.c_binom(4, 2) == C.Laurent({4: 1, 2: 1, 0: 2, -2: 1, -4: 1})
    assert C.c_binom(-1, 3) == C.Laurent(-1)


@given(st.dictionaries(st.integers(-5, 5), st.tuples(st.integers(-5, 5), st.integers(-5, 5))))
def test_from_qpi_is_pi_one(d):
    v = QPiLaurent(d)
    assert C.from_qpi(v) == C.from_qpi(v.specialize(1))


@pytest.mark.parametrize("m", range(-6, 7))
def test_rank1_products(m):
    assert suites.chk_classical_rank1(m, 4) == (True, None)


@pytest.mark.parametrize("parity", ["ev", "odd"])
@pytest.mark.parametrize("n", range(0, 9))
def test_divided_powers(parity, n):
    assert suites.chk_classical_idp(parity, n) == (True, None)


def test_t_identity():
    from covering_serre.serre import t_range
    for t in t_range(-4, 4, 4):
        assert suites.chk_classical_T(*t) == (True, None)


@pytest.mark.parametrize("mserre", [0, 1, 2])
def test_serre(mserre):
    from covering_serre.serre import serre_sweep
    for parity in ("ev", "odd"):
        for lam in serre_sweep(mserre):
            assert suites.chk_classical_serre(mserre, parity, lam) == (True, None)


@pytest.mark.parametrize("m", [1, 3, 5, 7])
def test_qserre(m):
    assert suites.chk_classical_qserre(m) == (True, None)
