from pathlib import Path

import pytest

from covering_serre import suites
from covering_serre.arith import NotDivisible, q_pow
from covering_serre.idivided import (PARITIES, PRESENTATIONS, IdpSpec, b_pi, example_lhs,
                                     example_rhs, idp_closed, idp_expand_dot,
                                     idp_general_sigma, idp_recursive, sweep_weights)
from covering_serre.rank1 import (ParityMismatch, apply_B, apply_J, idem, render_element)

GOLDEN = Path(__file__).parent / "golden"


def golden_lines(parity):
    for line in (GOLDEN / f"examples_{parity}.txt").read_text().splitlines():
        head, body = line.split(" :: ")
        _, n, m = head.split()
        yield int(n[2:]), int(m[2:]), body


@pytest.mark.parametrize("parity", PARITIES)
@pytest.mark.parametrize("n", range(0, 9))
def test_presentations_agree(parity, n):
    assert suites.chk_idp(parity, n) == (True, None)


@pytest.mark.parametrize("parity", PARITIES)
def test_example_lines_match_golden(parity):
    seen = 0
    for n, m, body in golden_lines(parity):
        assert render_element(example_rhs(parity, n, m)) == body
        assert render_element(example_lhs(parity, n, m)) == body
        seen += 1
    assert seen == 21


def test_low_degree_definitions():
    for m in (-4, 0, 2):
        B = apply_B(idem(m))
        assert idp_recursive(IdpSpec("ev", 1), m) == B
        assert idp_recursive(IdpSpec("ev", 0), m) == idem(m)
    for m in (-3, 1):
        bb = apply_B(apply_B(idem(m)))
        two = idp_recursive(IdpSpec("odd", 2), m)
        # [2] B^(2) = B^2 - pi J
        from covering_serre.arith import qpi_int, PI
        assert two.scale(qpi_int(2)) == bb - apply_J(idem(m)).scale(PI)


def test_parity_is_enforced():
    with pytest.raises(ParityMismatch):
        idp_expand_dot(IdpSpec("ev", 2), 1)
    with pytest.raises(ParityMismatch):
        idp_recursive(IdpSpec("odd", 2), 0)
    with pytest.raises(ValueError):
        IdpSpec("even", 2)


def test_sweep_size():
    for n in range(6):
        ws = sweep_weights("odd", n)
        assert len(ws) == 2 * n + 3 and all(w % 2 for w in ws)


def test_b_pi_degree_two_is_the_example_leading_part():
    for m in (-2, 0, 4):
        diff = idp_recursive(IdpSpec("ev", 2), m) - b_pi(2, m)
        assert all(a == 0 and b == 0 for a, b, _ in diff.terms)


def test_literal_closed_product_breaks_down():
    # a single trailing B in the even-degree product is not divisible by [n]!
    with pytest.raises(NotDivisible):
        for m in sweep_weights("ev", 4):
            idp_closed(IdpSpec("ev", 4), m, literal=True)


@pytest.mark.parametrize("parity", PARITIES)
def test_general_parameter_at_distinguished_value(parity):
    for n in range(0, 7):
        for m in sweep_weights(parity, n):
            got = idp_general_sigma(IdpSpec(parity, n), m, q_pow(-1), jtilde_pi=True)
            assert got == idp_recursive(IdpSpec(parity, n), m)


def test_odd_dot_with_pi_a_differs():
    spec = IdpSpec("odd", 3)
    m = sweep_weights("odd", 3)[0]
    assert idp_expand_dot(spec, m, odd_pi_a=True) != idp_recursive(spec, m)
    assert idp_expand_dot(spec, m) == idp_recursive(spec, m)


def test_all_presentations_registered():
    assert set(PRESENTATIONS) == {"recursive", "closed", "dot", "EhF", "FhE"}
