import pytest

from covering_serre.arith import PI, QPiLaurent, bar_ring, pochhammer, q2_binom, qpi_binom, qpi_factorial, qpi_int, render
from covering_serre.expr import Call, ExprError, QInt, eval_expr, parse_expr


@pytest.mark.parametrize("text,want", [
    ("[3]", "q^-2 + pi + q^2"),
    ("qbinom(2,1) - [2]", "0"),
    ("bar([4]) - pi*[4]", "0"),
    ("pi*pi", "1"),
    ("-q^-3 + 2", None),
])
def test_rendered_values(text, want):
    got = render(eval_expr(text))
    if want is not None:
        assert got == want


def test_builders():
    assert eval_expr("[5]!") == qpi_factorial(5)
    assert eval_expr("[-3]") == qpi_int(-3)
    assert eval_expr("qbinom(-2, 3)") == qpi_binom(-2, 3)
    assert eval_expr("q2binom(4, 2)") == q2_binom(4, 2)
    x = QPiLaurent.monomial(2, 0, 1)
    assert eval_expr("poch(pi*q^2, pi*q^2, 3)") == pochhammer(x, x, 3)
    assert eval_expr("bar(q^3 + pi)") == bar_ring(QPiLaurent({3: 1, 0: (0, 1)}))
    assert eval_expr("(q + q^-1)^2 - q^2 - q^-2") == 2 * QPiLaurent(1)


def test_ast_shapes():
    assert isinstance(parse_expr("[4]!"), QInt)
    assert isinstance(parse_expr("qbinom(3, 1)"), Call)


@pytest.mark.parametrize("text", ["qbinom(2,", "[3", "q^", "2 +", "qbinom(1)", "foo(1)",
                                  "q $ 2", "qbinom(q, 1)", "q^q", "[pi]"])
def test_errors_are_reported(text):
    with pytest.raises(ExprError):
        eval_expr(text)


def test_error_position():
    with pytest.raises(ExprError) as info:
        eval_expr("[3] + )")
    assert info.value.pos == 6
    assert "column" in str(info.value)
