"""Exact verification of iquantum covering group identities in rank one."""
__version__ = "0.1.0"

from ._backend import NAME as BACKEND  # noqa: E402
from .arith import (QPiLaurent, NotDivisible, qpi_int, qpi_factorial,  # noqa: E402
                    qpi_binom, q2_binom, bar_ring, exact_div, render)
from .rank1 import Rank1Element, idem, monomial, normal_product  # noqa: E402
from .idivided import IdpSpec, idp_expand_dot, idp_recursive  # noqa: E402
from .serre import SerreParams, serre_sum, relator_element, eval_T_substitution  # noqa: E402
from .expr import parse_expr, eval_expr  # noqa: E402
from .datum import load_datum, validate_datum, validate_parameters  # noqa: E402

__all__ = [
    "BACKEND", "QPiLaurent", "NotDivisible", "qpi_int", "qpi_factorial", "qpi_binom",
    "q2_binom", "bar_ring", "exact_div", "render", "Rank1Element", "idem", "monomial",
    "normal_product", "IdpSpec", "idp_expand_dot", "idp_recursive", "SerreParams",
    "serre_sum", "relator_element", "eval_T_substitution", "parse_expr", "eval_expr",
    "load_datum", "validate_datum", "validate_parameters",
]
