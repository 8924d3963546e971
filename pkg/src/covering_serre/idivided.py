"""Rank-one i^pi-divided powers in several presentations.

All presentations are evaluated on a single idempotent ``1_m``; ``ev`` pairs
with even m and ``odd`` with odd m.
"""
from dataclasses import dataclass

from . import mutations
from .arith import (ONE, QPiLaurent, binom2, exact_div, pi_pow, pq_pow, q2_binom,
                    q_pow, qpi_factorial, qpi_int)
from .rank1 import (HBracket, ParityMismatch, Rank1Element, apply_B, apply_J,
                    echeck_div, h_apply, idem, left_F, monomial)

PARITIES = ("ev", "odd")
FORMS = ("EhF", "FhE")


@dataclass(frozen=True)
class IdpSpec:
    parity: str
    n: int

    def __post_init__(self):
        if self.parity not in PARITIES:
            raise ValueError(f"parity must be one of {PARITIES}")
        if self.n < 0:
            raise ValueError("n must be >= 0")


def check_parity(parity, m):
    if (m % 2) != (0 if parity == "ev" else 1):
        raise ParityMismatch(f"{parity} divided powers live on {'even' if parity == 'ev' else 'odd'} weights, got {m}")


def sweep_weights(parity, n):
    """Weights on which identities of degree n are compared.

    Restricted to ``1_m`` with m of fixed parity, every coefficient of every
    presentation is a Laurent polynomial in ``X = q^m`` whose exponents lie in
    ``[-n, n]``: each B step contributes X^-1 (from K^-1) or a (q,pi)-integer
    with top linear in m (exponents -1..1), and each bracket factor is a
    q^2-integer in m over a constant.  A difference of two such polynomials is
    determined by ``2n + 1`` distinct values of X; two extra points are added.
    """
    count = 2 * n + 3
    return [w for w in _centred(count, 0 if parity == "ev" else 1)]


def _centred(count, par):
    half = count // 2
    return [2 * k + par for k in range(-half, count - half)]


def div_element(x, d):
    return x.map_coefficients(lambda c: exact_div(c, d))


# -- recursive ---------------------------------------------------------------

def idp_sequence(parity, n, m):
    """``[B^(0) 1_m, ..., B^(n) 1_m]`` from the defining recursions."""
    check_parity(parity, m)
    seq = [idem(m)]
    if n == 0:
        return seq
    seq.append(apply_B(seq[0]))
    for k in range(1, n):
        bx = apply_B(seq[k])
        twist = (parity == "ev") == (k % 2 == 0)
        if twist:
            corr = apply_J(seq[k - 1]).scale(qpi_int(k))
            if parity == "odd":
                corr = corr.scale(pi_pow(1))
            bx = bx - corr
        seq.append(div_element(bx, qpi_int(k + 1)))
    return seq


def idp_recursive(spec, m):
    return idp_sequence(spec.parity, spec.n, m)[spec.n]


# -- closed products -----------------------------------------------------------

def _apply_poly_factor(x, quad, c):
    """``(B^quad - c J) x`` with quad in {1, 2}."""
    bx = apply_B(x)
    if quad == 2:
        bx = apply_B(bx)
    if not c:
        return bx
    return bx - apply_J(x).scale(c)


def closed_factors(parity, n, literal=False):
    """Factors ``(power of B, c)`` of ``prod (B^power - c J)``, left to right.

    The default follows the recursions.  ``literal`` uses an alternative
    factor pattern for ``n >= 4``: the last factor has a single B, and for
    odd n in the even family the leading factor is ``B^2``.
    """
    a, odd_len = divmod(n, 2)
    facs = [(1, ONE * 0)] if odd_len else []
    for j in range(1, a + 1):
        if parity == "ev":
            k = 2 * j if odd_len else 2 * j - 2
            c = qpi_int(k) * qpi_int(k)
        else:
            c = (qpi_int(2 * j - 1) * qpi_int(2 * j - 1)).times_pi(1)
        facs.append((2, c))
    if literal and a >= 2:
        facs[-1] = (1, facs[-1][1])
        if parity == "ev" and odd_len:
            facs[0] = (2, facs[0][1])
    return facs


def idp_closed(spec, m, literal=False):
    check_parity(spec.parity, m)
    x = idem(m)
    for deg, c in reversed(closed_factors(spec.parity, spec.n, literal)):
        x = _apply_poly_factor(x, deg, c)
    return div_element(x, qpi_factorial(spec.n))


def idp_general_sigma(spec, m, sigma, jtilde_pi=False):
    """Product formulas with an explicit parameter ``sigma``.

    ``B = F + sigma E K^-1`` and the correction terms carry ``sigma q``.  The
    central element in the correction is ``J`` (or ``pi J`` with
    ``jtilde_pi``).
    """
    check_parity(spec.parity, m)
    sigma = QPiLaurent._coerce(sigma)
    scale_e = sigma.shift(1)  # sigma E K^-1 = (sigma q) Ech

    def bmul(x):
        return left_F(1, x) + echeck_div(1, x).scale(scale_e)

    k, odd_len = divmod(spec.n, 2)
    consts = []
    for j in range(1, k + 1):
        if spec.parity == "odd":
            c = qpi_int(2 * j - 1) ** 2
        else:
            c = (qpi_int(2 * j) if odd_len else qpi_int(2 * j - 2)) ** 2
            c = c.times_pi(1)
        c = c * sigma.shift(1)
        if jtilde_pi:
            c = c.times_pi(1)
        consts.append(c)
    x = idem(m)
    for c in consts:
        x = bmul(bmul(x)) - apply_J(x).scale(c)
    if odd_len:
        x = bmul(x)
    return div_element(x, qpi_factorial(spec.n))


# -- explicit E-F expansion on idempotents ---------------------------------------

def _dot_pi_a(a):
    return 0 if mutations.active("dot_pi_a") else a


def idp_expand_dot(spec, m, odd_pi_a=False):
    """Normal-form coefficients written out directly (no operator algebra).

    In the odd family the coefficient carries no separate ``pi^a``; passing
    ``odd_pi_a=True`` restores it, which breaks agreement with the recursion
    from n = 1 on.
    """
    check_parity(spec.parity, m)
    n = spec.n
    terms = {}
    if spec.parity == "ev":
        lam = m // 2
        if n % 2 == 0:
            M = n // 2
            for c in range(M + 1):
                for a in range(2 * M - 2 * c + 1):
                    e = 2 * (a + c) * (M - a - lam) - 2 * a * c - binom2(2 * c + 1)
                    coef = q2_binom(M - c - a - lam, c) * pq_pow(e)
                    terms[(a, 2 * M - 2 * c - a, m)] = coef.times_pi(_dot_pi_a(a))
        else:
            M = (n + 1) // 2
            for c in range(M):
                for a in range(2 * M - 1 - 2 * c + 1):
                    e = 2 * (a + c) * (M - a - lam) - 2 * a * c - a - binom2(2 * c + 1)
                    coef = q2_binom(M - c - a - lam - 1, c) * pq_pow(e)
                    terms[(a, 2 * M - 1 - 2 * c - a, m)] = coef.times_pi(_dot_pi_a(a))
    else:
        lam = (m + 1) // 2
        M, odd_len = divmod(n, 2)
        for c in range(M + 1):
            for a in range(n - 2 * c + 1):
                base = 2 * (a + c) * (M - a - lam) - 2 * a * c - binom2(2 * c)
                if odd_len:
                    e, top = base + 2 * a, M - c - a - lam + 1
                else:
                    e, top = base + a, M - c - a - lam
                coef = q2_binom(top, c) * pq_pow(e)
                if odd_pi_a:
                    coef = coef.times_pi(a)
                elif mutations.active("dot_pi_a"):
                    coef = coef.times_pi(a)
                terms[(a, n - 2 * c - a, m)] = coef
    return Rank1Element(terms)


# -- operator forms ------------------------------------------------------------

def _ehf(a, bracket, b, m):
    """``Ech^(a) bracket F^(b) 1_m``."""
    x = monomial(0, b, m)
    if bracket is not None and bracket.n:
        x = h_apply(bracket, x)
    return echeck_div(a, x)


def _fhe(a, bracket, b, m):
    """``F^(a) bracket Ech^(b) 1_m``."""
    x = echeck_div(b, idem(m))
    if bracket is not None and bracket.n:
        x = h_apply(bracket, x)
    return left_F(a, x)


def operator_terms(spec, form):
    """``[(coef, a, bracket, b)]`` for ``sum coef X^(a) bracket Y^(b)``."""
    n = spec.n
    out = []
    if n == 0:
        return [(ONE, 0, None, 0)]
    if form == "EhF":
        if spec.parity == "ev":
            M = (n + 1) // 2
            kind, shift = "square", 1 - M
        else:
            M = n // 2
            kind, shift = "brace", 1 - M
        cmax = n // 2
        for c in range(cmax + 1):
            rest = n - 2 * c
            for a in range(rest + 1):
                if spec.parity == "ev":
                    base = binom2(2 * c) if n % 2 == 0 else binom2(2 * c + 1)
                else:
                    base = binom2(2 * c) if n % 2 == 0 else binom2(2 * c - 1) - 1
                coef = pq_pow(base - a * (rest - a))
                out.append((coef, a, HBracket(kind, shift, c), rest - a))
    elif form == "FhE":
        cmax = n // 2
        for c in range(cmax + 1):
            rest = n - 2 * c
            for a in range(rest + 1):
                if spec.parity == "ev":
                    M = (n + 1) // 2
                    qexp = (3 * c if n % 2 == 0 else c) + a * (rest - a)
                    br = HBracket("square", M - c, c)
                else:
                    M = n // 2
                    qexp = (-c if n % 2 == 0 else c) + a * (rest - a)
                    br = HBracket("brace", 1 + M - c, c)
                coef = q_pow(qexp) * (-1 if c % 2 else 1)
                out.append((coef, a, br, rest - a))
    else:
        raise ValueError(f"form must be one of {FORMS}")
    return out


def idp_expand_operator(spec, form, m):
    check_parity(spec.parity, m)
    ev = _ehf if form == "EhF" else _fhe
    total = Rank1Element()
    for coef, a, br, b in operator_terms(spec, form):
        total = total + ev(a, br, b, m).scale(coef)
    return total


def b_pi(n, m):
    """``sum_a (pi q)^(-a(n-a)) Ech^(a) F^(n-a) 1_m``."""
    total = Rank1Element()
    for a in range(n + 1):
        total = total + _ehf(a, None, n - a, m).scale(pq_pow(-a * (n - a)))
    return total


PRESENTATIONS = {
    "recursive": lambda spec, m: idp_recursive(spec, m),
    "closed": lambda spec, m: idp_closed(spec, m),
    "dot": lambda spec, m: idp_expand_dot(spec, m),
    "EhF": lambda spec, m: idp_expand_operator(spec, "EhF", m),
    "FhE": lambda spec, m: idp_expand_operator(spec, "FhE", m),
}


# -- small-degree expansions in bracket form ----------------------------------

def _sq(a, n=1):
    return HBracket("square", a, n)


def _br(a, n=1):
    return HBracket("brace", a, n)


def example_rhs(parity, n, m):
    """Bracket-form expansions for ``2 <= n <= 4``, written out by hand."""
    check_parity(parity, m)
    pq1 = pq_pow(1)
    if parity == "ev":
        table = {
            2: [(pq1, 0, _sq(0), 0)],
            3: [(pq_pow(1) * q_pow(2), 0, _sq(-1), 1), (pq_pow(1) * q_pow(2), 1, _sq(-1), 0)],
            4: [(pq1, 2, _sq(-1), 0), (pq1, 0, _sq(-1), 2), (ONE, 1, _sq(-1), 1),
                (q_pow(6), 0, _sq(-1, 2), 0)],
        }
    else:
        table = {
            2: [(pq1, 0, _br(0), 0)],
            3: [(pi_pow(1).shift(-1), 0, _br(0), 1), (pi_pow(1).shift(-1), 1, _br(0), 0)],
            4: [(pq1, 2, _br(-1), 0), (pq1, 0, _br(-1), 2), (ONE, 1, _br(-1), 1),
                (q_pow(6), 0, _br(-1, 2), 0)],
        }
    total = b_pi(n, m)
    for coef, a, br, b in table[n]:
        total = total + _ehf(a, br, b, m).scale(coef)
    return total


def example_lhs(parity, n, m):
    """The defining quotients: ``B^2/[2]``, ``(B^3 - J[2]^2 B)/[3]!``, ..."""
    check_parity(parity, m)
    x = idem(m)
    b = apply_B
    if parity == "ev":
        if n == 2:
            num = b(b(x))
        elif n == 3:
            num = b(b(b(x))) - apply_J(b(x)).scale(qpi_int(2) ** 2)
        else:
            num = b(b(b(b(x)))) - apply_J(b(b(x))).scale(qpi_int(2) ** 2)
    else:
        pj = lambda y, c=ONE: apply_J(y).scale(c.times_pi(1))
        if n == 2:
            num = b(b(x)) - pj(x)
        elif n == 3:
            num = b(b(b(x))) - pj(b(x))
        else:
            y = b(b(x)) - pj(x)
            num = b(b(y)) - pj(y, qpi_int(3) ** 2)
    return div_element(num, qpi_factorial(n))
