"""Serre-type identities: the free spectator model, the T identity and the
tau i != i coefficients.

Throughout, index 1 is an odd simple root with ``a_1j = -2 * mserre``; the
spectator generator F_j has parity ``pj`` and shifts the h_1-weight by
``2 * mserre``.
"""
from dataclasses import dataclass

from . import mutations
from .arith import (ONE, PI, ZERO, QPiLaurent, binom2, exact_div, pi_pow, pochhammer,
                    pq_pow, q2_binom, q_pow, qpi_binom, qpi_int)
from .classical import Laurent, c_binom, c_q2_binom
from .idivided import check_parity, idp_expand_dot, IdpSpec
from .rank1 import _acc, reorder_FE


class TooManyFj(ValueError):
    """A product would contain two spectator generators."""


class RangeError(ValueError):
    pass


class HalfPowerResidue(ArithmeticError):
    """A sqrt(pi) survived after removing the expected prefactor."""


@dataclass(frozen=True)
class SerreParams:
    mserre: int
    pj: int
    parity: str
    lam: int

    def __post_init__(self):
        if self.mserre < 0 or self.pj not in (0, 1) or self.parity not in ("ev", "odd"):
            raise ValueError(f"bad Serre parameters {self}")

    @property
    def weight(self):
        """The idempotent: ``1_{2 lam}`` (ev) or ``1_{2 lam - 1}`` (odd)."""
        return 2 * self.lam if self.parity == "ev" else 2 * self.lam - 1

    @property
    def degree(self):
        return 2 * self.mserre + 1


# -- spectator elements ---------------------------------------------------------

class SpectatorElement:
    """``sum coef * E^(a) F^(b) [F_j F^(c)] 1_m`` keyed by ``(a, b, has_fj, c, m)``."""

    __slots__ = ("terms", "mserre", "pj")

    def __init__(self, mserre, pj, terms=None):
        self.mserre, self.pj = mserre, pj
        clean = {}
        for (a, b, has, c, m), v in dict(terms or {}).items():
            if not has and c:
                raise ValueError("c must be 0 without F_j")
            _acc(clean, (a, b, bool(has), c, m), QPiLaurent._coerce(v))
        self.terms = clean

    def _new(self, terms):
        obj = SpectatorElement.__new__(SpectatorElement)
        obj.mserre, obj.pj, obj.terms = self.mserre, self.pj, terms
        return obj

    def left_weight(self, key):
        a, b, has, c, m = key
        return m + 2 * a - 2 * b - 2 * c + (2 * self.mserre if has else 0)

    def __add__(self, other):
        out = dict(self.terms)
        for k, v in other.terms.items():
            _acc(out, k, v)
        return self._new(out)

    def __neg__(self):
        return self._new({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = QPiLaurent._coerce(c)
        out = {}
        for k, v in self.terms.items():
            _acc(out, k, v * c)
        return self._new(out)

    def __eq__(self, other):
        return isinstance(other, SpectatorElement) and self.terms == other.terms

    def coefficient(self, key):
        return self.terms.get(key, ZERO)

    def __str__(self):
        if not self.terms:
            return "0"
        parts = []
        for k in sorted(self.terms, key=lambda k: (k[4], k[0], k[1], k[2], k[3])):
            a, b, has, c, m = k
            mid = f" F_j F^({c})" if has else ""
            coef = str(self.terms[k])
            coef = f"({coef})" if " " in coef else coef
            parts.append(f"{coef} * E^({a}) F^({b}){mid} [1_{m}]")
        return " + ".join(parts)

    __repr__ = __str__


def lift(x, mserre, pj):
    """Rank-one element as a spectator element without F_j."""
    return SpectatorElement(mserre, pj, {(a, b, False, 0, m): c for (a, b, m), c in x.terms.items()})


def s_left_E(n, y):
    out = {}
    for (a, b, has, c, m), v in y.terms.items():
        _acc(out, (a + n, b, has, c, m), v * qpi_binom(a + n, n))
    return y._new(out)


def s_left_F(n, y):
    out = {}
    for key, v in y.terms.items():
        a, b, has, c, m = key
        mid = y.left_weight(key) - 2 * a
        for (ea, fb), r in reorder_FE(n, a, mid).items():
            _acc(out, (ea, fb + b, has, c, m), v * r * qpi_binom(fb + b, b))
    return y._new(out)


def s_left_Fj(y):
    """``F_j * y``; E_1 passes F_j with sign ``pi^pj`` per factor."""
    out = {}
    for (a, b, has, c, m), v in y.terms.items():
        if has:
            raise TooManyFj("F_j already present")
        _acc(out, (a, 0, True, b, m), v.times_pi(a * y.pj))
    return y._new(out)


def spectator_product(x, y):
    if (x.mserre, x.pj) != (y.mserre, y.pj):
        raise ValueError("spectator elements from different data")
    by_weight = {}
    for key, v in y.terms.items():
        by_weight.setdefault(y.left_weight(key), {})[key] = v
    total = y._new({})
    for (a, b, has, c, m), v in x.terms.items():
        part = by_weight.get(m)
        if not part:
            continue
        z = y._new(dict(part))
        if has:
            if any(k[2] for k in part):
                raise TooManyFj("both factors carry F_j")
            z = s_left_Fj(s_left_F(c, z))
        z = s_left_E(a, s_left_F(b, z))
        total = total + z.scale(v)
    return total


def fj_idem(mserre, pj, m):
    """``F_j 1_m``."""
    return SpectatorElement(mserre, pj, {(0, 0, True, 0, m): ONE})


# -- Serre sum and relator ------------------------------------------------------

def serre_sign_exponent(n, pj, form="pj"):
    """pi-exponent of the n-th summand: ``n pj + C(n,2)`` (``n + C(n,2)`` for form="uniform")."""
    e = (n if form == "uniform" else n * pj) + binom2(n)
    if mutations.active("iserre_sign"):
        e += n
    return e


def _idp_at_weights(parity, n, weights, mserre, pj, idp):
    total = SpectatorElement(mserre, pj)
    for w in sorted(weights):
        total = total + lift(idp(IdpSpec(parity, n), w), mserre, pj)
    return total


def serre_sum(p, form="pj", idp=idp_expand_dot):
    """``sum_n (-1)^n pi^(...) B^(n) F_j B^(N-n) 1_mu`` in the free model."""
    mu = p.weight
    check_parity(p.parity, mu)
    N = p.degree
    total = SpectatorElement(p.mserre, p.pj)
    for n in range(N + 1):
        right = lift(idp(IdpSpec(p.parity, N - n), mu), p.mserre, p.pj)
        right = s_left_Fj(right)
        weights = {right.left_weight(k) for k in right.terms}
        left = _idp_at_weights(p.parity, n, weights, p.mserre, p.pj, idp)
        term = spectator_product(left, right)
        sign = pi_pow(serre_sign_exponent(n, p.pj, form)) * (-1 if n % 2 else 1)
        total = total + term.scale(sign)
    return total


def relator_element(mserre, pj, mu):
    """``sum_n (-1)^n pi^(n pj + C(n,2)) F^(n) F_j F^(N-n) 1_mu``."""
    N = 2 * mserre + 1
    terms = {}
    for n in range(N + 1):
        c = pi_pow(n * pj + binom2(n)) * (-1 if n % 2 else 1)
        terms[(0, n, True, N - n, mu)] = c
    return SpectatorElement(mserre, pj, terms)


def serre_sweep(mserre):
    """lam values for the Serre check.

    Every coefficient is a Laurent polynomial in ``q^(2 lam)`` with exponents in
    ``[-2N, 2N]``, ``N = 2 mserre + 1``: the two divided powers contribute at most
    N each and reordering F past E adds at most N more in either direction.  The
    relator side does not depend on lam.  So ``4N + 1`` consecutive values decide.
    """
    N = 2 * mserre + 1
    count = 4 * N + 1
    half = count // 2
    return list(range(-half, count - half))


def verify_iserre(p, form="pj"):
    """``(ok, witness)``; the witness names the first differing monomial."""
    got = serre_sum(p, form)
    want = relator_element(p.mserre, p.pj, p.weight)
    diff = got - want
    if not diff.terms:
        return True, None
    key = min(diff.terms, key=lambda k: (k[4], k[0], k[1], k[2], k[3]))
    a, b, has, c, m = key
    mono = f"E^({a}) F^({b})" + (f" F_j F^({c})" if has else "") + f" [1_{m}]"
    return False, f"{mono}: {diff.terms[key]}"


def s_prefactor(y, u, ell, p):
    N = p.degree
    return (pi_pow((ell + y) * p.pj + ell + binom2(y))
            * pq_pow((ell + u) * (N - 2 * p.lam - 2 * ell - 3 * u - y)))


def extract_S(y, u, ell, p, total=None):
    """Coefficient of ``E^(ell) F^(y) F_j F^(N-ell-y-2u) 1_{2 lam}`` over its unit prefactor."""
    N = p.degree
    if u < 0 or ell < 0 or y < 0 or u + ell == 0 or ell + y + 2 * u > N:
        raise RangeError(f"(y,u,l)=({y},{u},{ell}) outside the summation range")
    if p.parity != "ev":
        raise RangeError("S is read off the even family")
    if total is None:
        total = serre_sum(p)
    coef = total.coefficient((ell, y, True, N - ell - y - 2 * u, p.weight))
    return exact_div(coef, s_prefactor(y, u, ell, p))


def t_variable(y, u, ell, p):
    """``w = 2m + 2 - 2 lam - 2 l - 4u - y``."""
    return 2 * p.mserre + 2 - 2 * p.lam - 2 * ell - 4 * u - y


def s_range(mserre):
    N = 2 * mserre + 1
    for ell in range(N + 1):
        for u in range(N // 2 + 1):
            for y in range(N + 1):
                if u + ell > 0 and ell + y + 2 * u <= N:
                    yield y, u, ell


# -- T(w, u, l) ---------------------------------------------------------------

def _t_valid(u, ell):
    if u < 0 or ell < 0 or u + ell == 0:
        raise RangeError("need u, l >= 0, not both 0")


def _cer(u):
    for c in range(u + 1):
        for e in range(u - c + 1):
            yield c, e, u - c - e


def literal_T_terms(w, u, ell):
    """Summands of the direct (q,pi) double sum, keyed by ``(c, e, r, t)``."""
    _t_valid(u, ell)
    out = {}
    for c, e, r in _cer(u):
        for t in range(ell + 1):
            s = t + w - r
            if s % 2 == 0:
                h = s // 2
                v = (pi_pow(ell * t + r + e + binom2(t))
                     * pq_pow(-t * (ell + u - 1) + (ell + u) * (c - e))
                     * qpi_binom(ell, t) * qpi_binom(w + t - ell, r)
                     * q2_binom(u - 1 + h, c) * q2_binom(h - ell, e))
            else:
                h = (s - 1) // 2
                v = -(pi_pow(ell * t + c + binom2(t))
                      * pq_pow(-t * (ell + u - 1) + (ell + u - 1) * (c - e))
                      * qpi_binom(ell, t) * qpi_binom(w + t - ell, r)
                      * q2_binom(u + h, c) * q2_binom(h - ell, e))
            out[(c, e, r, t)] = v
    return out


def eval_T_literal(w, u, ell):
    total = ZERO
    for v in literal_T_terms(w, u, ell).values():
        total = total + v
    return total


def _t_q_exponent(t, c, e, ell, u, odd):
    k = ell + u - (1 if odd else 0)
    lead = ell + u if mutations.active("t_q_exponent") else ell + u - 1
    return -t * lead + k * (c - e)


def classical_T_terms(w, u, ell):
    """Summands of the pi = 1 identity as integer Laurent polynomials."""
    _t_valid(u, ell)
    out = {}
    for c, e, r in _cer(u):
        for t in range(ell + 1):
            s = t + w - r
            odd = s % 2 == 1
            h = (s - 1) // 2 if odd else s // 2
            top_c = u + h if odd else u - 1 + h
            v = (Laurent.monomial(_t_q_exponent(t, c, e, ell, u, odd))
                 * c_binom(ell, t) * c_binom(w + t - ell, r)
                 * c_q2_binom(top_c, c) * c_q2_binom(h - ell, e))
            out[(c, e, r, t)] = -v if odd else v
    return out


def eval_T_classical(w, u, ell):
    total = Laurent()
    for v in classical_T_terms(w, u, ell).values():
        total = total + v
    return total


def sqrt_pi_substitute(v, shift):
    """Apply ``q -> sqrt(pi) q`` to an integer Laurent polynomial and divide by
    ``sqrt(pi)^shift``; the result must have integral pi-powers."""
    terms = {}
    for k, c in v.terms.items():
        if (k - shift) % 2:
            raise HalfPowerResidue(f"q^{k} leaves sqrt(pi)^{k - shift}")
        e = ((k - shift) // 2) % 2
        terms[k] = (0, c) if e else (c, 0)
    return QPiLaurent(terms)


def t_substitution_terms(w, u, ell):
    shift = u * u - ell * u - u * w
    return {key: sqrt_pi_substitute(v, shift) for key, v in classical_T_terms(w, u, ell).items()}


def eval_T_substitution(w, u, ell):
    total = ZERO
    for v in t_substitution_terms(w, u, ell).values():
        total = total + v
    return total


def t_audit(w, u, ell):
    """Summands where the direct formula and the substitution route disagree."""
    lit = literal_T_terms(w, u, ell)
    sub = t_substitution_terms(w, u, ell)
    return {k: (lit[k], sub[k]) for k in lit if lit[k] != sub[k]}


def t_range(w_min, w_max, ul_max):
    for w in range(w_min, w_max + 1):
        for u in range(ul_max + 1):
            for ell in range(ul_max + 1 - u):
                if u + ell:
                    yield w, u, ell


# -- tau i != i coefficients --------------------------------------------------

def _denom():
    return QPiLaurent({1: (0, 1), -1: -1})  # pi q - q^-1


def a_j_numerator(m, drop_pi=False):
    """``(pi q - q^-1)^2 a_j`` from the double sum with every pi-factor kept.

    ``drop_pi`` uses the simplified form, which lacks one overall pi.
    """
    total = ZERO
    for k in range(m + 1):
        inner = ZERO
        for l in range(m - k):
            if drop_pi:
                inner = inner + q_pow(-(m - 1) * k - 2 * (m - 1) + 2 * l).times_pi(l)
            else:
                inner = inner + q_pow(-(m + 1) * k - 2 * (m - k - l - 1)).times_pi(m - 1 - l + k)
        e = binom2(k) if drop_pi else binom2(k) + k + 1
        total = total + qpi_binom(m, k).times_pi(e) * inner * (-1 if k % 2 else 1)
    return total * _denom()


def a_i_numerator(m):
    total = ZERO
    for k in range(m + 1):
        inner = ZERO
        for l in range(k):
            inner = inner + q_pow((k - 1) * (m + 1) - 2 * l).times_pi(l)
        total = total + qpi_binom(m, k).times_pi(binom2(k) + k) * inner * (-1 if k % 2 else 1)
    return (total * _denom()).times_pi(1)


def a_j_closed(m):
    x = QPiLaurent.monomial(-2, 0, 1)
    return pochhammer(x, x, m).shift(1)


def a_i_closed(m):
    x = QPiLaurent.monomial(2, 0, 1)
    return pochhammer(x, x, m).shift(-m)


def qserre_coefficients(m):
    """``(a_i numerator, a_j numerator)``, both multiplied by ``(pi q - q^-1)^2``."""
    if m <= 0 or m % 2 == 0:
        raise ValueError("m must be a positive odd integer")
    return a_i_numerator(m), a_j_numerator(m)
