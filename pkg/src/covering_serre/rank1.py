"""Idempotented rank-one quantum covering algebra (one odd simple root).

Elements are finite sums ``c * E^(a) F^(b) 1_m`` with ``c`` in Z^pi[q, q^-1].
The idempotent ``1_m`` sits on the right; the weight on the left of such a
monomial is ``m + 2a - 2b``.  Everything is evaluated on idempotents, so the
Cartan part (K, J, h and the h-brackets) acts by scalars.
"""
from dataclasses import dataclass
from functools import lru_cache

from . import mutations
from .arith import (ONE, ZERO, QPiLaurent, binom2, exact_div, pi_pow, q2_binom,
                    qpi_binom, qpi_factorial, render)


class ParityMismatch(ValueError):
    """An operator was applied on idempotents of the wrong parity."""


def left_weight(a, b, m):
    return m + 2 * a - 2 * b


def _acc(d, key, coef):
    if not coef:
        return
    old = d.get(key)
    if old is None:
        d[key] = coef
    else:
        new = old + coef
        if new:
            d[key] = new
        else:
            del d[key]


class Rank1Element:
    """Normal-form element ``sum c * E^(a) F^(b) 1_m``.

    ``terms`` maps ``(a, b, m)`` to a nonzero coefficient.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for (a, b, m), c in dict(terms).items():
                if a < 0 or b < 0:
                    raise ValueError("divided-power exponents must be >= 0")
                c = QPiLaurent._coerce(c)
                _acc(clean, (a, b, m), c)
        self.terms = clean

    @classmethod
    def _wrap(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Rank1Element._wrap(out)

    def __neg__(self):
        return Rank1Element._wrap({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = QPiLaurent._coerce(c)
        if not c:
            return Rank1Element()
        out = {}
        for k, v in self.terms.items():
            _acc(out, k, v * c)
        return Rank1Element._wrap(out)

    def __mul__(self, other):
        if isinstance(other, Rank1Element):
            return normal_product(self, other)
        return self.scale(other)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, Rank1Element):
            return NotImplemented
        return self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def coefficient(self, a, b, m):
        return self.terms.get((a, b, m), ZERO)

    def map_coefficients(self, fn):
        out = {}
        for k, c in self.terms.items():
            _acc(out, k, fn(c))
        return Rank1Element._wrap(out)

    def __repr__(self):
        return f"Rank1Element({render_element(self)!r})"

    __str__ = lambda self: render_element(self)


def _coef_for_product(c):
    text = render(c)
    if " " in text:
        return f"({text})"
    return text


def render_element(x):
    """Golden-file text: ``c * E^(a) F^(b) [1_m]`` sorted by ``(m, a, b)``."""
    if not x.terms:
        return "0"
    keys = sorted(x.terms, key=lambda k: (k[2], k[0], k[1]))
    return " + ".join(f"{_coef_for_product(x.terms[k])} * E^({k[0]}) F^({k[1]}) [1_{k[2]}]"
                      for k in keys)


# -- constructors ----------------------------------------------------------

def idem(m):
    """``1_m``."""
    return Rank1Element._wrap({(0, 0, m): ONE})


def monomial(a, b, m, coef=ONE):
    return Rank1Element({(a, b, m): coef})


def weight_sweep(count, parity):
    """``count`` consecutive weights of the given parity (0 or 1), centred at 0."""
    half = count // 2
    return [2 * k + parity for k in range(-half, count - half)]


# -- commutation -----------------------------------------------------------

@lru_cache(maxsize=None)
def reorder_FE(a, b, m):
    """``F^(a) E^(b) 1_m`` as ``{(b-j, a-j): coefficient}``.

    ``sum_j pi^(ab + jm + C(j,2)) [a-b-m choose j] E^(b-j) F^(a-j) 1_m``.
    """
    bump = mutations.active("commute_pi")
    out = {}
    for j in range(min(a, b) + 1):
        e = a * b + j * m + binom2(j) + (j if bump else 0)
        c = qpi_binom(a - b - m, j).times_pi(e)
        if c:
            out[(b - j, a - j)] = c
    return out


@lru_cache(maxsize=None)
def reorder_EF(a, b, m):
    """``E^(a) F^(b) 1_m`` as ``{(b-j, a-j): coefficient}`` in F-then-E order.

    ``sum_j pi^(ab + C(j+1,2)) [a-b+m choose j] F^(b-j) E^(a-j) 1_m``.
    """
    out = {}
    for j in range(min(a, b) + 1):
        c = qpi_binom(a - b + m, j).times_pi(a * b + binom2(j + 1))
        if c:
            out[(b - j, a - j)] = c
    return out


mutations.register_cache(reorder_FE)


def normal_product(x, y):
    """Product in the idempotented algebra, returned in normal form."""
    out = {}
    by_weight = {}
    for (a1, b1, m1), c1 in x.terms.items():
        by_weight.setdefault(m1, []).append((a1, b1, c1))
    for (a2, b2, m2), c2 in y.terms.items():
        left = left_weight(a2, b2, m2)
        lefts = by_weight.get(left)
        if not lefts:
            continue
        mid = m2 - 2 * b2  # weight between E^(a2) and F^(b2)
        for a1, b1, c1 in lefts:
            c = c1 * c2
            for (ea, fb), r in reorder_FE(b1, a2, mid).items():
                cc = c * r * qpi_binom(a1 + ea, a1) * qpi_binom(fb + b2, b2)
                _acc(out, (a1 + ea, fb + b2, m2), cc)
    return Rank1Element._wrap(out)


def left_E(n, x):
    """``E^(n) * x``."""
    out = {}
    for (a, b, m), c in x.terms.items():
        _acc(out, (a + n, b, m), c * qpi_binom(a + n, n))
    return Rank1Element._wrap(out)


def left_F(n, x):
    """``F^(n) * x``."""
    out = {}
    for (a, b, m), c in x.terms.items():
        mid = m - 2 * b
        for (ea, fb), r in reorder_FE(n, a, mid).items():
            _acc(out, (ea, fb + b, m), c * r * qpi_binom(fb + b, b))
    return Rank1Element._wrap(out)


def apply_K(x, power=1):
    """Left action of ``K^power``: ``q^(power * w)`` with w the left weight."""
    out = {}
    for (a, b, m), c in x.terms.items():
        out[(a, b, m)] = c.shift(power * left_weight(a, b, m))
    return Rank1Element._wrap(out)


def apply_J(x, power=1):
    """Left action of ``J^power``: ``pi^(power * w)``."""
    out = {}
    for (a, b, m), c in x.terms.items():
        out[(a, b, m)] = c.times_pi(power * left_weight(a, b, m))
    return Rank1Element._wrap(out)


def echeck_div(n, x):
    """``Ech^(n) * x`` with ``Ech^(n) = q^(-n^2) E^(n) K^(-n)``."""
    out = {}
    for (a, b, m), c in x.terms.items():
        w = left_weight(a, b, m)
        _acc(out, (a + n, b, m), c.shift(-n * n - n * w) * qpi_binom(a + n, n))
    return Rank1Element._wrap(out)


def apply_B(x):
    """``B * x`` with ``B = Ech + F``."""
    return echeck_div(1, x) + left_F(1, x)


# -- Cartan part on idempotents -------------------------------------------

@dataclass(frozen=True)
class HBracket:
    """``[h;a]_n`` (kind ``square``) or ``[[h;a]]_n`` (kind ``brace``)."""

    kind: str
    a: int
    n: int

    def __post_init__(self):
        if self.kind not in ("square", "brace"):
            raise ValueError(f"unknown bracket kind {self.kind!r}")
        if self.n < 0:
            raise ValueError("bracket length must be >= 0")


@lru_cache(maxsize=None)
def bracket_value(kind, a, n, w):
    """Scalar by which the bracket acts on ``1_w``.

    square, w = 2l:     ``q^(2n(a-1-l)) [a-1-l+n choose n]_{q^2}``
    brace,  w = 2l - 1: ``q^(2n(a-l)) [a-l-1+n choose n]_{q^2}``
    """
    if kind == "square":
        if w % 2:
            raise ParityMismatch(f"[h;{a}]_{n} on odd weight {w}")
        lam = w // 2
        return q2_binom(a - 1 - lam + n, n).shift(2 * n * (a - 1 - lam))
    if kind == "brace":
        if w % 2 == 0:
            raise ParityMismatch(f"[[h;{a}]]_{n} on even weight {w}")
        lam = (w + 1) // 2
        return q2_binom(a - lam - 1 + n, n).shift(2 * n * (a - lam))
    raise ValueError(kind)


def bracket_product(kind, a, n, w):
    """The same scalar from the defining product, by exact division at weight w."""
    num, den = ONE, ONE
    for i in range(1, n + 1):
        kk = QPiLaurent.monomial(4 * a + 4 * i - 4 - 2 * w)  # q^(4a+4i-4) K^-2
        j = pi_pow(w)
        if kind == "square":
            num = num * (kk - j)
        else:
            num = num * (kk - j.shift(2).times_pi(1))
        den = den * (QPiLaurent.monomial(4 * i) - ONE)
    return exact_div(num, den)


def h_value(w):
    """``h = (K^-2 - J) / (q^2 - pi)`` on ``1_w``."""
    return exact_div(QPiLaurent.monomial(-2 * w) - pi_pow(w), QPiLaurent({2: 1, 0: (0, -1)}))


def h_apply(desc, x):
    """Left-multiply by an h-bracket acting on the weight it sits at."""
    out = {}
    for (a, b, m), c in x.terms.items():
        s = bracket_value(desc.kind, desc.a, desc.n, left_weight(a, b, m))
        _acc(out, (a, b, m), c * s)
    return Rank1Element._wrap(out)


def diagonal_apply(fn, x):
    """Left-multiply by a diagonal operator given as ``weight -> scalar``."""
    out = {}
    for (a, b, m), c in x.terms.items():
        _acc(out, (a, b, m), c * fn(left_weight(a, b, m)))
    return Rank1Element._wrap(out)


# -- involutions -----------------------------------------------------------

def bar_apply(x):
    """Bar map on the idempotented algebra: q -> q^-1, E^(a) F^(b) 1_m fixed up to
    ``pi^(C(a,2) + C(b,2))`` from barring the factorials."""
    out = {}
    for (a, b, m), c in x.terms.items():
        _acc(out, (a, b, m), c.bar().times_pi(binom2(a) + binom2(b)))
    return Rank1Element._wrap(out)


def sigma_apply(x):
    """Anti-involution fixing E, F, K, J and sending q -> q^-1.

    Because K is fixed while q is inverted, ``1_m`` goes to ``1_-m``; a monomial
    ``E^(a) F^(b) 1_m`` becomes ``pi^(C(a,2)+C(b,2)) F^(b) E^(a) 1_(-m-2a+2b)``,
    which is then put back in normal order.
    """
    out = {}
    for (a, b, m), c in x.terms.items():
        cc = c.bar().times_pi(binom2(a) + binom2(b))
        mm = -m - 2 * a + 2 * b
        for (ea, fb), r in reorder_FE(b, a, mm).items():
            _acc(out, (ea, fb, mm), cc * r)
    return Rank1Element._wrap(out)


# -- words in E, F, K^{+-1}, J and the involution varpi --------------------

LETTERS = ("E", "F", "K", "k", "J")  # k stands for K^-1


class Word:
    """A linear combination of words in E, F, K, K^-1 (``k``), J.

    This is the free algebra; relations are only imposed when a word is
    evaluated on an idempotent with :func:`word_eval`.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for w, c in dict(terms or {}).items():
            w = tuple(w)
            if any(ch not in LETTERS for ch in w):
                raise ValueError(f"bad letter in {w!r}")
            _acc(clean, w, QPiLaurent._coerce(c))
        self.terms = clean

    @classmethod
    def gen(cls, letters, coef=ONE):
        return cls({tuple(letters): coef})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            _acc(out, k, c)
        return Word._from(out)

    def __neg__(self):
        return Word._from({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if not isinstance(other, Word):
            other = QPiLaurent._coerce(other)
            return Word._from({k: c * other for k, c in self.terms.items() if c * other})
        out = {}
        for w1, c1 in self.terms.items():
            for w2, c2 in other.terms.items():
                _acc(out, w1 + w2, c1 * c2)
        return Word._from(out)

    def __rmul__(self, other):
        return self * other

    @classmethod
    def _from(cls, terms):
        obj = cls.__new__(cls)
        obj.terms = terms
        return obj

    def __eq__(self, other):
        return isinstance(other, Word) and self.terms == other.terms

    def __repr__(self):
        parts = [f"({render(c)})*{''.join(w) or '1'}" for w, c in sorted(self.terms.items())]
        return "Word(" + " + ".join(parts) + ")"


def _varpi_letter(ch):
    if ch == "E":
        return Word.gen("FK", QPiLaurent.monomial(-1))
    if ch == "F":
        return Word.gen("Ek", QPiLaurent.monomial(-1))
    return Word.gen(ch)


def varpi_apply(x):
    """Involution ``E -> q^-1 F K``, ``F -> q^-1 E K^-1``, K, J fixed, ``q -> q^-1``.

    It is multiplicative (not anti-) and bars coefficients.
    """
    out = Word()
    for w, c in x.terms.items():
        img = Word.gen((), c.bar())
        for ch in w:
            img = img * _varpi_letter(ch)
        out = out + img
    return out


def word_eval(x, m):
    """Evaluate a word combination on ``1_m`` (letters act from right to left)."""
    total = Rank1Element()
    for w, c in x.terms.items():
        el = idem(m).scale(c)
        for ch in reversed(w):
            if ch == "E":
                el = left_E(1, el)
            elif ch == "F":
                el = left_F(1, el)
            elif ch == "K":
                el = apply_K(el, 1)
            elif ch == "k":
                el = apply_K(el, -1)
            else:
                el = apply_J(el, 1)
        total = total + el
    return total


def defining_relations():
    """Rank-one relations as ``name -> (lhs, rhs)`` pairs of words.

    The commutator relation is multiplied through by ``pi q - q^-1`` so all
    coefficients stay in the ring.
    """
    one = Word.gen(())
    q2 = QPiLaurent.monomial(2)
    qm2 = QPiLaurent.monomial(-2)
    pi = pi_pow(1)
    denom = QPiLaurent({1: (0, 1), -1: -1})
    return {
        "R1:KK^-1": (Word.gen("Kk"), one),
        "R1:K^-1K": (Word.gen("kK"), one),
        "R2:J^2": (Word.gen("JJ"), one),
        "R3:JK": (Word.gen("JK"), Word.gen("KJ")),
        "R4:KE": (Word.gen("KE"), Word.gen("EK", q2)),
        "R4:JE": (Word.gen("JE"), Word.gen("EJ")),
        "R5:KF": (Word.gen("KF"), Word.gen("FK", qm2)),
        "R5:JF": (Word.gen("JF"), Word.gen("FJ")),
        "R6:EF": ((Word.gen("EF") - Word.gen("FE", pi)) * denom,
                  Word.gen("JK") - Word.gen("k")),
    }


def divided_power_factor(n):
    return qpi_factorial(n)
