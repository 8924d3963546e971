"""Exact arithmetic in Z^pi[q, q^-1] = Z[pi]/(pi^2 - 1)[q, q^-1].

Elements are stored densely: a lowest q-exponent plus two equal-length tuples
holding the integer and pi parts of each coefficient.  Ends are trimmed, so
two elements are equal iff their stored data agree.
"""
from functools import lru_cache

from . import mutations
from ._backend import conv, div_unit


class NotDivisible(ArithmeticError):
    """Raised when an exact quotient does not exist in the ring."""


def _trim(lo, c0, c1):
    lo_i, hi_i = 0, len(c0)
    while lo_i < hi_i and not c0[lo_i] and not c1[lo_i]:
        lo_i += 1
    while hi_i > lo_i and not c0[hi_i - 1] and not c1[hi_i - 1]:
        hi_i -= 1
    if lo_i == hi_i:
        return 0, (), ()
    if lo_i == 0 and hi_i == len(c0):
        return lo, tuple(c0), tuple(c1)
    return lo + lo_i, tuple(c0[lo_i:hi_i]), tuple(c1[lo_i:hi_i])


class QPiLaurent:
    """An element ``sum_k (c0 + c1*pi) q^k`` of Z^pi[q, q^-1].

    Build from a mapping ``{k: (c0, c1)}`` (an int value means ``(c, 0)``),
    or from an int.  Instances are immutable.
    """

    __slots__ = ("_lo", "_c0", "_c1", "_hash")

    def __init__(self, terms=None):
        if terms is None or terms == 0:
            self._set(0, (), ())
            return
        if isinstance(terms, int):
            self._set(0, (terms,), (0,))
            return
        if isinstance(terms, QPiLaurent):
            self._set(terms._lo, terms._c0, terms._c1)
            return
        items = {}
        for k, v in dict(terms).items():
            pair = (v, 0) if isinstance(v, int) else (int(v[0]), int(v[1]))
            items[int(k)] = pair
        if not items:
            self._set(0, (), ())
            return
        lo, hi = min(items), max(items)
        c0 = [0] * (hi - lo + 1)
        c1 = [0] * (hi - lo + 1)
        for k, (a, b) in items.items():
            c0[k - lo] = a
            c1[k - lo] = b
        self._set(*_trim(lo, c0, c1))

    def _set(self, lo, c0, c1):
        self._lo = lo
        self._c0 = c0
        self._c1 = c1
        self._hash = None

    @classmethod
    def _raw(cls, lo, c0, c1):
        obj = cls.__new__(cls)
        obj._set(*_trim(lo, c0, c1))
        return obj

    @classmethod
    def monomial(cls, k, c0=1, c1=0):
        """``(c0 + c1*pi) q^k``."""
        return cls._raw(k, (c0,), (c1,))

    # -- inspection ---------------------------------------------------
    @property
    def terms(self):
        """Sparse view ``{k: (c0, c1)}`` with no zero pairs."""
        lo = self._lo
        return {lo + i: (a, b) for i, (a, b) in enumerate(zip(self._c0, self._c1))
                if a or b}

    def is_zero(self):
        return not self._c0

    def __bool__(self):
        return bool(self._c0)

    def valuation(self):
        if not self._c0:
            raise ValueError("zero has no valuation")
        return self._lo

    def degree(self):
        if not self._c0:
            raise ValueError("zero has no degree")
        return self._lo + len(self._c0) - 1

    def leading(self):
        """``(k, (c0, c1))`` for the highest q-power."""
        return self.degree(), (self._c0[-1], self._c1[-1])

    def is_pi_free(self):
        return not any(self._c1)

    def is_unit_monomial(self):
        return len(self._c0) == 1 and (abs(self._c0[0]), abs(self._c1[0])) in ((1, 0), (0, 1))

    # -- arithmetic ---------------------------------------------------
    @staticmethod
    def _coerce(other):
        if isinstance(other, QPiLaurent):
            return other
        if isinstance(other, int):
            return QPiLaurent(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not other._c0:
            return self
        if not self._c0:
            return other
        lo = min(self._lo, other._lo)
        hi = max(self._lo + len(self._c0), other._lo + len(other._c0))
        c0 = [0] * (hi - lo)
        c1 = [0] * (hi - lo)
        for src in (self, other):
            off = src._lo - lo
            for i, (a, b) in enumerate(zip(src._c0, src._c1)):
                c0[off + i] += a
                c1[off + i] += b
        return QPiLaurent._raw(lo, c0, c1)

    __radd__ = __add__

    def __neg__(self):
        return QPiLaurent._raw(self._lo, [-a for a in self._c0], [-b for b in self._c1])

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return QPiLaurent._raw(self._lo, [a * other for a in self._c0],
                                   [b * other for b in self._c1])
        if not isinstance(other, QPiLaurent):
            return NotImplemented
        if not self._c0 or not other._c0:
            return ZERO
        c0, c1 = conv(self._c0, self._c1, other._c0, other._c1)
        return QPiLaurent._raw(self._lo + other._lo, c0, c1)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            if not self.is_unit_monomial():
                raise NotDivisible(f"{self} is not invertible")
            # unit monomials u q^k satisfy u^2 = 1
            return QPiLaurent._raw(-self._lo * (-n), self._c0 if n % 2 else (1,),
                                   self._c1 if n % 2 else (0,))
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, k):
        """Multiply by ``q^k``."""
        if not self._c0 or k == 0:
            return self
        return QPiLaurent._raw(self._lo + k, self._c0, self._c1)

    def times_pi(self, e=1):
        """Multiply by ``pi^e``."""
        if e % 2 == 0:
            return self
        return QPiLaurent._raw(self._lo, self._c1, self._c0)

    def bar(self):
        """``q -> q^-1`` with pi fixed."""
        if not self._c0:
            return self
        n = len(self._c0)
        return QPiLaurent._raw(-(self._lo + n - 1), self._c0[::-1], self._c1[::-1])

    def specialize(self, sign):
        """Substitute ``pi -> sign``; the result is pi-free."""
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        return QPiLaurent._raw(self._lo, [a + sign * b for a, b in zip(self._c0, self._c1)],
                               [0] * len(self._c0))

    def evaluate(self, q, pi=1):
        """Numeric value at a point; exact for int or Fraction inputs."""
        total = 0
        for k, (a, b) in self.terms.items():
            total += (a + b * pi) * q ** k
        return total

    # -- identity -----------------------------------------------------
    def __eq__(self, other):
        if isinstance(other, int):
            other = QPiLaurent(other)
        if not isinstance(other, QPiLaurent):
            return NotImplemented
        return self._lo == other._lo and self._c0 == other._c0 and self._c1 == other._c1

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._lo, self._c0, self._c1))
        return self._hash

    def __repr__(self):
        return f"QPiLaurent({str(self)!r})"

    def __str__(self):
        return render(self)


ZERO = QPiLaurent()
ONE = QPiLaurent(1)
Q = QPiLaurent.monomial(1)
PI = QPiLaurent.monomial(0, 0, 1)


def q_pow(k):
    return QPiLaurent.monomial(k)


def pi_pow(e):
    return PI if e % 2 else ONE


def pq_pow(k):
    """``(pi*q)^k``."""
    return QPiLaurent.monomial(k, 0, 1) if k % 2 else QPiLaurent.monomial(k)


# -- rendering ----------------------------------------------------------

def _coef_text(a, b):
    if b == 0:
        return str(a)
    if a == 0:
        if b == 1:
            return "pi"
        if b == -1:
            return "-pi"
        return f"{b}*pi"
    sign = "+" if b > 0 else "-"
    mag = "" if abs(b) == 1 else f"{abs(b)}*"
    return f"({a}{sign}{mag}pi)"


def _term_text(k, a, b):
    coef = _coef_text(a, b)
    if k == 0:
        return coef
    power = "q" if k == 1 else f"q^{k}"
    if coef == "1":
        return power
    if coef == "-1":
        return "-" + power
    return f"{coef}*{power}"


def render(v):
    """Canonical text: increasing q-exponent, e.g. ``q^-2 + pi + q^2``."""
    items = sorted(v.terms.items())
    if not items:
        return "0"
    out = []
    for idx, (k, (a, b)) in enumerate(items):
        text = _term_text(k, a, b)
        if idx == 0:
            out.append(text)
        elif text.startswith("-"):
            out.append(" - " + text[1:])
        else:
            out.append(" + " + text)
    return "".join(out)


# -- exact division -----------------------------------------------------

def _div_int_laurent(num, den):
    """Exact quotient of pi-free dense integer arrays, or None."""
    nn, nd = len(num), len(den)
    if nn < nd:
        return [] if not any(num) else None
    rem = list(num)
    quo = [0] * (nn - nd + 1)
    lead = den[-1]
    for k in range(nn - nd, -1, -1):
        top = rem[k + nd - 1]
        if top % lead:
            return None
        t = top // lead
        quo[k] = t
        if t:
            for j in range(nd):
                rem[k + j] -= t * den[j]
    if any(rem):
        return None
    return quo


def exact_div(num, den):
    """Return ``r`` with ``r * den == num``; raise :class:`NotDivisible` otherwise.

    Divisors with a unit top coefficient (+-1, +-pi) are handled by leading-term
    elimination.  Other divisors go through the two specializations pi = +-1,
    which is only sound when neither specialization of the divisor vanishes.
    """
    num = QPiLaurent._coerce(num)
    den = QPiLaurent._coerce(den)
    if not den._c0:
        raise ZeroDivisionError("exact_div by zero")
    if not num._c0:
        return ZERO
    lead = (den._c0[-1], den._c1[-1])
    if lead in ((1, 0), (-1, 0), (0, 1), (0, -1)):
        res = div_unit(num._c0, num._c1, den._c0, den._c1, lead[0], lead[1])
        if res is None:
            raise NotDivisible(f"({num}) / ({den})")
        return QPiLaurent._raw(num._lo - den._lo, res[0], res[1])
    plus = den.specialize(1)
    minus = den.specialize(-1)
    if not plus or not minus:
        raise NotDivisible(f"divisor {den} is a zero divisor")
    parts = []
    for sign, d in ((1, plus), (-1, minus)):
        n = num.specialize(sign)
        if not n:
            parts.append((0, []))
            continue
        quo = _div_int_laurent(list(n._c0), list(d._c0))
        if quo is None:
            raise NotDivisible(f"({num}) / ({den})")
        parts.append((n._lo - d._lo, quo))
    lo = min(p[0] for p in parts if p[1]) if any(p[1] for p in parts) else 0
    hi = max((p[0] + len(p[1]) for p in parts if p[1]), default=lo)
    fp = [0] * (hi - lo)
    fm = [0] * (hi - lo)
    for (off, quo), dest in zip(parts, (fp, fm)):
        for i, c in enumerate(quo):
            dest[off - lo + i] = c
    c0, c1 = [], []
    for a, b in zip(fp, fm):
        if (a - b) % 2:
            raise NotDivisible(f"({num}) / ({den}): quotient leaves the ring")
        c0.append((a + b) // 2)
        c1.append((a - b) // 2)
    return QPiLaurent._raw(lo, c0, c1)


def bar_ring(v):
    return v.bar()


def specialize_pi(v, sign):
    return v.specialize(sign)


# -- (q, pi) combinatorics ---------------------------------------------

@lru_cache(maxsize=None)
def qpi_int(n):
    """``[n] = ((pi q)^n - q^-n) / (pi q - q^-1)`` for any integer n."""
    if n < 0:
        return -qpi_int(-n).times_pi(-n)
    return QPiLaurent({n - 1 - 2 * k: (0, 1) if (n - 1 - k) % 2 else (1, 0) for k in range(n)})


@lru_cache(maxsize=None)
def qpi_factorial(n):
    if n < 0:
        raise ValueError("factorial needs n >= 0")
    if n == 0:
        return ONE
    return qpi_factorial(n - 1) * qpi_int(n)


@lru_cache(maxsize=None)
def qpi_binom(m, n):
    """Generalized ``[m choose n]`` for integer m, n >= 0, as an exact quotient."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    num = ONE
    for k in range(1, n + 1):
        num = num * qpi_int(m + 1 - k)
    return exact_div(num, qpi_factorial(n))


@lru_cache(maxsize=None)
def q2_int(n):
    """Classical balanced ``[n]`` evaluated at q^2 (no pi)."""
    if n < 0:
        return -q2_int(-n)
    return QPiLaurent({2 * (n - 1) - 4 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def q2_factorial(n):
    if n < 0:
        raise ValueError("factorial needs n >= 0")
    return ONE if n == 0 else q2_factorial(n - 1) * q2_int(n)


@lru_cache(maxsize=None)
def q2_binom(m, n):
    """Classical balanced Gaussian binomial at q^2, generalized to integer m."""
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    num = ONE
    for k in range(1, n + 1):
        num = num * q2_int(m + 1 - k)
    return exact_div(num, q2_factorial(n))


def pochhammer(a, x, n):
    """``(a; x)_n = (1 - a)(1 - a x) ... (1 - a x^(n-1))``."""
    if n < 0:
        raise ValueError("pochhammer needs n >= 0")
    a = QPiLaurent._coerce(a)
    x = QPiLaurent._coerce(x)
    out = ONE
    step = a
    for _ in range(n):
        out = out * (ONE - step)
        step = step * x
    return out


def binom2(n):
    """Ordinary ``C(n, 2)`` extended to all integers as n(n-1)/2."""
    return n * (n - 1) // 2


# -- polynomials in a central variable z -------------------------------

class ZPolynomial:
    """Polynomial in a formal central variable z with QPiLaurent coefficients."""

    __slots__ = ("coefficients",)

    def __init__(self, coefficients=()):
        coeffs = [QPiLaurent._coerce(c) for c in coefficients]
        while coeffs and not coeffs[-1]:
            coeffs.pop()
        self.coefficients = tuple(coeffs)

    @property
    def degree(self):
        return len(self.coefficients) - 1

    def __add__(self, other):
        n = max(len(self.coefficients), len(other.coefficients))
        a = self.coefficients + (ZERO,) * (n - len(self.coefficients))
        b = other.coefficients + (ZERO,) * (n - len(other.coefficients))
        return ZPolynomial(x + y for x, y in zip(a, b))

    def __mul__(self, other):
        if not self.coefficients or not other.coefficients:
            return ZPolynomial()
        out = [ZERO] * (len(self.coefficients) + len(other.coefficients) - 1)
        for i, x in enumerate(self.coefficients):
            if not x:
                continue
            for j, y in enumerate(other.coefficients):
                out[i + j] = out[i + j] + x * y
        return ZPolynomial(out)

    def __call__(self, z):
        z = QPiLaurent._coerce(z)
        acc = ZERO
        for c in reversed(self.coefficients):
            acc = acc * z + c
        return acc

    def __eq__(self, other):
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        return self.coefficients == other.coefficients

    def __hash__(self):
        return hash(self.coefficients)

    def __repr__(self):
        body = ", ".join(render(c) for c in self.coefficients)
        return f"ZPolynomial([{body}])"


def _zpoly_q_exponent(k, m):
    if mutations.active("zpoly_q_exponent"):
        return k * m
    return k * (m - 1)


def binomial_theorem_sum(m, barred=True):
    """Coefficients of ``sum_k pi^C(k,2) q^(+-k(m-1)) [m choose k] z^k``.

    The barred sum is the bar image of the unbarred one, coefficient by
    coefficient; barring ``[m choose k]`` contributes ``pi^(k(m-k))``, which is
    trivial for odd m.
    """
    coeffs = []
    for k in range(m + 1):
        e = _zpoly_q_exponent(k, m)
        if barred:
            c = qpi_binom(m, k).shift(-e).times_pi(binom2(k) + k * (m - k))
        else:
            c = qpi_binom(m, k).shift(e).times_pi(binom2(k))
        coeffs.append(c)
    return ZPolynomial(coeffs)


def binomial_theorem_product(m, barred=True):
    """``prod_{j<m} (1 + x^j z)`` with ``x = pi q^-2`` (barred) or ``pi q^2``."""
    x = QPiLaurent.monomial(-2 if barred else 2, 0, 1)
    out = ZPolynomial([ONE])
    for j in range(m):
        out = out * ZPolynomial([ONE, x ** j])
    return out


def zpoly_binomial_theorem(m, barred=True):
    """Return ``(sum_side, product_side)``; the two are equal for every m >= 0."""
    if m < 0:
        raise ValueError("m must be >= 0")
    return binomial_theorem_sum(m, barred), binomial_theorem_product(m, barred)


def plain_binomial_sum(m, z):
    """``sum_k pi^C(k,2) q^(-k(m-1)) [m choose k] z^k`` without the bar correction (exact for odd m)."""
    z = QPiLaurent._coerce(z)
    total = ZERO
    for k in range(m + 1):
        total = total + (qpi_binom(m, k).shift(-_zpoly_q_exponent(k, m))
                         .times_pi(binom2(k)) * z ** k)
    return total
