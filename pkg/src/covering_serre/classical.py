"""An independent pi-free implementation used as the pi = 1 oracle.

Nothing here touches the pi-aware code paths: integer Laurent polynomials,
balanced Gaussian binomials through the Pascal rule, and the modified form of
U_q(sl_2) with its own commutation formula.
"""
from functools import lru_cache


class Laurent:
    """Integer Laurent polynomial ``{exponent: int}``."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        if isinstance(terms, int):
            terms = {0: terms}
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def monomial(cls, k, c=1):
        return cls({k: c})

    def __add__(self, other):
        other = _lift(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Laurent(out)

    __radd__ = __add__

    def __neg__(self):
        return Laurent({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-_lift(other))

    def __mul__(self, other):
        other = _lift(other)
        out = {}
        for k1, v1 in self.terms.items():
            for k2, v2 in other.terms.items():
                out[k1 + k2] = out.get(k1 + k2, 0) + v1 * v2
        return Laurent(out)

    __rmul__ = __mul__

    def shift(self, k):
        return Laurent({e + k: v for e, v in self.terms.items()})

    def subs_power(self, p):
        """``q -> q^p``."""
        return Laurent({e * p: v for e, v in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, Laurent) and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return "Laurent(" + ", ".join(f"{v}q^{k}" for k, v in sorted(self.terms.items())) + ")"


def _lift(x):
    return x if isinstance(x, Laurent) else Laurent(x)


def from_qpi(v, sign=1):
    """Specialize a QPiLaurent at ``pi = sign`` into this representation."""
    return Laurent({k: a + sign * b for k, (a, b) in v.terms.items()})


def c_div(num, den):
    """Exact division; raises ArithmeticError when there is a remainder."""
    if not den:
        raise ZeroDivisionError
    dtop, dlow = max(den.terms), min(den.terms)
    dlead = den.terms[dtop]
    floor = min(num.terms) - dlow if num.terms else 0
    rem = dict(num.terms)
    quot = {}
    while rem:
        top = max(rem)
        k = top - dtop
        c, r = divmod(rem[top], dlead)
        if r or k < floor:
            raise ArithmeticError("not divisible")
        quot[k] = c
        for e, v in den.terms.items():
            nv = rem.get(e + k, 0) - c * v
            if nv:
                rem[e + k] = nv
            else:
                rem.pop(e + k, None)
    return Laurent(quot)


@lru_cache(maxsize=None)
def c_int(n):
    if n < 0:
        return -c_int(-n)
    return Laurent({n - 1 - 2 * k: 1 for k in range(n)})


@lru_cache(maxsize=None)
def c_binom(n, r):
    """Balanced Gaussian binomial, any integer top."""
    if r < 0:
        return Laurent()
    if r == 0:
        return Laurent(1)
    if n < 0:
        v = c_binom(r - n - 1, r)
        return -v if r % 2 else v
    if r > n:
        return Laurent()
    # [n, r] = q^-r [n-1, r] + q^(n-r) [n-1, r-1]
    return c_binom(n - 1, r).shift(-r) + c_binom(n - 1, r - 1).shift(n - r)


def c_q2_binom(n, r):
    return c_binom(n, r).subs_power(2)


def c_factorial(n):
    out = Laurent(1)
    for k in range(1, n + 1):
        out = out * c_int(k)
    return out


# -- modified U_q(sl_2) ----------------------------------------------------

def _put(d, k, v):
    if not v:
        return
    nv = d.get(k, Laurent()) + v
    if nv:
        d[k] = nv
    else:
        d.pop(k, None)


def c_reorder(a, b, m):
    """``F^(a) E^(b) 1_m = sum_j [a-b-m, j] E^(b-j) F^(a-j) 1_m``."""
    return {(b - j, a - j): c_binom(a - b - m, j) for j in range(min(a, b) + 1)
            if c_binom(a - b - m, j)}


def c_left_E(n, x):
    out = {}
    for (a, b, m), v in x.items():
        _put(out, (a + n, b, m), v * c_binom(a + n, n))
    return out


def c_left_F(n, x):
    out = {}
    for (a, b, m), v in x.items():
        mid = m - 2 * b
        for (ea, fb), r in c_reorder(n, a, mid).items():
            _put(out, (ea, fb + b, m), v * r * c_binom(fb + b, b))
    return out


def c_left_Echeck(n, x):
    out = {}
    for (a, b, m), v in x.items():
        w = m + 2 * a - 2 * b
        _put(out, (a + n, b, m), (v * c_binom(a + n, n)).shift(-n * n - n * w))
    return out


def c_add(x, y, scale=None):
    out = dict(x)
    for k, v in y.items():
        _put(out, k, v if scale is None else v * scale)
    return out


def c_product(x, y):
    """Normal-ordered product of two classical elements."""
    out = {}
    for (a1, b1, m1), v1 in x.items():
        for (a2, b2, m2), v2 in y.items():
            if m1 != m2 + 2 * a2 - 2 * b2:
                continue
            part = c_left_E(a1, c_left_F(b1, {(a2, b2, m2): v1 * v2}))
            out = c_add(out, part)
    return out


def c_B(x):
    return c_add(c_left_Echeck(1, x), c_left_F(1, x))


def c_idp(parity, n, m):
    """Classical i-divided power on ``1_m`` from its recursion (pi = J = 1)."""
    seq = [{(0, 0, m): Laurent(1)}]
    if n == 0:
        return seq[0]
    seq.append(c_B(seq[0]))
    for k in range(1, n):
        bx = c_B(seq[k])
        if (parity == "ev") == (k % 2 == 0):
            bx = c_add(bx, seq[k - 1], -c_int(k))
        seq.append({key: c_div(v, c_int(k + 1)) for key, v in bx.items()})
    return seq[n]


# -- spectator model with F_j commuting with E (pi = 1) ---------------------

def c_serre_sum(mserre, parity, mu):
    """``sum_n (-1)^n B^(n) F_j B^(N-n) 1_mu`` with keys ``(a, b, c, m)``."""
    N = 2 * mserre + 1
    total = {}
    for n in range(N + 1):
        right = c_idp(parity, N - n, mu)
        # F_j E^(a) F^(b) = E^(a) F_j F^(b); key (a, 0, b, m) means E^(a) F^(0) F_j F^(b)
        z = {(a, 0, b, m): v for (a, b, m), v in right.items()}
        res = {}
        for (a, b0, c, m), v in z.items():
            w = m - 2 * c + 2 * mserre + 2 * a
            left = c_idp(parity, n, w)
            for (a1, b1, _), v1 in left.items():
                mid = w - 2 * a
                for (ea, fb), r in c_reorder(b1, a, mid).items():
                    coef = v * v1 * r * c_binom(a1 + ea, a1)
                    _put(res, (a1 + ea, fb, c, m), coef)
        sign = -1 if n % 2 else 1
        total = c_add(total, res, Laurent(sign))
    return total


def c_relator(mserre, mu):
    N = 2 * mserre + 1
    return {(0, n, N - n, mu): Laurent(-1 if n % 2 else 1) for n in range(N + 1)}
