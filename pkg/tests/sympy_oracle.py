"""Reference values computed with sympy in Z[q, q^-1, pi] / (pi^2 - 1).

Only the textbook definitions are used: the (q,pi)-integer as a rational
function and binomials as products of such quotients.
"""
import sympy as sp

from covering_serre.arith import QPiLaurent

q, p = sp.symbols("q p")


def reduce(expr):
    """Cancel, clear q-powers and reduce modulo pi^2 = 1."""
    num, den = sp.fraction(sp.cancel(sp.together(expr)))
    num, den = sp.Poly(num, q, p), sp.Poly(den, q, p)
    # the denominator must be a unit monomial times a power of q
    (dmon, dc), = den.terms()
    if dmon[1] % 2:
        num = num * sp.Poly(p, q, p)
    out = {}
    for (eq, ep), c in num.terms():
        k = eq - dmon[0]
        c0, c1 = out.get(k, (0, 0))
        c = int(c) // int(dc) if int(c) % int(dc) == 0 else None
        if c is None:
            raise ValueError("non-integral")
        out[k] = (c0 + c, c1) if ep % 2 == 0 else (c0, c1 + c)
    return QPiLaurent(out)


def qint(n):
    return ((p * q) ** n - q ** (-n)) / (p * q - 1 / q)


def qint_value(n):
    e = sp.cancel(qint(n).subs(p, p))
    return reduce(e.subs(p ** 2, 1))


def binom_value(m, n):
    num, den = sp.Integer(1), sp.Integer(1)
    for k in range(1, n + 1):
        num *= qint(m + 1 - k)
        den *= qint(k)
    e = sp.cancel(num / den)
    # pi enters polynomially after cancellation; fold pi^2 = 1
    num_e, den_e = sp.fraction(e)
    num_e = sp.rem(sp.expand(num_e), p ** 2 - 1, p)
    den_e = sp.rem(sp.expand(den_e), p ** 2 - 1, p)
    return reduce(num_e / den_e)
