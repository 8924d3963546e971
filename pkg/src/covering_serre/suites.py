"""Verification suites.

A suite expands to an ordered list of cases ``(check_name, params)``; each
check returns ``(ok, witness)``.  Checks are module-level so a process pool
can run them.
"""
from dataclasses import dataclass

from . import classical as C
from .arith import (NotDivisible, ONE, PI, ZERO, QPiLaurent, bar_ring, binom2,
                    exact_div, pochhammer, pq_pow, qpi_binom, qpi_factorial, qpi_int,
                    q2_binom, specialize_pi, zpoly_binomial_theorem,
                    plain_binomial_sum)
from .idivided import (PARITIES, PRESENTATIONS, IdpSpec, example_lhs, example_rhs,
                       idp_expand_dot, idp_recursive, sweep_weights)
from .rank1 import (HBracket, Word, apply_B, bar_apply, bracket_product, bracket_value,
                    defining_relations, echeck_div, h_value, idem, left_F, monomial,
                    normal_product, sigma_apply, varpi_apply, word_eval)
from .serre import (SerreParams, eval_T_literal, eval_T_substitution, extract_S,
                    qserre_coefficients, a_i_closed, a_j_closed, relator_element,
                    s_range, serre_sum, serre_sweep, t_audit, t_range, t_variable,
                    verify_iserre, classical_T_terms)

SUITES = ("arith", "rank1", "idp", "bar", "tident", "serre", "qserre", "classical")


@dataclass
class Config:
    m_max: int = 2
    n_max: int = 8
    lambda_span: int = None
    w_min: int = -8
    w_max: int = 8
    ul_max: int = 6
    rank1_m: int = 12
    rank1_ab: int = 6


def _fail(what, got=None, want=None):
    if got is None:
        return False, what
    return False, f"{what}: got {got}, expected {want}"


OK = (True, None)


# -- arithmetic --------------------------------------------------------------

def chk_binom_row(m):
    for n in range(0, 11):
        try:
            b = qpi_binom(m, n)
        except NotDivisible as exc:
            return _fail(f"[{m} choose {n}] not ring-valued: {exc}")
        if n >= 1 and b * qpi_int(n) != qpi_int(m - n + 1) * qpi_binom(m, n - 1):
            return _fail(f"Pascal consistency at ({m},{n})")
        if 0 <= m < n and b:
            return _fail(f"[{m} choose {n}] should vanish", b, 0)
    return OK


def chk_negative_int(n):
    got, want = qpi_int(-n), -qpi_int(n).times_pi(n)
    return OK if got == want else _fail(f"[-{n}]", got, want)


def chk_bar_factorial(n):
    f = qpi_factorial(n)
    if bar_ring(f) != f.times_pi(binom2(n)):
        return _fail(f"bar([{n}]!)", bar_ring(f), f.times_pi(binom2(n)))
    if n and bar_ring(qpi_int(n)) != qpi_int(n).times_pi(n - 1):
        return _fail(f"bar([{n}])")
    return OK


def chk_zpoly(m):
    for barred in (True, False):
        s, p = zpoly_binomial_theorem(m, barred)
        if s != p:
            return _fail(f"binomial theorem (barred={barred}) at m={m}", s, p)
    s, _ = zpoly_binomial_theorem(m, True)
    if m >= 1 and s(QPiLaurent(-1)):
        return _fail(f"z=-1 specialization at m={m}", s(QPiLaurent(-1)), 0)
    x = QPiLaurent.monomial(-2, 0, 1)
    if s(-x) != pochhammer(x, x, m):
        return _fail(f"z=-pi q^-2 at m={m}", s(-x), pochhammer(x, x, m))
    su, _ = zpoly_binomial_theorem(m, False)
    y = QPiLaurent.monomial(2, 0, 1)
    if su(-y) != pochhammer(y, y, m):
        return _fail(f"z=-pi q^2 at m={m}", su(-y), pochhammer(y, y, m))
    if m % 2 and plain_binomial_sum(m, -1):
        return _fail(f"plain sum at z=-1, m={m}")
    return OK


# -- rank one ----------------------------------------------------------------

def chk_relations(m):
    for name, (lhs, rhs) in defining_relations().items():
        a, b = word_eval(lhs, m), word_eval(rhs, m)
        if a != b:
            return _fail(f"{name} on 1_{m}", a, b)
    ef = word_eval(Word.gen("EF"), m) - word_eval(Word.gen("FE"), m).scale(PI)
    if ef != idem(m).scale(qpi_int(m)):
        return _fail(f"EF - pi FE on 1_{m}", ef, idem(m).scale(qpi_int(m)))
    return OK


def _undivided(word, m):
    """Divided powers from letters: ``E^a F^b ... / ([a]! [b]! ...)``."""
    letters, denom = "", ONE
    for ch, k in word:
        letters += ch * k
        denom = denom * qpi_factorial(k)
    x = word_eval(Word.gen(letters), m)
    return x.map_coefficients(lambda c: exact_div(c, denom))


def chk_divided_products(m, ab):
    for a in range(ab + 1):
        for b in range(ab + 1):
            got = normal_product(monomial(0, a, m + 2 * b), monomial(b, 0, m))
            want = _undivided([("F", a), ("E", b)], m)
            if got != want:
                return _fail(f"F^({a}) E^({b}) 1_{m}", got, want)
            got = normal_product(monomial(0, a, m - 2 * b), monomial(0, b, m))
            if got != monomial(0, a + b, m).scale(qpi_binom(a + b, a)):
                return _fail(f"F^({a}) F^({b}) 1_{m}")
            got = normal_product(monomial(a, 0, m + 2 * b), monomial(b, 0, m))
            if got != monomial(a + b, 0, m).scale(qpi_binom(a + b, a)):
                return _fail(f"E^({a}) E^({b}) 1_{m}")
    if normal_product(idem(m), idem(m + 2)):
        return _fail("orthogonal idempotents")
    return OK


def chk_fyn(n, m):
    lhs = left_F(1, echeck_div(n, idem(m)))
    rhs = echeck_div(n, left_F(1, idem(m))).scale(QPiLaurent.monomial(-2, 0, 1) ** n)
    if n >= 1:
        num = QPiLaurent.monomial(3 - 3 * n - 2 * m) - pq_pow(1 - n).times_pi(m)
        try:
            mid = exact_div(num, QPiLaurent({2: 1, 0: (0, -1)}))
        except NotDivisible:
            return _fail(f"(q^2 - pi) does not divide the middle factor at n={n}, m={m}")
        rhs = rhs + echeck_div(n - 1, idem(m)).scale(mid)
    return OK if lhs == rhs else _fail(f"F Ech^({n}) 1_{m}", lhs, rhs)


def chk_dpy(n, m):
    x = idem(m)
    for _ in range(n):
        x = echeck_div(1, x)
    x = x.map_coefficients(lambda c: exact_div(c, qpi_factorial(n)))
    want = monomial(n, 0, m).scale(QPiLaurent.monomial(-n * n - n * m))
    if x != want or echeck_div(n, idem(m)) != want:
        return _fail(f"Ech^({n}) 1_{m}", x, want)
    return OK


def chk_brackets(kind, n, a):
    par = 0 if kind == "square" else 1
    for w in sweep_weights("ev" if par == 0 else "odd", n + 6):
        v = bracket_value(kind, a, n, w)
        if v != bracket_product(kind, a, n, w):
            return _fail(f"{kind}[h;{a}]_{n} on 1_{w} vs product", v, bracket_product(kind, a, n, w))
        if bracket_value(kind, a, n, w - 2) != bracket_value(kind, a + 1, n, w):
            return _fail(f"{kind} shift past F at a={a}, n={n}, w={w}")
        if bracket_value(kind, a, n, w + 2) != bracket_value(kind, a - 1, n, w):
            return _fail(f"{kind} shift past Ech at a={a}, n={n}, w={w}")
        sign = -1 if n % 2 else 1
        if kind == "square":
            want = bracket_value(kind, 1 - a - n, n, w).shift(2 * n * (n + 1)) * sign
        else:
            want = bracket_value(kind, 2 - a - n, n, w).shift(2 * n * (n - 1)) * sign
        got = bar_ring(bracket_value(kind, a, n, -w))
        if got != want:
            return _fail(f"varsigma({kind}[h;{a}]_{n}) on 1_{w}", got, want)
    return OK


def chk_h_identities(m):
    h = h_value(m)
    # pi q [2] [h;0]; the unadorned q [2] [h;0] equals pi h
    q2 = QPiLaurent.monomial(1, 0, 1) * qpi_int(2)
    if m % 2 == 0:
        want = q2 * bracket_value("square", 0, 1, m)
    else:
        want = q2 * bracket_value("brace", 0, 1, m) + ONE
    if h != want:
        return _fail(f"h on 1_{m}", h, want)
    lhs = left_F(1, echeck_div(1, idem(m)))
    rhs = idem(m).scale(h) + echeck_div(1, left_F(1, idem(m))).scale(QPiLaurent.monomial(-2, 0, 1))
    return OK if lhs == rhs else _fail(f"F Ech 1_{m}", lhs, rhs)


def chk_involutions(m, ab):
    for a in range(ab + 1):
        for b in range(ab + 1):
            x = monomial(a, b, m, QPiLaurent({1: (1, 2), -3: (0, 1)}))
            if sigma_apply(sigma_apply(x)) != x:
                return _fail(f"varsigma^2 on E^({a})F^({b})1_{m}")
            if bar_apply(bar_apply(x)) != x:
                return _fail(f"bar^2 on E^({a})F^({b})1_{m}")
            y = monomial(b, a, m + 2 * a - 2 * b)
            xy = normal_product(y, monomial(a, b, m))
            if sigma_apply(xy) != normal_product(sigma_apply(monomial(a, b, m)), sigma_apply(y)):
                return _fail(f"varsigma anti-multiplicative at ({a},{b},{m})")
    for name, (lhs, rhs) in defining_relations().items():
        if word_eval(varpi_apply(lhs), m) != word_eval(varpi_apply(rhs), m):
            return _fail(f"varpi breaks {name} on 1_{m}")
    for ch in "EFKkJ":
        w = Word.gen(ch)
        if word_eval(varpi_apply(varpi_apply(w)), m) != word_eval(w, m):
            return _fail(f"varpi^2({ch}) on 1_{m}")
    return OK


# -- divided powers ------------------------------------------------------------

def chk_idp(parity, n):
    spec = IdpSpec(parity, n)
    for m in sweep_weights(parity, n):
        ref = idp_expand_dot(spec, m)
        for name, fn in PRESENTATIONS.items():
            got = fn(spec, m)
            if got != ref:
                return _fail(f"{name} vs dot for {parity}{n} on 1_{m}", got, ref)
    return OK


def chk_example(parity, n):
    for m in sweep_weights(parity, n):
        ref = idp_recursive(IdpSpec(parity, n), m)
        if example_rhs(parity, n, m) != ref:
            return _fail(f"example right side {parity}{n} on 1_{m}", example_rhs(parity, n, m), ref)
        if example_lhs(parity, n, m) != ref:
            return _fail(f"example quotient {parity}{n} on 1_{m}")
    return OK


def chk_bar(parity, n):
    for m in sweep_weights(parity, n):
        x = idp_expand_dot(IdpSpec(parity, n), m)
        bx = bar_apply(x)
        if bx != x:
            diff = bx - x
            key = min(diff.terms, key=lambda k: (k[2], k[0], k[1]))
            return _fail(f"{parity}{n} on 1_{m}, E^({key[0]})F^({key[1]})",
                         bx.coefficient(*key), x.coefficient(*key))
    return OK


# -- T identity and Serre ------------------------------------------------------

def chk_T(w, u, ell):
    v = eval_T_substitution(w, u, ell)
    return OK if not v else _fail(f"T({w},{u},{ell})", v, 0)


def chk_serre(mserre, parity, pj, lam):
    return verify_iserre(SerreParams(mserre, pj, parity, lam))


def chk_extract_S(mserre, pj, lam):
    p = SerreParams(mserre, pj, "ev", lam)
    total = serre_sum(p)
    for y, u, ell in s_range(mserre):
        s = extract_S(y, u, ell, p, total)
        t = eval_T_substitution(t_variable(y, u, ell, p), u, ell)
        if s != t:
            return _fail(f"S({y},{u},{ell},{lam}) vs T", s, t)
    return OK


def chk_qserre(m):
    ai, aj = qserre_coefficients(m)
    if ai != a_i_closed(m):
        return _fail(f"a_i at m={m}", ai, a_i_closed(m))
    if aj != a_j_closed(m):
        return _fail(f"a_j at m={m}", aj, a_j_closed(m))
    return OK


def chk_vanishing(m):
    v = plain_binomial_sum(m, -1) if m % 2 else zpoly_binomial_theorem(m, True)[0](QPiLaurent(-1))
    return OK if not v else _fail(f"z=-1 sum at m={m}", v, 0)


# -- pi = 1 oracle ---------------------------------------------------------------

def _c_elem(x):
    return {k: C.from_qpi(v) for k, v in x.terms.items() if C.from_qpi(v)}


def chk_classical_arith(m):
    for n in range(11):
        if C.from_qpi(qpi_binom(m, n)) != C.c_binom(m, n):
            return _fail(f"[{m} choose {n}] at pi=1")
        if C.from_qpi(q2_binom(m, n)) != C.c_q2_binom(m, n):
            return _fail(f"q^2 binomial ({m},{n}) at pi=1")
    return OK


def chk_classical_rank1(m, ab):
    for a in range(ab + 1):
        for b in range(ab + 1):
            x, y = monomial(a, b, m + 2 * b), monomial(b, a, m)
            got = _c_elem(normal_product(x, y))
            want = C.c_product({(a, b, m + 2 * b): C.Laurent(1)}, {(b, a, m): C.Laurent(1)})
            if got != want:
                return _fail(f"product ({a},{b}) on 1_{m} at pi=1")
    return OK


def chk_classical_idp(parity, n):
    for m in sweep_weights(parity, n):
        got = _c_elem(idp_expand_dot(IdpSpec(parity, n), m))
        if got != C.c_idp(parity, n, m):
            return _fail(f"{parity}{n} on 1_{m} at pi=1")
    return OK


def chk_classical_T(w, u, ell):
    lit = C.from_qpi(eval_T_literal(w, u, ell))
    sub = C.from_qpi(eval_T_substitution(w, u, ell))
    ref = C.Laurent()
    for v in classical_T_terms(w, u, ell).values():
        ref = ref + v
    if lit != ref or sub != ref:
        return _fail(f"T({w},{u},{ell}) at pi=1")
    return OK


def chk_classical_serre(mserre, parity, lam):
    p = SerreParams(mserre, 0, parity, lam)
    got = {(a, b, c, m): C.from_qpi(v) for (a, b, has, c, m), v in serre_sum(p).terms.items()}
    got = {k: v for k, v in got.items() if v}
    want = C.c_serre_sum(mserre, parity, p.weight)
    if got != want:
        return _fail(f"Serre sum m={mserre} {parity} lam={lam} at pi=1")
    if want != C.c_relator(mserre, p.weight):
        return _fail(f"classical Serre sum m={mserre} {parity} lam={lam} is not the relator")
    return OK


def chk_classical_qserre(m):
    ai, aj = qserre_coefficients(m)
    # classical closed forms: q (q^-2; q^-2)_m and q^-m (q^2; q^2)_m
    x, y = C.Laurent.monomial(-2), C.Laurent.monomial(2)
    pj, pi_ = C.Laurent(1), C.Laurent(1)
    for k in range(m):
        pj = pj * (C.Laurent(1) - C.Laurent.monomial(-2 * (k + 1)))
        pi_ = pi_ * (C.Laurent(1) - C.Laurent.monomial(2 * (k + 1)))
    if C.from_qpi(aj) != pj.shift(1) or C.from_qpi(ai) != pi_.shift(-m):
        return _fail(f"qserre m={m} at pi=1")
    return OK


CHECKS = {f.__name__[4:]: f for f in (
    chk_binom_row, chk_negative_int, chk_bar_factorial, chk_zpoly,
    chk_relations, chk_divided_products, chk_fyn, chk_dpy, chk_brackets, chk_h_identities,
    chk_involutions, chk_idp, chk_example, chk_bar, chk_T, chk_serre, chk_extract_S,
    chk_qserre, chk_vanishing, chk_classical_arith, chk_classical_rank1, chk_classical_idp,
    chk_classical_T, chk_classical_serre, chk_classical_qserre)}


def _lams(cfg, mserre):
    if cfg.lambda_span is not None:
        return list(range(-cfg.lambda_span, cfg.lambda_span + 1))
    return serre_sweep(mserre)


def cases(suite, cfg=None):
    """Ordered ``[(check, params)]`` for a suite."""
    cfg = cfg or Config()
    out = []
    add = lambda check, **kw: out.append((check, kw))
    if suite == "arith":
        for m in range(-20, 21):
            add("binom_row", m=m)
        for n in range(13):
            add("negative_int", n=n)
        for n in range(9):
            add("bar_factorial", n=n)
        for m in range(11):
            add("zpoly", m=m)
    elif suite == "rank1":
        for m in range(-cfg.rank1_m, cfg.rank1_m + 1):
            add("relations", m=m)
            add("divided_products", m=m, ab=cfg.rank1_ab)
            add("h_identities", m=m)
            add("involutions", m=m, ab=min(cfg.rank1_ab, 4))
            for n in range(cfg.rank1_ab + 1):
                add("dpy", n=n, m=m)
        for m in range(-10, 11):
            for n in range(7):
                add("fyn", n=n, m=m)
        for kind in ("square", "brace"):
            for n in range(cfg.rank1_ab + 1):
                for a in range(-3, 4):
                    add("brackets", kind=kind, n=n, a=a)
    elif suite == "idp":
        for parity in PARITIES:
            for n in range(cfg.n_max + 1):
                add("idp", parity=parity, n=n)
            for n in (2, 3, 4):
                add("example", parity=parity, n=n)
    elif suite == "bar":
        for parity in PARITIES:
            for n in range(cfg.n_max + 1):
                add("bar", parity=parity, n=n)
    elif suite == "tident":
        for w, u, ell in t_range(cfg.w_min, cfg.w_max, cfg.ul_max):
            add("T", w=w, u=u, ell=ell)
    elif suite == "serre":
        for mserre in range(cfg.m_max + 1):
            for parity in PARITIES:
                for pj in (0, 1):
                    for lam in _lams(cfg, mserre):
                        add("serre", mserre=mserre, parity=parity, pj=pj, lam=lam)
        for mserre in range(min(cfg.m_max, 2) + 1):
            for pj in (0, 1):
                for lam in _lams(cfg, mserre):
                    add("extract_S", mserre=mserre, pj=pj, lam=lam)
    elif suite == "qserre":
        for m in (1, 3, 5, 7):
            add("qserre", m=m)
        for m in range(1, 10):
            add("vanishing", m=m)
    elif suite == "classical":
        for m in range(-20, 21):
            add("classical_arith", m=m)
        for m in range(-6, 7):
            add("classical_rank1", m=m, ab=4)
        for parity in PARITIES:
            for n in range(cfg.n_max + 1):
                add("classical_idp", parity=parity, n=n)
        for w, u, ell in t_range(-4, 4, 4):
            add("classical_T", w=w, u=u, ell=ell)
        for mserre in range(min(cfg.m_max, 2) + 1):
            for parity in PARITIES:
                for lam in _lams(cfg, mserre):
                    add("classical_serre", mserre=mserre, parity=parity, lam=lam)
        for m in (1, 3, 5, 7):
            add("classical_qserre", m=m)
    else:
        raise KeyError(suite)
    return out


def run_check(check, params):
    try:
        return CHECKS[check](**params)
    except (ArithmeticError, ValueError) as exc:
        return False, f"{type(exc).__name__}: {exc}"


def t_audit_report(w_min=-8, w_max=8, ul_max=6):
    """Literal-vs-substitution mismatches: ``[(w, u, l, literal, #bad terms)]``."""
    rows = []
    for w, u, ell in t_range(w_min, w_max, ul_max):
        bad = t_audit(w, u, ell)
        if bad:
            rows.append((w, u, ell, eval_T_literal(w, u, ell), len(bad)))
    return rows
