"""Super Cartan data, diagram involutions and the parameter conditions."""
import json
from fractions import Fraction
from dataclasses import dataclass, field

from .arith import ONE, QPiLaurent, bar_ring, q_pow
from .expr import eval_expr


@dataclass(frozen=True)
class Validation:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


@dataclass(frozen=True)
class SuperCartanDatum:
    """Index set, parities and a symmetric bilinear form on Z[I]."""

    index: tuple
    parity: dict
    dot: dict = field(repr=False)

    @classmethod
    def build(cls, index, parity, dot):
        """``dot`` may list each unordered pair once; it is symmetrized here."""
        full = {}
        for (i, j), v in dot.items():
            if (j, i) in full and full[(j, i)] != v:
                raise ValueError(f"asymmetric form at ({i},{j})")
            full[(i, j)] = full[(j, i)] = int(v)
        return cls(tuple(index), dict(parity), full)

    def form(self, i, j):
        return self.dot.get((i, j), 0)

    def d(self, i):
        return self.form(i, i) // 2

    def a(self, i, j):
        """``2 (i.j) / (i.i)``; a Fraction when it is not integral, None if i.i = 0."""
        num, den = 2 * self.form(i, j), self.form(i, i)
        if den == 0:
            return None
        return num // den if num % den == 0 else Fraction(num, den)

    def p(self, i):
        return self.parity[i]

    def q_i(self, i):
        return q_pow(self.d(i))

    def pi_i(self, i):
        return ONE if self.p(i) == 0 else QPiLaurent.monomial(0, 0, 1)


def validate_datum(d):
    """Check (a), (b), (d), (e), (f).  Condition (c) places no constraint."""
    bad = []
    for i in d.index:
        ii = d.form(i, i)
        if ii <= 0:
            bad.append(f"(a) d_{i} = {ii}/2 is not positive")
        if d.parity.get(i) not in (0, 1):
            bad.append(f"parity of {i} must be 0 or 1")
            continue
        if ii % 2 == 0 and ii > 0 and (ii // 2 - d.p(i)) % 2:
            bad.append(f"(e) d_{i} = {ii // 2} has the wrong parity for p({i}) = {d.p(i)}")
    for i in d.index:
        for j in d.index:
            ij = d.form(i, j)
            if ij % 2:
                bad.append(f"(f) {i}.{j} = {ij} is odd")
            if i == j or d.form(i, i) <= 0:
                continue
            a = d.a(i, j)
            if not isinstance(a, int) or a > 0:
                bad.append(f"(b) a_{i}{j} = {a} is not in -N")
            elif d.p(i) == 1 and a % 2:
                bad.append(f"(d) a_{i}{j} = {a} is odd but {i} is odd")
    # keep report order stable and free of duplicates
    seen = []
    for b in bad:
        if b not in seen:
            seen.append(b)
    return Validation(not seen, tuple(seen))


@dataclass(frozen=True)
class RootDatumInvolution:
    tau: dict
    sigma: dict  # index -> QPiLaurent


def validate_parameters(r, d):
    """Involution axioms plus (bar1)-(bar3)."""
    bad = []
    for i in d.index:
        if r.tau.get(r.tau.get(i)) != i:
            bad.append(f"tau^2 != id at {i}")
    if bad:
        return Validation(False, tuple(bad))
    for i in d.index:
        for j in d.index:
            if d.form(r.tau[i], r.tau[j]) != d.form(i, j):
                bad.append(f"tau does not preserve {i}.{j}")
    for i in d.index:
        s = r.sigma[i]
        ti = r.tau[i]
        qi = d.q_i(i)
        if ti == i:
            if any(j != i and d.a(i, j) != 0 for j in d.index):
                if bar_ring(s * qi) != s * qi:
                    bad.append(f"(bar1) bar(sigma_{i} q_{i}) != sigma_{i} q_{i}")
            continue
        a = d.a(i, ti)
        if a == 0:
            if bar_ring(s) != s or s != r.sigma[ti]:
                bad.append(f"(bar2) need bar(sigma_{i}) = sigma_{i} = sigma_{ti}")
        else:
            want = d.pi_i(i) * q_pow(-d.d(i) * a) * bar_ring(s)
            if r.sigma[ti] != want:
                bad.append(f"(bar3) sigma_{ti} should be {want}")
    return Validation(not bad, tuple(bad))


def load_datum(source):
    """Read the JSON description; ``source`` is a path or an already-parsed dict."""
    if isinstance(source, dict):
        raw = source
    else:
        with open(source, encoding="utf-8") as fh:
            raw = json.load(fh)
    index = [int(i) for i in raw["I"]]
    parity = {int(k): int(v) for k, v in raw["parity"].items()}
    dot = {}
    for key, v in raw["dot"].items():
        i, j = (int(x) for x in key.split(","))
        dot[(i, j)] = v
    datum = SuperCartanDatum.build(index, parity, dot)
    inv = None
    if "tau" in raw:
        tau = {int(k): int(v) for k, v in raw["tau"].items()}
        sig = {int(k): eval_expr(str(v)) for k, v in raw.get("sigma", {}).items()}
        for i in index:
            sig.setdefault(i, q_pow(-datum.d(i)))
        inv = RootDatumInvolution(tau, sig)
    return datum, inv
