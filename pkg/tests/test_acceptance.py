"""The nine acceptance criteria at zero tolerance.

Each test records a one-line verdict; ``conftest.pytest_terminal_summary``
prints them after the run.
"""
import time
from pathlib import Path

import pytest

from covering_serre import mutations, suites
from covering_serre.arith import render
from covering_serre.idivided import PARITIES, example_rhs
from covering_serre.rank1 import render_element
from covering_serre.serre import eval_T_literal
from covering_serre.suites import Config

VERDICTS = {}
GOLDEN = Path(__file__).parent / "golden"


def run_suite(name, cfg=None):
    t0 = time.perf_counter()
    fails = []
    total = 0
    for check, params in suites.cases(name, cfg or Config()):
        total += 1
        ok, witness = suites.run_check(check, params)
        if not ok:
            fails.append((check, params, witness))
    return total, fails, time.perf_counter() - t0


def record(k, title, total, fails, secs, budget, extra=""):
    ok = not fails and secs < budget
    line = f"criterion {k} {'PASS' if ok else 'FAIL'}: {title}, {total - len(fails)}/{total} cases, {secs:.1f}s (budget {budget}s)"
    if extra:
        line += f"; {extra}"
    if fails:
        check, params, witness = fails[0]
        line += f"; first witness {check}{params}: {(witness or '')[:160]}"
    VERDICTS[k] = line
    assert not fails, line
    assert secs < budget, line


def test_criterion_1_arithmetic():
    record(1, "arithmetic", *run_suite("arith"), 5)


def test_criterion_2_rank_one_relations():
    record(2, "rank-one relations", *run_suite("rank1", Config(rank1_m=12, rank1_ab=6)), 30)


def test_criterion_3_divided_powers():
    total, fails, secs = run_suite("idp", Config(n_max=8))
    t0 = time.perf_counter()
    lines = 0
    for parity in PARITIES:
        for line in (GOLDEN / f"examples_{parity}.txt").read_text().splitlines():
            head, body = line.split(" :: ")
            _, n, m = head.split()
            lines += 1
            if render_element(example_rhs(parity, int(n[2:]), int(m[2:]))) != body:
                fails.append(("golden", {"line": head}, "example right side differs"))
    record(3, "divided-power presentations and golden examples", total + lines, fails,
           secs + time.perf_counter() - t0, 120)


def test_criterion_4_bar_invariance():
    record(4, "bar_apply fixes the dot expansion", *run_suite("bar", Config(n_max=8)), 10)


def test_criterion_5_t_identity(tmp_path):
    total, fails, secs = run_suite("tident", Config(w_min=-8, w_max=8, ul_max=6))
    rows = suites.t_audit_report(-8, 8, 6)
    audit = tmp_path / "tident_audit.txt"
    audit.write_text("".join(f"{w} {u} {l} {render(v)} {k}\n" for w, u, l, v, k in rows))
    extra = f"audit {len(rows)} literal mismatches, literal T(0,0,1) = {render(eval_T_literal(0, 0, 1))}"
    record(5, "T identity", total, fails, secs, 60, extra)


def test_criterion_6_iserre():
    record(6, "iSerre relation and S = T", *run_suite("serre", Config(m_max=3)), 600)


def test_criterion_7_qserre():
    total, fails, secs = run_suite("qserre")
    record(7, "qSerre coefficients", total, fails, secs, 10)


def test_criterion_8_pi_one():
    record(8, "pi = 1 against the classical oracle", *run_suite("classical", Config(m_max=2)), 180)


def test_criterion_9_mutations():
    t0 = time.perf_counter()
    fails = []
    caught = {}
    for name in sorted(mutations.KNOWN):
        with mutations.mutate(name):
            hit = []
            for s in suites.SUITES:
                if s == "bar":
                    continue
                if run_suite(s, Config(m_max=1, n_max=6))[1]:
                    hit.append(s)
        caught[name] = hit
        if not hit:
            fails.append(("mutation", {"name": name}, "no suite failed"))
    extra = ", ".join(f"{k}->{'/'.join(v) or 'none'}" for k, v in caught.items())
    record(9, "mutation sensitivity", len(mutations.KNOWN), fails,
           time.perf_counter() - t0, 600, extra)
