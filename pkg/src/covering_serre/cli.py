"""``covering-serre`` command line."""
import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import _backend, mutations
from .datum import load_datum, validate_datum, validate_parameters
from .expr import ExprError, eval_expr
from .arith import render
from .report import CaseResult, VerificationReport
from .suites import SUITES, Config, cases, run_check, t_audit_report


class ConfigError(ValueError):
    pass


def _timed(job):
    check, params = job
    t0 = time.perf_counter()
    ok, witness = run_check(check, params)
    ms = int(round((time.perf_counter() - t0) * 1000))
    return ok, witness, ms


def _default_jobs():
    raw = os.environ.get("COVERING_SERRE_JOBS", "1")
    try:
        jobs = int(raw)
    except ValueError:
        raise ConfigError(f"COVERING_SERRE_JOBS={raw!r} is not an integer") from None
    return jobs


def run_verify(suite, cfg, jobs=1):
    """Run one suite or ``all``; case order is fixed before any work is scheduled."""
    names = SUITES if suite == "all" else (suite,)
    plan = []
    for s in names:
        for check, params in cases(s, cfg):
            plan.append((f"{s}/{check}" if suite == "all" else check, check, params))
    work = [(c, p) for _, c, p in plan]
    if jobs > 1 and len(work) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_timed, work, chunksize=max(1, len(work) // (8 * jobs))))
    else:
        results = [_timed(w) for w in work]
    rep = VerificationReport(suite, backend=_backend.NAME)
    for (label, _, params), (ok, witness, ms) in zip(plan, results):
        rep.cases.append(CaseResult(label, params, "pass" if ok else "fail",
                                    None if ok else witness, ms))
    return rep


def _config(args):
    cfg = Config(m_max=args.m_max, n_max=args.n_max, lambda_span=args.lambda_span,
                 w_min=args.w_min, w_max=args.w_max, ul_max=args.ul_max)
    if cfg.m_max < 0 or cfg.n_max < 0 or cfg.ul_max < 0:
        raise ConfigError("--m-max, --n-max and --ul-max must be non-negative")
    if cfg.w_min > cfg.w_max:
        raise ConfigError("--w-min exceeds --w-max")
    if cfg.lambda_span is not None and cfg.lambda_span < 0:
        raise ConfigError("--lambda-span must be non-negative")
    jobs = args.jobs if args.jobs is not None else _default_jobs()
    if jobs < 1:
        raise ConfigError("--jobs must be at least 1")
    return cfg, jobs


def cmd_verify(args):
    cfg, jobs = _config(args)
    if args.mutate:
        names = [n for n in args.mutate.split(",") if n]
        unknown = [n for n in names if n not in mutations.KNOWN]
        if unknown:
            raise ConfigError(f"unknown mutation(s): {', '.join(unknown)}")
        # the environment carries the fault into worker processes too
        os.environ["COVERING_SERRE_MUTATION"] = ",".join(
            sorted(set(names) | set(mutations.current())))
        with mutations.mutate(*names):
            rep = run_verify(args.suite, cfg, jobs)
    else:
        rep = run_verify(args.suite, cfg, jobs)
    text = rep.to_json() if args.format == "json" else rep.to_text(args.verbose)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
        first = rep.first_failure()
        s = rep.summary
        print(f"{rep.suite}: pass {s['pass']} fail {s['fail']} skip {s['skip']} -> {args.out}")
        if first is not None:
            print(f"first failure: {first.name} {first.params}: {first.witness}")
    else:
        sys.stdout.write(text)
    return 0 if rep.ok else 1


def cmd_eval(args):
    try:
        value = eval_expr(args.expr)
    except ExprError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(value))
    return 0


def cmd_datum(args):
    try:
        datum, inv = load_datum(args.file)
    except (OSError, ValueError, KeyError, ExprError) as exc:
        print(f"error: cannot read datum: {exc}", file=sys.stderr)
        return 2
    res = validate_datum(datum)
    problems = list(res.violations)
    if inv is not None and res.ok:
        problems += list(validate_parameters(inv, datum).violations)
    for p in problems:
        print(p)
    print("valid" if not problems else f"invalid ({len(problems)} violation(s))")
    return 0 if not problems else 1


def cmd_tident_audit(args):
    rows = t_audit_report(args.w_min, args.w_max, args.ul_max)
    for w, u, ell, lit, nbad in rows:
        print(f"T({w},{u},{ell}) literal = {render(lit)}  [{nbad} summand(s) differ]")
    print(f"{len(rows)} tuple(s) where the literal summand disagrees with the substitution form")
    return 0


def build_parser():
    ap = argparse.ArgumentParser(prog="covering-serre")
    sub = ap.add_subparsers(dest="cmd", required=True)

    v = sub.add_parser("verify", help="run verification suites")
    v.add_argument("--suite", required=True, choices=SUITES + ("all",))
    v.add_argument("--m-max", type=int, default=2)
    v.add_argument("--n-max", type=int, default=8)
    v.add_argument("--lambda-span", type=int, default=None)
    v.add_argument("--w-min", type=int, default=-8)
    v.add_argument("--w-max", type=int, default=8)
    v.add_argument("--ul-max", type=int, default=6)
    v.add_argument("--jobs", type=int, default=None)
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out")
    v.add_argument("--mutate", help="comma separated fault names (testing the tests)")
    v.add_argument("-v", "--verbose", action="store_true")
    v.set_defaults(fn=cmd_verify)

    e = sub.add_parser("eval", help="evaluate a (q,pi) expression")
    e.add_argument("expr")
    e.set_defaults(fn=cmd_eval)

    d = sub.add_parser("datum", help="super Cartan datum tools")
    dsub = d.add_subparsers(dest="datum_cmd", required=True)
    dc = dsub.add_parser("check")
    dc.add_argument("file")
    dc.set_defaults(fn=cmd_datum)

    t = sub.add_parser("tident-audit", help="compare the literal T summand with the substitution form")
    t.add_argument("--w-min", type=int, default=-8)
    t.add_argument("--w-max", type=int, default=8)
    t.add_argument("--ul-max", type=int, default=6)
    t.set_defaults(fn=cmd_tident_audit)
    return ap


def main(argv=None):
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.fn(args)
    except ConfigError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
