"""Compare the compiled and pure-Python coefficient kernels.

Two levels: the raw ``conv``/``div_unit`` kernels on random dense inputs, and
an end-to-end engine workload run in a subprocess per backend (the backend is
fixed at import, so ``COVERING_SERRE_PURE`` must be set before startup).

    python3 benchmarks/bench_kernels.py [--size 40] [--repeat 200]
"""
import argparse
import json
import os
import random
import subprocess
import sys
import timeit

WORKLOAD = r"""
import json, time
from covering_serre import _backend
from covering_serre.suites import cases, run_check, Config
t = time.perf_counter()
for s in ("idp", "serre"):
    for c in cases(s, Config(m_max=3)):
        assert run_check(*c)[0]
print(json.dumps({"backend": _backend.NAME, "seconds": time.perf_counter() - t}))
"""


def kernel_bench(size, repeat):
    from covering_serre import _pykernels
    try:
        from covering_serre import _kernels
    except ImportError:
        _kernels = None
    rng = random.Random(0)
    vec = lambda: tuple(rng.randint(-50, 50) for _ in range(size))
    a0, a1, b0, b1 = vec(), vec(), vec(), vec()
    b0, b1 = b0[:-1] + (1,), b1[:-1] + (0,)  # unit leading coefficient
    n0, n1 = (tuple(v) for v in _pykernels.conv(a0, a1, b0, b1))
    rows = []
    impls = [("python", _pykernels)] + ([("cython", _kernels)] if _kernels else [])
    for name, mod in impls:
        tc = timeit.timeit(lambda: mod.conv(a0, a1, b0, b1), number=repeat) / repeat
        td = timeit.timeit(lambda: mod.div_unit(n0, n1, b0, b1, 1, 0), number=repeat) / repeat
        rows.append((name, tc * 1e6, td * 1e6))
    return rows


def engine_bench():
    out = {}
    for pure in ("1", ""):
        env = dict(os.environ, COVERING_SERRE_PURE=pure)
        res = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                             capture_output=True, text=True)
        r = json.loads(res.stdout)
        out[r["backend"]] = r["seconds"]
    return out


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--size", type=int, default=40)
    ap.add_argument("--repeat", type=int, default=200)
    args = ap.parse_args()
    print(f"kernel timings, {args.size} coefficients per part (microseconds per call)")
    for name, tc, td in kernel_bench(args.size, args.repeat):
        print(f"  {name:7} conv {tc:9.1f}   div_unit {td:9.1f}")
    print("engine workload: idp + serre suites, mserre <= 3")
    for name, sec in engine_bench().items():
        print(f"  {name:7} {sec:7.2f} s")


if __name__ == "__main__":
    main()
