"""Compare the compiled and pure-Python cyclotomic kernels.

Micro benchmarks time each kernel on random coefficient tuples.  The end-to-end
benchmark runs one workload in a fresh interpreter per backend, since the backend
is chosen at import time (QLATTICE_PURE=1 forces the Python path).

    python3 benchmarks/bench_kernels.py
    python3 benchmarks/bench_kernels.py --r 11 --repeat 5 --no-e2e
"""

import argparse
import os
import random
import subprocess
import sys
import timeit

from qlattice import _pykernels

try:
    from qlattice import _ckernels
except ImportError:
    _ckernels = None

E2E = """
import time
from qlattice.arith import context
from qlattice.kernels import BACKEND
from qlattice.hkl import check_hkl_integrality
from qlattice.schroedinger import run_integrality_suite
from qlattice.mcg import generators
t = time.perf_counter()
ctx = context({r})
run_integrality_suite(ctx, 2)
for gen in generators(1):
    check_hkl_integrality(gen, 1, ctx)
print(BACKEND, time.perf_counter() - t)
"""


def _tuples(r, n, bound, rng):
    return [tuple(rng.randint(-bound, bound) for _ in range(r - 1)) for _ in range(n)]


def micro(r: int, n: int, repeat: int, bound: int):
    rng = random.Random(0)
    xs, ys = _tuples(r, n, bound, rng), _tuples(r, n, bound, rng)
    longs = [tuple(rng.randint(-bound, bound) for _ in range(2 * r)) for _ in range(n)]
    cases = {
        "cyc_mul": lambda k: [k.cyc_mul(a, b, r) for a, b in zip(xs, ys)],
        "cyc_fold": lambda k: [k.cyc_fold(a, r) for a in longs],
        "cyc_content": lambda k: [k.cyc_content(a) for a in xs],
    }
    rows = []
    for name, fn in cases.items():
        if _ckernels is not None:
            assert fn(_ckernels) == fn(_pykernels), f"{name}: backends disagree"
        tp = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=repeat))
        tc = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=repeat)) if _ckernels else None
        rows.append((name, tp, tc))
    return rows


def e2e(r: int):
    out = {}
    for pure in ("1", "0"):
        env = dict(os.environ, QLATTICE_PURE=pure)
        res = subprocess.run([sys.executable, "-c", E2E.format(r=r)], env=env,
                             capture_output=True, text=True, check=True)
        backend, secs = res.stdout.split()
        out[backend] = float(secs)
    return out


def main():
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--r", type=int, default=7)
    p.add_argument("--n", type=int, default=20000, help="operations per micro benchmark")
    p.add_argument("--bound", type=int, default=1000, help="coefficient magnitude")
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--e2e-r", type=int, default=5)
    p.add_argument("--no-e2e", action="store_true")
    args = p.parse_args()

    print(f"micro benchmarks: r={args.r}, n={args.n}, |coeff| <= {args.bound}")
    print(f"{'kernel':<12} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for name, tp, tc in micro(args.r, args.n, args.repeat, args.bound):
        if tc is None:
            print(f"{name:<12} {tp:11.4f} {'n/a':>11} {'n/a':>8}")
        else:
            print(f"{name:<12} {tp:11.4f} {tc:11.4f} {tp / tc:7.2f}x")

    if not args.no_e2e:
        res = e2e(args.e2e_r)
        print(f"\nend to end (Schroedinger integrality g <= 2, HKL integrality g = 1, r={args.e2e_r}):")
        for backend, secs in sorted(res.items()):
            print(f"  {backend:<8} {secs:8.3f} s")
        if "cython" in res and "python" in res:
            print(f"  speedup  {res['python'] / res['cython']:7.2f}x")


if __name__ == "__main__":
    main()
