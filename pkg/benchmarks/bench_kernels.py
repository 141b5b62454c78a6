"""Compiled vs pure-Python kernels.

Micro: the dict kernels on random sparse Laurent polynomials.
Macro: one relation suite run in a subprocess per backend, so the import-time
selection is what gets measured.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--type A2]
"""

import argparse
import os
import random
import subprocess
import sys
import timeit
from fractions import Fraction

from affhecke import _kernel_py

try:
    from affhecke import _kernel_c
except ImportError:
    _kernel_c = None


def random_poly(rng, nvars, nterms, span=6):
    out = {}
    while len(out) < nterms:
        e = tuple(rng.randint(-span, span) for _ in range(nvars))
        c = rng.randint(-9, 9) or 1
        out[e] = c if rng.random() < 0.7 else Fraction(c, rng.randint(2, 5))
    return out


def micro(repeat):
    rng = random.Random(0)
    a, b = random_poly(rng, 3, 40), random_poly(rng, 3, 40)
    e = (1, -2, 3)
    cases = {
        "add": lambda k: k.add(a, b),
        "sub": lambda k: k.sub(a, b),
        "scale": lambda k: k.scale(a, Fraction(3, 7)),
        "shift": lambda k: k.shift(a, e, 5),
        "mul": lambda k: k.mul(a, b),
        "axpy": lambda k: k.axpy(dict(a), b, -2, e),
    }
    backends = [("python", _kernel_py)] + ([("cython", _kernel_c)] if _kernel_c else [])
    print(f"{'kernel':8} " + " ".join(f"{name:>12}" for name, _ in backends) + "   speedup")
    for name, fn in cases.items():
        times = []
        for _, mod in backends:
            n = 200 if name == "mul" else 5000
            t = min(timeit.repeat(lambda: fn(mod), number=n, repeat=repeat)) / n
            times.append(t)
        cols = " ".join(f"{t * 1e6:10.2f}us" for t in times)
        speed = f"{times[0] / times[1]:8.2f}x" if len(times) == 2 else "       -"
        print(f"{name:8} {cols} {speed}")


MACRO = """
import time
from affhecke import BACKEND
from affhecke.rootsys import build_root_system
from affhecke.qring import MultiplicityParams
from affhecke.heckeops import verify_relations
rs = build_root_system({label!r})
t = time.perf_counter()
res = verify_relations(rs, MultiplicityParams.formal(rs), reps=("difference", "integral"), seeds=(1, 2), L=3)
assert all(r.passed for r in res)
print(BACKEND, time.perf_counter() - t)
"""


def macro(label):
    print(f"\nrelation suite {label}, formal q, seeds 1-2, L=3")
    results = {}
    for pure in ("1", "0"):
        env = dict(os.environ, AFFHECKE_PURE_PYTHON=pure)
        out = subprocess.run([sys.executable, "-c", MACRO.format(label=label)], env=env,
                             capture_output=True, text=True, check=True).stdout.split()
        results[out[0]] = float(out[1])
        print(f"  {out[0]:8} {float(out[1]):8.2f}s")
    if len(results) == 2:
        print(f"  speedup  {results['python'] / results['cython']:8.2f}x")


def main():
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--type", default="B2")
    ap.add_argument("--skip-macro", action="store_true")
    args = ap.parse_args()
    if _kernel_c is None:
        print("compiled extension not built; only the Python kernels are timed")
    micro(args.repeat)
    if not args.skip_macro:
        macro(args.type)


if __name__ == "__main__":
    main()
