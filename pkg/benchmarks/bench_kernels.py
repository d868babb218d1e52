"""Compare the compiled and pure-Python kernels on representative workloads.

    python benchmarks/bench_kernels.py [--repeat N]
"""
import argparse
import time

import numpy as np

from skewcodes import kernels
from skewcodes.codes import _fp_basis
from skewcodes.example5 import find_component
from skewcodes.fields import FieldCtx
from skewcodes.skewpoly import FqDomain, x_pow_minus_one


def _best(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def workloads():
    F9 = FieldCtx(3, 2)
    F3 = FieldCtx(3, 1)
    c20, _, _ = find_component(F3, 20, 15, 2)
    basis20 = _fp_basis(F3, c20.linear_code().basis)
    rng = np.random.default_rng(0)
    basis12 = rng.integers(0, 3, size=(12, 24))
    f5 = np.array(x_pow_minus_one(5, FqDomain(F9, 1)).raw, dtype=np.int64)
    twist5 = np.stack([F9.frobenius_table(k) for k in range(6)])
    f6 = np.array(x_pow_minus_one(6, FqDomain(F9, 1)).raw, dtype=np.int64)
    twist6 = np.stack([F9.frobenius_table(k) for k in range(7)])
    return {
        "min_weight, cyclic [20,15] over F_3":
            lambda k: k.min_weight(basis20, F3.add_table, F3.digit_array, 3),
        "span_words 3^12 words, n=24":
            lambda k: k.span_words(basis12, F3.add_table, F3.digit_array, 3),
        "divisor scan F_9, n=5":
            lambda k: [k.right_divisor_tails(f5, d, F9.sub_table, F9.mul_table, twist5) for d in range(6)],
        "divisor scan F_9, n=6":
            lambda k: [k.right_divisor_tails(f6, d, F9.sub_table, F9.mul_table, twist6) for d in range(7)],
    }


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    backs = kernels.available_backends()
    names = sorted(backs)
    print(f"{'workload':44}" + "".join(f"{n:>12}" for n in names) + ("     speedup" if len(names) > 1 else ""))
    for label, fn in workloads().items():
        t = {n: _best(lambda: fn(backs[n]), args.repeat) for n in names}
        row = f"{label:44}" + "".join(f"{t[n]:>11.3f}s" for n in names)
        if "cython" in t and "python" in t:
            row += f"{t['python'] / t['cython']:>11.1f}x"
        print(row)


if __name__ == "__main__":
    main()
