"""Compare the compiled and pure-Python Z[i] row reduction kernels.

The inputs are the matrices the package itself reduces while building algebras
and classifying real forms.  They are recorded once, then replayed through each
kernel.  Run with ``python benchmarks/bench_kernel.py [--repeat R]``.
"""

import argparse
import contextlib
import io
import time

from manintriples import _kernel_py, exactlin
from manintriples.cli import main as cli_main

try:
    from manintriples import _kernel
except ImportError:
    _kernel = None

WORKLOADS = {
    "classify-complex A3": ["classify-complex", "A", "3"],
    "classify-complex B2": ["classify-complex", "B", "2"],
    "classify-real su21": ["classify-real", "su21"],
    "classify-real sl3R": ["classify-real", "sl3R"],
}


def record(argv):
    calls = []
    original = exactlin._rref_zi

    def spy(re_rows, im_rows, ncols):
        calls.append(([list(r) for r in re_rows], [list(r) for r in im_rows], ncols))
        return original(re_rows, im_rows, ncols)

    exactlin._rref_zi = spy
    try:
        # the CLI writes its report to stdout; discard it
        with contextlib.redirect_stdout(io.StringIO()):
            cli_main(argv)
    finally:
        exactlin._rref_zi = original
    return calls


def replay(kernel, calls, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        for re_rows, im_rows, ncols in calls:
            kernel.rref_zi(re_rows, im_rows, ncols)
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args(argv)

    print(f"{'workload':<22} {'calls':>7} {'python (s)':>11} {'cython (s)':>11} {'speedup':>8}")
    for label, cli_args in WORKLOADS.items():
        calls = record(cli_args)
        py_t = replay(_kernel_py, calls, args.repeat)
        if _kernel is None:
            print(f"{label:<22} {len(calls):>7} {py_t:>11.4f} {'n/a':>11} {'n/a':>8}")
            continue
        for re_rows, im_rows, ncols in calls[:200]:
            assert _kernel.rref_zi(re_rows, im_rows, ncols) == _kernel_py.rref_zi(re_rows, im_rows, ncols)
        cy_t = replay(_kernel, calls, args.repeat)
        print(f"{label:<22} {len(calls):>7} {py_t:>11.4f} {cy_t:>11.4f} {py_t / cy_t:>7.1f}x")


if __name__ == "__main__":
    main()
