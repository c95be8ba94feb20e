"""Head-to-head timing of the pure and compiled phase-1 kernels.

Runs the same deterministic problem battery through both backends and
prints a speedup table.  Both implementations are imported directly, so
one process measures both regardless of which backend the package
selected at import time.  Results are asserted identical while timing,
so the benchmark doubles as a coarse equivalence check.

Usage:
    python benchmarks/bench_simplex.py [--repeats N] [--seed S]
"""

import argparse
import random
import time

from tverlab.kernels import simplex_py

try:
    from tverlab.kernels import _speed
except ImportError:
    _speed = None

# (rows, cols) shapes typical of the library's feasibility subproblems:
# a common-point LP on pieces in R^d has d+pieces rows and one column
# per point, and the hyperplane disjuncts stay in the same range.
SHAPES = ((4, 8), (6, 14), (9, 24), (12, 40), (16, 64))


def make_problem(rng, nrows, ncols):
    """Random integer system; rows are scaled so rhs is nonnegative."""
    data = [[rng.randint(-9, 9) for _ in range(ncols)] for _ in range(nrows)]
    if rng.random() < 0.5:
        # plant a solution so roughly half the battery is feasible
        x = [rng.randint(0, 4) for _ in range(ncols)]
        rhs = [sum(a * v for a, v in zip(row, x)) for row in data]
    else:
        rhs = [rng.randint(0, 30) for _ in range(nrows)]
    for i in range(nrows):
        if rhs[i] < 0:
            rhs[i] = -rhs[i]
            data[i] = [-a for a in data[i]]
    return data, rhs


def run_battery(kernel, problems):
    start = time.perf_counter()
    results = []
    for nrows, ncols, data, rhs in problems:
        results.append(
            kernel.phase1(nrows, ncols, [row[:] for row in data], list(rhs))
        )
    return time.perf_counter() - start, results


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeats", type=int, default=40, help="problems per shape")
    parser.add_argument("--seed", type=int, default=12345)
    args = parser.parse_args()

    if _speed is None:
        print("compiled kernel not built; showing pure timings only")

    print(f"{'shape':>10} {'problems':>9} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    total_pure = total_fast = 0.0
    for nrows, ncols in SHAPES:
        rng = random.Random(args.seed)
        problems = [
            (nrows, ncols, *make_problem(rng, nrows, ncols))
            for _ in range(args.repeats)
        ]
        shape = f"{nrows}x{ncols}"
        pure_time, pure_results = run_battery(simplex_py, problems)
        total_pure += pure_time
        if _speed is None:
            print(f"{shape:>10} {len(problems):>9} {pure_time:>9.3f}s {'-':>10} {'-':>8}")
            continue
        fast_time, fast_results = run_battery(_speed, problems)
        total_fast += fast_time
        if pure_results != fast_results:
            raise SystemExit("kernel outputs diverged; benchmark aborted")
        print(
            f"{shape:>10} {len(problems):>9} {pure_time:>9.3f}s "
            f"{fast_time:>9.3f}s {pure_time / fast_time:>7.2f}x"
        )
    if _speed is not None:
        print(
            f"{'total':>10} {'':>9} {total_pure:>9.3f}s {total_fast:>9.3f}s "
            f"{total_pure / total_fast:>7.2f}x"
        )
        print("(set TVERLAB_PURE_KERNEL=1 to force the pure kernel package-wide)")


if __name__ == "__main__":
    main()
