"""Time the witness search on the example matrices, compiled vs pure Python.

    python benchmarks/bench_witness.py [--bound 64] [--repeat 3]
"""
import argparse
import time

from nashcheck import witness
from nashcheck.fixtures import NAMED
from nashcheck.model import IntersectionMatrix, canonical_vector


def time_one(A, C, bound, pruning, backend, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        report = witness.cross_validate(A, C, bound, pruning, backend)
        best = min(best, time.perf_counter() - t0)
    return best, report.mismatches


def main(argv=None):
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--bound", type=int, default=64)
    p.add_argument("--repeat", type=int, default=3)
    p.add_argument("--rows-bound", type=int, default=12, help="bound for the slower partial-sum pruning")
    args = p.parse_args(argv)

    backends = ["python"] + (["cython"] if witness.BACKEND == "cython" else [])
    if len(backends) == 1:
        print("compiled kernel not built; timing the Python backend only")
    header = f"{'matrix':<22}{'pruning':<11}{'bound':>6}" + "".join(f"{b:>12}" for b in backends)
    if len(backends) == 2:
        header += f"{'speedup':>10}"
    print(header)
    for name, rows in NAMED.items():
        A = IntersectionMatrix(rows)
        C = canonical_vector(A)
        for pruning, bound in (("propagate", args.bound), ("rows", args.rows_bound)):
            times = [time_one(A, C, bound, pruning, b, args.repeat)[0] for b in backends]
            line = f"{name:<22}{pruning:<11}{bound:>6}" + "".join(f"{t * 1000:>10.1f}ms" for t in times)
            if len(times) == 2:
                line += f"{times[0] / times[1]:>9.1f}x"
            print(line)


if __name__ == "__main__":
    main()
