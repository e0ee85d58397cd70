"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N] [--quick]

Each kernel runs on identical inputs in both backends; outputs are compared
before timing so a speedup never hides a disagreement.
"""

import argparse
import timeit

import numpy as np

from tutte_galois import _pykernels

try:
    from tutte_galois import _ckernels
except ImportError:
    _ckernels = None


def complete_edges(n):
    return [(i, j) for j in range(n) for i in range(j)]


def cases(quick: bool):
    k6 = complete_edges(6)
    k7_minus = complete_edges(7)[:20]
    yield "rank table, K6 (15 edges)", lambda k: k.graphic_rank_table(6, k6)
    yield "rank table, 20 edges on 7 vertices", lambda k: k.graphic_rank_table(7, k7_minus)
    yield "canonical reps, n=6, min degree 2", lambda k: k.canonical_reps(6, 2)
    yield "biconnectivity of all 2^15 graphs on 6 vertices", \
        lambda k: sum(k.graph_predicate(6, m, "biconnected") for m in range(1 << 15))
    yield "oracle forms, n=5", lambda k: k.oracle_forms(5, "biconnected")
    if not quick:
        yield "canonical reps, n=7, min degree 2", lambda k: k.canonical_reps(7, 2)
        yield "oracle forms, n=6", lambda k: k.oracle_forms(6, "biconnected")


def same(a, b) -> bool:
    if isinstance(a, np.ndarray) or isinstance(b, np.ndarray):
        return np.array_equal(np.asarray(a), np.asarray(b))
    return list(a) == list(b) if hasattr(a, "__iter__") else a == b


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the slowest fallback cases")
    args = parser.parse_args()
    if _ckernels is None:
        raise SystemExit("compiled extension not built; run `pip install --no-build-isolation -e .`")

    print(f"{'kernel':<50} {'python':>10} {'compiled':>10} {'speedup':>9}")
    for name, fn in cases(args.quick):
        if not same(fn(_pykernels), fn(_ckernels)):
            raise SystemExit(f"backends disagree on {name}")
        t_py = min(timeit.repeat(lambda: fn(_pykernels), number=1, repeat=args.repeat))
        t_c = min(timeit.repeat(lambda: fn(_ckernels), number=1, repeat=args.repeat))
        print(f"{name:<50} {t_py:>9.4f}s {t_c:>9.4f}s {t_py / t_c:>8.1f}x")


if __name__ == "__main__":
    main()
