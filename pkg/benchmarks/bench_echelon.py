"""Compare the compiled and pure-Python echelon kernels.

Usage: python benchmarks/bench_echelon.py [--repeat N] [--quick]

Each case feeds the same rows to both builders and checks that they agree
on rank, pivots and the reduced basis before reporting timings.
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from hitcalc.cohit import hit_generators, rank_order
from hitcalc.gf2 import F2Matrix, backends


def hit_rows(n: int, d: int) -> F2Matrix:
    index = {e: c for c, e in enumerate(rank_order(n, d))}
    rows = [[index[t] for t in terms] for _, _, terms in hit_generators(n, d) if terms]
    return F2Matrix.from_sparse(rows, len(index))


def random_rows(rows: int, cols: int, density: float, seed: int = 0) -> F2Matrix:
    rng = np.random.default_rng(seed)
    return F2Matrix.from_dense(rng.random((rows, cols)) < density)


def run(cls, m: F2Matrix):
    t0 = time.perf_counter()
    b = cls(m.cols)
    b.add_dense(m.bits)
    return time.perf_counter() - t0, b


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--quick", action="store_true", help="skip the largest cases")
    args = parser.parse_args()

    impls = backends()
    if "cython" not in impls:
        raise SystemExit("compiled extension not built; run: pip install -e . --no-build-isolation")

    cases = [
        ("hit P^11(4)", lambda: hit_rows(4, 11)),
        ("hit P^15(4)", lambda: hit_rows(4, 15)),
        ("random 1000x1000 p=0.5", lambda: random_rows(1000, 1000, 0.5)),
        ("hit P^17(5)", lambda: hit_rows(5, 17)),
    ]
    if not args.quick:
        cases += [
            ("hit P^26(5)", lambda: hit_rows(5, 26)),
            ("random 3000x3000 p=0.5", lambda: random_rows(3000, 3000, 0.5)),
        ]

    print(f"{'case':<26}{'rows':>8}{'cols':>8}{'rank':>8}{'cython s':>11}{'python s':>11}{'speedup':>9}")
    for name, make in cases:
        m = make()
        best = {}
        outs = {}
        for key in ("cython", "python"):
            times = []
            for _ in range(args.repeat):
                dt, b = run(impls[key], m)
                times.append(dt)
            best[key], outs[key] = min(times), b
        c, p = outs["cython"], outs["python"]
        assert c.rank == p.rank
        assert np.array_equal(c.pivots(), p.pivots())
        assert np.array_equal(c.basis(), p.basis())
        print(
            f"{name:<26}{m.rows:>8}{m.cols:>8}{c.rank:>8}"
            f"{best['cython']:>11.4f}{best['python']:>11.4f}{best['python'] / best['cython']:>8.1f}x"
        )


if __name__ == "__main__":
    main()
