"""Compare the numba and numpy kernels on the all-pairs workload.

    python3 benchmarks/bench_backends.py --sizes 50,100,200,400 --repeat 3

For every size it times the two kernels separately (path-counting BFS and
the bit-packed stress table) and the end-to-end pipeline, then prints the
fitted growth exponent per backend.  Both backends must produce identical
tables; the script checks that before timing.
"""

from __future__ import annotations

import argparse
import json
import time

import numpy as np

from stressconv import _kernels
from stressconv.apsp import csr
from stressconv.report import bench_graph, fit_exponent


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200,400")
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--json", action="store_true", help="print the raw results as JSON")
    args = ap.parse_args()

    sizes = [int(x) for x in args.sizes.split(",")]
    backends = ["numba", "numpy"] if _kernels.HAVE_NUMBA else ["numpy"]
    graphs = [bench_graph(n, args.seed + i) for i, n in enumerate(sizes)]

    # warm the JIT and check agreement on a small instance
    g0 = bench_graph(30, args.seed)
    ip, ix = csr(g0)
    tables = []
    for b in backends:
        bfs, table = _kernels.kernels(b)
        dist, sigma, _ = bfs(ip, ix, g0.n)
        tables.append(table(dist, sigma))
    assert all(np.array_equal(tables[0], t) for t in tables[1:]), "backends disagree"

    results = {}
    for b in backends:
        bfs, table = _kernels.kernels(b)
        rows = []
        for g in graphs:
            ip, ix = csr(g)
            dist, sigma, _ = bfs(ip, ix, g.n)
            t_bfs = best_of(lambda: bfs(ip, ix, g.n), args.repeat)
            t_tab = best_of(lambda: table(dist, sigma), args.repeat)
            rows.append({"n": g.n, "m": g.m, "bfs": t_bfs, "table": t_tab, "total": t_bfs + t_tab})
        results[b] = {
            "rows": rows,
            "exponent": fit_exponent(sizes, [r["total"] for r in rows]),
        }

    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return
    print(f"{'backend':8} {'n':>5} {'m':>6} {'bfs s':>10} {'table s':>10} {'total s':>10}")
    for b, res in results.items():
        for r in res["rows"]:
            print(f"{b:8} {r['n']:5d} {r['m']:6d} {r['bfs']:10.4f} {r['table']:10.4f} {r['total']:10.4f}")
        print(f"{b:8} fitted exponent {res['exponent']:.2f}")
    if len(results) == 2:
        for i, n in enumerate(sizes):
            ratio = results["numpy"]["rows"][i]["total"] / results["numba"]["rows"][i]["total"]
            print(f"n={n}: numba is {ratio:.1f}x faster than numpy")


if __name__ == "__main__":
    main()
