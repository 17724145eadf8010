"""Table 1 reproduction and the all-pairs scaling benchmark."""

from __future__ import annotations

import math
import time
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .apsp import compute_apsp
from .families import (
    RandomKind,
    cartesian_product,
    complete,
    complete_bipartite,
    cycle,
    hypercube,
    path,
    random_graph,
)
from .solve import stress_hull_number_exact, stress_number_exact
from .stress import StressTable


def _row_specs():
    rows = []
    rows += [("path", (n,), lambda n=n: path(n), 2, 2) for n in range(2, 9)]
    rows += [("cycle", (4,), lambda: cycle(4), 4, 4)]
    rows += [("cycle", (n,), lambda n=n: cycle(n), 3, 3) for n in range(5, 10)]
    rows += [("complete", (n,), lambda n=n: complete(n), n, n) for n in range(2, 8)]
    rows += [
        ("complete_bipartite", (m, n), lambda m=m, n=n: complete_bipartite(m, n), m + n, m + n)
        for m in range(2, 5) for n in range(m, 5)
    ]
    rows += [
        ("grid", (m, n), lambda m=m, n=n: cartesian_product(path(m), path(n)), 2 * min(m, n), 4)
        for m in range(2, 5) for n in range(m, 5)
    ]
    rows += [("hypercube", (3,), lambda: hypercube(3), 8, 8)]
    return rows


@dataclass
class Table1Row:
    family: str
    params: tuple[int, ...]
    order: int | None
    sn: int | None
    sh: int | None
    expected_sn: int
    expected_sh: int
    error: str | None = None

    @property
    def match(self) -> bool:
        return self.error is None and self.sn == self.expected_sn and self.sh == self.expected_sh

    def to_json_obj(self) -> dict:
        return {
            "family": self.family,
            "params": list(self.params),
            "order": self.order,
            "sn": self.sn,
            "sh": self.sh,
            "expected_sn": self.expected_sn,
            "expected_sh": self.expected_sh,
            "match": self.match,
            "error": self.error,
        }


def run_table1(families: set[str] | None = None) -> list[Table1Row]:
    """Solve every Table 1 instance; a failing row records its error."""
    out = []
    for family, params, build, exp_sn, exp_sh in _row_specs():
        if families and family not in families:
            continue
        try:
            g = build()
            sn = stress_number_exact(g).optimum
            sh = stress_hull_number_exact(g).optimum
            out.append(Table1Row(family, params, g.n, sn, sh, exp_sn, exp_sh))
        except Exception as exc:  # per-row failure must not abort the table
            out.append(Table1Row(family, params, None, None, None, exp_sn, exp_sh, error=str(exc)))
    return out


# -- benchmark ----------------------------------------------------------------

def bench_graph(n: int, seed: int):
    """Connected random graph with about ``n ln n`` edges."""
    p = min(1.0, 2.0 * math.log(n) / n)
    return random_graph(RandomKind.CONNECTED, n, seed, p=p)


def time_all_intervals(g, backend: str, repeat: int = 3) -> float:
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        StressTable(compute_apsp(g, backend=backend), backend=backend)
        best = min(best, time.perf_counter() - t0)
    return best


def fit_exponent(sizes, seconds) -> float:
    slope, _ = np.polyfit(np.log(sizes), np.log(seconds), 1)
    return float(slope)


def run_bench(sizes=(50, 100, 200, 400), seed: int = 0, backends=None, repeat: int = 3) -> dict:
    """Time APSP plus the full stress table per size and fit ``t ~ n^k``."""
    if backends is None:
        backends = ["numba", "numpy"] if _kernels.HAVE_NUMBA else ["numpy"]
    graphs = [bench_graph(n, seed + i) for i, n in enumerate(sizes)]
    warm = bench_graph(12, seed)
    result = {"sizes": list(sizes), "edges": [g.m for g in graphs], "seed": seed, "backends": {}}
    for backend in backends:
        time_all_intervals(warm, backend, repeat=1)  # JIT compile outside the timings
        seconds = [time_all_intervals(g, backend, repeat) for g in graphs]
        result["backends"][backend] = {
            "seconds": seconds,
            "exponent": fit_exponent(sizes, seconds),
        }
    return result
