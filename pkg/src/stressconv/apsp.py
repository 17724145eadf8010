"""All-pairs hop distances and exact shortest-path counts.

One breadth-first search per source counts shortest paths alongside
distances.  Counts live in an int64 array when they fit; if any count would
overflow, the whole table is recomputed with Python integers (``wide``).
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .graph import Graph, GraphError

UNREACHABLE = -1


@dataclass(frozen=True)
class ApspTables:
    n: int
    dist: np.ndarray    # int64, UNREACHABLE for disconnected pairs
    sigma: np.ndarray   # int64, or object dtype holding Python ints when wide
    wide: bool = False

    def distance(self, u: int, v: int) -> int:
        return int(self.dist[u, v])

    def count(self, u: int, v: int) -> int:
        return int(self.sigma[u, v])

    def connected(self, u: int, v: int) -> bool:
        return self.dist[u, v] != UNREACHABLE

    def check(self, *vertices: int) -> None:
        for v in vertices:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex id {v} out of range for n={self.n}")

    def to_json_obj(self) -> dict:
        return {
            "dist": self.dist.tolist(),
            "sigma": [[str(int(x)) for x in row] for row in self.sigma],
        }

    def dumps(self) -> str:
        return json.dumps(self.to_json_obj())


def csr(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    indptr = np.zeros(g.n + 1, dtype=np.int64)
    indptr[1:] = np.cumsum([len(a) for a in g.adjacency])
    indices = np.fromiter((w for a in g.adjacency for w in a), dtype=np.int64, count=int(indptr[-1]))
    return indptr, indices


def _wide_counts(g: Graph) -> tuple[np.ndarray, np.ndarray]:
    n = g.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int64)
    sigma = np.zeros((n, n), dtype=object)
    for s in range(n):
        d = [-1] * n
        c = [0] * n
        d[s], c[s] = 0, 1
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if d[y] == -1:
                    d[y] = d[x] + 1
                    queue.append(y)
                if d[y] == d[x] + 1:
                    c[y] += c[x]
        dist[s] = d
        sigma[s] = c
    return dist, sigma


def compute_apsp(g: Graph, backend: str | None = None, force_wide: bool = False) -> ApspTables:
    """Distances and shortest-path counts for every ordered pair."""
    if not force_wide:
        bfs, _ = _kernels.kernels(backend)
        indptr, indices = csr(g)
        dist, sigma, overflow = bfs(indptr, indices, g.n)
        if not overflow:
            return ApspTables(g.n, dist, sigma)
    dist, sigma = _wide_counts(g)
    return ApspTables(g.n, dist, sigma, wide=True)


def vertex_stress(t: ApspTables, u: int, v: int, x: int) -> int:
    """Number of shortest u,v-paths passing through ``x``."""
    t.check(u, v, x)
    d = t.dist
    if d[u, v] == UNREACHABLE or d[u, x] == UNREACHABLE or d[x, v] == UNREACHABLE:
        return 0
    if d[u, x] + d[x, v] != d[u, v]:
        return 0
    return int(t.sigma[u, x]) * int(t.sigma[x, v])
