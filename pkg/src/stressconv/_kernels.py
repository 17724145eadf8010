"""Numeric kernels: all-source BFS path counting and the packed stress table.

Two interchangeable implementations are provided.  The numba versions are
used when numba imports and ``STRESSCONV_DISABLE_NUMBA`` is unset (or "0");
otherwise the pure-numpy versions run.  Both operate on the int64 lane and
report overflow so the caller can redo the work with Python integers.

Distances use -1 for "unreachable".  The stress table is a uint8 array of
shape ``(n, n, ceil(n / 8))`` holding, for every pair ``(u, v)``, the
membership bits of ``S(u, v)`` packed little-endian (vertex ``i`` is bit
``i % 8`` of byte ``i // 8``).
"""

from __future__ import annotations

import os

import numpy as np

INT64_LIMIT = np.iinfo(np.int64).max


def _numba_requested() -> bool:
    return os.environ.get("STRESSCONV_DISABLE_NUMBA", "0").strip().lower() in ("", "0", "false", "no")


try:
    if not _numba_requested():
        raise ImportError("numba disabled by STRESSCONV_DISABLE_NUMBA")
    import numba
except ImportError:
    numba = None

HAVE_NUMBA = numba is not None


# -- pure numpy ---------------------------------------------------------------

def bfs_counts_numpy(indptr: np.ndarray, indices: np.ndarray, n: int):
    """Level-synchronous BFS from every source at once.

    Row ``s`` of the frontier matrix holds path counts to the vertices first
    reached at the current depth; one sparse-free matmul per level advances
    all sources together.  A float64 shadow of each product detects int64
    overflow.
    """
    dist = np.full((n, n), -1, dtype=np.int64)
    sigma = np.zeros((n, n), dtype=np.int64)
    if n == 0:
        return dist, sigma, False
    adj = np.zeros((n, n), dtype=np.int64)
    rows = np.repeat(np.arange(n), np.diff(indptr))
    adj[rows, indices] = 1
    adj_f = adj.astype(np.float64)

    np.fill_diagonal(dist, 0)
    np.fill_diagonal(sigma, 1)
    frontier = np.eye(n, dtype=np.int64)
    depth = 0
    while frontier.any():
        depth += 1
        nxt = frontier @ adj
        shadow = frontier.astype(np.float64) @ adj_f
        # reachability comes from the shadow: a wrapped int64 count can be <= 0
        fresh = (dist == -1) & (shadow > 0)
        if np.any(shadow[fresh] > 2.0 ** 62):
            return dist, sigma, True
        nxt[~fresh] = 0
        dist[fresh] = depth
        sigma[fresh] = nxt[fresh]
        frontier = nxt
    return dist, sigma, False


def stress_table_numpy(dist: np.ndarray, sigma: np.ndarray) -> np.ndarray:
    n = dist.shape[0]
    nbytes = (n + 7) // 8
    table = np.zeros((n, n, nbytes), dtype=np.uint8)
    with np.errstate(over="ignore"):
        for u in range(n):
            du = dist[u]
            # [v, i]: d(u,i) + d(i,v) == d(u,v) with both legs reachable
            on_geo = (du[None, :] + dist) == du[:, None]
            on_geo &= (du[None, :] >= 0) & (dist >= 0) & (du[:, None] >= 0)
            # off-geodesic products may wrap; they are masked out below
            full = (sigma[u][None, :] * sigma) == sigma[u][:, None]
            table[u] = np.packbits(on_geo & full, axis=-1, bitorder="little")
    return table


# -- numba --------------------------------------------------------------------

if HAVE_NUMBA:

    @numba.njit(cache=True, nogil=True)
    def bfs_counts_numba(indptr, indices, n):
        dist = np.full((n, n), -1, dtype=np.int64)
        sigma = np.zeros((n, n), dtype=np.int64)
        queue = np.empty(n, dtype=np.int64)
        overflow = False
        for s in range(n):
            d = dist[s]
            c = sigma[s]
            d[s] = 0
            c[s] = 1
            queue[0] = s
            head = 0
            tail = 1
            while head < tail:
                x = queue[head]
                head += 1
                for k in range(indptr[x], indptr[x + 1]):
                    y = indices[k]
                    if d[y] == -1:
                        d[y] = d[x] + 1
                        queue[tail] = y
                        tail += 1
                    if d[y] == d[x] + 1:
                        if c[y] > INT64_LIMIT - c[x]:
                            overflow = True
                            return dist, sigma, overflow
                        c[y] += c[x]
        return dist, sigma, overflow

    @numba.njit(cache=True, nogil=True)
    def stress_table_numba(dist, sigma):
        n = dist.shape[0]
        nbytes = (n + 7) // 8
        table = np.zeros((n, n, nbytes), dtype=np.uint8)
        for u in range(n):
            for v in range(u, n):
                duv = dist[u, v]
                if duv < 0:
                    continue
                suv = sigma[u, v]
                for i in range(n):
                    dui = dist[u, i]
                    div = dist[i, v]
                    if dui < 0 or div < 0 or dui + div != duv:
                        continue
                    # on a geodesic the product is at most sigma[u, v]
                    if sigma[u, i] * sigma[i, v] == suv:
                        table[u, v, i >> 3] |= np.uint8(1 << (i & 7))
                if v != u:
                    table[v, u, :] = table[u, v, :]
        return table

else:  # pragma: no cover - exercised only without numba
    bfs_counts_numba = None
    stress_table_numba = None


def active_backend() -> str:
    return "numba" if HAVE_NUMBA else "numpy"


def kernels(backend: str | None = None):
    """Return ``(bfs_counts, stress_table)`` for the requested backend."""
    backend = backend or active_backend()
    if backend == "numba":
        if not HAVE_NUMBA:
            raise RuntimeError("numba backend requested but numba is unavailable or disabled")
        return bfs_counts_numba, stress_table_numba
    if backend == "numpy":
        return bfs_counts_numpy, stress_table_numpy
    raise ValueError(f"unknown backend {backend!r}")
