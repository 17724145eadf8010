"""Stress intervals and the convexity they induce.

``S(u, v)`` holds the vertices lying on *every* shortest u,v-path; a vertex
``i`` qualifies exactly when it sits on some geodesic and the paths through
it account for all of them::

    d(u,i) + d(i,v) == d(u,v)   and   sigma(u,i) * sigma(i,v) == sigma(u,v)
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable

import numpy as np

from . import _kernels
from .apsp import UNREACHABLE, ApspTables, compute_apsp
from .graph import (
    Graph,
    GraphError,
    VertexSet,
    articulation_points,
    induced_subgraph,
    vertex_set,
)


class NotConvexError(GraphError):
    pass


def _members(mask: np.ndarray) -> VertexSet:
    return tuple(int(i) for i in np.flatnonzero(mask))


def geodesic_interval(t: ApspTables, u: int, v: int) -> VertexSet:
    """Vertices on at least one shortest u,v-path."""
    t.check(u, v)
    duv = t.dist[u, v]
    if duv == UNREACHABLE:
        return ()
    du, dv = t.dist[u], t.dist[:, v]
    return _members((du >= 0) & (dv >= 0) & (du + dv == duv))


def stress_interval(t: ApspTables, u: int, v: int) -> VertexSet:
    """Vertices on every shortest u,v-path; empty for disconnected pairs."""
    t.check(u, v)
    duv = t.dist[u, v]
    if duv == UNREACHABLE:
        return ()
    du, dv = t.dist[u], t.dist[:, v]
    on_geo = (du >= 0) & (dv >= 0) & (du + dv == duv)
    idx = np.flatnonzero(on_geo)
    suv = t.sigma[u, v]
    # restricted to geodesic vertices the products cannot exceed sigma(u,v)
    through = t.sigma[u, idx] * t.sigma[idx, v]
    return tuple(int(i) for i in idx[through == suv])


def stress_interval_via_cut_vertices(g: Graph, t: ApspTables, u: int, v: int) -> VertexSet:
    """``{u, v}`` plus the cut vertices of the subgraph induced by ``I(u, v)``.

    Independent of path counts; only defined for connected pairs.
    """
    t.check(u, v)
    if t.dist[u, v] == UNREACHABLE:
        raise GraphError(f"vertices {u} and {v} are not connected")
    interval = geodesic_interval(t, u, v)
    h, id_map = induced_subgraph(g, interval)
    cuts = {id_map[c] for c in articulation_points(h)}
    return vertex_set(cuts | {u, v})


@dataclass(frozen=True)
class IntervalQuery:
    u: int
    v: int
    result: VertexSet
    ordering: tuple[int, ...] | None


def interval_query(t: ApspTables, u: int, v: int) -> IntervalQuery:
    """``S(u, v)`` together with the order every geodesic visits it in."""
    result = stress_interval(t, u, v)
    if not result:
        return IntervalQuery(u, v, result, None)
    ordering = tuple(sorted(result, key=lambda x: t.dist[u, x]))
    return IntervalQuery(u, v, result, ordering)


def stress_closure(t: ApspTables, members: Iterable[int]) -> VertexSet:
    """Union of ``S(u, v)`` over all pairs of the set, ``S(u, u) = {u}`` included."""
    members = vertex_set(members)
    t.check(*members)
    out = set(members)
    for u, v in combinations(members, 2):
        out.update(stress_interval(t, u, v))
    return vertex_set(out)


def is_stress_convex(t: ApspTables, members: Iterable[int]) -> bool:
    members = vertex_set(members)
    return set(stress_closure(t, members)) <= set(members)


def stress_hull(t: ApspTables, members: Iterable[int]) -> VertexSet:
    """Smallest s-convex superset: iterate the closure to its fixpoint."""
    current = vertex_set(members)
    while True:
        nxt = stress_closure(t, current)
        if nxt == current:
            return current
        current = nxt


def is_stress_set(t: ApspTables, members: Iterable[int]) -> bool:
    return len(stress_closure(t, members)) == t.n


def _extreme(g: Graph, inside: set[int], v: int) -> bool:
    # d_{G-v}(x, y) <= 2 iff x, y adjacent or they share a neighbor other than v
    nbrs = [x for x in g.adjacency[v] if x in inside]
    for i, x in enumerate(nbrs):
        nx_ = set(g.adjacency[x])
        for y in nbrs[i + 1:]:
            if y in nx_:
                continue
            if not any(w != v and w in nx_ for w in g.adjacency[y]):
                return False
    return True


def extreme_vertices_unchecked(g: Graph, members: Iterable[int] | None = None) -> VertexSet:
    """Extreme-vertex test without verifying that the set is s-convex."""
    inside = set(range(g.n)) if members is None else set(g.check_set(members))
    return vertex_set(v for v in inside if _extreme(g, inside, v))


def extreme_vertices(g: Graph, members: Iterable[int] | None = None, t: ApspTables | None = None) -> VertexSet:
    """s-extreme vertices of an s-convex set (the whole graph by default).

    ``v`` is extreme in ``K`` when any two of its neighbors inside ``K`` stay
    within distance two once ``v`` is deleted from ``g``.
    """
    if members is None:
        return extreme_vertices_unchecked(g)
    members = g.check_set(members)
    if t is None:
        t = compute_apsp(g)
    if not is_stress_convex(t, members):
        raise NotConvexError("vertex set is not s-convex")
    return extreme_vertices_unchecked(g, members)


class StressTable:
    """Every ``S(u, v)`` at once, as packed bitsets.

    Built by the active numeric backend; wide (Python integer) path counts
    always go through the numpy kernel.
    """

    def __init__(self, t: ApspTables, backend: str | None = None):
        self.n = t.n
        if t.wide:
            self.bits = _kernels.stress_table_numpy(t.dist, t.sigma)
        else:
            _, kernel = _kernels.kernels(backend)
            self.bits = kernel(t.dist, t.sigma)

    @classmethod
    def of(cls, g: Graph, backend: str | None = None) -> "StressTable":
        return cls(compute_apsp(g, backend=backend), backend=backend)

    def contains(self, u: int, v: int, x: int) -> bool:
        return bool((self.bits[u, v, x >> 3] >> (x & 7)) & 1)

    def interval(self, u: int, v: int) -> VertexSet:
        flags = np.unpackbits(self.bits[u, v], bitorder="little", count=self.n)
        return _members(flags)

    def mask(self, u: int, v: int) -> int:
        """``S(u, v)`` as a Python integer bitmask (bit ``i`` is vertex ``i``)."""
        return int.from_bytes(self.bits[u, v].tobytes(), "little")

    def masks(self) -> list[list[int]]:
        n = self.n
        raw = self.bits.reshape(n * n, -1)
        flat = [int.from_bytes(row.tobytes(), "little") for row in raw]
        return [flat[u * n:(u + 1) * n] for u in range(n)]


def all_stress_intervals(g: Graph, backend: str | None = None) -> StressTable:
    return StressTable.of(g, backend=backend)
