"""Graph classes tied to stress intervals."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .apsp import ApspTables, compute_apsp
from .graph import Graph, GraphError, is_connected
from .stress import StressTable, geodesic_interval, stress_interval


def _tables(g: Graph, t: ApspTables | None) -> ApspTables:
    return compute_apsp(g) if t is None else t


def is_s_trivial(g: Graph, t: ApspTables | None = None) -> bool:
    """Every pair at distance two is joined by at least two geodesics."""
    t = _tables(g, t)
    at_two = t.dist == 2
    return bool(np.all(t.sigma[at_two] >= 2))


def is_geodetic(g: Graph, t: ApspTables | None = None) -> bool:
    """At most one shortest path between every pair."""
    t = _tables(g, t)
    return bool(np.all(t.sigma <= 1))


def stress_equals_interval(g: Graph, t: ApspTables | None = None) -> bool:
    """``S(u, v) == I(u, v)`` for every pair of a connected graph."""
    if not is_connected(g):
        raise GraphError("stress_equals_interval requires a connected graph")
    t = _tables(g, t)
    return all(
        stress_interval(t, u, v) == geodesic_interval(t, u, v)
        for u in range(g.n)
        for v in range(u + 1, g.n)
    )


def underlying_graph(g: Graph, table: StressTable | None = None) -> Graph:
    """Same vertices; ``uv`` is an edge exactly when ``|S(u, v)| == 2``."""
    if table is None:
        table = StressTable.of(g)
    sizes = np.unpackbits(table.bits, axis=-1, bitorder="little", count=g.n).sum(axis=-1)
    us, vs = np.nonzero(np.triu(sizes == 2, k=1))
    return Graph.from_edges(g.labels, zip(us.tolist(), vs.tolist()))


@dataclass
class ConvergenceTrace:
    graphs: list[Graph]
    terminated: bool
    cycled: bool = False

    @property
    def steps(self) -> int:
        return len(self.graphs) - 1


def convergence_sequence(g: Graph, max_steps: int | None = None) -> ConvergenceTrace:
    """Iterate the underlying-graph map until a geodetic graph appears.

    Stops early (unterminated) after ``max_steps`` applications, default
    ``n**2``, or when an edge set repeats.
    """
    if max_steps is None:
        max_steps = max(1, g.n * g.n)
    if max_steps < 1:
        raise ValueError("max_steps must be positive")
    graphs = [g]
    seen = {g.edge_set()}
    current = g
    while not is_geodetic(current):
        if len(graphs) > max_steps:
            return ConvergenceTrace(graphs, terminated=False)
        current = underlying_graph(current)
        key = current.edge_set()
        if key in seen:
            return ConvergenceTrace(graphs, terminated=False, cycled=True)
        seen.add(key)
        graphs.append(current)
    return ConvergenceTrace(graphs, terminated=True)
