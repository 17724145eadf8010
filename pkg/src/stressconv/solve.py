"""Stress number and stress hull number solvers.

The exact solvers precompute every ``S(u, v)`` as an integer bitmask, force
the s-extreme vertices into the candidate set (they belong to every stress
set and every stress hull set), and enumerate the remaining vertices in
lexicographic order by increasing size.  The first hit is therefore the
lexicographically least optimum.
"""

from __future__ import annotations

import enum
import time
import warnings
from dataclasses import dataclass, field
from itertools import combinations

from .graph import (
    Graph,
    GraphError,
    VertexSet,
    articulation_points,
    biconnected_blocks,
    induced_subgraph,
    is_clique,
    is_connected,
    vertex_set,
)
from .apsp import compute_apsp
from .stress import StressTable, extreme_vertices_unchecked, geodesic_interval


class Quantity(str, enum.Enum):
    STRESS_NUMBER = "stress_number"
    STRESS_HULL_NUMBER = "stress_hull_number"


class DisconnectedGraphError(GraphError):
    code = "SN_UNDEFINED_DISCONNECTED"

    def __init__(self, what: str = "stress number"):
        super().__init__(f"{self.code}: {what} is only defined for connected graphs")


class CapExceededError(GraphError):
    pass


class NotInClassError(GraphError):
    pass


@dataclass
class SolveReport:
    quantity: Quantity
    optimum: int
    witness: VertexSet
    forced: VertexSet
    nodes_explored: int = 0
    elapsed: float = 0.0
    method: str = "exact"
    notes: list[str] = field(default_factory=list)

    def to_json_obj(self, g: Graph) -> dict:
        return {
            "quantity": self.quantity.value,
            "optimum": self.optimum,
            "witness": g.names(self.witness),
            "forced": g.names(self.forced),
            "nodes_explored": self.nodes_explored,
            "method": self.method,
        }


def _bits(members) -> int:
    out = 0
    for v in members:
        out |= 1 << v
    return out


def _members(mask: int) -> VertexSet:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return tuple(out)


class PairMasks:
    """``S(u, v)`` for all pairs as Python integer bitmasks."""

    def __init__(self, masks: list[list[int]]):
        self.rows = masks
        self.n = len(masks)
        self.full = (1 << self.n) - 1

    @classmethod
    def of(cls, g: Graph, table: StressTable | None = None) -> "PairMasks":
        if table is None:
            table = StressTable.of(g)
        return cls(table.masks())

    def closure(self, members) -> int:
        members = list(members)
        out = _bits(members)
        rows = self.rows
        for i, u in enumerate(members):
            row = rows[u]
            for v in members[i + 1:]:
                out |= row[v]
        return out

    def hull(self, start: int) -> int:
        """Fixpoint of the closure above ``start``, grown from new vertices only."""
        rows = self.rows
        cur = start
        pending = list(_members(start))
        seen: list[int] = []
        while pending:
            v = pending.pop()
            row = rows[v]
            add = 0
            for w in seen:
                add |= row[w]
            seen.append(v)
            add &= ~cur
            if add:
                cur |= add
                if cur == self.full:
                    return cur
                pending.extend(_members(add))
        return cur


def _require_connected(g: Graph, what: str) -> None:
    if g.n == 0 or not is_connected(g):
        raise DisconnectedGraphError(what)


def _search(g: Graph, quantity: Quantity, table: StressTable | None = None) -> SolveReport:
    start_time = time.perf_counter()
    what = "stress number" if quantity is Quantity.STRESS_NUMBER else "stress hull number"
    _require_connected(g, what)
    n = g.n
    forced = extreme_vertices_unchecked(g)
    if n == 1:
        return SolveReport(quantity, 1, (0,), forced, 1, time.perf_counter() - start_time)
    pm = PairMasks.of(g, table)
    rows, full = pm.rows, pm.full
    forced_set = set(forced)
    others = [v for v in range(n) if v not in forced_set]
    base = pm.closure(forced)
    # what each free vertex adds when joined with the forced core
    with_core = []
    for e in range(n):
        m = 1 << e
        for f in forced:
            m |= rows[f][e]
        with_core.append(m)

    nodes = 0
    for size in range(max(len(forced), 2), n + 1):
        extra = size - len(forced)
        if extra > len(others):
            break
        for combo in combinations(others, extra):
            nodes += 1
            mask = base
            for i, a in enumerate(combo):
                mask |= with_core[a]
                row = rows[a]
                for b in combo[i + 1:]:
                    mask |= row[b]
            if quantity is Quantity.STRESS_HULL_NUMBER and mask != full:
                mask = pm.hull(mask)
            if mask == full:
                witness = vertex_set(forced + combo)
                return SolveReport(quantity, size, witness, forced, nodes,
                                   time.perf_counter() - start_time)
    raise AssertionError("the full vertex set is always a stress set")


def stress_number_exact(g: Graph, table: StressTable | None = None) -> SolveReport:
    """Minimum size of a vertex set whose stress closure is everything."""
    return _search(g, Quantity.STRESS_NUMBER, table)


def stress_hull_number_exact(g: Graph, table: StressTable | None = None) -> SolveReport:
    """Minimum size of a vertex set whose s-convex hull is everything."""
    return _search(g, Quantity.STRESS_HULL_NUMBER, table)


def naive_sn_oracle(g: Graph, cap: int = 12) -> int:
    """Brute-force stress number for testing.

    Intervals come from the cut-vertex description (cut vertices of the
    subgraph induced by the geodesic interval), never from path counts, and
    every subset is tried in size order without forcing.
    """
    _require_connected(g, "stress number")
    if g.n > cap:
        raise CapExceededError(f"naive oracle capped at n={cap}, got n={g.n}")
    n = g.n
    t = compute_apsp(g)
    rows = [[0] * n for _ in range(n)]
    for u in range(n):
        rows[u][u] = 1 << u
        for v in range(u + 1, n):
            interval = geodesic_interval(t, u, v)
            h, id_map = induced_subgraph(g, interval)
            m = (1 << u) | (1 << v)
            for c in articulation_points(h):
                m |= 1 << id_map[c]
            rows[u][v] = rows[v][u] = m
    full = (1 << n) - 1
    for size in range(1, n + 1):
        for combo in combinations(range(n), size):
            mask = 0
            for a in combo:
                for b in combo:
                    mask |= rows[a][b]
            if mask == full:
                return size
    raise AssertionError("unreachable")


# -- special classes ------------------------------------------------------------

@dataclass(frozen=True)
class SpecialClass:
    is_split: bool
    clique: VertexSet | None
    independent: VertexSet | None
    is_block: bool
    blocks: list[VertexSet]


def split_partition(g: Graph) -> tuple[VertexSet, VertexSet] | None:
    """Clique / independent-set partition via the degree-sequence test.

    When the independent side is non-empty, a clique vertex with no neighbor
    on that side is moved across, so e.g. a star reports its center alone as
    the clique.
    """
    n = g.n
    if n == 0:
        return (), ()
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    deg = [g.degree(v) for v in order]
    m = max(i for i in range(1, n + 1) if deg[i - 1] >= i - 1)
    if sum(deg[:m]) != m * (m - 1) + sum(deg[m:]):
        return None
    clique = sorted(order[:m])
    independent = set(order[m:])
    if independent:
        for x in clique:
            if not any(w in independent for w in g.adjacency[x]):
                clique.remove(x)
                independent.add(x)
                break
    return tuple(clique), vertex_set(independent)


def classify_special(g: Graph) -> SpecialClass:
    part = split_partition(g)
    blocks = biconnected_blocks(g)
    is_block = all(is_clique(g, b) for b in blocks)
    return SpecialClass(
        is_split=part is not None,
        clique=part[0] if part else None,
        independent=part[1] if part else None,
        is_block=is_block,
        blocks=blocks,
    )


def _split_case(g: Graph, clique: VertexSet, independent: VertexSet) -> str:
    if len(clique) == 1:
        attached = [a for a in independent if g.has_edge(a, clique[0])]
        return "single clique vertex, <2 attached" if len(attached) < 2 else "single clique vertex, >=2 attached"
    return "clique of size >= 2"


def sn_split_graph(g: Graph) -> SolveReport:
    """Stress number of a connected split graph: the s-extreme vertices form
    an optimal stress set, so the answer is their count."""
    start_time = time.perf_counter()
    _require_connected(g, "stress number")
    info = classify_special(g)
    if not info.is_split:
        raise NotInClassError("graph is not a split graph")
    ext = extreme_vertices_unchecked(g)
    case = _split_case(g, info.clique, info.independent)
    pm = PairMasks.of(g)
    if len(ext) == g.n or pm.closure(ext) == pm.full:
        return SolveReport(Quantity.STRESS_NUMBER, len(ext), ext, ext, 1,
                           time.perf_counter() - start_time, method="split", notes=[case])
    warnings.warn("extreme vertices of split graph failed to form a stress set; using exact search")
    report = stress_number_exact(g)
    report.notes.append("split fallback")
    return report


def sn_block_graph(g: Graph) -> SolveReport:
    """Stress number of a connected block graph: ``n`` minus its cut vertices."""
    start_time = time.perf_counter()
    _require_connected(g, "stress number")
    blocks = biconnected_blocks(g)
    if not all(is_clique(g, b) for b in blocks):
        raise NotInClassError("graph is not a block graph")
    cuts = set(articulation_points(g))
    witness = tuple(v for v in range(g.n) if v not in cuts)
    return SolveReport(Quantity.STRESS_NUMBER, len(witness), witness, witness, 0,
                       time.perf_counter() - start_time, method="block")
