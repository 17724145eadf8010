"""Dominating set on bipartite graphs reduced to the stress set problem.

Given a bipartite ``G`` with sides ``A = v_1..v_l`` and ``B = v_{l+1}..v_n``
the gadget ``G'`` adds a pendant path ``v_i - a_i - b_i`` to every vertex,
joins ``a_i`` to an apex ``c`` for ``v_i`` in ``A`` and to an apex ``d`` for
``v_i`` in ``B``, and finally joins ``c`` with ``d``.  ``G`` has a dominating
set of size ``k`` exactly when ``G'`` has a stress set of size ``k + n``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations

from .graph import Graph, GraphError, VertexSet, two_coloring, vertex_set
from .solve import PairMasks, stress_number_exact


class NotBipartiteError(GraphError):
    pass


class RoleKind(str, enum.Enum):
    ORIGINAL = "ORIGINAL"
    A_PENDANT = "A_PENDANT"
    B_PENDANT = "B_PENDANT"
    APEX_C = "APEX_C"
    APEX_D = "APEX_D"


@dataclass(frozen=True)
class Role:
    kind: RoleKind
    index: int | None = None   # 1-based position i of v_i

    def __str__(self) -> str:
        return self.kind.value if self.index is None else f"{self.kind.value}({self.index})"


@dataclass(frozen=True)
class ReductionInstance:
    source: Graph
    side_a: VertexSet
    side_b: VertexSet
    order: tuple[int, ...]      # source ids of v_1..v_n
    gadget: Graph
    roles: tuple[Role, ...]     # per gadget vertex

    @property
    def k_shift(self) -> int:
        return self.source.n

    def original(self, i: int) -> int:
        return i - 1

    def a(self, i: int) -> int:
        return self.source.n + i - 1

    def b(self, i: int) -> int:
        return 2 * self.source.n + i - 1

    @property
    def c(self) -> int:
        return 3 * self.source.n

    @property
    def d(self) -> int:
        return 3 * self.source.n + 1

    def gadget_id(self, source_vertex: int) -> int:
        return self.order.index(source_vertex)

    def roles_json(self) -> dict:
        return {
            "roles": {self.gadget.labels[x]: str(r) for x, r in enumerate(self.roles)},
            "k_shift": self.k_shift,
        }


def _fresh(label: str, taken: set[str]) -> str:
    while label in taken:
        label += "'"
    taken.add(label)
    return label


def build_reduction(g: Graph) -> ReductionInstance:
    """Construct the gadget.

    Gadget ids: ``0..n-1`` are ``v_1..v_n`` (side A first, each side in
    ascending source id), then ``a_1..a_n``, ``b_1..b_n``, ``c``, ``d``.
    The BFS 2-coloring puts the smallest vertex of every component in A.
    """
    color = two_coloring(g)
    if color is None:
        raise NotBipartiteError("source graph is not bipartite")
    side_a = tuple(v for v in range(g.n) if color[v] == 0)
    side_b = tuple(v for v in range(g.n) if color[v] == 1)
    order = side_a + side_b
    n, ell = g.n, len(side_a)
    pos = {v: i for i, v in enumerate(order)}

    taken = set(g.labels)
    labels = [g.labels[v] for v in order]
    labels += [_fresh(f"a{i}", taken) for i in range(1, n + 1)]
    labels += [_fresh(f"b{i}", taken) for i in range(1, n + 1)]
    labels += [_fresh("c", taken), _fresh("d", taken)]
    c, d = 3 * n, 3 * n + 1

    edges = [(pos[u], pos[v]) for u, v in g.edges()]
    edges.append((c, d))
    for i in range(n):
        a_i, b_i = n + i, 2 * n + i
        edges += [(i, a_i), (a_i, b_i), (a_i, c if i < ell else d)]

    roles = [Role(RoleKind.ORIGINAL, i) for i in range(1, n + 1)]
    roles += [Role(RoleKind.A_PENDANT, i) for i in range(1, n + 1)]
    roles += [Role(RoleKind.B_PENDANT, i) for i in range(1, n + 1)]
    roles += [Role(RoleKind.APEX_C), Role(RoleKind.APEX_D)]
    return ReductionInstance(g, side_a, side_b, order, Graph.from_edges(labels, edges), tuple(roles))


def gadget_bipartition(inst: ReductionInstance) -> tuple[VertexSet, VertexSet]:
    """The two sides ``A'`` and ``B'`` of the gadget."""
    n, ell = inst.source.n, len(inst.side_a)
    a_side = list(range(ell)) + [inst.c]
    a_side += [inst.b(i) for i in range(1, ell + 1)] + [inst.a(i) for i in range(ell + 1, n + 1)]
    b_side = list(range(ell, n)) + [inst.d]
    b_side += [inst.a(i) for i in range(1, ell + 1)] + [inst.b(i) for i in range(ell + 1, n + 1)]
    return vertex_set(a_side), vertex_set(b_side)


def _closed_neighborhoods(g: Graph) -> list[int]:
    out = []
    for v in range(g.n):
        m = 1 << v
        for w in g.adjacency[v]:
            m |= 1 << w
        out.append(m)
    return out


def is_dominating(g: Graph, members) -> bool:
    closed = _closed_neighborhoods(g)
    m = 0
    for v in members:
        m |= closed[v]
    return m == (1 << g.n) - 1


def minimum_dominating_set(g: Graph, cap: int = 16) -> VertexSet:
    """Lexicographically least minimum dominating set, by subset enumeration."""
    if g.n > cap:
        raise GraphError(f"domination oracle capped at n={cap}, got n={g.n}")
    closed = _closed_neighborhoods(g)
    full = (1 << g.n) - 1
    for size in range(g.n + 1):
        for combo in combinations(range(g.n), size):
            m = 0
            for v in combo:
                m |= closed[v]
            if m == full:
                return combo
    raise AssertionError("unreachable")


def dominating_number_exact(g: Graph, cap: int = 16) -> int:
    return len(minimum_dominating_set(g, cap))


def forward_witness(inst: ReductionInstance, dominating) -> VertexSet:
    """Gadget vertex set ``D ∪ {b_1..b_n}`` for a dominating set ``D`` of the source."""
    n = inst.source.n
    return vertex_set([inst.gadget_id(v) for v in dominating] + [inst.b(i) for i in range(1, n + 1)])


def witness_is_stress_set(inst: ReductionInstance, dominating, masks: PairMasks | None = None) -> bool:
    masks = masks or PairMasks.of(inst.gadget)
    return masks.closure(forward_witness(inst, dominating)) == masks.full


@dataclass(frozen=True)
class ReductionCheck:
    gamma: int
    sn_gadget: int
    n: int
    consistent: bool
    dominating_set: VertexSet
    stress_set: VertexSet

    def to_json_obj(self, inst: ReductionInstance) -> dict:
        return {
            "gamma": self.gamma,
            "sn_gadget": self.sn_gadget,
            "n": self.n,
            "consistent": self.consistent,
            "dominating_set": inst.source.names(self.dominating_set),
            "stress_set": inst.gadget.names(self.stress_set),
        }


def verify_reduction(g: Graph, cap: int = 16) -> ReductionCheck:
    """Compare the minima: ``sn(G') == gamma(G) + n``."""
    inst = build_reduction(g)
    dom = minimum_dominating_set(g, cap)
    report = stress_number_exact(inst.gadget)
    return ReductionCheck(
        gamma=len(dom),
        sn_gadget=report.optimum,
        n=g.n,
        consistent=report.optimum == len(dom) + g.n,
        dominating_set=dom,
        stress_set=report.witness,
    )
