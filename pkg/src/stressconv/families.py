"""Named graph families, graph products and seeded random instances."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import product

import numpy as np

from .graph import Graph, GraphError, connected_components

RNG_ALGORITHM = "numpy.PCG64"


class Family(str, enum.Enum):
    PATH = "path"
    CYCLE = "cycle"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete_bipartite"
    HYPERCUBE = "hypercube"
    STAR = "star"
    GAP_CONSTRUCTION = "gap"


# minimum value of each positional parameter
_PARAMS = {
    Family.PATH: (1,),
    Family.CYCLE: (3,),
    Family.COMPLETE: (1,),
    Family.COMPLETE_BIPARTITE: (1, 1),
    Family.HYPERCUBE: (0,),
    Family.STAR: (1,),
    Family.GAP_CONSTRUCTION: (2, 3),
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    params: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        lows = _PARAMS[self.family]
        if len(self.params) != len(lows):
            raise GraphError(f"{self.family.value} takes {len(lows)} parameter(s), got {len(self.params)}")
        for p, lo in zip(self.params, lows):
            if int(p) != p or p < lo:
                raise GraphError(f"{self.family.value}: parameter {p} below minimum {lo}")


def path(n: int) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)], [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)], [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)], [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty(n: int) -> Graph:
    return Graph.from_edges([f"v{i}" for i in range(1, n + 1)], [])


def complete_bipartite(m: int, n: int) -> Graph:
    labels = [f"a{i}" for i in range(1, m + 1)] + [f"b{j}" for j in range(1, n + 1)]
    return Graph.from_edges(labels, [(i, m + j) for i in range(m) for j in range(n)])


def star(n: int) -> Graph:
    """``K_{1,n}`` with center ``c`` and leaves ``l1..ln``."""
    return Graph.from_edges(["c"] + [f"l{i}" for i in range(1, n + 1)], [(0, i) for i in range(1, n + 1)])


def hypercube(d: int) -> Graph:
    n = 1 << d
    labels = [format(x, f"0{d}b") if d else "e" for x in range(n)]
    return Graph.from_edges(labels, [(x, x ^ (1 << b)) for x in range(n) for b in range(d) if x < x ^ (1 << b)])


def gap_construction(n: int, k: int) -> Graph:
    """Subdivided star ``v - m_i - l_i`` plus ``k`` extra length-3 paths ``v - x - y - l_i`` per leaf.

    Labels: ``v``, ``m{i}``, ``l{i}``, and ``x{i}_{j}`` / ``y{i}_{j}`` for the
    interior vertices next to ``v`` / next to ``l{i}``.
    """
    if n < 2 or k < 3:
        raise GraphError("gap construction requires n >= 2 and k >= 3")
    labels = ["v"]
    edges = []

    def add(label: str) -> int:
        labels.append(label)
        return len(labels) - 1

    for i in range(1, n + 1):
        mid = add(f"m{i}")
        leaf = add(f"l{i}")
        edges += [(0, mid), (mid, leaf)]
        for j in range(1, k + 1):
            x = add(f"x{i}_{j}")
            y = add(f"y{i}_{j}")
            edges += [(0, x), (x, y), (y, leaf)]
    return Graph.from_edges(labels, edges)


def generate(spec: FamilySpec) -> Graph:
    builders = {
        Family.PATH: path,
        Family.CYCLE: cycle,
        Family.COMPLETE: complete,
        Family.COMPLETE_BIPARTITE: complete_bipartite,
        Family.HYPERCUBE: hypercube,
        Family.STAR: star,
        Family.GAP_CONSTRUCTION: gap_construction,
    }
    return builders[spec.family](*spec.params)


# -- products -----------------------------------------------------------------

def _pair_labels(g: Graph, h: Graph) -> list[str]:
    return [f"({a},{b})" for a, b in product(g.labels, h.labels)]


def cartesian_product(g: Graph, h: Graph) -> Graph:
    """``g □ h``; vertex ``(a, b)`` has id ``a * h.n + b``."""
    nh = h.n
    edges = []
    for a, b in product(range(g.n), range(nh)):
        edges += [(a * nh + b, a2 * nh + b) for a2 in g.adjacency[a] if a < a2]
        edges += [(a * nh + b, a * nh + b2) for b2 in h.adjacency[b] if b < b2]
    return Graph.from_edges(_pair_labels(g, h), edges)


def lexicographic_product(g: Graph, h: Graph) -> Graph:
    """``g ∘ h``: adjacent when the first coordinates are adjacent, or equal
    with adjacent second coordinates."""
    nh = h.n
    edges = []
    for a, b in product(range(g.n), range(nh)):
        edges += [(a * nh + b, a * nh + b2) for b2 in h.adjacency[b] if b < b2]
        edges += [(a * nh + b, a2 * nh + b2) for a2 in g.adjacency[a] if a < a2 for b2 in range(nh)]
    return Graph.from_edges(_pair_labels(g, h), edges)


def join_graphs(g: Graph, h: Graph) -> Graph:
    """Disjoint union of ``g`` and ``h`` plus every edge between them.

    Labels are prefixed with ``g.`` / ``h.`` to keep them distinct.
    """
    off = g.n
    labels = [f"g.{x}" for x in g.labels] + [f"h.{x}" for x in h.labels]
    edges = list(g.edges()) + [(off + u, off + v) for u, v in h.edges()]
    edges += [(u, off + v) for u in range(g.n) for v in range(h.n)]
    return Graph.from_edges(labels, edges)


# -- random instances -----------------------------------------------------------

class RandomKind(str, enum.Enum):
    CONNECTED = "connected"
    BIPARTITE = "bipartite"
    SPLIT = "split"
    BLOCK = "block"


def rng_for(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed & 0xFFFFFFFFFFFFFFFF))


def random_graph(kind: RandomKind | str, n: int, seed: int, p: float | None = None) -> Graph:
    """Reproducible random graph of the requested class.

    ``p`` is the edge probability for the free edges; when omitted it is
    drawn uniformly from [0.1, 0.9] using the same generator.  SPLIT and
    BLOCK instances are always connected.
    """
    kind = RandomKind(kind)
    if n < 1:
        raise GraphError("random graphs need n >= 1")
    rng = rng_for(seed)
    if p is None:
        p = float(rng.uniform(0.1, 0.9))
    if kind is RandomKind.CONNECTED:
        edges = _gnp(rng, n, p)
        edges += _bridge_components(rng, n, edges)
    elif kind is RandomKind.BIPARTITE:
        side = rng.integers(0, 2, size=n)
        edges = [(i, j) for i in range(n) for j in range(i + 1, n)
                 if side[i] != side[j] and rng.random() < p]
    elif kind is RandomKind.SPLIT:
        size = int(rng.integers(1, n + 1))
        clique = [int(x) for x in rng.permutation(n)[:size]]
        in_clique = set(clique)
        edges = [(a, b) for i, a in enumerate(clique) for b in clique[i + 1:]]
        for v in range(n):
            if v in in_clique:
                continue
            nbrs = [c for c in clique if rng.random() < p]
            if not nbrs:
                nbrs = [clique[int(rng.integers(len(clique)))]]
            edges += [(v, c) for c in nbrs]
    else:
        edges = _random_block_edges(rng, n)
    return Graph.from_edges(n, edges)


def _gnp(rng: np.random.Generator, n: int, p: float) -> list[tuple[int, int]]:
    return [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]


def _bridge_components(rng, n, edges):
    comps = connected_components(Graph.from_edges(n, edges))
    extra = []
    for prev, comp in zip(comps, comps[1:]):
        a = prev[int(rng.integers(len(prev)))]
        b = comp[int(rng.integers(len(comp)))]
        extra.append((a, b))
    return extra


def _random_block_edges(rng, n):
    # grow a tree of cliques: each new clique hangs off an existing vertex
    edges = []
    size = int(rng.integers(1, min(n, 4) + 1))
    members = list(range(size))
    edges += [(a, b) for a in members for b in members if a < b]
    nxt = size
    while nxt < n:
        anchor = int(rng.integers(nxt))
        grow = int(rng.integers(1, min(n - nxt, 4) + 1))
        block = [anchor] + list(range(nxt, nxt + grow))
        edges += [(a, b) for i, a in enumerate(block) for b in block[i + 1:]]
        nxt += grow
    return edges
