"""Undirected simple graphs with stable labels, plus structural primitives.

Vertices are dense integer ids ``0..n-1``; every id carries an external
string label.  Vertex sets are plain tuples of ids in ascending order.
"""

from __future__ import annotations

import json
import operator
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

VertexSet = tuple[int, ...]


class GraphError(ValueError):
    """Invalid graph construction or query."""


class ParseError(GraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def vertex_set(members: Iterable[int]) -> VertexSet:
    """Canonical form of a collection of vertex ids."""
    return tuple(sorted(set(members)))


@dataclass(frozen=True)
class Graph:
    labels: tuple[str, ...]
    adjacency: tuple[tuple[int, ...], ...]
    _index: dict[str, int] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if len(self.labels) != len(self.adjacency):
            raise GraphError("labels and adjacency differ in length")
        index = {lab: i for i, lab in enumerate(self.labels)}
        if len(index) != len(self.labels):
            raise GraphError("vertex labels must be distinct")
        n = len(self.labels)
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(set(nbrs)):
                raise GraphError(f"adjacency of {v} is not sorted and duplicate-free")
            for w in nbrs:
                if not 0 <= w < n:
                    raise GraphError(f"neighbor id {w} out of range")
                if w == v:
                    raise GraphError(f"self-loop at {self.labels[v]!r}")
        for v, nbrs in enumerate(self.adjacency):
            for w in nbrs:
                if not self.has_edge(w, v):
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(cls, n_or_labels: int | Sequence[str], edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list over ids.

        ``n_or_labels`` is either a vertex count (labels become ``"0".."n-1"``)
        or the label sequence itself.  Duplicate edges collapse; self-loops
        raise.
        """
        if isinstance(n_or_labels, int):
            labels = tuple(str(i) for i in range(n_or_labels))
        else:
            labels = tuple(n_or_labels)
        n = len(labels)
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at {labels[u]!r}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(labels, tuple(tuple(sorted(s)) for s in nbrs))

    @property
    def n(self) -> int:
        return len(self.labels)

    @property
    def m(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adjacency[u]

    def edges(self) -> list[tuple[int, int]]:
        """Edges ``(i, j)`` with ``i < j``, lexicographically sorted."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges())

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise GraphError(f"unknown vertex label {label!r}") from None

    def ids(self, labels: Iterable[str]) -> VertexSet:
        return vertex_set(self.index(lab) for lab in labels)

    def names(self, members: Iterable[int]) -> list[str]:
        return [self.labels[v] for v in members]

    def check_vertex(self, v: int) -> int:
        try:
            v = operator.index(v)
        except TypeError:
            raise GraphError(f"vertex id must be an integer, got {v!r}") from None
        if not 0 <= v < self.n:
            raise GraphError(f"vertex id {v} out of range for n={self.n}")
        return v

    def check_set(self, members: Iterable[int]) -> VertexSet:
        return vertex_set(self.check_vertex(v) for v in members)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# -- text / json formats -----------------------------------------------------

def parse_edge_list(text: str | Iterable[str]) -> Graph:
    """Parse the whitespace-separated edge-list format.

    Each non-blank, non-comment line holds either ``label1 label2`` (an edge)
    or a single ``label`` (a vertex, possibly isolated).  Lines whose first
    non-blank character is ``#`` are comments.  Ids are assigned in order of
    first appearance.
    """
    lines = text.splitlines() if isinstance(text, str) else text
    index: dict[str, int] = {}
    labels: list[str] = []
    edges: list[tuple[int, int]] = []

    def vid(label: str) -> int:
        if label not in index:
            index[label] = len(labels)
            labels.append(label)
        return index[label]

    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            vid(parts[0])
        elif len(parts) == 2:
            a, b = parts
            if a == b:
                raise GraphError(f"line {lineno}: self-loop at {a!r}")
            edges.append((vid(a), vid(b)))
        else:
            raise ParseError(f"expected 1 or 2 labels, got {len(parts)}", lineno)
    return Graph.from_edges(labels, edges)


def format_edge_list(g: Graph) -> str:
    """Serialize in canonical edge-list form.

    Vertices are declared first so that ``parse_edge_list`` reproduces the
    same id assignment, including isolated vertices.
    """
    out = [lab for lab in g.labels]
    out += [f"{g.labels[u]} {g.labels[v]}" for u, v in g.edges()]
    return "\n".join(out) + "\n"


def to_json_obj(g: Graph) -> dict:
    return {"labels": list(g.labels), "edges": [list(e) for e in g.edges()]}


def from_json_obj(obj: dict) -> Graph:
    try:
        labels = [str(lab) for lab in obj["labels"]]
        edges = [(int(u), int(v)) for u, v in obj["edges"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed graph JSON: {exc}") from None
    return Graph.from_edges(labels, edges)


def dumps(g: Graph) -> str:
    return json.dumps(to_json_obj(g), sort_keys=True)


def loads(text: str) -> Graph:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno) from None
    return from_json_obj(obj)


# -- structural primitives ---------------------------------------------------

def induced_subgraph(g: Graph, members: Iterable[int]) -> tuple[Graph, VertexSet]:
    """Return ``(G[U], id_map)`` where ``id_map[new_id] == old_id``."""
    keep = g.check_set(members)
    new_id = {old: new for new, old in enumerate(keep)}
    edges = [
        (new_id[u], new_id[w])
        for u in keep
        for w in g.adjacency[u]
        if w in new_id and u < w
    ]
    return Graph.from_edges([g.labels[v] for v in keep], edges), keep


def remove_vertex(g: Graph, v: int) -> tuple[Graph, VertexSet]:
    v = g.check_vertex(v)
    return induced_subgraph(g, (w for w in range(g.n) if w != v))


def connected_components(g: Graph) -> list[VertexSet]:
    """Components, each sorted, ordered by smallest member."""
    seen = [False] * g.n
    comps = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    comp.append(y)
                    queue.append(y)
        comps.append(tuple(sorted(comp)))
    return comps


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) <= 1


def _lowpoint_dfs(g: Graph):
    """Iterative Hopcroft-Tarjan search.

    Returns ``(cut_vertices, blocks)``; blocks are vertex sets of the
    biconnected components (bridges give 2-vertex blocks, isolated vertices
    give 1-vertex blocks).
    """
    n = g.n
    disc = [-1] * n
    low = [0] * n
    cut = [False] * n
    blocks: list[VertexSet] = []
    timer = 0
    for root in range(n):
        if disc[root] != -1:
            continue
        if not g.adjacency[root]:
            disc[root] = timer
            timer += 1
            blocks.append((root,))
            continue
        disc[root] = low[root] = timer
        timer += 1
        root_children = 0
        edge_stack: list[tuple[int, int]] = []
        # frames: (vertex, parent, next neighbor position)
        stack = [(root, -1, 0)]
        while stack:
            v, parent, pos = stack[-1]
            nbrs = g.adjacency[v]
            if pos < len(nbrs):
                stack[-1] = (v, parent, pos + 1)
                w = nbrs[pos]
                if disc[w] == -1:
                    disc[w] = low[w] = timer
                    timer += 1
                    edge_stack.append((v, w))
                    if v == root:
                        root_children += 1
                    stack.append((w, v, 0))
                elif w != parent and disc[w] < disc[v]:
                    edge_stack.append((v, w))
                    low[v] = min(low[v], disc[w])
                continue
            stack.pop()
            if parent == -1:
                continue
            low[parent] = min(low[parent], low[v])
            if low[v] >= disc[parent]:
                if parent != root:
                    cut[parent] = True
                block = set()
                while True:
                    a, b = edge_stack.pop()
                    block.add(a)
                    block.add(b)
                    if (a, b) == (parent, v):
                        break
                blocks.append(tuple(sorted(block)))
        if root_children > 1:
            cut[root] = True
    return tuple(v for v in range(n) if cut[v]), blocks


def articulation_points(g: Graph) -> VertexSet:
    """Vertices whose removal increases the number of components."""
    return _lowpoint_dfs(g)[0]


def biconnected_blocks(g: Graph) -> list[VertexSet]:
    """Vertex sets of the blocks, sorted by (smallest member, size)."""
    return sorted(_lowpoint_dfs(g)[1])


def is_clique(g: Graph, members: Sequence[int]) -> bool:
    return all(g.degree(v) >= len(members) - 1 for v in members) and all(
        g.has_edge(u, w) for i, u in enumerate(members) for w in members[i + 1:]
    )


def two_coloring(g: Graph) -> list[int] | None:
    """BFS 2-coloring, or None if some component has an odd cycle.

    The smallest vertex of each component gets color 0.
    """
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] != -1:
            continue
        color[s] = 0
        queue = deque([s])
        while queue:
            x = queue.popleft()
            for y in g.adjacency[x]:
                if color[y] == -1:
                    color[y] = 1 - color[x]
                    queue.append(y)
                elif color[y] == color[x]:
                    return None
    return color


def is_bipartite(g: Graph) -> bool:
    return two_coloring(g) is not None


def bfs_distances(g: Graph, source: int) -> list[int]:
    """Hop distances from ``source``; -1 marks unreachable vertices."""
    dist = [-1] * g.n
    dist[source] = 0
    queue = deque([source])
    while queue:
        x = queue.popleft()
        for y in g.adjacency[x]:
            if dist[y] == -1:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist
