import sys
from functools import lru_cache
from pathlib import Path

import pytest

from stressconv.graph import Graph, parse_edge_list

sys.path.insert(0, str(Path(__file__).parent))

DATA = Path(__file__).parent / "data"


def _from_graph6(line: str) -> Graph:
    import networkx as nx

    G = nx.from_graph6_bytes(line.encode())
    return Graph.from_edges(G.number_of_nodes(), G.edges())


@lru_cache(maxsize=None)
def _corpus() -> tuple[Graph, ...]:
    lines = (DATA / "connected_le8.g6").read_text().split()
    return tuple(_from_graph6(line) for line in lines)


def connected_corpus(max_n: int = 8, min_n: int = 1) -> list[Graph]:
    """All connected graphs on ``min_n..max_n`` vertices, one per isomorphism class."""
    return [g for g in _corpus() if min_n <= g.n <= max_n]


def graph(text: str) -> Graph:
    return parse_edge_list(text)


@pytest.fixture
def c4():
    return graph("x1 x2\nx2 x3\nx3 x4\nx4 x1")


@pytest.fixture
def p4():
    return graph("a b\nb c\nc d")
