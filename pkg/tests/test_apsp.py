import json
from itertools import product

import numpy as np
import pytest

from conftest import connected_corpus, graph
from oracles import shortest_paths
from stressconv import _kernels
from stressconv.apsp import UNREACHABLE, compute_apsp, vertex_stress
from stressconv.families import hypercube, path, random_graph
from stressconv.graph import Graph, GraphError

BACKENDS = ["numba", "numpy"] if _kernels.HAVE_NUMBA else ["numpy"]


def diamond_chain(k):
    """``k`` 4-cycles glued in series: ``2**k`` geodesics end to end."""
    edges = []
    for i in range(k):
        s, a, b, t = 3 * i, 3 * i + 1, 3 * i + 2, 3 * i + 3
        edges += [(s, a), (s, b), (a, t), (b, t)]
    return Graph.from_edges(3 * k + 1, edges)


@pytest.mark.parametrize("backend", BACKENDS)
def test_path_counts_examples(backend, c4):
    t = compute_apsp(path(4), backend=backend)
    assert t.distance(0, 3) == 3 and t.count(0, 3) == 1
    t = compute_apsp(c4, backend=backend)
    assert t.distance(0, 2) == 2 and t.count(0, 2) == 2


@pytest.mark.parametrize("backend", BACKENDS)
def test_cube_antipodes(backend):
    q3 = hypercube(3)
    u, v = q3.index("000"), q3.index("111")
    # enumerated independently: 3! orders of flipping the coordinates
    assert len(shortest_paths(q3, u, v)) == 6
    t = compute_apsp(q3, backend=backend)
    assert (t.distance(u, v), t.count(u, v)) == (3, 6)


@pytest.mark.parametrize("backend", BACKENDS)
def test_matches_path_enumeration(backend):
    for g in connected_corpus(6)[::3]:
        t = compute_apsp(g, backend=backend)
        for u, v in product(range(g.n), repeat=2):
            paths = shortest_paths(g, u, v)
            assert t.count(u, v) == len(paths)
            assert t.distance(u, v) == len(paths[0]) - 1


def test_backends_agree_on_random_graphs():
    if len(BACKENDS) < 2:
        pytest.skip("numba unavailable")
    for seed in range(30):
        g = random_graph("connected", 5 + seed, seed)
        a = compute_apsp(g, backend="numba")
        b = compute_apsp(g, backend="numpy")
        assert np.array_equal(a.dist, b.dist) and np.array_equal(a.sigma, b.sigma)


@pytest.mark.parametrize("backend", BACKENDS)
def test_disconnected_pairs_are_unreachable(backend):
    g = graph("a b\nc d\ne")
    t = compute_apsp(g, backend=backend)
    assert t.distance(0, 2) == UNREACHABLE
    assert t.count(0, 2) == 0
    assert t.distance(4, 4) == 0 and t.count(4, 4) == 1


@pytest.mark.parametrize("backend", BACKENDS)
def test_table_invariants(backend):
    for seed in range(15):
        g = random_graph("bipartite", 9, seed)   # often disconnected
        t = compute_apsp(g, backend=backend)
        assert np.all(np.diag(t.dist) == 0) and np.all(np.diag(t.sigma) == 1)
        assert np.array_equal(t.dist, t.dist.T) and np.array_equal(t.sigma, t.sigma.T)
        assert np.array_equal(t.sigma >= 1, t.dist != UNREACHABLE)
        d = t.dist
        for u, v, w in product(range(g.n), repeat=3):
            if d[u, w] >= 0 and d[w, v] >= 0:
                assert d[u, v] <= d[u, w] + d[w, v]
        # BFS recurrence: counts sum over predecessors on the last layer
        for u, v in product(range(g.n), repeat=2):
            if u != v and d[u, v] > 0:
                preds = [w for w in g.adjacency[v] if d[u, w] == d[u, v] - 1]
                assert t.count(u, v) == sum(t.count(u, w) for w in preds)


def random_tree(seed, n):
    rng = np.random.default_rng(seed)
    return Graph.from_edges(n, [(int(rng.integers(i)), i) for i in range(1, n)])


@pytest.mark.parametrize("seed", range(10))
def test_trees_have_unique_geodesics(seed):
    t = compute_apsp(random_tree(seed, 15))
    assert set(np.unique(t.sigma).tolist()) == {1}


@pytest.mark.parametrize("backend", BACKENDS)
def test_overflow_falls_back_to_exact_integers(backend):
    g = diamond_chain(70)
    t = compute_apsp(g, backend=backend)
    assert t.wide
    assert t.count(0, g.n - 1) == 2 ** 70
    assert t.count(0, 3 * 62) == 2 ** 62
    assert t.distance(0, g.n - 1) == 140


def test_no_overflow_just_below_limit():
    g = diamond_chain(62)
    t = compute_apsp(g)
    assert not t.wide and t.count(0, g.n - 1) == 2 ** 62


def test_vertex_stress_examples(c4):
    p3 = graph("a b\nb c")
    assert vertex_stress(compute_apsp(p3), 0, 2, 1) == 1
    t = compute_apsp(c4)
    assert vertex_stress(t, 0, 2, 1) == 1 and t.count(0, 2) == 2
    assert vertex_stress(t, 0, 2, 0) == vertex_stress(t, 0, 2, 2) == 2
    t = compute_apsp(path(4))
    assert vertex_stress(t, 0, 1, 3) == 0
    with pytest.raises(GraphError):
        vertex_stress(t, 0, 1, 4)


def test_vertex_stress_bounds_on_corpus():
    for g in connected_corpus(6):
        t = compute_apsp(g)
        for u, v, x in product(range(g.n), repeat=3):
            s = vertex_stress(t, u, v, x)
            on_geo = t.dist[u, x] + t.dist[x, v] == t.dist[u, v]
            if on_geo:
                assert 0 < s <= vertex_stress(t, u, v, u) == t.count(u, v)
            else:
                assert s == 0


def test_json_dump_keeps_exact_counts():
    t = compute_apsp(diamond_chain(66))
    obj = json.loads(t.dumps())
    assert obj["sigma"][0][-1] == str(2 ** 66)
    assert obj["dist"][0][-1] == 132
