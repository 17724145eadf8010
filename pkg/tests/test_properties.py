"""Property checks over hypothesis-generated graphs."""

from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import brute_stress_interval
from stressconv.apsp import compute_apsp
from stressconv.graph import Graph, dumps, format_edge_list, is_connected, loads, parse_edge_list
from stressconv.solve import naive_sn_oracle, stress_hull_number_exact, stress_number_exact
from stressconv.stress import (
    StressTable,
    extreme_vertices,
    is_stress_convex,
    stress_closure,
    stress_hull,
    stress_interval,
    stress_interval_via_cut_vertices,
)


@st.composite
def graphs(draw, min_n=1, max_n=9, connected=False):
    n = draw(st.integers(min_n, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    if connected:
        # a random spanning tree keeps every draw connected
        parents = [draw(st.integers(0, i - 1)) for i in range(1, n)]
        chosen = set(chosen) | {(p, i) for i, p in enumerate(parents, start=1)}
    return Graph.from_edges(n, sorted(chosen))


@settings(max_examples=150, deadline=None)
@given(graphs())
def test_serialisation_round_trips(g):
    assert parse_edge_list(format_edge_list(g)) == g
    assert loads(dumps(g)) == g


@settings(max_examples=150, deadline=None)
@given(graphs(max_n=7))
def test_interval_against_path_enumeration(g):
    t = compute_apsp(g)
    for u, v in combinations(range(g.n), 2):
        assert stress_interval(t, u, v) == brute_stress_interval(g, u, v)
        if t.connected(u, v):
            assert stress_interval(t, u, v) == stress_interval_via_cut_vertices(g, t, u, v)


@settings(max_examples=100, deadline=None)
@given(graphs(min_n=2, max_n=12, connected=True), st.data())
def test_hull_laws(g, data):
    t = compute_apsp(g)
    U = data.draw(st.sets(st.integers(0, g.n - 1), min_size=1))
    hull = stress_hull(t, U)
    assert set(U) <= set(stress_closure(t, U)) <= set(hull)
    assert is_stress_convex(t, hull)
    assert stress_hull(t, hull) == hull


@settings(max_examples=60, deadline=None)
@given(graphs(min_n=1, max_n=9, connected=True))
def test_solver_chain(g):
    assert is_connected(g)
    sn = stress_number_exact(g).optimum
    sh = stress_hull_number_exact(g).optimum
    assert len(extreme_vertices(g)) <= sh <= sn
    assert sn == naive_sn_oracle(g)


@settings(max_examples=60, deadline=None)
@given(graphs(max_n=16))
def test_numpy_table_matches_intervals(g):
    t = compute_apsp(g)
    a = StressTable(t, "numpy")
    for u in range(g.n):
        for v in range(g.n):
            assert a.interval(u, v) == stress_interval(t, u, v)
