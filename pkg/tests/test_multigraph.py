import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from supercolor import Multigraph, induced_undirected_subgraph


def recount_degree(g, v):
    # independent recount straight off the edge list
    return sum(1 for e in g.edge_ids() for x in g.endpoints(e) if x == v)


def test_degree_isolated_vertex():
    g = Multigraph(2, [])
    assert g.degree(0) == 0
    assert g.degree(1) == 0


def test_degree_triangle(triangle):
    for v in range(3):
        assert triangle.degree(v) == recount_degree(triangle, v) == 2


def test_degree_shannon(shannon):
    for v in range(3):
        assert shannon.degree(v) == recount_degree(shannon, v) == 4


def test_degree_invalid_vertex(triangle):
    with pytest.raises(ValueError):
        triangle.degree(3)
    with pytest.raises(ValueError):
        triangle.degree(-1)


def test_multiplicity_at_simple_triangle(triangle):
    assert all(triangle.multiplicity_at(v) == 1 for v in range(3))


def test_multiplicity_at_shannon(shannon):
    assert all(shannon.multiplicity_at(v) == 2 for v in range(3))


def test_multiplicity_at_mixed_star():
    # three parallel edges to one leaf plus a single edge to another
    g = Multigraph(3, [(0, 1), (0, 1), (0, 1), (0, 2)])
    assert g.multiplicity_at(0) == 3
    assert g.multiplicity_at(1) == 3
    assert g.multiplicity_at(2) == 1
    assert g.multiplicity_at(0) <= g.degree(0)


def test_graph_multiplicity_and_max_degree():
    edgeless = Multigraph(4, [])
    assert (edgeless.multiplicity(), edgeless.max_degree()) == (0, 0)
    path = Multigraph(3, [(0, 1), (1, 2)])
    assert (path.multiplicity(), path.max_degree()) == (1, 2)


def test_graph_multiplicity_shannon(shannon):
    assert (shannon.multiplicity(), shannon.max_degree()) == (2, 4)


def test_is_stable(triangle):
    assert triangle.is_stable([])
    assert triangle.is_stable([0])
    assert not triangle.is_stable([0, 1])
    assert not triangle.is_stable([0, 1, 2])


def test_self_loop_rejected():
    with pytest.raises(ValueError, match="self-loop"):
        Multigraph(2, [(1, 1)])


def test_endpoints_stable_ids(shannon):
    assert [shannon.endpoints(e) for e in shannon.edge_ids()] == \
        [(0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)]


def test_induced_subgraph_identity(triangle):
    view = induced_undirected_subgraph(triangle)
    assert view.edge_ids() == (0, 1, 2)
    assert view.degree(0) == 2


def test_induced_subgraph_pair(triangle):
    view = induced_undirected_subgraph(triangle, w=[0, 1])
    assert view.edge_ids() == (0,)
    assert view.endpoints(0) == (0, 1)
    assert view.degree(2) == 0


def test_induced_subgraph_single_vertex(triangle):
    view = induced_undirected_subgraph(triangle, w=[0])
    assert view.edge_ids() == ()


def test_induced_subgraph_drops_edges_keeps_ids(shannon):
    view = induced_undirected_subgraph(shannon, oriented=[0, 2, 4])
    assert view.edge_ids() == (1, 3, 5)
    assert view.endpoints(3) == (1, 2)
    with pytest.raises(ValueError):
        view.endpoints(0)
    assert view.degree(0) == 2
    assert view.multiplicity_at(0) == 1


edges_strategy = st.integers(2, 7).flatmap(
    lambda n: st.tuples(
        st.just(n),
        st.lists(
            st.tuples(st.integers(0, n - 1), st.integers(0, n - 1)).filter(lambda e: e[0] != e[1]),
            max_size=20,
        ),
    )
)


@given(edges_strategy)
@settings(max_examples=150)
def test_degree_sum_is_twice_edge_count(n_edges):
    n, edges = n_edges
    g = Multigraph(n, edges)
    assert sum(g.degree(v) for v in g.vertices()) == 2 * g.edge_count


@given(edges_strategy)
@settings(max_examples=150)
def test_multiplicity_relations(n_edges):
    n, edges = n_edges
    g = Multigraph(n, edges)
    for v in g.vertices():
        assert g.multiplicity_at(v) <= g.degree(v)
    assert g.multiplicity() == max((g.multiplicity_at(v) for v in g.vertices()), default=0)


@given(edges_strategy, st.lists(st.integers(0, 6), max_size=5))
@settings(max_examples=150)
def test_is_stable_matches_direct_scan(n_edges, raw):
    n, edges = n_edges
    g = Multigraph(n, edges)
    s = {v for v in raw if v < n}
    spans = any(a in s and b in s for a, b in edges)
    assert g.is_stable(s) == (not spans)
