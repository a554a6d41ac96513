import pytest
from conftest import graphs
from hypothesis import given, settings

from fracpoly.graph import (
    Graph,
    GraphError,
    GraphFormatError,
    all_graphs,
    connected_components,
    family,
    from_edge_list,
    induced_subgraph,
    is_bipartite,
    parse_family,
    to_edge_list,
)


def test_parse_triangle():
    g = from_edge_list("3 3\n1 2\n2 3\n1 3")
    assert g == family("cycle", 3)


def test_parse_single_edge():
    g = from_edge_list("2 1\n1 2\n")
    assert g.d == 2 and g.edges == {(1, 2)}


def test_parse_deduplicates():
    g = from_edge_list("2 2\n1 2\n2 1")
    assert g.edges == {(1, 2)}


def test_isolated_vertex_reported():
    with pytest.raises(GraphError, match="vertex 3 is isolated"):
        from_edge_list("3 1\n1 2")


@pytest.mark.parametrize("text", ["", "3\n1 2", "2 1\n1 x", "2 2\n1 2", "2 1\n1 2 3"])
def test_malformed(text):
    with pytest.raises(GraphFormatError):
        from_edge_list(text)


@pytest.mark.parametrize("text", ["2 1\n1 1", "2 1\n1 3", "2 1\n0 2"])
def test_domain_errors(text):
    with pytest.raises(GraphError):
        from_edge_list(text)


def test_round_trip():
    g = family("complete_bipartite", 2, 3)
    assert from_edge_list(to_edge_list(g)) == g


def test_families():
    assert family("complete", 3).edges == family("cycle", 3).edges
    c5 = family("cycle", 5)
    assert c5.d == 5 and len(c5.edges) == 5
    k22 = parse_family("complete_bipartite:2,2")
    assert k22.d == 4 and len(k22.edges) == 4 and is_bipartite(k22)[0]
    assert family("path", 4).edges == {(1, 2), (2, 3), (3, 4)}


@pytest.mark.parametrize("spec", ["path:1", "cycle:2", "complete:1", "star:3", "cycle", "cycle:a"])
def test_bad_family(spec):
    with pytest.raises(ValueError):
        parse_family(spec)


def test_bipartite_examples():
    assert is_bipartite(family("cycle", 4))[0]
    ok, cyc = is_bipartite(family("cycle", 3))
    assert not ok and cyc == (1, 2, 3)
    ok, cyc = is_bipartite(family("cycle", 9))
    assert not ok and len(cyc) == 9


@pytest.mark.parametrize("d", range(3, 13))
def test_cycle_bipartite_iff_even(d):
    assert is_bipartite(family("cycle", d))[0] == (d % 2 == 0)


def _check_odd_witness(g, cyc):
    assert len(cyc) % 2 == 1
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        assert (min(a, b), max(a, b)) in g.edges


@given(graphs(max_d=7))
@settings(max_examples=150, deadline=None)
def test_bipartite_witnesses(g):
    ok, w = is_bipartite(g)
    if ok:
        assert all(w[i] != w[j] for i, j in g.edges)
    else:
        _check_odd_witness(g, w)
        assert len(set(w)) == len(w)


def test_shortest_odd_cycle_in_larger_graph():
    # a 5-cycle 1..5 plus a triangle 5,6,7: the triangle is shortest
    g = Graph.from_edges(7, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (5, 6), (6, 7), (5, 7)])
    assert is_bipartite(g)[1] == (5, 6, 7)


def test_components():
    assert connected_components(family("cycle", 3)) == [{1, 2, 3}]
    two = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert connected_components(two) == [{1, 2}, {3, 4}]
    assert len(connected_components(family("complete_bipartite", 2, 2))) == 1


@given(graphs(max_d=7))
@settings(max_examples=100, deadline=None)
def test_components_partition(g):
    parts = connected_components(g)
    assert sum(len(p) for p in parts) == g.d
    assert set().union(*parts) == set(g.vertices)
    assert [min(p) for p in parts] == sorted(min(p) for p in parts)


def test_induced():
    verts, edges = induced_subgraph(family("cycle", 5), {1, 2, 3})
    assert edges == {(1, 2), (2, 3)}
    verts, edges = induced_subgraph(family("cycle", 3), {1})
    assert verts == {1} and not edges
    verts, edges = induced_subgraph(family("cycle", 3), set())
    assert not verts and not edges


def test_all_graphs_counts():
    # labelled graphs without isolated vertices
    assert [sum(1 for _ in all_graphs(d)) for d in range(2, 6)] == [1, 4, 41, 768]
