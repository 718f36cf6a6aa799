import networkx as nx
import pytest
from hypothesis import given, settings

from conftest import graphs
from oracles import from_nx, nx_distance_matrix, to_nx

from distspec.graph import (
    DisconnectedGraph, Graph, Graph6Error, GraphError, complement, complete, connected_components,
    copies, cycle, diameter, disjoint_union, distance_matrix, empty, induced_subgraph, join,
    parse_graph6, path, relabel, to_graph6,
)


def test_rejects_bad_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))
    with pytest.raises(GraphError):
        Graph(1, (1,))
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(1, 1)])


def test_small_graph6_codes():
    assert to_graph6(complete(2)) == "A_"
    assert to_graph6(empty(2)) == "A?"
    star = parse_graph6("D?{")
    assert star.degree(4) == 4 and star.num_edges == 4


@settings(max_examples=200, deadline=None)
@given(graphs(min_n=1, max_n=20))
def test_graph6_matches_networkx(g):
    code = to_graph6(g)
    assert code == nx.to_graph6_bytes(to_nx(g), header=False).decode().strip()
    assert parse_graph6(code) == g


def test_long_header_roundtrip():
    g = cycle(70)
    code = to_graph6(g)
    assert code[0] == "~"
    assert parse_graph6(code) == g
    assert from_nx(nx.from_graph6_bytes(code.encode())) == g


def test_header_prefix_and_padding_ignored():
    assert parse_graph6(">>graph6<<A_") == complete(2)
    # padding bits after the last edge bit carry no meaning
    assert parse_graph6("Bw") == parse_graph6("B{")


@pytest.mark.parametrize("bad", ["", "A", "A__", "A\x20", "~??", "~??@" + "?" * 10, "~?A?"])
def test_graph6_errors(bad):
    with pytest.raises(Graph6Error):
        parse_graph6(bad)


def test_constructors():
    assert complete(4).num_edges == 6
    assert path(4).edges() == [(0, 1), (1, 2), (2, 3)]
    assert cycle(5).is_connected() and all(cycle(5).degree(v) == 2 for v in range(5))
    k33 = join(empty(3), empty(3))
    assert k33.num_edges == 9
    assert disjoint_union(complete(3), complete(2)).num_edges == 4
    assert copies(complete(2), 3).n == 6
    assert complement(complement(cycle(5))) == cycle(5)
    assert connected_components(copies(complete(2), 2)) == [[0, 1], [2, 3]]
    assert induced_subgraph(path(4), [1, 2, 3]) == path(3)
    assert relabel(path(3), [1, 0, 2]).edges() == [(0, 1), (0, 2)]


@settings(max_examples=100, deadline=None)
@given(graphs(max_n=10, connected=True))
def test_distances_match_networkx(g):
    d = distance_matrix(g)
    assert d.rows() == nx_distance_matrix(g)
    assert diameter(g) == (nx.diameter(to_nx(g)) if g.n > 1 else 0)


def test_distance_matrix_needs_connected():
    with pytest.raises(DisconnectedGraph):
        distance_matrix(empty(2))


def test_distance_matrix_helpers():
    d = distance_matrix(path(3))
    assert d[0, 2] == 2
    assert d.shifted(1) == [[1, 1, 2], [1, 1, 1], [2, 1, 1]]
    assert d.principal([0, 2]) == [[0, 2], [2, 0]]
    assert d.max() == 2
