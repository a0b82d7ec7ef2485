import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import standard_corpus
from inducedmatch.extremal import gen_complete, gen_cycle, gen_path, gen_random_bounded, gen_t_star
from inducedmatch.graph import (DuplicateEdgeError, Graph, GraphError, InducedMatching, MalformedLineError,
                                SelfLoopError, VertexRangeError, conflict_set, delete_vertices,
                                edge_closed_neighborhood, is_induced_matching, is_induced_matching_pairwise,
                                parse_graph, remove_conflict_edges, serialize_graph)


def test_graph_rejects_loops_and_parallels():
    with pytest.raises(GraphError):
        Graph(2, [(0, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph(2, [(0, 2)])


def test_graph_basic_queries():
    g = Graph(4, [(2, 1), (0, 1), (1, 3)])
    assert g.edges == ((1, 2), (0, 1), (1, 3))
    assert g.degree(1) == 3 and g.max_degree == 3
    assert g.neighbors(1) == (0, 2, 3)
    assert g.edge_id(2, 1) == 0
    assert g.components() == [[0, 1, 2, 3]]


def test_edge_closed_neighborhood_examples():
    assert edge_closed_neighborhood(gen_path(2), 0) == {0}
    assert edge_closed_neighborhood(gen_path(3), 0) == {0, 1}
    k4 = gen_complete(4)
    assert all(len(edge_closed_neighborhood(k4, e)) == 5 for e in range(6))
    with pytest.raises(GraphError):
        edge_closed_neighborhood(k4, 6)


def test_conflict_set_examples():
    assert conflict_set(gen_path(3), 0) == {0, 1}
    p5 = gen_path(5)
    assert conflict_set(p5, p5.edge_id(1, 2)) == {0, 1, 2, 3}
    c5 = gen_cycle(5)
    assert all(conflict_set(c5, e) == set(range(5)) for e in range(5))


def test_is_induced_matching_examples():
    two_k2 = Graph(4, [(0, 1), (2, 3)])
    assert is_induced_matching(two_k2, [0, 1])
    c5 = gen_cycle(5)
    assert not any(is_induced_matching(c5, [e, f]) for e in range(5) for f in range(e + 1, 5))
    t = gen_t_star(3)
    leaves = [t.edge_id(i, 3 + i) for i in (1, 2, 3)]
    assert is_induced_matching(t, leaves)


def test_remove_conflict_edges_examples():
    assert remove_conflict_edges(gen_path(3), 0).graph.m == 0
    p5 = gen_path(5)
    red = remove_conflict_edges(p5, 0)
    assert red.graph.n == 5 and red.graph.edges == ((3, 4),)
    assert red.edge_map == (3,)
    assert remove_conflict_edges(gen_cycle(5), 2).graph.m == 0


def test_delete_vertices_examples():
    k4 = gen_complete(4)
    assert delete_vertices(k4, []).graph == k4
    assert delete_vertices(k4, [0]).graph == gen_complete(3)
    red = delete_vertices(gen_t_star(3), [0])
    assert red.graph.m == 3 and red.graph.max_degree == 1
    assert red.vertex_map == tuple(range(1, 7))


def test_parse_examples_and_errors():
    assert parse_graph("p 2 1\n0 1\n") == gen_path(2)
    assert parse_graph("p 3 2\n0 1\n1 2\n") == gen_path(3)
    assert parse_graph("# comment\n0 1  # trailing\n\n1 2\n") == gen_path(3)
    assert parse_graph("p 4 0\n").n == 4
    cases = [("0 1\n0 x\n", MalformedLineError), ("0 1\n1 0\n", DuplicateEdgeError),
             ("3 3\n", SelfLoopError), ("p 2 1\n0 5\n", VertexRangeError), ("0 1 2\n", MalformedLineError),
             ("p 3 2\n0 1\n", MalformedLineError), ("0 -1\n", VertexRangeError)]
    for text, err in cases:
        with pytest.raises(err):
            parse_graph(text)


def test_parse_error_reports_line_number():
    with pytest.raises(DuplicateEdgeError) as info:
        parse_graph("p 3 3\n0 1\n1 2\n2 1\n")
    assert info.value.lineno == 4


def test_serialize_is_canonical():
    g = Graph(4, [(3, 2), (0, 1)])
    text = serialize_graph(g)
    assert text == "p 4 2\n0 1\n2 3\n"
    assert serialize_graph(parse_graph(text)) == text


def test_corpus_invariants():
    for _, g in standard_corpus():
        assert serialize_graph(parse_graph(serialize_graph(g))) == serialize_graph(g)
        for e, (u, v) in enumerate(g.edges):
            delta = edge_closed_neighborhood(g, e)
            assert e in delta <= conflict_set(g, e)
            assert len(delta) == g.degree(u) + g.degree(v) - 1
        if g.m:
            e = g.m // 2
            red = remove_conflict_edges(g, e)
            near = g.closed_neighborhood(g.edges[e])
            assert not any(a in near or b in near for a, b in red.graph.edges)


def test_certify_rejects_bad_matching():
    with pytest.raises(GraphError):
        InducedMatching.certify(gen_path(4), [0, 2])
    assert InducedMatching.certify(gen_path(5), [3, 0]).edges == (0, 3)


@settings(max_examples=150, deadline=None)
@given(st.integers(2, 14), st.integers(1, 4), st.integers(0, 2**32), st.data())
def test_two_induced_checks_agree(n, d, seed, data):
    g = gen_random_bounded(n, d, seed)
    if g.m == 0:
        return
    subset = data.draw(st.sets(st.integers(0, g.m - 1), max_size=4))
    assert is_induced_matching(g, subset) == is_induced_matching_pairwise(g, subset)
