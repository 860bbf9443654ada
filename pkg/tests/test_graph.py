import pytest

from mist import (GraphError, ParseError, SpanningTree, make_graph,
                  make_path_cover, make_spanning_tree, parse_graph,
                  pendant_lower_bound, reduce_pendants, restore_pendants,
                  tree_from_path)
from conftest import complete_bipartite, path_graph, star_graph


def test_make_graph_rejects_self_loop():
    with pytest.raises(GraphError):
        make_graph(2, [(0, 0)])


def test_make_graph_rejects_duplicate_edge():
    with pytest.raises(GraphError):
        make_graph(2, [(0, 1), (1, 0)])


def test_make_graph_rejects_out_of_range():
    with pytest.raises(GraphError):
        make_graph(2, [(0, 2)])


def test_make_graph_rejects_disconnected():
    with pytest.raises(GraphError):
        make_graph(4, [(0, 1), (2, 3)])


def test_has_edge():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert g.has_edge(0, 1) and g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert not g.has_edge(1, 1)


def test_parse_roundtrip():
    text = "# a comment\n4 3\n1 2\n2 3\n3 4\n"
    g = parse_graph(text)
    assert g.n == 4 and g.m == 3
    assert parse_graph(g.to_text()).edges == g.edges


def test_parse_errors_carry_line_numbers():
    with pytest.raises(ParseError, match="line 2"):
        parse_graph("2 1\n1 3\n")
    with pytest.raises(ParseError):
        parse_graph("")
    with pytest.raises(ParseError):
        parse_graph("3 2\n1 2\n")   # fewer edges than declared


def test_spanning_tree_internal_count_and_text(p4):
    t = tree_from_path(p4, [0, 1, 2, 3])
    assert t.internal_count == 2
    assert t.leaves() == [0, 3]
    assert t.to_text().splitlines()[0] == "internal 2"


def test_spanning_tree_validate_rejects_cycle(c4):
    bad = SpanningTree(n=4, edges=((0, 1), (1, 2), (0, 2)))
    with pytest.raises(GraphError):
        bad.validate(c4)


def test_spanning_tree_validate_rejects_non_edge(p4):
    bad = SpanningTree(n=4, edges=((0, 1), (1, 2), (0, 3)))
    with pytest.raises(GraphError):
        bad.validate(p4)


def test_path_cover_validation(p4):
    pc = make_path_cover(p4, [[0, 1], [2, 3]])
    assert pc.edge_count == 2 and pc.component_count == 2
    with pytest.raises(GraphError):
        make_path_cover(p4, [[0, 1], [2]])   # vertex 3 uncovered
    with pytest.raises(GraphError):
        make_path_cover(p4, [[0, 2], [1], [3]])   # non-edge step


def test_reduce_pendants_trims_to_one_each():
    g = star_graph(3)
    reduced, ledger = reduce_pendants(g)
    assert reduced.n == 2 and ledger.removed_count == 2
    t = make_spanning_tree(reduced, reduced.edges)
    restored = restore_pendants(t, ledger)
    restored.validate(g)
    assert restored.internal_count == 1


def test_reduce_pendants_noop_when_unique():
    g = path_graph(4)
    reduced, ledger = reduce_pendants(g)
    assert reduced is g and ledger.is_empty()


def test_pendant_lower_bound():
    g = complete_bipartite(2, 4)   # A = Y side, B = X side
    assert pendant_lower_bound(g, range(2, 6), range(2)) == 3
    with pytest.raises(GraphError):
        pendant_lower_bound(g, [0, 2], [1])   # A not independent / N(A) != B
