import pytest

from mist import (BudgetExceeded, OracleBudget, count_spanning_trees_matrix_tree,
                  enumerate_spanning_trees, oracle_max_pathcover_edges,
                  oracle_min_path_count, oracle_mist)
from conftest import (bowtie, complete_bipartite, complete_graph, cycle_graph,
                      path_graph, star_graph)


@pytest.mark.parametrize("g,count", [
    (path_graph(4), 1),
    (cycle_graph(5), 5),
    (complete_graph(4), 16),          # Cayley: 4^2
    (complete_graph(5), 125),         # Cayley: 5^3
    (complete_bipartite(2, 3), 12),   # 2^2 * 3^1
])
def test_matrix_tree_known_counts(g, count):
    assert count_spanning_trees_matrix_tree(g) == count


@pytest.mark.parametrize("g", [path_graph(5), cycle_graph(6),
                               complete_graph(5), complete_bipartite(2, 4),
                               bowtie()])
def test_enumeration_matches_matrix_tree(g):
    trees = list(enumerate_spanning_trees(g))
    assert len(trees) == count_spanning_trees_matrix_tree(g)
    seen = {tuple(sorted(t.edges)) for t in trees}
    assert len(seen) == len(trees)
    for t in trees:
        t.validate(g)


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_spanning_trees(complete_graph(5),
                                      OracleBudget(max_spanning_trees=10)))
    with pytest.raises(BudgetExceeded):
        list(enumerate_spanning_trees(path_graph(12)))


@pytest.mark.parametrize("g,opt", [
    (path_graph(3), 1),
    (star_graph(3), 1),
    (path_graph(4), 2),
    (cycle_graph(4), 2),
    (cycle_graph(6), 4),
    (bowtie(), 3),
    (complete_bipartite(2, 3), 3),
    (complete_bipartite(2, 4), 3),
    (complete_graph(5), 3),
])
def test_oracle_mist_known_values(g, opt):
    got, tree = oracle_mist(g)
    assert got == opt
    tree.validate(g)
    assert tree.internal_count == opt


def test_oracle_mist_with_and_without_bound_agree():
    for g in (bowtie(), complete_bipartite(2, 4), cycle_graph(7)):
        a, _ = oracle_mist(g, use_pathcover_bound=True)
        b, _ = oracle_mist(g, use_pathcover_bound=False)
        assert a == b


@pytest.mark.parametrize("g,paths", [
    (path_graph(5), 1),
    (cycle_graph(6), 1),
    (star_graph(3), 2),
    (complete_bipartite(2, 4), 2),
    (bowtie(), 1),
])
def test_min_path_count(g, paths):
    assert oracle_min_path_count(g) == paths
    assert oracle_max_pathcover_edges(g) == g.n - paths


def test_pathcover_bound_dominates_mist():
    for g in (bowtie(), star_graph(4), complete_bipartite(3, 3)):
        opt, _ = oracle_mist(g)
        assert opt <= oracle_max_pathcover_edges(g) - 1
