import random

import pytest

from mist import (build_cotree, cotree_path_cover, gen_cograph, make_graph,
                  oracle_max_pathcover_edges, oracle_mist, solve_cograph)
from conftest import complete_bipartite, complete_graph, cycle_graph, star_graph


@pytest.mark.parametrize("g,cover_edges", [
    (complete_graph(4), 3),
    (cycle_graph(4), 3),
    (star_graph(4), 2),             # K_{1,4}: best cover has 3 components
    (complete_bipartite(2, 4), 4),
    (complete_bipartite(2, 5), 4),
])
def test_cover_edges_match_oracle(g, cover_edges):
    cover = cotree_path_cover(g, build_cotree(g))
    assert cover.edge_count == cover_edges
    assert cover.edge_count == oracle_max_pathcover_edges(g)


@pytest.mark.parametrize("g", [complete_graph(5), cycle_graph(4),
                               star_graph(4), complete_bipartite(2, 4),
                               complete_bipartite(3, 3)])
def test_solve_hits_cover_minus_one(g):
    t = build_cotree(g)
    tree = solve_cograph(g, t)
    tree.validate(g)
    assert tree.internal_count == cotree_path_cover(g, t).edge_count - 1
    assert tree.internal_count == oracle_mist(g)[0]


def test_multi_path_attachment_structure():
    # K_{1,4}: one crossing path plus singletons attached to the center
    g = star_graph(4)
    tree = solve_cograph(g, build_cotree(g))
    deg = tree.degrees()
    assert deg[0] == 4 and tree.internal_count == 1


def test_join_of_unions():
    # (K1 + K1) join (K1 + K1) = C4 with a different cotree shape
    g = make_graph(4, [(0, 2), (0, 3), (1, 2), (1, 3)])
    tree = solve_cograph(g, build_cotree(g))
    assert tree.internal_count == 2 == oracle_mist(g)[0]


def test_random_cographs_match_oracle():
    rng = random.Random(7)
    for trial in range(30):
        n = rng.randint(2, 9)
        g = gen_cograph(n, seed=rng.randrange(1 << 20))
        t = build_cotree(g)
        tree = solve_cograph(g, t)
        tree.validate(g)
        opt, _ = oracle_mist(g)
        assert tree.internal_count == opt
        assert cotree_path_cover(g, t).edge_count == oracle_max_pathcover_edges(g)
