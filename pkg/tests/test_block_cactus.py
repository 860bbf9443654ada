import pytest

from mist import (NotBlockOrCactus, block_decompose, family_block_cactus,
                  label_blocks, make_graph, oracle_mist, solve_block_cactus,
                  spanning_path_in_block)
from conftest import bowtie, complete_graph, cycle_graph, path_graph


def test_spanning_path_in_clique_with_endpoints():
    p = spanning_path_in_block([0, 1, 2, 3], [(0, 1), (0, 2), (0, 3), (1, 2),
                                              (1, 3), (2, 3)],
                               frozenset({"clique"}), start=1, end=3)
    assert p[0] == 1 and p[-1] == 3 and sorted(p) == [0, 1, 2, 3]


def test_spanning_path_in_cycle_requires_adjacent_endpoints():
    verts = [0, 1, 2, 3]
    edges = [(0, 1), (1, 2), (2, 3), (0, 3)]
    p = spanning_path_in_block(verts, edges, frozenset({"cycle"}), 0, 1)
    assert p == [0, 3, 2, 1]
    with pytest.raises(Exception):
        spanning_path_in_block(verts, edges, frozenset({"cycle"}), 0, 2)


def test_label_blocks_bowtie_all_bad():
    g = bowtie()
    lab = label_blocks(g, block_decompose(g))
    assert lab.bad_count == 2


def test_label_blocks_good_bridge():
    # two triangles joined by a bridge: both triangles bad, bridge good
    g = make_graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])
    bd = block_decompose(g)
    lab = label_blocks(g, bd)
    assert lab.bad_count == 2
    t = solve_block_cactus(g, bd)
    assert t.internal_count == 4
    assert t.internal_count == oracle_mist(g)[0]


@pytest.mark.parametrize("g,opt", [
    (path_graph(5), 3),
    (cycle_graph(6), 4),
    (complete_graph(4), 2),
    (bowtie(), 3),
])
def test_solve_matches_oracle_on_small(g, opt):
    t = solve_block_cactus(g)
    t.validate(g)
    assert t.internal_count == opt == oracle_mist(g)[0]


def test_solve_rejects_other_blocks():
    g = make_graph(4, [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)])
    with pytest.raises(NotBlockOrCactus):
        solve_block_cactus(g)


def test_family_values():
    for k in range(1, 7):
        g = family_block_cactus(k)
        assert g.n == 5 * k and g.m == 7 * k - 1
        bd = block_decompose(g)
        lab = label_blocks(g, bd)
        assert lab.bad_count == 2 * k
        t = solve_block_cactus(g, bd)
        assert t.internal_count == 3 * k == g.n - lab.bad_count


def test_family_small_k_matches_oracle():
    for k in (1, 2):
        g = family_block_cactus(k)
        assert solve_block_cactus(g).internal_count == oracle_mist(g)[0]


def test_deterministic_output():
    g = family_block_cactus(3)
    assert solve_block_cactus(g).edges == solve_block_cactus(g).edges
