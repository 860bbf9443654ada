"""Property-based checks across the random generators."""

import hypothesis.strategies as st
from hypothesis import assume, given, settings

from mist import (GenSpec, block_decompose, build_cotree, chain_path_cover,
                  compute_chain_ordering, compute_strong_ordering,
                  cotree_path_cover, count_spanning_trees_matrix_tree,
                  gen_class, label_blocks, oracle_max_pathcover_edges,
                  oracle_mist, solve_block_cactus, solve_bp, solve_cograph)

small = dict(n=st.integers(min_value=2, max_value=9),
             seed=st.integers(min_value=0, max_value=10_000))


@settings(max_examples=30, deadline=None)
@given(**small)
def test_block_solver_matches_oracle(n, seed):
    g = gen_class(GenSpec(cls="block", n=n, seed=seed))
    t = solve_block_cactus(g)
    t.validate(g)
    assert t.internal_count == oracle_mist(g)[0]


@settings(max_examples=30, deadline=None)
@given(**small)
def test_cactus_solver_matches_oracle(n, seed):
    g = gen_class(GenSpec(cls="cactus", n=n, seed=seed))
    bd = block_decompose(g)
    t = solve_block_cactus(g, bd)
    opt = oracle_mist(g)[0]
    assert t.internal_count == opt
    if len(bd.blocks) > 1:
        assert opt == g.n - label_blocks(g, bd).bad_count


@settings(max_examples=30, deadline=None)
@given(**small)
def test_cograph_solver_and_cover_match_oracle(n, seed):
    g = gen_class(GenSpec(cls="cograph", n=n, seed=seed))
    assume(count_spanning_trees_matrix_tree(g) <= 50_000)
    ct = build_cotree(g)
    tree = solve_cograph(g, ct)
    tree.validate(g)
    pc = oracle_max_pathcover_edges(g)
    assert cotree_path_cover(g, ct).edge_count == pc
    assert tree.internal_count == pc - 1 == oracle_mist(g)[0]


@settings(max_examples=30, deadline=None)
@given(**small)
def test_bp_solver_matches_oracle(n, seed):
    g = gen_class(GenSpec(cls="bp", n=n, seed=seed))
    t = solve_bp(g, compute_strong_ordering(g))
    t.validate(g)
    assert t.internal_count == oracle_mist(g)[0]


@settings(max_examples=30, deadline=None)
@given(**small)
def test_chain_cover_and_gap(n, seed):
    g = gen_class(GenSpec(cls="chain", n=n, seed=seed))
    o = compute_chain_ordering(g)
    cover = chain_path_cover(g, o)
    pc = oracle_max_pathcover_edges(g)
    assert cover.edge_count == pc
    opt = solve_bp(g, o).internal_count
    assert opt == oracle_mist(g)[0]
    assert pc - opt in (1, 2)


@settings(max_examples=30, deadline=None)
@given(**small)
def test_pathcover_bound_everywhere(n, seed):
    # Opt <= |E(P*)| - 1 on every generated instance of every class
    for cls in ("block", "cactus", "cograph", "bp", "chain"):
        g = gen_class(GenSpec(cls=cls, n=n, seed=seed))
        if count_spanning_trees_matrix_tree(g) > 50_000:
            continue
        assert oracle_mist(g)[0] <= oracle_max_pathcover_edges(g) - 1
