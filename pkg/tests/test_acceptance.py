"""Acceptance suite: one test per criterion, exact integer expectations.

The shared 200-instance-per-class verification run feeds criteria 4-6; its
per-instance checks are oracle equality, the path-cover upper bound, the
bad-block count identity, cograph cover/equality, and the chain gap.
"""

import time

import pytest

from mist import (block_decompose, chain_path_cover, compute_chain_ordering,
                  enumerate_spanning_trees, family_block_cactus, family_bp,
                  family_bp_ordering, gen_bp_with_ordering, gen_block,
                  gen_cactus, label_blocks, oracle_mist, solve_block_cactus,
                  solve_bp)
from mist.verify import CLASSES, run_verification, suite_instance
from conftest import fig8_g1, fig8_g2

TRIALS = 200
SEED = 1


@pytest.fixture(scope="module")
def verification():
    start = time.perf_counter()
    report = run_verification(trials=TRIALS, seed=SEED, stop_on_first=False)
    report.elapsed = time.perf_counter() - start
    return report


def test_criterion_1_block_cactus_family_values():
    start = time.perf_counter()
    for k in range(1, 7):
        g = family_block_cactus(k)
        bd = block_decompose(g)
        assert label_blocks(g, bd).bad_count == 2 * k
        assert solve_block_cactus(g, bd).internal_count == 3 * k
    assert time.perf_counter() - start < 1.0


def test_criterion_2_bp_family_values():
    start = time.perf_counter()
    for k in range(1, 7):
        g = family_bp(k)
        assert solve_bp(g, family_bp_ordering(g)).internal_count == 3 * k
    for k in (1, 2):
        assert oracle_mist(family_bp(k))[0] == 3 * k
    assert time.perf_counter() - start < 5.0


def test_criterion_3_chain_tightness_pair():
    start = time.perf_counter()
    for g, cover_edges, opt in ((fig8_g1(), 8, 6), (fig8_g2(), 9, 8)):
        o = compute_chain_ordering(g)
        assert chain_path_cover(g, o).edge_count == cover_edges
        assert solve_bp(g, o).internal_count == opt
        assert oracle_mist(g)[0] == opt
    assert time.perf_counter() - start < 1.0


def test_criterion_4_oracle_equivalence(verification):
    assert verification.checked == TRIALS * len(CLASSES)
    mismatches = [f for f in verification.failures
                  if f.check in ("oracle-equivalence", "exception")]
    assert not mismatches, mismatches[:3]
    assert verification.elapsed < 300.0


def test_criterion_5_bound_suites(verification):
    bound_checks = ("pathcover-upper-bound", "bad-block-count",
                    "cograph-equality", "chain-gap")
    violations = [f for f in verification.failures if f.check in bound_checks]
    assert not violations, violations[:3]
    # leaf-per-bad-block over full enumeration at n <= 9
    checked = 0
    for cls in ("block", "cactus"):
        for idx in range(TRIALS):
            g, _ = suite_instance(cls, idx, SEED)
            if g.n > 9:
                continue
            bd = block_decompose(g)
            if len(bd.blocks) < 2:
                continue
            lab = label_blocks(g, bd)
            bad_blocks = [set(b) for b, good in zip(bd.blocks, lab.good)
                          if not good]
            if not bad_blocks:
                continue
            for t in enumerate_spanning_trees(g):
                deg = t.degrees()
                for block in bad_blocks:
                    assert any(deg[v] == 1 for v in block), \
                        (g.to_text(), t.edges, sorted(block))
            checked += 1
    assert checked >= 30


def test_criterion_6_path_cover_optimality(verification):
    cover_checks = ("cograph-cover-optimality", "chain-cover-optimality")
    violations = [f for f in verification.failures if f.check in cover_checks]
    assert not violations, violations[:3]


@pytest.mark.parametrize("solver", ["block", "cactus", "bp"])
def test_criterion_7_linear_time_proxy(solver):
    times = {}
    for n in (100_000, 200_000):
        if solver == "bp":
            g, o = gen_bp_with_ordering(n, seed=7)
            start = time.perf_counter()
            t = solve_bp(g, o, verify=False)
        else:
            g = (gen_block if solver == "block" else gen_cactus)(n, seed=7)
            bd = block_decompose(g)
            start = time.perf_counter()
            t = solve_block_cactus(g, bd)
        times[n] = time.perf_counter() - start
        assert t.internal_count > 0
        assert times[n] < 2.0, f"{solver} at n={n}: {times[n]:.2f}s"
    ratio = times[200_000] / times[100_000]
    assert ratio <= 3.0, f"{solver} scaling ratio {ratio:.2f}"
