"""Oracle-equivalence and bound suites over seeded random instances."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, List, Optional, Tuple

from .block_cactus import label_blocks, solve_block_cactus
from .bp import solve_bp
from .chain import chain_bounds_report, chain_path_cover, compute_chain_ordering
from .cograph import cotree_path_cover, solve_cograph
from .generators import gen_class, GenSpec
from .graph import Graph, SpanningTree
from .oracle import (count_spanning_trees_matrix_tree, oracle_max_pathcover_edges,
                     oracle_mist)
from .recognition import block_decompose, build_cotree, compute_strong_ordering

CLASSES = ("block", "cactus", "cograph", "bp", "chain")

# instances denser than this are resampled; keeps the enumeration oracle fast
MAX_TREES = 50_000


@dataclass
class Failure:
    cls: str
    seed: int
    check: str
    detail: str
    graph_text: str


@dataclass
class VerifyReport:
    trials: int
    checked: int = 0
    failures: List[Failure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures


def suite_instance(cls: str, idx: int, seed: int,
                   max_n: int = 11) -> Tuple[Graph, int]:
    """Seeded instance with a bounded spanning-tree count (resampled)."""
    rng = random.Random((cls, idx, seed).__repr__())
    for attempt in range(200):
        n = rng.randint(2, max_n)
        sub_seed = rng.randrange(1 << 30)
        g = gen_class(GenSpec(cls=cls, n=n, seed=sub_seed))
        if count_spanning_trees_matrix_tree(g) <= MAX_TREES:
            return g, sub_seed
    raise RuntimeError(f"could not sample a desk-scale {cls} instance")


def solve_by_class(cls: str, g: Graph) -> SpanningTree:
    if cls in ("block", "cactus"):
        return solve_block_cactus(g)
    if cls == "cograph":
        return solve_cograph(g, build_cotree(g))
    if cls == "bp":
        return solve_bp(g, compute_strong_ordering(g))
    if cls == "chain":
        return solve_bp(g, compute_chain_ordering(g))
    raise ValueError(f"unknown class {cls!r}")


def check_instance(cls: str, g: Graph) -> List[Tuple[str, str]]:
    """All per-instance checks; returns (check, detail) for each failure."""
    problems: List[Tuple[str, str]] = []
    tree = solve_by_class(cls, g)
    tree.validate(g)
    opt, _ = oracle_mist(g)
    if tree.internal_count != opt:
        problems.append(("oracle-equivalence",
                         f"solver={tree.internal_count}, oracle={opt}"))
    pc_edges = oracle_max_pathcover_edges(g)
    if opt > pc_edges - 1:
        problems.append(("pathcover-upper-bound", f"opt={opt}, |E(P*)|={pc_edges}"))
    if cls in ("block", "cactus"):
        bd = block_decompose(g)
        if len(bd.blocks) > 1:
            bad = label_blocks(g, bd).bad_count
            if opt != g.n - bad:
                problems.append(("bad-block-count", f"opt={opt}, n-bad={g.n - bad}"))
    if cls == "cograph":
        cover = cotree_path_cover(g, build_cotree(g))
        if cover.edge_count != pc_edges:
            problems.append(("cograph-cover-optimality",
                             f"dp={cover.edge_count}, oracle={pc_edges}"))
        if opt != pc_edges - 1:
            problems.append(("cograph-equality", f"opt={opt}, |E(P*)|-1={pc_edges - 1}"))
    if cls == "chain":
        o = compute_chain_ordering(g)
        cover = chain_path_cover(g, o)
        if cover.edge_count != pc_edges:
            problems.append(("chain-cover-optimality",
                             f"greedy={cover.edge_count}, oracle={pc_edges}"))
        if opt not in (pc_edges - 1, pc_edges - 2):
            problems.append(("chain-gap", f"opt={opt}, |E(P*)|={pc_edges}"))
        report = chain_bounds_report(g, o)
        if report.opt != opt:
            problems.append(("chain-report", f"report opt={report.opt}, oracle={opt}"))
    return problems


def run_verification(trials: int, seed: int,
                     classes: Tuple[str, ...] = CLASSES,
                     stop_on_first: bool = True) -> VerifyReport:
    report = VerifyReport(trials=trials)
    for cls in classes:
        for idx in range(trials):
            g, sub_seed = suite_instance(cls, idx, seed)
            try:
                problems = check_instance(cls, g)
            except Exception as exc:  # a crashed solver is a failure too
                problems = [("exception", repr(exc))]
            report.checked += 1
            for check, detail in problems:
                report.failures.append(Failure(
                    cls=cls, seed=sub_seed, check=check, detail=detail,
                    graph_text=g.to_text()))
            if report.failures and stop_on_first:
                return report
    return report
