"""Terminal front end: solve, verify, generate, classify, DOT export.

Exit codes: 0 ok, 1 I/O or parse, 2 class mismatch, 3 verification failure.
"""

from __future__ import annotations

import argparse
import dataclasses
import sys
import time
from pathlib import Path
from typing import List, Optional, Tuple

from .block_cactus import NotBlockOrCactus, solve_block_cactus
from .bp import solve_bp
from .chain import chain_path_cover
from .cograph import cotree_path_cover, solve_cograph
from .generators import (GenSpec, family_block_cactus, family_bp, gen_class)
from .graph import Graph, GraphError, ParseError, SpanningTree, parse_graph
from .recognition import (NotBipartite, NotBipartitePermutation, NotChain,
                          NotCograph, block_decompose, build_cotree,
                          classify_graph, compute_chain_ordering,
                          compute_strong_ordering)
from .verify import run_verification

EXIT_OK = 0
EXIT_IO = 1
EXIT_CLASS = 2
EXIT_VERIFY = 3

AUTO_PRIORITY = ("chain", "bp", "block", "cactus", "cograph")


@dataclasses.dataclass
class RunReport:
    cls: str
    internal_count: int
    pathcover_edges: Optional[int]
    bound_checks: List[Tuple[str, bool]]
    wall_time_s: float

    def render(self) -> str:
        lines = [
            f"class {self.cls}",
            f"internal_count {self.internal_count}",
        ]
        if self.pathcover_edges is not None:
            lines.append(f"pathcover_edges {self.pathcover_edges}")
        for name, ok in self.bound_checks:
            lines.append(f"check {name} {'ok' if ok else 'FAIL'}")
        lines.append(f"wall_time_s {self.wall_time_s:.4f}")
        return "\n".join(lines)


def _solve_as(cls: str, g: Graph) -> Tuple[SpanningTree, Optional[int]]:
    """Solve g as the given class; returns (tree, path-cover edges or None).

    Raises the class recognizer's error when g is not in the class.
    """
    if cls == "chain":
        o = compute_chain_ordering(g)
        cover = chain_path_cover(g, o)
        return solve_bp(g, o), cover.edge_count
    if cls == "bp":
        o = compute_strong_ordering(g)
        return solve_bp(g, o), None
    if cls in ("block", "cactus"):
        bd = block_decompose(g)
        if cls == "block" and not bd.is_block_graph():
            raise NotBlockOrCactus("not a block graph")
        if cls == "cactus" and not bd.is_cactus():
            raise NotBlockOrCactus("not a cactus graph")
        return solve_block_cactus(g, bd), None
    if cls == "cograph":
        t = build_cotree(g)
        cover = cotree_path_cover(g, t)
        return solve_cograph(g, t), cover.edge_count
    raise ValueError(f"unknown class {cls!r}")


CLASS_ERRORS = (NotBlockOrCactus, NotBipartite, NotBipartitePermutation,
                NotChain, NotCograph)


def to_dot(g: Graph, t: SpanningTree, include_non_tree: bool = True) -> str:
    """Tree leaves get a distinct fill; non-tree edges are dashed."""
    deg = t.degrees()
    tset = {(min(a, b), max(a, b)) for a, b in t.edges}
    lines = ["graph mist {"]
    lines.append(f'  label="internal = {t.internal_count}";')
    for v in range(g.n):
        if g.n == 1 or deg[v] >= 2:
            lines.append(f"  v{v + 1};")
        else:
            lines.append(f'  v{v + 1} [style=filled, fillcolor=lightgray];')
    for u, v in g.edges:
        if (u, v) in tset:
            lines.append(f"  v{u + 1} -- v{v + 1};")
        elif include_non_tree:
            lines.append(f"  v{u + 1} -- v{v + 1} [style=dashed];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def _read_graph(path: str) -> Graph:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise _CliExit(EXIT_IO, f"error: cannot read {path}: {exc}")
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise _CliExit(EXIT_IO, f"error: {path}: {exc}")


class _CliExit(SystemExit):
    def __init__(self, code: int, message: str):
        print(message, file=sys.stderr)
        super().__init__(code)


def cmd_solve(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    start = time.perf_counter()
    if args.cls == "auto":
        tree = cover_edges = used = None
        for cls in AUTO_PRIORITY:
            try:
                tree, cover_edges = _solve_as(cls, g)
                used = cls
                break
            except CLASS_ERRORS:
                continue
        if tree is None:
            print("error: input fits none of the supported classes",
                  file=sys.stderr)
            return EXIT_CLASS
    else:
        used = args.cls
        try:
            tree, cover_edges = _solve_as(used, g)
        except CLASS_ERRORS as exc:
            print(f"error: input is not a {used} graph: {exc}", file=sys.stderr)
            return EXIT_CLASS
    elapsed = time.perf_counter() - start

    checks = [("tree-validates", True)]
    if cover_edges is not None:
        checks.append(("internal-le-pathcover-minus-1",
                       tree.internal_count <= cover_edges - 1))
    report = RunReport(cls=used, internal_count=tree.internal_count,
                       pathcover_edges=cover_edges, bound_checks=checks,
                       wall_time_s=elapsed)
    print(report.render())
    try:
        if args.out:
            Path(args.out).write_text(tree.to_text())
        if args.dot:
            Path(args.dot).write_text(to_dot(g, tree))
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    if not args.out:
        sys.stdout.write(tree.to_text())
    return EXIT_OK if all(ok for _, ok in checks) else EXIT_VERIFY


def cmd_verify(args: argparse.Namespace) -> int:
    report = run_verification(trials=args.trials, seed=args.seed)
    print(f"checked {report.checked} instances")
    if report.ok:
        print("all checks passed")
        return EXIT_OK
    f = report.failures[0]
    print(f"FAIL [{f.cls}] {f.check}: {f.detail}", file=sys.stderr)
    try:
        Path(args.counterexample).write_text(
            f"# class {f.cls} seed {f.seed}\n# check {f.check}: {f.detail}\n"
            + f.graph_text)
        print(f"counterexample written to {args.counterexample}",
              file=sys.stderr)
    except OSError as exc:
        print(f"error: cannot write counterexample: {exc}", file=sys.stderr)
    return EXIT_VERIFY


def cmd_gen(args: argparse.Namespace) -> int:
    if (args.family is None) == (args.cls is None):
        print("error: specify exactly one of --family or --class",
              file=sys.stderr)
        return EXIT_IO
    try:
        if args.family is not None:
            if args.k is None:
                print("error: --family requires --k", file=sys.stderr)
                return EXIT_IO
            g = (family_block_cactus(args.k) if args.family == "block-cactus"
                 else family_bp(args.k))
        else:
            if args.n is None:
                print("error: --class requires --n", file=sys.stderr)
                return EXIT_IO
            g = gen_class(GenSpec(cls=args.cls, n=args.n, seed=args.seed))
    except (ValueError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    try:
        if args.out:
            Path(args.out).write_text(g.to_text())
        else:
            sys.stdout.write(g.to_text())
    except OSError as exc:
        print(f"error: cannot write output: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    g = _read_graph(args.file)
    labels = classify_graph(g)
    print(" ".join(sorted(labels)) if labels else "none")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="mist",
        description="Exact maximum internal spanning trees for block, cactus, "
                    "cograph, bipartite permutation, and chain graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    ps = sub.add_parser("solve", help="compute a MIST of the input graph")
    ps.add_argument("file")
    ps.add_argument("--class", dest="cls", default="auto",
                    choices=("auto", "block", "cactus", "cograph", "bp", "chain"))
    ps.add_argument("--out", help="write the tree file here (default: stdout)")
    ps.add_argument("--dot", help="write a DOT rendering here")
    ps.set_defaults(func=cmd_solve)

    pv = sub.add_parser("verify", help="run the oracle-equivalence suites")
    pv.add_argument("--trials", type=int, default=25)
    pv.add_argument("--seed", type=int, default=1)
    pv.add_argument("--counterexample", default="counterexample.txt")
    pv.set_defaults(func=cmd_verify)

    pg = sub.add_parser("gen", help="generate an instance")
    pg.add_argument("--family", choices=("block-cactus", "bp"))
    pg.add_argument("--class", dest="cls",
                    choices=("block", "cactus", "cograph", "bp", "chain"))
    pg.add_argument("--n", type=int)
    pg.add_argument("--k", type=int)
    pg.add_argument("--seed", type=int, default=0)
    pg.add_argument("--out")
    pg.set_defaults(func=cmd_gen)

    pc = sub.add_parser("classify", help="list the recognized classes")
    pc.add_argument("file")
    pc.set_defaults(func=cmd_classify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except _CliExit as exc:
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
