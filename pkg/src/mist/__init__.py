"""Exact maximum internal spanning trees for block, cactus, cograph,
bipartite permutation, and chain graphs."""

from .graph import (Graph, GraphError, ParseError, PathCover, PendantLedger,
                    SpanningTree, make_graph, make_path_cover,
                    make_spanning_tree, parse_graph, pendant_lower_bound,
                    reduce_pendants, restore_pendants, tree_from_path)
from .recognition import (BlockDecomposition, ChainOrdering, Cotree,
                          CotreeNode, NotBipartite, NotBipartitePermutation,
                          NotChain, NotCograph, Ordering, StrongOrdering,
                          bipartition, block_decompose, build_cotree,
                          classify_graph, compute_chain_ordering,
                          compute_strong_ordering, verify_chain_ordering,
                          verify_strong_ordering)
from .block_cactus import (BlockLabeling, NotBlockOrCactus, label_blocks,
                           solve_block_cactus, spanning_path_in_block)
from .cograph import cotree_path_cover, solve_cograph
from .bp import VertexType, solve_bp, vertex_type
from .chain import (ChainBoundsReport, ContiguousPathCover, StitchError,
                    chain_bounds_report, chain_path_cover, stitch_path_cover)
from .oracle import (BudgetExceeded, OracleBudget, count_spanning_trees_matrix_tree,
                     enumerate_spanning_trees, oracle_max_pathcover_edges,
                     oracle_min_path_count, oracle_mist)
from .generators import (GenSpec, family_block_cactus, family_bp,
                         family_bp_ordering, gen_block, gen_bp,
                         gen_bp_with_ordering, gen_cactus, gen_chain,
                         gen_class, gen_cograph)
from .verify import VerifyReport, run_verification

__all__ = [
    "Graph", "GraphError", "ParseError", "PathCover", "PendantLedger",
    "SpanningTree", "make_graph", "make_path_cover", "make_spanning_tree",
    "parse_graph", "pendant_lower_bound", "reduce_pendants",
    "restore_pendants", "tree_from_path",
    "BlockDecomposition", "ChainOrdering", "Cotree", "CotreeNode",
    "NotBipartite", "NotBipartitePermutation", "NotChain", "NotCograph",
    "Ordering", "StrongOrdering", "bipartition", "block_decompose",
    "build_cotree", "classify_graph", "compute_chain_ordering",
    "compute_strong_ordering", "verify_chain_ordering",
    "verify_strong_ordering",
    "BlockLabeling", "NotBlockOrCactus", "label_blocks",
    "solve_block_cactus", "spanning_path_in_block",
    "cotree_path_cover", "solve_cograph",
    "VertexType", "solve_bp", "vertex_type",
    "ChainBoundsReport", "ContiguousPathCover", "StitchError",
    "chain_bounds_report", "chain_path_cover", "stitch_path_cover",
    "BudgetExceeded", "OracleBudget", "count_spanning_trees_matrix_tree",
    "enumerate_spanning_trees", "oracle_max_pathcover_edges",
    "oracle_min_path_count", "oracle_mist",
    "GenSpec", "family_block_cactus", "family_bp", "family_bp_ordering",
    "gen_block", "gen_bp", "gen_bp_with_ordering", "gen_cactus", "gen_chain",
    "gen_class", "gen_cograph",
    "VerifyReport", "run_verification",
]
