"""Greedy MAX-CUT construction heuristics built on signed spanning trees.

Two algorithm families are provided: vertex-oriented growers (the SG
series) and edge-contraction schemes (De Quincey, EC, DEC, SEC), plus a
stabilizer-bookkeeping cross-check layer, an exact brute-force solver for
small graphs, and a benchmarking harness with a CLI front end.
"""

from .graph import (
    Graph,
    InstanceSpec,
    cut_weight,
    emit_edge_list,
    gen_instance,
    parse_edge_list,
    total_weight,
)
from .relation_tree import RelationTree, scan, tree_cut_weight, validate
from .prim import CutResult, sg, sg3, sg3_d, sg3_r, sg_edge_init
from .kruskal import de_quincey, dec, ec, sec
from .stabilizer import (
    EquivalenceReport,
    GeneratorTable,
    PauliLedger,
    adapt_clifford,
    check_equivalences,
    sec_stabilizer,
)
from .oracle import OracleResult, brute_force, sk_energy
from .bench import BenchRecord, SweepConfig, aggregate, run_sweep

__all__ = [
    "Graph",
    "InstanceSpec",
    "cut_weight",
    "emit_edge_list",
    "gen_instance",
    "parse_edge_list",
    "total_weight",
    "RelationTree",
    "scan",
    "tree_cut_weight",
    "validate",
    "CutResult",
    "sg",
    "sg_edge_init",
    "sg3",
    "sg3_d",
    "sg3_r",
    "de_quincey",
    "ec",
    "dec",
    "sec",
    "PauliLedger",
    "GeneratorTable",
    "EquivalenceReport",
    "sec_stabilizer",
    "adapt_clifford",
    "check_equivalences",
    "OracleResult",
    "brute_force",
    "sk_energy",
    "SweepConfig",
    "BenchRecord",
    "run_sweep",
    "aggregate",
]

__version__ = "0.1.0"
