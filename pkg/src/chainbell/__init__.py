"""Geometric chained Bell inequalities for maximally entangled qudits."""

from chainbell.chain import (
    ChainReport,
    ChainScenario,
    closed_form_lhs,
    evaluate_chain,
    minimal_violating_n,
    zeno_limit_trace,
)
from chainbell.lhv import certify_classical_bound, classical_vs_quantum_gap
from chainbell.qubit_sector import (
    SectorScenario,
    minimal_violating_half_chain,
    sector_chain_margin,
)
from chainbell.rotations import (
    BlockDecomposition,
    RotationSpec,
    build_rotation,
    canonical_decomposition,
    rotation_power,
)

__all__ = [
    "BlockDecomposition",
    "ChainReport",
    "ChainScenario",
    "RotationSpec",
    "SectorScenario",
    "build_rotation",
    "canonical_decomposition",
    "certify_classical_bound",
    "classical_vs_quantum_gap",
    "closed_form_lhs",
    "evaluate_chain",
    "minimal_violating_half_chain",
    "minimal_violating_n",
    "rotation_power",
    "sector_chain_margin",
    "zeno_limit_trace",
]
