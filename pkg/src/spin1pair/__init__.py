"""Thermal entanglement of two spin-1 particles with biquadratic exchange.

The package builds the two-site Hamiltonian K*(dot)^2 + B*(S1z + S2z)
(optionally plus a bilinear J*dot term), forms its Gibbs state, and
quantifies entanglement through the negativity of the partial transpose —
numerically and against closed forms for the spectrum, the partition
function, and the partially transposed thermal state.
"""

from .analysis import (
    AxisSpec,
    CriticalPoint,
    GroundState,
    SweepResult,
    SweepSpec,
    critical_coupling,
    critical_field,
    critical_temperature,
    ground_state,
    negativity_point,
    sweep,
)
from .entanglement import (
    AnalyticPTEntries,
    analytic_pt_entries,
    analytic_pt_matrix,
    negativity,
    partial_transpose,
    pure_state_negativity,
)
from .errors import (
    BilinearTermPresent,
    BracketNotFound,
    DomainError,
    FormulaMismatch,
    NoEntangledPhase,
    NoEntanglementAtZeroField,
    NonPositiveTemperature,
    NotNormalized,
    NotSymmetric,
    ZeroRepulsion,
)
from .figures import figure_table
from .model import (
    AnalyticLevel,
    AnalyticSpectrum,
    CouplingSet,
    ModelParams,
    analytic_spectrum,
    build_hamiltonian,
    derive_couplings,
)
from .numerics import EigenDecomposition, boltzmann_weights, eigh_symmetric, trace_norm
from .spin_algebra import heisenberg_dot, kron, spin1_components
from .thermal import (
    PartitionValue,
    gibbs_state,
    partition_function_closed,
    partition_function_trace,
)

__version__ = "0.1.0"

__all__ = [
    "AnalyticLevel",
    "AnalyticPTEntries",
    "AnalyticSpectrum",
    "AxisSpec",
    "BilinearTermPresent",
    "BracketNotFound",
    "CouplingSet",
    "CriticalPoint",
    "DomainError",
    "EigenDecomposition",
    "FormulaMismatch",
    "GroundState",
    "ModelParams",
    "NoEntangledPhase",
    "NoEntanglementAtZeroField",
    "NonPositiveTemperature",
    "NotNormalized",
    "NotSymmetric",
    "PartitionValue",
    "SweepResult",
    "SweepSpec",
    "ZeroRepulsion",
    "analytic_pt_entries",
    "analytic_pt_matrix",
    "analytic_spectrum",
    "boltzmann_weights",
    "build_hamiltonian",
    "critical_coupling",
    "critical_field",
    "critical_temperature",
    "derive_couplings",
    "eigh_symmetric",
    "figure_table",
    "gibbs_state",
    "ground_state",
    "heisenberg_dot",
    "kron",
    "negativity",
    "negativity_point",
    "partial_transpose",
    "partition_function_closed",
    "partition_function_trace",
    "pure_state_negativity",
    "spin1_components",
    "sweep",
    "trace_norm",
]
