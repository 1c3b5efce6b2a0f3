"""Hardware-native decomposition of parameterised multi-qubit Pauli rotations.

``exp(i*gamma*P)`` for a Pauli string ``P`` is rewritten as a palindrome of
fixed ±pi/4 two-qubit Pauli rotations around one parameterised two-qubit
rotation, laid out on the couplers of a hardware graph so that the number of
parallel two-qubit layers is as small as the graph allows.
"""

from .circuit import Angle, Circuit, Gate
from .decompose import (
    choose_conjugator,
    cnot_baseline,
    decompose,
    decompose_general,
    decompose_path,
    decompose_star,
    route_support,
)
from .errors import DecompositionError
from .graph import (
    HardwareGraph,
    SpanningTreePlan,
    bfs_distances,
    build_spanning_plan,
    depth_lower_bound,
    diameter,
)
from .lhz import LhzProblem, build_problem_circuit, grid_depth_report
from .optimize import cancel_inverse_pairs, merge_same_generator
from .pauli import PauliString, commutes, conjugate_by_quarter_rotation, multiply, residual
from .schedule import assign_layers, two_qubit_depth
from .verify import correlation_check, numeric_verify, statevector_verify, symbolic_verify

__version__ = "0.1.0"

__all__ = [
    "Angle", "Circuit", "Gate",
    "choose_conjugator", "cnot_baseline", "decompose", "decompose_general", "decompose_path",
    "decompose_star", "route_support",
    "DecompositionError",
    "HardwareGraph", "SpanningTreePlan", "bfs_distances", "build_spanning_plan",
    "depth_lower_bound", "diameter",
    "LhzProblem", "build_problem_circuit", "grid_depth_report",
    "cancel_inverse_pairs", "merge_same_generator",
    "PauliString", "commutes", "conjugate_by_quarter_rotation", "multiply", "residual",
    "assign_layers", "two_qubit_depth",
    "correlation_check", "numeric_verify", "statevector_verify", "symbolic_verify",
]
