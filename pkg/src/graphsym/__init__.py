"""graphsym: multiqudit states from graphs and their exchange symmetry.

Undirected graphs generate controlled-Z graph states on qubits; oriented
graphs generate states through a non-commutative two-qudit gate whose
operand roles are fixed by edge orientation. The symmetry module classifies
any dense state as fully symmetric, fully antisymmetric, antisymmetric on a
prefix of qudits, or none of these, and the verify module sweeps whole
graph families to check the completeness/symmetry correspondence.
"""

from .backend import backend_name, set_backend
from .build import (
    Trace,
    alternator_state,
    antisymmetric_state,
    cz_graph_state,
    gr_graph_state,
    oracle_antisymmetric_state,
    replay,
)
from .errors import CapacityError, DomainError, GraphParseError, GraphsymError
from .gates import (
    apply_cz,
    apply_gr,
    apply_hadamard,
    apply_permutation,
    apply_shift,
    fourier_matrix,
)
from .graphs import (
    OrientedGraph,
    UndirectedGraph,
    Witness,
    complete_hierarchical,
    enumerate_undirected,
    find_witness,
    is_complete,
    prefix_subgraph,
)
from .perm import compose, identity, inverse, signature, transposition
from .states import (
    DEFAULT_TOL,
    MAX_AMPLITUDES,
    State,
    basis_state,
    digits_of,
    embed,
    equal_exact,
    equal_up_to_global_phase,
    flat_index,
    inner_product,
    make_state,
    norm,
    tensor,
)
from .symmetry import (
    FULLY_ANTISYMMETRIC,
    FULLY_SYMMETRIC,
    NO_SYMMETRY,
    SymmetryClass,
    antisymmetric_on_prefix,
    check_full_group,
    classify,
    is_antisymmetric,
    is_symmetric,
)

__version__ = "0.1.0"

__all__ = [
    "CapacityError",
    "DEFAULT_TOL",
    "DomainError",
    "FULLY_ANTISYMMETRIC",
    "FULLY_SYMMETRIC",
    "GraphParseError",
    "GraphsymError",
    "MAX_AMPLITUDES",
    "NO_SYMMETRY",
    "OrientedGraph",
    "State",
    "SymmetryClass",
    "Trace",
    "UndirectedGraph",
    "Witness",
    "alternator_state",
    "antisymmetric_on_prefix",
    "antisymmetric_state",
    "apply_cz",
    "apply_gr",
    "apply_hadamard",
    "apply_permutation",
    "apply_shift",
    "backend_name",
    "basis_state",
    "check_full_group",
    "classify",
    "complete_hierarchical",
    "compose",
    "cz_graph_state",
    "digits_of",
    "embed",
    "enumerate_undirected",
    "equal_exact",
    "equal_up_to_global_phase",
    "find_witness",
    "flat_index",
    "fourier_matrix",
    "gr_graph_state",
    "identity",
    "inner_product",
    "inverse",
    "is_antisymmetric",
    "is_complete",
    "is_symmetric",
    "make_state",
    "norm",
    "oracle_antisymmetric_state",
    "prefix_subgraph",
    "replay",
    "set_backend",
    "signature",
    "tensor",
    "transposition",
]
