"""infoledger: entropy accounting for quantum ensembles.

Quantifies the information content of an ensemble as the von Neumann
entropy of its average state and audits hypothesized copy/delete dynamics
against conservation of information.  Orthogonal (classical) sources copy
freely; nonorthogonal sources cannot be cloned or deleted by any dynamics
that is linear over stochastic mixtures, and the audit, the Gram check, and
a numerical search over the unitary orbit all exhibit the obstruction.
"""

from .audit import (
    AuditDiagnostics,
    AuditReport,
    DiscardInClosedRegimeError,
    InternalAuditError,
    Verdict,
    audit,
    gram_preservation_check,
    overlap_inequality_check,
)
from .channels import (
    AppendAncilla,
    Channel,
    ClassicalStochastic,
    Discard,
    Kraus,
    Sequence,
    Unitary,
    apply_to_ensemble,
    check_mixing_linearity,
)
from .entropy import (
    binary_entropy,
    ensemble_information,
    two_pure_state_information,
    von_neumann_entropy,
)
from .linalg import (
    ComplexOperator,
    DimensionMismatchError,
    EigenSystem,
    hermitian_eigensystem,
    identity,
    outer,
    partial_trace,
    tensor_product,
)
from .scenario_io import (
    ScenarioFile,
    ScenarioFileError,
    SearchBudget,
    build_scenario,
    format_scenario_file,
    parse_scenario_file,
)
from .scenarios import (
    NotADeletingMapError,
    Scenario,
    classical_copy_scenario,
    cloning_scenario,
    deleting_scenario,
    generalized_deleting_scenario,
    identity_scenario,
)
from .search import (
    SearchResult,
    UnitaryParameterization,
    generator_basis,
    materialize,
    minimize_error,
    scenario_error,
)
from .states import (
    DensityOperator,
    Ensemble,
    PureState,
    average_state,
    basis_state,
    overlap,
    pure_projector,
    pure_state,
    tensor_states,
)

__version__ = "0.1.0"

__all__ = [
    "AppendAncilla",
    "AuditDiagnostics",
    "AuditReport",
    "Channel",
    "ClassicalStochastic",
    "ComplexOperator",
    "DensityOperator",
    "DimensionMismatchError",
    "Discard",
    "DiscardInClosedRegimeError",
    "EigenSystem",
    "Ensemble",
    "InternalAuditError",
    "Kraus",
    "NotADeletingMapError",
    "PureState",
    "Scenario",
    "ScenarioFile",
    "ScenarioFileError",
    "SearchBudget",
    "SearchResult",
    "Sequence",
    "Unitary",
    "UnitaryParameterization",
    "Verdict",
    "apply_to_ensemble",
    "audit",
    "average_state",
    "basis_state",
    "binary_entropy",
    "build_scenario",
    "check_mixing_linearity",
    "classical_copy_scenario",
    "cloning_scenario",
    "deleting_scenario",
    "ensemble_information",
    "format_scenario_file",
    "generalized_deleting_scenario",
    "generator_basis",
    "gram_preservation_check",
    "hermitian_eigensystem",
    "identity",
    "identity_scenario",
    "materialize",
    "minimize_error",
    "outer",
    "overlap",
    "overlap_inequality_check",
    "parse_scenario_file",
    "partial_trace",
    "pure_projector",
    "pure_state",
    "scenario_error",
    "tensor_product",
    "tensor_states",
    "two_pure_state_information",
    "von_neumann_entropy",
]
