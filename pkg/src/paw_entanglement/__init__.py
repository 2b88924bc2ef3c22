"""paw-entanglement: time-system entanglement of two qubits and a quantum clock."""

from paw_entanglement.checks import CheckCategory, OracleCheck
from paw_entanglement.entanglement import (
    ProbPair,
    alpha_sq_for_entropy,
    binary_entropy,
    internal_entropy,
    internal_quadratic_entropy,
    quadratic_entropy_from_probs,
    shannon_entropy_bits,
)
from paw_entanglement.exceptions import (
    DomainError,
    PaWAbort,
    PaWException,
    PaWInternalError,
    ValidationError,
    VerificationFailed,
)
from paw_entanglement.metrics import (
    FidelityPoint,
    fidelity_interacting,
    fidelity_noninteracting,
    fidelity_point,
    min_reachable_fidelity,
    orthogonalization_time,
    phi_from_fidelity,
    tau_for_distance,
    theta_from_fidelity,
)
from paw_entanglement.model import (
    InteractingModel,
    NonInteractingModel,
    PairModel,
    PhiState,
    closed_form_discrepancy,
    evolve_interacting,
    evolve_noninteracting,
    hamiltonian_matrix,
)
from paw_entanglement.pawclock import (
    AbcElements,
    ClockSpec,
    ConvergenceRow,
    GammaValue,
    Scenario,
    abc_elements,
    bruteforce_probs,
    continuous_probs,
    convergence_report,
    discrete_probs,
    ets_entropy,
    gamma_sq_continuous,
    gamma_sq_discrete,
    interacting_probs_continuous,
    interacting_probs_discrete,
    noninteracting_probs,
    qubit_clock_probs,
    reduced_density_bruteforce,
    trajectory,
)
from paw_entanglement.report import CheckRecord, VerifyReport
from paw_entanglement.suite import ResolvedSuite, VerifySuite

__all__ = [
    "AbcElements",
    "CheckCategory",
    "CheckRecord",
    "ClockSpec",
    "ConvergenceRow",
    "DomainError",
    "FidelityPoint",
    "GammaValue",
    "InteractingModel",
    "NonInteractingModel",
    "OracleCheck",
    "PaWAbort",
    "PaWException",
    "PaWInternalError",
    "PairModel",
    "PhiState",
    "ProbPair",
    "ResolvedSuite",
    "Scenario",
    "ValidationError",
    "VerificationFailed",
    "VerifyReport",
    "VerifySuite",
    "abc_elements",
    "alpha_sq_for_entropy",
    "binary_entropy",
    "bruteforce_probs",
    "closed_form_discrepancy",
    "continuous_probs",
    "convergence_report",
    "discrete_probs",
    "ets_entropy",
    "evolve_interacting",
    "evolve_noninteracting",
    "fidelity_interacting",
    "fidelity_noninteracting",
    "fidelity_point",
    "gamma_sq_continuous",
    "gamma_sq_discrete",
    "hamiltonian_matrix",
    "interacting_probs_continuous",
    "interacting_probs_discrete",
    "internal_entropy",
    "internal_quadratic_entropy",
    "min_reachable_fidelity",
    "noninteracting_probs",
    "orthogonalization_time",
    "phi_from_fidelity",
    "quadratic_entropy_from_probs",
    "qubit_clock_probs",
    "reduced_density_bruteforce",
    "shannon_entropy_bits",
    "tau_for_distance",
    "theta_from_fidelity",
    "trajectory",
]
