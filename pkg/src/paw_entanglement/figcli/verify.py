"""Oracle-equivalence checks run by the `verify` subcommand.

Checks reach the closed forms through their modules (pawclock.x, not a
bound import) so a patched formula is what gets verified.
"""

from __future__ import annotations

import math

import numpy as np

from paw_entanglement import entanglement, metrics, model, pawclock, smalg
from paw_entanglement.checks import CheckCategory, OracleCheck
from paw_entanglement.figcli.config import SweepConfig
from paw_entanglement.pawclock import ClockSpec, Scenario
from paw_entanglement.report import VerifyReport
from paw_entanglement.suite import VerifySuite


def _random_state(rng: np.random.Generator) -> model.PhiState:
    return model.PhiState.from_alpha_sq(
        float(rng.uniform(0.0, 1.0)), float(rng.uniform(0.0, 2.0 * math.pi))
    )


def _pair_error(closed: entanglement.ProbPair, oracle: entanglement.ProbPair) -> float:
    return max(
        abs(closed.p_plus - oracle.p_plus), abs(closed.p_minus - oracle.p_minus)
    )


class DensityEigenvaluesCheck(OracleCheck):
    category = CheckCategory.SMALG
    name = "density eigenvalues in [0,1], sum 1"
    samples = 200

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        rho /= np.trace(rho).real
        values = smalg.hermitian_eigenvalues(rho)
        error = max(
            abs(float(values.sum()) - 1.0),
            max(0.0, -float(values[0])),
            max(0.0, float(values[-1]) - 1.0),
        )
        return error, f"sample={index}"


class EigenResidualCheck(OracleCheck):
    category = CheckCategory.SMALG
    name = "jacobi residual |MV - V diag(w)|"
    samples = 200

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        dim = int(rng.integers(1, 9))
        g = rng.uniform(-2, 2, (dim, dim)) + 1j * rng.uniform(-2, 2, (dim, dim))
        m = 0.5 * (g + g.conj().T)
        w, v = smalg.hermitian_eigh(m)
        return float(np.linalg.norm(m @ v - v * w)), f"sample={index}, dim={dim}"


class PropagatorNormCheck(OracleCheck):
    category = CheckCategory.SMALG
    name = "propagator preserves norm"
    samples = 1000
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        g = rng.uniform(-2, 2, (4, 4)) + 1j * rng.uniform(-2, 2, (4, 4))
        h = 0.5 * (g + g.conj().T)
        t = float(rng.uniform(0.0, 10.0))
        psi = rng.normal(size=4) + 1j * rng.normal(size=4)
        psi /= np.linalg.norm(psi)
        u = smalg.propagator(h, t)
        return abs(float(np.linalg.norm(u @ psi)) - 1.0), f"sample={index}, t={t:.12g}"


class PartialTraceSpectrumCheck(OracleCheck):
    category = CheckCategory.SMALG
    name = "partial trace spectrum {|a|^2, |b|^2}"
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        state = _random_state(rng)
        rho_a = smalg.partial_trace_B(smalg.projector(state.to_vector()))
        values = smalg.hermitian_eigenvalues(rho_a)
        expected = sorted([state.alpha_sq, 1.0 - state.alpha_sq])
        error = float(np.max(np.abs(values - expected)))
        return error, f"alpha_sq={state.alpha_sq:.12g}"


class NonInteractingPropagatorCheck(OracleCheck):
    category = CheckCategory.MODEL
    name = "evolve_noninteracting vs propagator"
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        state = _random_state(rng)
        eps = float(rng.uniform(0.1, 2.0))
        t = float(rng.uniform(0.0, 2.0 * math.pi)) / eps
        pair = model.NonInteractingModel(epsilon=eps)
        closed = model.evolve_noninteracting(state, pair, t).to_vector()
        exact = smalg.propagator(model.hamiltonian_matrix(pair), t) @ state.to_vector()
        error = float(np.max(np.abs(closed - exact)))
        return error, f"alpha_sq={state.alpha_sq:.12g}, epsilon={eps:.12g}, t={t:.12g}"


class InteractingPropagatorCheck(OracleCheck):
    category = CheckCategory.MODEL
    name = "evolve_interacting vs propagator (epsilon=0)"
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        lam = float(rng.uniform(0.1, 3.0))
        t = float(rng.uniform(0.0, 4.0 * math.pi)) / lam
        pair = model.InteractingModel(coupling=lam)
        closed = model.evolve_interacting(pair, t).to_vector()
        start = np.array([1, 0, 0, 0], dtype=np.complex128)
        exact = smalg.propagator(model.hamiltonian_matrix(pair), t) @ start
        return float(np.max(np.abs(closed - exact))), f"coupling={lam:.12g}, t={t:.12g}"


class InternalEntropyCheck(OracleCheck):
    category = CheckCategory.ENTANGLEMENT
    name = "S(A) vs spectrum of partial trace"

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        state = _random_state(rng)
        rho_a = smalg.partial_trace_B(smalg.projector(state.to_vector()))
        oracle = entanglement.shannon_entropy_bits(
            smalg.clip_probabilities(smalg.hermitian_eigenvalues(rho_a))
        )
        error = abs(entanglement.internal_entropy(state) - oracle)
        return error, f"alpha_sq={state.alpha_sq:.12g}"


class QuadraticEntropyCheck(OracleCheck):
    category = CheckCategory.ENTANGLEMENT
    name = "S2(A) vs purity of partial trace"
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        state = _random_state(rng)
        rho_a = smalg.partial_trace_B(smalg.projector(state.to_vector()))
        oracle = 2.0 * (1.0 - smalg.purity(rho_a))
        error = abs(entanglement.internal_quadratic_entropy(state) - oracle)
        return error, f"alpha_sq={state.alpha_sq:.12g}"


class NonInteractingClockCheck(OracleCheck):
    category = CheckCategory.PAWCLOCK
    name = "non-interacting p+- vs brute-force rho_S"
    samples = 200

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        a = float(rng.uniform(0.0, 1.0))
        theta = float(rng.uniform(0.0, 2.0 * math.pi))
        n = int(rng.integers(2, 257))
        closed = pawclock.noninteracting_probs(
            a, pawclock.gamma_sq_discrete(a, theta, n)
        )
        oracle = pawclock.bruteforce_probs(
            ClockSpec(n, theta, Scenario.NON_INTERACTING, a)
        )
        return (
            _pair_error(closed, oracle),
            f"alpha_sq={a:.12g}, theta={theta:.12g}, n_ticks={n}",
        )


class InteractingClockCheck(OracleCheck):
    category = CheckCategory.PAWCLOCK
    name = "interacting p+- vs brute-force rho_S and abc"
    samples = 200

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        phi = float(rng.uniform(0.0, 2.0 * math.pi))
        n = int(rng.integers(2, 257))
        closed = pawclock.interacting_probs_discrete(phi, n)
        oracle = pawclock.bruteforce_probs(ClockSpec(n, phi, Scenario.INTERACTING))
        abc_values = smalg.hermitian_eigenvalues(pawclock.abc_elements(phi, n).matrix())
        abc = entanglement.ProbPair.from_values(abc_values[1], abc_values[0])
        error = max(_pair_error(closed, oracle), _pair_error(closed, abc))
        return error, f"phi={phi:.12g}, n_ticks={n}"


class QubitClockReductionCheck(OracleCheck):
    category = CheckCategory.PAWCLOCK
    name = "N=2 discrete == qubit clock"
    samples = 2500
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        a = (index // 50) / 49
        theta = math.pi * (index % 50) / 49
        discrete = pawclock.noninteracting_probs(
            a, pawclock.gamma_sq_discrete(a, theta, 2)
        )
        qubit = pawclock.qubit_clock_probs(metrics.fidelity_noninteracting(a, theta))
        return _pair_error(discrete, qubit), f"alpha_sq={a:.12g}, theta={theta:.12g}"


class MaximalCoincidenceCheck(OracleCheck):
    category = CheckCategory.PAWCLOCK
    name = "alpha_sq=1/2 at theta=2phi == interacting"
    samples = 201
    tolerance = 1e-12

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        phi = math.pi * index / 200
        noninteracting = pawclock.noninteracting_probs(
            0.5, pawclock.gamma_sq_continuous(0.5, 2.0 * phi)
        )
        interacting = pawclock.interacting_probs_continuous(phi)
        return _pair_error(noninteracting, interacting), f"phi={phi:.12g}"


class FidelityRoundTripCheck(OracleCheck):
    category = CheckCategory.METRICS
    name = "theta_from_fidelity o fidelity == id"

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        a = float(rng.uniform(0.05, 0.95))
        theta = float(rng.uniform(0.05, math.pi - 0.05))
        back = metrics.theta_from_fidelity(a, metrics.fidelity_noninteracting(a, theta))
        return abs(back - theta), f"alpha_sq={a:.12g}, theta={theta:.12g}"


class TauHalfThetaCheck(OracleCheck):
    category = CheckCategory.METRICS
    name = "tau(fidelity(theta)) == theta/2"

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        a = float(rng.uniform(0.05, 0.95))
        theta = float(rng.uniform(0.05, math.pi - 0.05))
        tau = metrics.tau_for_distance(a, metrics.fidelity_noninteracting(a, theta))
        return abs(tau - theta / 2.0), f"alpha_sq={a:.12g}, theta={theta:.12g}"


class ClosedFormDiscrepancyCheck(OracleCheck):
    """How far the closed interacting form drifts once epsilon > 0."""

    category = CheckCategory.DIAGNOSTIC
    name = "interacting closed form vs propagator (epsilon=1)"
    samples = 20
    informational = True

    def measure(self, rng: np.random.Generator, index: int) -> tuple[float, str]:
        lam = float(rng.uniform(0.5, 3.0))
        t = float(rng.uniform(0.0, math.pi))
        gap = model.closed_form_discrepancy(
            model.InteractingModel(coupling=lam, epsilon=1.0), t
        )
        return gap, f"coupling={lam:.12g}, t={t:.12g}"


def default_suite() -> VerifySuite:
    return VerifySuite(
        DensityEigenvaluesCheck(),
        EigenResidualCheck(),
        PropagatorNormCheck(),
        PartialTraceSpectrumCheck(),
        NonInteractingPropagatorCheck(),
        InteractingPropagatorCheck(),
        InternalEntropyCheck(),
        QuadraticEntropyCheck(),
        NonInteractingClockCheck(),
        InteractingClockCheck(),
        QubitClockReductionCheck(),
        MaximalCoincidenceCheck(),
        FidelityRoundTripCheck(),
        TauHalfThetaCheck(),
        ClosedFormDiscrepancyCheck(),
    )


def run_verify(cfg: SweepConfig, suite: VerifySuite | None = None) -> VerifyReport:
    return (suite or default_suite()).run(cfg.seed)
