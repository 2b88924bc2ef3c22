"""Two-qubit states and Hamiltonians with closed-form time evolution.

Units: hbar = 1. The basis order is {|00>, |01>, |10>, |11>} everywhere.
"""

from __future__ import annotations

import cmath
import logging
import math
from dataclasses import dataclass

import numpy as np

from paw_entanglement import smalg
from paw_entanglement._types import NORM_TOL, ComplexMatrix, StateVector
from paw_entanglement.exceptions import ValidationError

logger = logging.getLogger(__name__)

DISCREPANCY_REPORT_TOL = 1e-12


@dataclass(frozen=True)
class PhiState:
    """Pure state alpha|00> + beta|11>."""

    alpha: complex
    beta: complex

    def __post_init__(self) -> None:
        norm = abs(self.alpha) ** 2 + abs(self.beta) ** 2
        if abs(norm - 1.0) > NORM_TOL:
            raise ValidationError(f"PhiState is not normalized (norm^2 = {norm!r})")

    @classmethod
    def from_alpha_sq(cls, alpha_sq: float, beta_phase: float = 0.0) -> PhiState:
        if not 0.0 <= alpha_sq <= 1.0:
            raise ValidationError(f"alpha_sq must be in [0, 1], got {alpha_sq}")
        return cls(
            alpha=complex(math.sqrt(alpha_sq)),
            beta=math.sqrt(1.0 - alpha_sq) * cmath.exp(1j * beta_phase),
        )

    @property
    def alpha_sq(self) -> float:
        return abs(self.alpha) ** 2

    def to_vector(self) -> StateVector:
        return np.array([self.alpha, 0.0, 0.0, self.beta], dtype=np.complex128)

    def overlap(self, other: PhiState) -> complex:
        """<self|other>."""
        return self.alpha.conjugate() * other.alpha + self.beta.conjugate() * other.beta


@dataclass(frozen=True)
class NonInteractingModel:
    """H_A (x) I_B + I_A (x) H_B with H|1> = epsilon|1> on each qubit."""

    epsilon: float

    def __post_init__(self) -> None:
        if not self.epsilon > 0:
            raise ValidationError(f"epsilon must be positive, got {self.epsilon}")


@dataclass(frozen=True)
class InteractingModel:
    """Local terms plus -coupling(|11><00| + |00><11|)."""

    coupling: float
    epsilon: float = 0.0

    def __post_init__(self) -> None:
        if not self.coupling > 0:
            raise ValidationError(f"coupling must be positive, got {self.coupling}")
        if self.epsilon < 0:
            raise ValidationError(f"epsilon must be non-negative, got {self.epsilon}")


PairModel = NonInteractingModel | InteractingModel


def _check_time(t: float) -> None:
    if t < 0:
        raise ValidationError(f"negative evolution time {t} is unsupported")


def evolve_noninteracting(
    state: PhiState, model: NonInteractingModel, t: float
) -> PhiState:
    """alpha|00> + beta e^{-2i epsilon t}|11>."""
    _check_time(t)
    return PhiState(state.alpha, state.beta * cmath.exp(-2j * model.epsilon * t))


def evolve_interacting(model: InteractingModel, t: float) -> PhiState:
    """cos(phi)|00> + i sin(phi)|11> with phi = coupling * t, starting at |00>.

    This is the closed form with the local energies dropped; for
    epsilon > 0 see closed_form_discrepancy.
    """
    _check_time(t)
    phi = model.coupling * t
    return PhiState(complex(math.cos(phi)), 1j * math.sin(phi))


def hamiltonian_matrix(model: PairModel) -> ComplexMatrix:
    eps = model.epsilon
    h = np.diag([0.0, eps, eps, 2.0 * eps]).astype(np.complex128)
    if isinstance(model, InteractingModel):
        h[0, 3] = -model.coupling
        h[3, 0] = -model.coupling
    return h


def closed_form_discrepancy(model: InteractingModel, t: float) -> float:
    """Largest amplitude gap between exp(-iHt)|00> and evolve_interacting.

    Zero (to roundoff) when epsilon = 0; grows with epsilon otherwise.
    """
    _check_time(t)
    u = smalg.propagator(hamiltonian_matrix(model), t)
    exact = u @ np.array([1.0, 0.0, 0.0, 0.0], dtype=np.complex128)
    closed = evolve_interacting(model, t).to_vector()
    gap = float(np.max(np.abs(exact - closed)))
    if gap > DISCREPANCY_REPORT_TOL:
        logger.info(
            "closed-form interacting state differs from the propagator by %.3e "
            "(epsilon=%g, coupling=%g, t=%g)",
            gap,
            model.epsilon,
            model.coupling,
            t,
        )
    return gap
