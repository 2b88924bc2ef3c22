"""Fidelity, evolution time and orthogonalization time.

Times are returned in units where hbar = 1, so `tau_for_distance` is in
units of hbar/epsilon. Only the first-passage (principal) branch is
reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from paw_entanglement._types import NORM_TOL
from paw_entanglement.exceptions import DomainError, PaWInternalError, ValidationError
from paw_entanglement.model import InteractingModel, NonInteractingModel, PairModel

ARCCOS_CLAMP_TOL = 1e-12


@dataclass(frozen=True)
class FidelityPoint:
    """Overlap |<psi(t)|psi(0)>| reached at a given evolution angle."""

    dpsi: float
    angle: float

    def __post_init__(self) -> None:
        if not 0.0 <= self.dpsi <= 1.0:
            raise ValidationError(f"fidelity must be in [0, 1], got {self.dpsi}")
        if self.angle < 0:
            raise ValidationError(f"angle must be non-negative, got {self.angle}")


def _check_alpha_sq(alpha_sq: float) -> None:
    if not 0.0 <= alpha_sq <= 1.0:
        raise ValidationError(f"alpha_sq must be in [0, 1], got {alpha_sq}")


def _clamped_arccos(x: float) -> float:
    if abs(x) > 1.0 + ARCCOS_CLAMP_TOL:
        raise PaWInternalError(f"arccos argument {x!r} outside [-1, 1]")
    return math.acos(min(max(x, -1.0), 1.0))


def fidelity_noninteracting(alpha_sq: float, theta: float) -> float:
    """sqrt(1 + 2|alpha|^2(1-|alpha|^2)(cos theta - 1)), theta = 2 epsilon t."""
    _check_alpha_sq(alpha_sq)
    if theta < 0:
        raise ValidationError(f"theta must be non-negative, got {theta}")
    # cos(theta) - 1 = -2 sin^2(theta/2)
    radicand = 1.0 - 4.0 * alpha_sq * (1.0 - alpha_sq) * math.sin(0.5 * theta) ** 2
    if radicand < -NORM_TOL:
        raise PaWInternalError(f"negative fidelity radicand {radicand!r}")
    return math.sqrt(max(radicand, 0.0))


def fidelity_interacting(phi: float) -> float:
    return abs(math.cos(phi))


def phi_from_fidelity(dpsi: float) -> float:
    """phi = arccos(dpsi), the interacting angle that reaches fidelity dpsi."""
    if not 0.0 <= dpsi <= 1.0 + ARCCOS_CLAMP_TOL:
        raise ValidationError(f"fidelity must be in [0, 1], got {dpsi}")
    return _clamped_arccos(dpsi)


def min_reachable_fidelity(alpha_sq: float) -> float:
    """Fidelity at theta = pi, the farthest local dynamics can go."""
    _check_alpha_sq(alpha_sq)
    return abs(1.0 - 2.0 * alpha_sq)


def theta_from_fidelity(alpha_sq: float, dpsi: float) -> float:
    """Invert fidelity_noninteracting on the principal branch theta in [0, pi]."""
    _check_alpha_sq(alpha_sq)
    if not 0.0 <= dpsi <= 1.0 + NORM_TOL:
        raise ValidationError(f"fidelity must be in [0, 1], got {dpsi}")
    if dpsi >= 1.0:
        return 0.0
    coherence = alpha_sq * (1.0 - alpha_sq)
    if coherence == 0.0:
        raise DomainError(
            "target distance unreachable for this entanglement "
            "(state is stationary up to phase)"
        )
    if dpsi < min_reachable_fidelity(alpha_sq) - NORM_TOL:
        raise DomainError(
            f"target distance unreachable for this entanglement: fidelity {dpsi} "
            f"below minimum {min_reachable_fidelity(alpha_sq)} at alpha_sq={alpha_sq}"
        )
    argument = (dpsi * dpsi - 1.0) / (2.0 * coherence) + 1.0
    return math.acos(min(max(argument, -1.0), 1.0))


def tau_for_distance(alpha_sq: float, dpsi: float) -> float:
    """Time (units hbar/epsilon) to first reach fidelity dpsi."""
    return 0.5 * theta_from_fidelity(alpha_sq, dpsi)


def fidelity_point(alpha_sq: float, theta: float) -> FidelityPoint:
    return FidelityPoint(dpsi=fidelity_noninteracting(alpha_sq, theta), angle=theta)


def orthogonalization_time(model: PairModel, alpha_sq: float | None = None) -> float:
    """t* = pi/(2 epsilon) or pi/(2 coupling).

    A non-interacting pair only reaches an orthogonal state when maximally
    entangled, so alpha_sq must be 1/2 there.
    """
    if isinstance(model, InteractingModel):
        return math.pi / (2.0 * model.coupling)
    assert isinstance(model, NonInteractingModel)
    if alpha_sq is None or abs(alpha_sq - 0.5) > NORM_TOL:
        raise DomainError(
            f"orthogonal state unreachable at alpha_sq={alpha_sq}; "
            "only alpha_sq = 1/2 reaches it"
        )
    return math.pi / (2.0 * model.epsilon)
