"""History states over an N-tick clock and their reduced system operators.

A clock of N ticks pairs tick k with the snapshot at angle
target_angle * k / (N - 1). Tracing out the (orthonormal) clock leaves the
uniform mixture of snapshots, whose two nonzero eigenvalues have closed
forms for both scenarios. The brute-force path builds that mixture
explicitly and diagonalizes it with smalg; it ships with the library
because `verify` runs it.
"""

from __future__ import annotations

import logging
import math
from collections.abc import Sequence
from dataclasses import dataclass
from enum import Enum

import numpy as np

from paw_entanglement import smalg
from paw_entanglement._types import DENSITY_TOL, NORM_TOL, SMALL_ANGLE, ComplexMatrix
from paw_entanglement.entanglement import ProbPair, shannon_entropy_bits
from paw_entanglement.exceptions import ValidationError
from paw_entanglement.model import (
    InteractingModel,
    NonInteractingModel,
    PhiState,
    evolve_interacting,
    evolve_noninteracting,
)

logger = logging.getLogger(__name__)

DEFAULT_N_GRID: tuple[int, ...] = tuple(2**k for k in range(1, 21))

_UNIT_EPSILON = NonInteractingModel(epsilon=1.0)
_UNIT_COUPLING = InteractingModel(coupling=1.0)


class Scenario(Enum):
    """The two physical setups a clock can record."""

    NON_INTERACTING = "noninteracting"
    INTERACTING = "interacting"


@dataclass(frozen=True)
class ClockSpec:
    """N ticks recording evolution up to target_angle.

    target_angle is theta = 2 epsilon t for NON_INTERACTING (which also
    needs alpha_sq) and phi = coupling * t for INTERACTING.
    """

    n_ticks: int
    target_angle: float
    scenario: Scenario
    alpha_sq: float | None = None

    def __post_init__(self) -> None:
        if self.n_ticks < 2:
            raise ValidationError(f"n_ticks must be >= 2, got {self.n_ticks}")
        if self.target_angle < 0:
            raise ValidationError(
                f"target_angle must be non-negative, got {self.target_angle}"
            )
        if self.scenario is Scenario.NON_INTERACTING:
            if self.alpha_sq is None:
                raise ValidationError("non-interacting clock needs alpha_sq")
            _check_alpha_sq(self.alpha_sq)


@dataclass(frozen=True)
class GammaValue:
    """|gamma(t)|^2, the squared clock-overlap coherence of rho_S."""

    gamma_sq: float

    def __post_init__(self) -> None:
        if not self.gamma_sq >= 0.0:
            raise ValidationError(f"gamma_sq must be non-negative, got {self.gamma_sq}")


@dataclass(frozen=True)
class AbcElements:
    """rho_S restricted to span{|00>, |11>} as [[a, c], [c*, b]]."""

    a: float
    b: float
    c: complex

    def __post_init__(self) -> None:
        if abs(self.a + self.b - 1.0) > NORM_TOL:
            raise ValidationError(f"a + b = {self.a + self.b!r}, expected 1")
        if abs(self.c) ** 2 > self.a * self.b + NORM_TOL:
            raise ValidationError("|c|^2 exceeds a*b")

    def matrix(self) -> ComplexMatrix:
        return np.array(
            [[self.a, self.c], [self.c.conjugate(), self.b]], dtype=np.complex128
        )


@dataclass(frozen=True)
class ConvergenceRow:
    n_ticks: int
    p_plus_discrete: float
    p_plus_continuous: float

    @property
    def abs_error(self) -> float:
        return abs(self.p_plus_discrete - self.p_plus_continuous)


def _check_alpha_sq(alpha_sq: float) -> None:
    if not 0.0 <= alpha_sq <= 1.0:
        raise ValidationError(f"alpha_sq must be in [0, 1], got {alpha_sq}")


def _check_angle(angle: float) -> None:
    if angle < 0:
        raise ValidationError(f"angle must be non-negative, got {angle}")


def _check_ticks(n_ticks: int) -> None:
    if n_ticks < 2:
        raise ValidationError(f"n_ticks must be >= 2, got {n_ticks}")


def _sinc(u: float) -> float:
    """sin(u)/u, switching to a 4th-order series near zero."""
    if abs(u) < SMALL_ANGLE:
        u2 = u * u
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0
    return math.sin(u) / u


def _dirichlet_ratio(n_ticks: int, half_step: float) -> float:
    """sin(N x) / (N sin x), the normalized sum of N unit phasors."""
    return _sinc(n_ticks * half_step) / _sinc(half_step)


def trajectory(spec: ClockSpec) -> list[PhiState]:
    last = spec.n_ticks - 1
    angles = [spec.target_angle * (k / last) for k in range(spec.n_ticks)]
    if spec.scenario is Scenario.INTERACTING:
        return [evolve_interacting(_UNIT_COUPLING, phi) for phi in angles]
    assert spec.alpha_sq is not None
    start = PhiState.from_alpha_sq(spec.alpha_sq)
    return [
        evolve_noninteracting(start, _UNIT_EPSILON, theta / 2.0) for theta in angles
    ]


def reduced_density_bruteforce(traj: Sequence[PhiState]) -> ComplexMatrix:
    """(1/N) sum_k |psi_k><psi_k|, i.e. Tr_T of the history state."""
    if not traj:
        raise ValidationError("trajectory is empty")
    snapshots = np.stack([state.to_vector() for state in traj])
    rho = snapshots.T @ snapshots.conj() / len(traj)
    rho = 0.5 * (rho + rho.conj().T)
    return smalg.validate_density_matrix(rho)


def bruteforce_probs(spec: ClockSpec) -> ProbPair:
    """The two largest oracle eigenvalues of the clock's rho_S."""
    rho = reduced_density_bruteforce(trajectory(spec))
    eigenvalues = smalg.hermitian_eigenvalues(rho)
    return ProbPair.from_values(eigenvalues[-1], eigenvalues[-2])


def qubit_clock_probs(overlap: float) -> ProbPair:
    """p+- = (1 +- |<psi1|psi0>|) / 2 for a two-tick clock."""
    if not -DENSITY_TOL <= overlap <= 1.0 + DENSITY_TOL:
        raise ValidationError(f"overlap must be in [0, 1], got {overlap}")
    f = min(max(overlap, 0.0), 1.0)
    return ProbPair(p_plus=(1.0 + f) / 2.0, p_minus=(1.0 - f) / 2.0)


def gamma_sq_discrete(alpha_sq: float, theta: float, n_ticks: int) -> GammaValue:
    """|gamma|^2 for an N-tick clock.

    The printed ratio [cos(N x) - 1] / [cos(x) - 1] with x = theta/(N-1)
    is evaluated as sin^2(N x/2) / sin^2(x/2), which avoids cancellation
    when x is small.
    """
    _check_alpha_sq(alpha_sq)
    _check_angle(theta)
    _check_ticks(n_ticks)
    half_step = 0.5 * theta / (n_ticks - 1)
    ratio = _dirichlet_ratio(n_ticks, half_step)
    return GammaValue(alpha_sq * (1.0 - alpha_sq) * ratio * ratio)


def gamma_sq_continuous(alpha_sq: float, theta: float) -> GammaValue:
    """N -> infinity limit 2|alpha|^2(1-|alpha|^2)(1 - cos theta)/theta^2."""
    _check_alpha_sq(alpha_sq)
    _check_angle(theta)
    s = _sinc(0.5 * theta)
    return GammaValue(alpha_sq * (1.0 - alpha_sq) * s * s)


def noninteracting_probs(alpha_sq: float, gamma: GammaValue) -> ProbPair:
    """p+- = (1 +- sqrt(1 - 4(|alpha|^2(1-|alpha|^2) - |gamma|^2))) / 2."""
    _check_alpha_sq(alpha_sq)
    coherence_bound = alpha_sq * (1.0 - alpha_sq)
    if gamma.gamma_sq > coherence_bound + NORM_TOL:
        raise ValidationError(
            f"gamma_sq {gamma.gamma_sq!r} exceeds |alpha|^2(1-|alpha|^2) "
            f"= {coherence_bound!r}"
        )
    # 1 - 4(a(1-a) - g) rewritten as (1-2a)^2 + 4g: same value, no cancellation
    discriminant = (1.0 - 2.0 * alpha_sq) ** 2 + 4.0 * gamma.gamma_sq
    root = math.sqrt(min(discriminant, 1.0))
    return ProbPair.from_values((1.0 + root) / 2.0, (1.0 - root) / 2.0)


def interacting_probs_discrete(phi: float, n_ticks: int) -> ProbPair:
    """Eigenvalues of the N-tick interacting rho_S.

    The csc^2 closed form reduces, with 1 - cos 2y = 2 sin^2 y, to
    1/2 (1 +- |sin(N y)| / (N |sin y|)) where y = phi / (N - 1); the
    principal root of the squared sines is the one that keeps both
    eigenvalues in [0, 1].
    """
    _check_angle(phi)
    _check_ticks(n_ticks)
    step = phi / (n_ticks - 1)
    r = abs(_dirichlet_ratio(n_ticks, step))
    return ProbPair.from_values(0.5 * (1.0 + r), 0.5 * (1.0 - r))


def interacting_probs_continuous(phi: float) -> ProbPair:
    """p+- = 1/2 (1 +- |sin phi| / phi)."""
    _check_angle(phi)
    r = abs(_sinc(phi))
    return ProbPair.from_values(0.5 * (1.0 + r), 0.5 * (1.0 - r))


def abc_elements(phi: float, n_ticks: int) -> AbcElements:
    """Direct evaluation of the a(t), b(t), c(t) sums."""
    _check_angle(phi)
    _check_ticks(n_ticks)
    angles = phi * (np.arange(n_ticks) / (n_ticks - 1))
    a = float(np.mean(np.cos(angles) ** 2))
    b = float(np.mean(np.sin(angles) ** 2))
    c = -0.5j * float(np.mean(np.sin(2.0 * angles)))
    return AbcElements(a=a, b=b, c=c)


def ets_entropy(p: ProbPair) -> float:
    """E(T,S) = -sum_k p_k log2 p_k."""
    return shannon_entropy_bits(p.as_tuple())


def discrete_probs(spec: ClockSpec) -> ProbPair:
    """Closed-form eigenvalues for the clock described by spec."""
    if spec.scenario is Scenario.INTERACTING:
        return interacting_probs_discrete(spec.target_angle, spec.n_ticks)
    assert spec.alpha_sq is not None
    gamma = gamma_sq_discrete(spec.alpha_sq, spec.target_angle, spec.n_ticks)
    return noninteracting_probs(spec.alpha_sq, gamma)


def continuous_probs(
    scenario: Scenario, angle: float, alpha_sq: float | None = None
) -> ProbPair:
    if scenario is Scenario.INTERACTING:
        return interacting_probs_continuous(angle)
    if alpha_sq is None:
        raise ValidationError("non-interacting scenario needs alpha_sq")
    return noninteracting_probs(alpha_sq, gamma_sq_continuous(alpha_sq, angle))


def convergence_report(
    scenario: Scenario,
    angle: float,
    n_grid: Sequence[int] = DEFAULT_N_GRID,
    alpha_sq: float | None = None,
) -> tuple[ConvergenceRow, ...]:
    """p+ at each N next to its N -> infinity limit, rows in ascending N."""
    if not n_grid:
        raise ValidationError("n_grid is empty")
    if any(b <= a for a, b in zip(n_grid, n_grid[1:], strict=False)):
        raise ValidationError(f"n_grid must be strictly ascending, got {list(n_grid)}")
    limit = continuous_probs(scenario, angle, alpha_sq).p_plus
    rows = tuple(
        ConvergenceRow(
            n_ticks=n,
            p_plus_discrete=discrete_probs(
                ClockSpec(n, angle, scenario, alpha_sq)
            ).p_plus,
            p_plus_continuous=limit,
        )
        for n in n_grid
    )
    logger.debug(
        "convergence %s angle=%g: final error %.3e at N=%d",
        scenario.value,
        angle,
        rows[-1].abs_error,
        rows[-1].n_ticks,
    )
    return rows
