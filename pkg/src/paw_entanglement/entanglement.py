"""Internal entanglement measures and entropy functionals."""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.optimize import bisect
from scipy.special import entr

from paw_entanglement import smalg
from paw_entanglement._types import DENSITY_TOL
from paw_entanglement.exceptions import ValidationError
from paw_entanglement.model import PhiState

PROB_SUM_TOL = 1e-8
BISECT_XTOL = 1e-12
BISECT_MAXITER = 200


@dataclass(frozen=True)
class ProbPair:
    """The two nonzero eigenvalues of a rank <= 2 density operator."""

    p_plus: float
    p_minus: float

    def __post_init__(self) -> None:
        if abs(self.p_plus + self.p_minus - 1.0) > DENSITY_TOL:
            raise ValidationError(
                f"probabilities {self.p_plus!r}, {self.p_minus!r} do not sum to 1"
            )
        if not (0.0 <= self.p_minus <= self.p_plus <= 1.0):
            raise ValidationError(
                f"expected 0 <= p_minus <= p_plus <= 1, got "
                f"({self.p_plus!r}, {self.p_minus!r})"
            )

    @classmethod
    def from_values(cls, first: float, second: float) -> ProbPair:
        """Clip into [0, 1] and order so that p_plus >= p_minus."""
        low, high = sorted(float(x) for x in smalg.clip_probabilities([first, second]))
        return cls(p_plus=high, p_minus=low)

    def as_tuple(self) -> tuple[float, float]:
        return self.p_plus, self.p_minus


def shannon_entropy_bits(probs: Sequence[float] | np.ndarray) -> float:
    """-sum p log2 p with 0 log 0 = 0."""
    p = np.asarray(probs, dtype=np.float64)
    if np.any(p < -DENSITY_TOL) or np.any(p > 1.0 + DENSITY_TOL):
        raise ValidationError(f"probabilities must lie in [0, 1], got {p.tolist()}")
    if abs(float(p.sum()) - 1.0) > PROB_SUM_TOL:
        raise ValidationError(f"probabilities sum to {p.sum()!r}, not 1")
    return float(np.sum(entr(np.clip(p, 0.0, 1.0))) / math.log(2.0))


def binary_entropy(alpha_sq: float) -> float:
    return shannon_entropy_bits([alpha_sq, 1.0 - alpha_sq])


def internal_entropy(state: PhiState) -> float:
    """S(A) of alpha|00> + beta|11>."""
    return binary_entropy(state.alpha_sq)


def internal_quadratic_entropy(state: PhiState) -> float:
    """S2(A) = 2(1 - Tr rho_A^2) = 4|alpha|^2 (1 - |alpha|^2)."""
    a = state.alpha_sq
    return 4.0 * a * (1.0 - a)


def quadratic_entropy_from_probs(p: ProbPair) -> float:
    return 4.0 * p.p_plus * p.p_minus


def alpha_sq_for_entropy(target_s: float) -> float:
    """Smallest |alpha|^2 in [0, 1/2] whose S(A) equals target_s."""
    if not 0.0 <= target_s <= 1.0:
        raise ValidationError(f"target entropy must be in [0, 1], got {target_s}")
    if target_s == 0.0:
        return 0.0
    if target_s == 1.0:
        return 0.5
    root: float = bisect(
        lambda a: binary_entropy(a) - target_s,
        0.0,
        0.5,
        xtol=BISECT_XTOL,
        maxiter=BISECT_MAXITER,
    )
    return root
