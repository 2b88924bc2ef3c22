"""Shared array aliases and numeric tolerances."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt

# Dense complex matrix of dimension 1..8 (rho_S, rho_A, H_total, U)
ComplexMatrix = npt.NDArray[np.complex128]
# Complex amplitudes in the {|00>, |01>, |10>, |11>} basis
StateVector = npt.NDArray[np.complex128]
RealVector = npt.NDArray[np.float64]

MAX_DIM = 8

HERMITIAN_TOL = 1e-12
DENSITY_TOL = 1e-10
NORM_TOL = 1e-12
CLIP_REPORT_TOL = 1e-10
SMALL_ANGLE = 1e-6
