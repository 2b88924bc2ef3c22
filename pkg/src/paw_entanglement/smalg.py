"""Small dense complex linear algebra used as the brute-force oracle.

Everything here works on numpy arrays of dimension at most 8. The
eigensolver is a cyclic Jacobi iteration on the Hermitian matrix, so the
oracle does not share code with the closed forms it checks.
"""

from __future__ import annotations

import logging
import math
from itertools import combinations

import numpy as np
import numpy.typing as npt

from paw_entanglement._types import (
    CLIP_REPORT_TOL,
    DENSITY_TOL,
    HERMITIAN_TOL,
    MAX_DIM,
    ComplexMatrix,
    RealVector,
    StateVector,
)
from paw_entanglement.exceptions import PaWInternalError, ValidationError

logger = logging.getLogger(__name__)

JACOBI_TOL = 1e-14
JACOBI_MAX_SWEEPS = 64


def as_matrix(values: npt.ArrayLike) -> ComplexMatrix:
    """Coerce to a square complex128 matrix with 1 <= dim <= 8."""
    m = np.array(values, dtype=np.complex128)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValidationError(f"expected a square matrix, got shape {m.shape}")
    if not 1 <= m.shape[0] <= MAX_DIM:
        raise ValidationError(f"matrix dimension must be in 1..{MAX_DIM}")
    if not np.all(np.isfinite(m)):
        raise ValidationError("matrix has non-finite entries")
    return m


def is_hermitian(matrix: ComplexMatrix, tol: float = HERMITIAN_TOL) -> bool:
    return bool(np.max(np.abs(matrix - matrix.conj().T)) <= tol)


def validate_hermitian(values: npt.ArrayLike) -> ComplexMatrix:
    m = as_matrix(values)
    if not is_hermitian(m):
        raise ValidationError("matrix is not Hermitian")
    return m


def _off_diagonal_norm(a: ComplexMatrix) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _rotate(a: ComplexMatrix, v: ComplexMatrix, p: int, q: int) -> None:
    """Zero a[p, q] with a unitary plane rotation, in place."""
    apq = a[p, q]
    magnitude = abs(apq)
    if magnitude == 0.0:
        return
    # Strip the phase of a[p, q], then rotate the real 2x2 block.
    phase_conj = np.conj(apq) / magnitude
    theta = 0.5 * math.atan2(2.0 * magnitude, a[q, q].real - a[p, p].real)
    c, s = math.cos(theta), math.sin(theta)

    g = np.eye(a.shape[0], dtype=np.complex128)
    g[p, p] = c
    g[p, q] = s
    g[q, p] = -s * phase_conj
    g[q, q] = c * phase_conj

    a[:] = g.conj().T @ a @ g
    a[p, q] = 0.0
    a[q, p] = 0.0
    v[:] = v @ g


def hermitian_eigh(values: npt.ArrayLike) -> tuple[RealVector, ComplexMatrix]:
    """Eigen-decompose a Hermitian matrix by cyclic Jacobi rotations.

    Returns ascending eigenvalues and the matching eigenvectors as
    columns. Raises ValidationError for non-Hermitian input.
    """
    a = validate_hermitian(values).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    tol = JACOBI_TOL * max(1.0, float(np.linalg.norm(a)))

    for sweep in range(JACOBI_MAX_SWEEPS + 1):
        if _off_diagonal_norm(a) < tol:
            logger.debug("jacobi converged after %d sweeps (dim=%d)", sweep, n)
            break
        if sweep == JACOBI_MAX_SWEEPS:
            raise PaWInternalError(
                f"Jacobi iteration did not converge in {JACOBI_MAX_SWEEPS} sweeps"
            )
        for p, q in combinations(range(n), 2):
            _rotate(a, v, p, q)

    eigenvalues = np.real(np.diag(a)).astype(np.float64)
    order = np.argsort(eigenvalues, kind="stable")
    return eigenvalues[order], v[:, order]


def hermitian_eigenvalues(values: npt.ArrayLike) -> RealVector:
    return hermitian_eigh(values)[0]


def propagator(h: npt.ArrayLike, t: float, hbar: float = 1.0) -> ComplexMatrix:
    """exp(-iHt/hbar) through the spectral decomposition of H."""
    if hbar <= 0:
        raise ValidationError(f"hbar must be positive, got {hbar}")
    energies, vectors = hermitian_eigh(h)
    phases = np.exp(-1j * energies * t / hbar)
    u: ComplexMatrix = (vectors * phases) @ vectors.conj().T
    return u


def projector(psi: npt.ArrayLike) -> ComplexMatrix:
    """|psi><psi| for a state vector."""
    vec: StateVector = np.asarray(psi, dtype=np.complex128).ravel()
    return np.outer(vec, vec.conj())


def validate_density_matrix(values: npt.ArrayLike) -> ComplexMatrix:
    """Check Hermiticity, unit trace and positivity to DENSITY_TOL."""
    rho = validate_hermitian(values)
    trace = complex(np.trace(rho))
    if abs(trace - 1.0) > DENSITY_TOL:
        raise ValidationError(f"density matrix trace is {trace.real:.3e}, not 1")
    lowest = float(hermitian_eigenvalues(rho)[0])
    if lowest < -DENSITY_TOL:
        raise ValidationError(
            f"density matrix is not positive semidefinite (eigenvalue {lowest:.3e})"
        )
    return rho


def partial_trace_B(values: npt.ArrayLike) -> ComplexMatrix:
    """Trace out the second qubit of a 4x4 two-qubit density matrix."""
    rho = validate_density_matrix(values)
    if rho.shape != (4, 4):
        raise ValidationError(f"partial_trace_B expects 4x4, got {rho.shape}")
    reduced: ComplexMatrix = np.einsum("ijkj->ik", rho.reshape(2, 2, 2, 2))
    return reduced


def purity(values: npt.ArrayLike) -> float:
    """Tr(rho^2) of a validated density matrix."""
    rho = validate_density_matrix(values)
    return float(np.real(np.trace(rho @ rho)))


def clip_probabilities(values: npt.ArrayLike) -> RealVector:
    """Clip eigenvalues to [0, 1] before they are used as probabilities."""
    raw = np.asarray(values, dtype=np.float64)
    clipped = np.clip(raw, 0.0, 1.0)
    excess = float(np.max(np.abs(raw - clipped), initial=0.0))
    if excess > CLIP_REPORT_TOL:
        logger.warning("clipped eigenvalues into [0, 1] by %.3e", excess)
    return clipped
