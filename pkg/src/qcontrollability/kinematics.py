"""Density matrices, kinematical equivalence and expectation-value bounds."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .matcore import DimensionMismatchError, as_matrix

HERMITIAN_TOL = 1e-10
RANK_TOL = 1e-9
EQUIVALENCE_TOL = 1e-9


class DensityMatrixError(ValueError):
    """Base class for density-matrix validation failures."""


class NotHermitianDensityError(DensityMatrixError):
    pass


class NegativeEigenvalueError(DensityMatrixError):
    pass


class TraceError(DensityMatrixError):
    pass


def _eigh_descending(M: np.ndarray):
    w, V = np.linalg.eigh(M)
    return w[::-1].copy(), V[:, ::-1].copy()


@dataclass(frozen=True)
class DensityMatrix:
    """Validated density matrix with its spectral resolution cached.

    ``weights`` are the eigenvalues in non-increasing order and the columns of
    ``eigenvectors`` the matching eigenstates.
    """

    matrix: np.ndarray
    weights: np.ndarray
    eigenvectors: np.ndarray

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]

    @property
    def spectrum(self) -> np.ndarray:
        return self.weights.astype(np.complex128)


@dataclass(frozen=True)
class Observable:
    matrix: np.ndarray
    eigenvalues: np.ndarray
    eigenvectors: np.ndarray

    @classmethod
    def from_matrix(cls, A) -> "Observable":
        A = as_matrix(A)
        if np.max(np.abs(A - A.conj().T)) > HERMITIAN_TOL:
            raise ValueError("observable must be Hermitian")
        A = 0.5 * (A + A.conj().T)
        lam, V = _eigh_descending(A)
        return cls(A, lam, V)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


def validate_density(rho) -> DensityMatrix:
    """Check Hermiticity, positivity and unit trace; raise the matching error otherwise."""
    rho = as_matrix(rho)
    if np.max(np.abs(rho - rho.conj().T)) > HERMITIAN_TOL:
        raise NotHermitianDensityError("density matrix is not Hermitian")
    rho = 0.5 * (rho + rho.conj().T)
    w, V = _eigh_descending(rho)
    if w[-1] < -HERMITIAN_TOL:
        raise NegativeEigenvalueError(f"density matrix has negative eigenvalue {w[-1]:.3g}")
    tr = np.real(np.trace(rho))
    if abs(tr - 1.0) > HERMITIAN_TOL:
        raise TraceError(f"density matrix has trace {tr:.12g}, expected 1")
    return DensityMatrix(rho, w, V)


def pure_state(psi) -> DensityMatrix:
    psi = np.asarray(psi, dtype=np.complex128)
    psi = psi / np.linalg.norm(psi)
    return validate_density(np.outer(psi, psi.conj()))


def rank(rho: DensityMatrix) -> int:
    return int(np.sum(rho.weights > RANK_TOL))


def purity_class(rho: DensityMatrix):
    """``"pure"`` for rank one, otherwise ``("mixed", rank)``."""
    r = rank(rho)
    return "pure" if r == 1 else ("mixed", r)


def is_pure(rho: DensityMatrix) -> bool:
    return rank(rho) == 1


def kinematically_equivalent(rho0: DensityMatrix, rho1: DensityMatrix) -> bool:
    """Unitarily related iff the sorted spectra agree."""
    if rho0.dim != rho1.dim:
        raise DimensionMismatchError(f"dimensions differ: {rho0.dim} vs {rho1.dim}")
    return bool(np.max(np.abs(rho0.weights - rho1.weights)) <= EQUIVALENCE_TOL)


def expectation(rho: DensityMatrix, A: Observable) -> float:
    return float(np.real(np.trace(rho.matrix @ A.matrix)))


def expectation_bounds(rho: DensityMatrix, A: Observable) -> tuple[float, float]:
    """Range of ``Tr(rho' A)`` over all ``rho'`` unitarily equivalent to ``rho``.

    Pairing the weights with the eigenvalues of ``A`` in the same order gives
    the maximum, in opposite order the minimum.
    """
    if rho.dim != A.dim:
        raise DimensionMismatchError(f"dimensions differ: {rho.dim} vs {A.dim}")
    hi = float(np.dot(rho.weights, A.eigenvalues))
    lo = float(np.dot(rho.weights, A.eigenvalues[::-1]))
    return lo, hi


def extremal_states(rho: DensityMatrix, A: Observable) -> tuple[DensityMatrix, DensityMatrix]:
    """States in the orbit of ``rho`` attaining the lower and upper bound.

    With degenerate eigenvalues the eigenbasis returned by the solver is used;
    any choice attains the bound.
    """
    if rho.dim != A.dim:
        raise DimensionMismatchError(f"dimensions differ: {rho.dim} vs {A.dim}")
    V = A.eigenvectors
    plus = (V * rho.weights) @ V.conj().T
    minus = (V * rho.weights[::-1]) @ V.conj().T
    return validate_density(minus), validate_density(plus)
