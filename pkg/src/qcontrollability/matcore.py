"""Dense complex linear-algebra kernels shared by the rest of the package.

Matrices are plain ``numpy`` arrays of dtype ``complex128``.  Every routine
here is a pure function of its inputs.
"""

from __future__ import annotations

import numpy as np
from numpy.typing import ArrayLike, NDArray

ComplexMatrix = NDArray[np.complex128]

#: relative singular-value cutoff used by :func:`nullspace`
NULLSPACE_RTOL = 1e-10
#: tolerance for the optional orthonormality check in :func:`orthonormal_residual`
ORTHONORMAL_TOL = 1e-9


class DimensionMismatchError(ValueError):
    """Two operands that must share a shape do not."""


class NotHermitianError(ValueError):
    """A matrix required to be Hermitian is not (within tolerance)."""


def as_matrix(A: ArrayLike) -> ComplexMatrix:
    """Return ``A`` as a finite, square complex128 array.

    Raises ``ValueError`` for non-square, empty, or non-finite input.
    """
    M = np.asarray(A, dtype=np.complex128)
    if M.ndim != 2 or M.shape[0] != M.shape[1] or M.shape[0] < 1:
        raise ValueError(f"expected a non-empty square matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix has non-finite entries")
    return M


def _same_shape(A: np.ndarray, B: np.ndarray) -> None:
    if A.shape != B.shape:
        raise DimensionMismatchError(f"shape mismatch: {A.shape} vs {B.shape}")


def commutator(A: ArrayLike, B: ArrayLike) -> ComplexMatrix:
    """Return ``AB - BA``."""
    A = as_matrix(A)
    B = as_matrix(B)
    _same_shape(A, B)
    return A @ B - B @ A


def traceless_part(H: ArrayLike) -> ComplexMatrix:
    """Remove the identity component: ``H - (Tr H / N) I``."""
    H = as_matrix(H)
    n = H.shape[0]
    return H - (np.trace(H) / n) * np.eye(n)


def frobenius_inner(A: ArrayLike, B: ArrayLike) -> float:
    """Real trace form ``Re Tr(A^dagger B)``.

    This is the Euclidean inner product of the matrices viewed as real vectors
    of length ``2 N^2``, so it measures real-linear independence.
    """
    A = np.asarray(A, dtype=np.complex128)
    B = np.asarray(B, dtype=np.complex128)
    _same_shape(A, B)
    return float(np.real(np.vdot(A, B)))


def frobenius_norm(A: ArrayLike) -> float:
    return float(np.linalg.norm(np.asarray(A, dtype=np.complex128)))


def orthonormal_residual(X: ArrayLike, basis, check: bool = False):
    """Project ``X`` off the real span of an orthonormal ``basis``.

    Parameters
    ----------
    X : array_like
        Matrix to project.
    basis : sequence of arrays or array of shape (k, N, N)
        Pairwise orthonormal under :func:`frobenius_inner`.
    check : bool
        Verify orthonormality of ``basis`` first (costs a Gram matrix).

    Returns
    -------
    residual : ndarray
        ``X - sum_i <b_i, X> b_i``.
    norm : float
        Frobenius norm of the residual.
    """
    X = np.asarray(X, dtype=np.complex128)
    if len(basis) == 0:
        return X.copy(), frobenius_norm(X)
    B = np.asarray(basis, dtype=np.complex128)
    if B.shape[1:] != X.shape:
        raise DimensionMismatchError(f"basis elements {B.shape[1:]} vs X {X.shape}")
    flat = B.reshape(len(B), -1)
    if check:
        gram = np.real(flat.conj() @ flat.T)
        if not np.allclose(gram, np.eye(len(B)), atol=ORTHONORMAL_TOL):
            raise ValueError("basis is not orthonormal under the real trace form")
    coeffs = np.real(flat.conj() @ X.ravel())
    residual = X - (coeffs @ flat).reshape(X.shape)
    return residual, frobenius_norm(residual)


def nullspace(M: ArrayLike, rtol: float = NULLSPACE_RTOL) -> list[np.ndarray]:
    """Orthonormal basis of ``{v : M v = 0}`` for a rectangular ``M``.

    Singular values ``<= rtol * sigma_max`` count as zero.  An all-zero ``M``
    has the whole space as its null space.
    """
    M = np.atleast_2d(np.asarray(M, dtype=np.complex128))
    if M.shape[0] < 1 or not np.all(np.isfinite(M)):
        raise ValueError("nullspace needs a finite matrix with at least one row")
    n = M.shape[1]
    _, s, vh = np.linalg.svd(M, full_matrices=True)
    smax = s[0] if s.size else 0.0
    if smax == 0.0:
        rank = 0
    else:
        rank = int(np.sum(s > rtol * smax))
    return [vh[k].conj() for k in range(rank, n)]


def sort_spectrum(values: ArrayLike) -> np.ndarray:
    """Sort by descending real part, then descending imaginary part.

    Keys are rounded to 10 decimals so round-off does not split ties.
    """
    values = np.asarray(values, dtype=np.complex128)
    order = np.lexsort((-np.round(values.imag, 10), -np.round(values.real, 10)))
    return values[order]


def eigenvalues(A: ArrayLike) -> np.ndarray:
    """All eigenvalues of ``A`` with multiplicity, in spectrum order.

    Hermitian input goes through ``eigvalsh`` so the imaginary parts are
    exactly zero.
    """
    A = as_matrix(A)
    try:
        if np.allclose(A, A.conj().T, atol=1e-12, rtol=0.0):
            vals = np.linalg.eigvalsh(A).astype(np.complex128)
        else:
            vals = np.linalg.eigvals(A)
    except np.linalg.LinAlgError as exc:
        raise np.linalg.LinAlgError(f"eigenvalue solver failed for\n{A}") from exc
    return sort_spectrum(vals)


def is_hermitian(H: ArrayLike, atol: float = 1e-10) -> bool:
    H = np.asarray(H, dtype=np.complex128)
    return bool(np.max(np.abs(H - H.conj().T), initial=0.0) <= atol)


def is_skew_hermitian(X: ArrayLike, atol: float = 1e-10) -> bool:
    X = np.asarray(X, dtype=np.complex128)
    return bool(np.max(np.abs(X + X.conj().T), initial=0.0) <= atol)


def hermitian_expm(H: ArrayLike, t: float) -> ComplexMatrix:
    """``exp(-i t H)`` for Hermitian ``H`` via its spectral decomposition."""
    H = as_matrix(H)
    if not is_hermitian(H, 1e-10):
        raise NotHermitianError("hermitian_expm needs a Hermitian matrix")
    H = 0.5 * (H + H.conj().T)
    w, V = np.linalg.eigh(H)
    return (V * np.exp(-1j * t * w)) @ V.conj().T


def random_unitary(n: int, rng: np.random.Generator) -> ComplexMatrix:
    """Haar-random unitary from the QR decomposition of a Ginibre matrix."""
    Z = (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)
    Q, R = np.linalg.qr(Z)
    d = np.diag(R)
    return Q * (d / np.abs(d))
