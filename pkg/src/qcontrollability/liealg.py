"""Dynamical Lie algebras: commutator closure, symplectic forms, classification.

The dynamical Lie algebra of ``H(t) = H_0 + sum_m f_m(t) H_m`` is the real Lie
algebra generated by the skew-Hermitian matrices ``i H_m``.  We work with the
algebra generated by their trace-zero parts, which is a subalgebra of su(N),
and keep track separately of whether any ``H_m`` carries an identity component.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .matcore import (
    as_matrix,
    eigenvalues,
    frobenius_norm,
    is_skew_hermitian,
    nullspace,
    traceless_part,
)

logger = logging.getLogger(__name__)

#: a normalized candidate is new if its residual exceeds this
INDEPENDENCE_TOL = 1e-8
#: commutators smaller than this (basis elements have unit norm) are zero
ZERO_BRACKET_TOL = 1e-10
TRACE_TOL = 1e-10
SPECTRUM_TOL = 1e-8
DEGENERATE_TOL = 1e-8


class AlgebraType(enum.Enum):
    SU_N = "su"
    SP_HALF_N = "sp"
    OTHER = "other"


@dataclass(frozen=True)
class GeneratorSet:
    """Skew-Hermitian generators ``i H_m`` together with the traces ``Tr H_m``."""

    generators: tuple
    traces: tuple

    def __post_init__(self):
        if len(self.generators) == 0:
            raise ValueError("need at least one generator")
        shapes = {g.shape for g in self.generators}
        if len(shapes) != 1:
            raise ValueError(f"generators have differing shapes: {shapes}")
        for g in self.generators:
            if not is_skew_hermitian(g, 1e-10):
                raise ValueError("generator is not skew-Hermitian")

    @classmethod
    def from_hamiltonians(cls, hamiltonians: Sequence) -> "GeneratorSet":
        mats = [as_matrix(H) for H in hamiltonians]
        return cls(
            generators=tuple(1j * H for H in mats),
            traces=tuple(float(np.real(np.trace(H))) for H in mats),
        )

    @classmethod
    def from_skew(cls, generators: Sequence) -> "GeneratorSet":
        mats = [as_matrix(X) for X in generators]
        # Tr(iH) = i Tr(H)
        return cls(
            generators=tuple(mats),
            traces=tuple(float(np.imag(np.trace(X))) for X in mats),
        )

    @property
    def dim(self) -> int:
        return self.generators[0].shape[0]

    def traceless(self) -> list:
        return [traceless_part(g) for g in self.generators]


@dataclass(frozen=True)
class AlgebraBasis:
    """Orthonormal basis (real trace form) of a subalgebra of su(N).

    ``elements`` has shape ``(dimension, N, N)``.
    """

    elements: np.ndarray

    @property
    def dimension(self) -> int:
        return int(self.elements.shape[0])

    @property
    def dim_space(self) -> int:
        return int(self.elements.shape[1])

    def __len__(self):
        return self.dimension

    def __iter__(self):
        return iter(self.elements)


@dataclass(frozen=True)
class SymplecticForm:
    J: np.ndarray
    normalization: complex = 1.0


@dataclass(frozen=True)
class Degrees:
    completely: bool
    density_matrix: bool
    observable: bool
    pure_state: bool


@dataclass(frozen=True)
class Classification:
    algebra_type: AlgebraType
    dimension: int
    dim_space: int
    has_identity_component: bool
    degrees: Degrees
    symplectic: Optional[SymplecticForm] = field(default=None, compare=False)

    @property
    def label(self) -> str:
        """Isomorphism class of the full algebra, e.g. ``u(4)`` or ``sp(3)+u(1)``."""
        n = self.dim_space
        if self.algebra_type is AlgebraType.SU_N:
            return f"u({n})" if self.has_identity_component else f"su({n})"
        if self.algebra_type is AlgebraType.SP_HALF_N:
            base = f"sp({n // 2})"
        else:
            base = f"other({self.dimension})"
        return base + "+u(1)" if self.has_identity_component else base


class _ClosureBuilder:
    """Incremental Gram-Schmidt store for the closure basis."""

    def __init__(self, n: int):
        self.n = n
        self.max_dim = n * n - 1
        self.flat = np.zeros((max(self.max_dim, 1), n * n), dtype=np.complex128)
        self.size = 0

    @property
    def full(self) -> bool:
        return self.size >= self.max_dim

    def _project(self, v: np.ndarray) -> np.ndarray:
        B = self.flat[: self.size]
        return v - np.real(B.conj() @ v) @ B

    def residual_norms(self, V: np.ndarray) -> np.ndarray:
        B = self.flat[: self.size]
        R = V - np.real(V @ B.conj().T) @ B
        return np.linalg.norm(R, axis=1)

    def insert(self, X: np.ndarray) -> bool:
        if self.full:
            return False
        X = traceless_part(0.5 * (X - X.conj().T))
        nrm = frobenius_norm(X)
        if nrm < ZERO_BRACKET_TOL:
            return False
        v = X.ravel() / nrm
        r = self._project(v)
        rn = np.linalg.norm(r)
        if rn <= INDEPENDENCE_TOL:
            return False
        # second pass keeps the basis orthonormal to machine precision
        r = self._project(r / rn)
        self.flat[self.size] = r / np.linalg.norm(r)
        self.size += 1
        return True

    def basis(self) -> AlgebraBasis:
        return AlgebraBasis(self.flat[: self.size].reshape(self.size, self.n, self.n).copy())


def generate_closure(gens: GeneratorSet) -> AlgebraBasis:
    """Basis of the real Lie algebra generated by the trace-zero generators.

    Generators are inserted first, then element ``j`` is bracketed with every
    earlier element ``i < j`` in insertion order; new elements join the end of
    the queue.  Every pair is visited once, so the result is closed under the
    bracket.  Stops early once the dimension reaches ``N^2 - 1``.
    """
    n = gens.dim
    store = _ClosureBuilder(n)
    for g in gens.traceless():
        store.insert(g)

    j = 1
    while j < store.size and not store.full:
        Bj = store.flat[j].reshape(n, n)
        earlier = store.flat[:j].reshape(j, n, n)
        brackets = earlier @ Bj - Bj @ earlier
        norms = np.linalg.norm(brackets.reshape(j, -1), axis=1)
        keep = norms > ZERO_BRACKET_TOL
        if np.any(keep):
            cand = brackets[keep].reshape(-1, n * n) / norms[keep, None]
            # residuals only shrink as the basis grows, so this filter is safe
            live = store.residual_norms(cand) > INDEPENDENCE_TOL
            for v in cand[live]:
                store.insert(v.reshape(n, n))
                if store.full:
                    break
        j += 1
    return store.basis()


def contains(basis: AlgebraBasis, X) -> bool:
    """True if ``X`` lies in the real span of ``basis``."""
    X = np.asarray(X, dtype=np.complex128)
    if not is_skew_hermitian(X, 1e-9) or abs(np.trace(X)) > 1e-9:
        logger.warning("contains(): candidate is not traceless skew-Hermitian")
        return False
    nrm = frobenius_norm(X)
    if nrm < 1e-14:
        return True
    if basis.dimension == 0:
        return False
    flat = basis.elements.reshape(basis.dimension, -1)
    v = X.ravel() / nrm
    r = v - np.real(flat.conj() @ v) @ flat
    return bool(np.linalg.norm(r) < INDEPENDENCE_TOL)


def standard_symplectic(ell: int) -> np.ndarray:
    """The block matrix ``[[0, I], [-I, 0]]`` of size ``2 ell``."""
    eye = np.eye(ell)
    zero = np.zeros((ell, ell))
    return np.block([[zero, eye], [-eye, zero]]).astype(np.complex128)


def symplectic_defect(X, J) -> float:
    """Frobenius norm of ``X^T J + J X``."""
    X = np.asarray(X)
    return frobenius_norm(X.T @ J + J @ X)


def sp_basis(ell: int) -> AlgebraBasis:
    """Orthonormal basis of the compact sp(ell) preserving :func:`standard_symplectic`.

    Elements have the block form ``[[A, B], [-conj(B), conj(A)]]`` with ``A``
    skew-Hermitian and ``B`` complex symmetric.
    """
    n = 2 * ell
    elems = []

    def unit(k, l):
        E = np.zeros((ell, ell), dtype=np.complex128)
        E[k, l] = 1.0
        return E

    def block(A, B):
        return np.block([[A, B], [-B.conj(), A.conj()]])

    zero = np.zeros((ell, ell), dtype=np.complex128)
    for k in range(ell):
        elems.append(block(1j * unit(k, k), zero))
        elems.append(block(zero, unit(k, k)))
        elems.append(block(zero, 1j * unit(k, k)))
        for l in range(k + 1, ell):
            S = unit(k, l) + unit(l, k)
            elems.append(block(unit(k, l) - unit(l, k), zero))
            elems.append(block(1j * S, zero))
            elems.append(block(zero, S))
            elems.append(block(zero, 1j * S))
    store = _ClosureBuilder(n)
    for X in elems:
        store.insert(X)
    return store.basis()


def _symplectic_operator(gens: Sequence[np.ndarray]) -> np.ndarray:
    """Stack the maps ``vec(K) -> vec(X^T K + K X)`` and ``vec(K) -> vec(K + K^T)``.

    ``vec`` is row-major, so ``vec(A K B) = kron(A, B^T) vec(K)``.
    """
    n = gens[0].shape[0]
    eye = np.eye(n)
    blocks = [np.kron(X.T, eye) + np.kron(eye, X.T) for X in gens]
    swap = np.zeros((n * n, n * n))
    idx = np.arange(n * n)
    swap[idx, (idx % n) * n + idx // n] = 1.0
    blocks.append(np.eye(n * n) + swap)
    return np.vstack(blocks)


def _fix_phase(K: np.ndarray) -> np.ndarray:
    """Rotate ``K`` so its first significant entry (row-major) is real positive."""
    flat = K.ravel()
    first = flat[np.argmax(np.abs(flat) > 1e-8 * np.max(np.abs(flat)))]
    return K * (np.conj(first) / abs(first))


def _has_standard_spectrum(K: np.ndarray) -> bool:
    half = K.shape[0] // 2
    vals = np.linalg.eigvals(K)
    plus = np.sum(np.abs(vals - 1j) < SPECTRUM_TOL)
    minus = np.sum(np.abs(vals + 1j) < SPECTRUM_TOL)
    return bool(plus == half and minus == half)


def find_symplectic_form(gens: GeneratorSet) -> Optional[SymplecticForm]:
    """Search for ``J`` with ``X^T J + J X = 0`` for every trace-zero generator.

    Candidates come from the null space of the stacked linear condition.  Each
    is antisymmetrized, rejected if singular, scaled to unit singular values,
    phase-fixed, and accepted if its spectrum is ``+i`` and ``-i`` with equal
    multiplicity.  Returns ``None`` when no candidate qualifies.
    """
    n = gens.dim
    if n % 2:
        raise ValueError("a symplectic form needs even dimension")
    op = _symplectic_operator(gens.traceless())
    for v in nullspace(op):
        K = v.reshape(n, n)
        K = 0.5 * (K - K.T)
        s = np.linalg.svd(K, compute_uv=False)
        if s[-1] < DEGENERATE_TOL:
            continue
        scale = s[0]
        K = _fix_phase(K / scale)
        if _has_standard_spectrum(K):
            return SymplecticForm(J=K, normalization=scale)
    return None


def is_standard_equivalent(J) -> bool:
    """True if ``J`` has the spectrum of the standard form: ``+-i``, each ``N/2`` times."""
    J = as_matrix(J)
    if J.shape[0] % 2:
        raise ValueError("odd dimension cannot carry a symplectic form")
    s = np.linalg.svd(J, compute_uv=False)
    if s[0] == 0.0:
        return False
    return _has_standard_spectrum(J / s[0])


def degrees_for(algebra_type: AlgebraType, has_identity_component: bool) -> Degrees:
    su = algebra_type is AlgebraType.SU_N
    sp = algebra_type is AlgebraType.SP_HALF_N
    return Degrees(
        completely=su and has_identity_component,
        density_matrix=su,
        observable=su,
        pure_state=su or sp,
    )


def classify(gens: GeneratorSet, basis: Optional[AlgebraBasis] = None) -> Classification:
    """Degree of controllability from the dimension of the dynamical Lie algebra.

    ``su(N)`` at dimension ``N^2 - 1``; ``sp(N/2)`` at dimension ``N(N+1)/2``
    for even ``N`` when a symplectic form with the standard spectrum exists;
    anything else is reported as ``OTHER``.
    """
    n = gens.dim
    if basis is None:
        basis = generate_closure(gens)
    dim = basis.dimension
    J = None
    if dim == n * n - 1:
        kind = AlgebraType.SU_N
    elif n % 2 == 0 and dim == n * (n + 1) // 2 and (J := find_symplectic_form(gens)) is not None:
        kind = AlgebraType.SP_HALF_N
    else:
        kind = AlgebraType.OTHER
    has_identity = any(abs(t) > TRACE_TOL for t in gens.traces)
    return Classification(
        algebra_type=kind,
        dimension=dim,
        dim_space=n,
        has_identity_component=has_identity,
        degrees=degrees_for(kind, has_identity),
        symplectic=J,
    )
