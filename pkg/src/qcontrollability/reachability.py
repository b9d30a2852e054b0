"""Necessary conditions for reachability, the symplectic counterexample, propagation.

A unitary produced by a system whose trace-zero algebra preserves a symplectic
form ``J`` satisfies ``U^T J U = J`` (up to a global phase if the system has an
identity component).  Violating that, coupling states that live in different
non-interacting subsystems, or (strictly) carrying the wrong determinant rules
a target out.  Passing these checks does not prove reachability.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np
from scipy.optimize import minimize_scalar

from .atomic import HamiltonianSet, coupling_graph
from .kinematics import DensityMatrix, kinematically_equivalent, validate_density
from .liealg import AlgebraType, Classification, SymplecticForm, contains, sp_basis, standard_symplectic, symplectic_defect
from .matcore import DimensionMismatchError, as_matrix, hermitian_expm

FORBIDDEN_TOL = 1e-6
UNITARY_TOL = 1e-9
PHASE_GRID = 360


@dataclass(frozen=True)
class TargetUnitary:
    matrix: np.ndarray
    phase_mode: str = "projective"

    def __post_init__(self):
        U = as_matrix(self.matrix)
        if self.phase_mode not in ("projective", "strict"):
            raise ValueError(f"phase_mode must be 'projective' or 'strict', not {self.phase_mode!r}")
        if np.max(np.abs(U.conj().T @ U - np.eye(U.shape[0]))) > UNITARY_TOL:
            raise ValueError("target matrix is not unitary")
        object.__setattr__(self, "matrix", U)

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class ReachabilityVerdict:
    """Outcome of :func:`check_unitary`.

    ``details`` maps every test that ran to its witness value; ``reason``
    names the first test that fired.
    """

    forbidden: bool
    reason: Optional[str] = None
    witness: float = 0.0
    details: dict = field(default_factory=dict)

    @property
    def verdict(self) -> str:
        return "forbidden" if self.forbidden else "necessary_conditions_pass"


@dataclass(frozen=True)
class ControlSchedule:
    """Piecewise-constant controls: ``(duration, amplitudes)`` per segment."""

    segments: tuple = ()

    def __post_init__(self):
        segs = []
        for dt, amps in self.segments:
            amps = tuple(float(a) for a in amps)
            if not dt > 0 or not np.isfinite(dt):
                raise ValueError(f"segment duration must be positive, got {dt}")
            if not all(np.isfinite(amps)):
                raise ValueError("control amplitudes must be finite")
            segs.append((float(dt), amps))
        object.__setattr__(self, "segments", tuple(segs))

    @classmethod
    def from_dict(cls, data: dict) -> "ControlSchedule":
        return cls(tuple((seg["dt"], seg["f"]) for seg in data["segments"]))

    def to_dict(self) -> dict:
        return {"segments": [{"dt": dt, "f": list(f)} for dt, f in self.segments]}

    @classmethod
    def random(cls, n_segments: int, n_controls: int, rng: np.random.Generator,
               max_dt: float = 1.0, max_amp: float = 2.0) -> "ControlSchedule":
        return cls(tuple(
            (float(rng.uniform(0.05, max_dt)), tuple(rng.uniform(-max_amp, max_amp, n_controls)))
            for _ in range(n_segments)
        ))


def _as_J(J: Union[SymplecticForm, np.ndarray]) -> np.ndarray:
    return J.J if isinstance(J, SymplecticForm) else np.asarray(J, dtype=np.complex128)


def group_invariant_defect(U, J) -> float:
    """Frobenius norm of ``U^T J U - J``."""
    U = as_matrix(U)
    J = _as_J(J)
    if U.shape != J.shape:
        raise DimensionMismatchError(f"U is {U.shape}, J is {J.shape}")
    return float(np.linalg.norm(U.T @ J @ U - J))


def projective_invariant_defect(U, J) -> float:
    """Smallest ``||(e^{i theta} U)^T J (e^{i theta} U) - J||`` over global phases.

    A 360-point grid in ``theta`` locates the basin; a bounded scalar search
    on the squared defect refines it.
    """
    U = as_matrix(U)
    J = _as_J(J)
    M = U.T @ J @ U

    def sq(theta):
        return float(np.linalg.norm(np.exp(2j * theta) * M - J) ** 2)

    grid = np.linspace(0.0, np.pi, PHASE_GRID, endpoint=False)
    vals = [sq(t) for t in grid]
    k = int(np.argmin(vals))
    step = grid[1] - grid[0]
    res = minimize_scalar(sq, bounds=(grid[k] - step, grid[k] + step), method="bounded",
                          options={"xatol": 1e-13})
    return float(np.sqrt(max(min(res.fun, vals[k]), 0.0)))


def check_unitary(U: TargetUnitary, cls: Classification, hset: HamiltonianSet) -> ReachabilityVerdict:
    """Test the necessary conditions a reachable unitary must satisfy."""
    if not isinstance(U, TargetUnitary):
        U = TargetUnitary(U)
    if U.dim != hset.dim or cls.dim_space != hset.dim:
        raise DimensionMismatchError(f"unitary is {U.dim}x{U.dim}, system has dimension {hset.dim}")
    M = U.matrix
    details, fired = {}, []

    if cls.symplectic is not None:
        # an identity component in the algebra makes every global phase reachable
        if U.phase_mode == "projective" or cls.has_identity_component:
            d = projective_invariant_defect(M, cls.symplectic)
        else:
            d = group_invariant_defect(M, cls.symplectic)
        details["J-preservation"] = d
        if d > FORBIDDEN_TOL:
            fired.append(("J-preservation", d))

    comps = coupling_graph(hset).components()
    if len(comps) > 1:
        label = np.empty(hset.dim, dtype=int)
        for c, idx in enumerate(comps):
            label[list(idx)] = c
        cross = label[:, None] != label[None, :]
        d = float(np.linalg.norm(M[cross]))
        details["block-structure"] = d
        if d > FORBIDDEN_TOL:
            fired.append(("block-structure", d))

    if U.phase_mode == "strict" and cls.algebra_type is AlgebraType.SU_N and not cls.has_identity_component:
        d = float(abs(np.linalg.det(M) - 1.0))
        details["determinant"] = d
        if d > FORBIDDEN_TOL:
            fired.append(("determinant", d))

    if fired:
        reason, witness = fired[0]
        return ReachabilityVerdict(True, reason, witness, details)
    return ReachabilityVerdict(False, None, max(details.values(), default=0.0), details)


def sublevel_swap(hset: HamiltonianSet, m: int) -> np.ndarray:
    """Permutation exchanging the lower- and upper-level sublevels with quantum number ``m``.

    This is the unitary that would selectively transfer the population of
    one sublevel while leaving every other state alone.
    """
    labels = list(hset.state_labels)
    try:
        i, j = labels.index((0, m)), labels.index((1, m))
    except ValueError:
        raise ValueError(f"both levels need a sublevel with m = {m}") from None
    P = np.eye(hset.dim, dtype=np.complex128)
    P[[i, j]] = P[[j, i]]
    return P


def propagate(hset: HamiltonianSet, schedule: ControlSchedule) -> np.ndarray:
    """Time-evolution operator of a piecewise-constant schedule, earliest segment first."""
    n_controls = len(hset.controls)
    U = np.eye(hset.dim, dtype=np.complex128)
    for dt, amps in schedule.segments:
        if len(amps) != n_controls:
            raise ValueError(f"segment has {len(amps)} amplitudes, system has {n_controls} controls")
        H = hset.H0.copy()
        for f, (_, Hm) in zip(amps, hset.controls):
            H = H + f * Hm
        U = hermitian_expm(H, dt) @ U
    return U


@dataclass(frozen=True)
class Counterexample:
    """Two unitarily equivalent states that an sp-type system cannot connect."""

    rho0: DensityMatrix
    rho1: DensityMatrix
    x: np.ndarray
    y: np.ndarray

    @property
    def ell(self) -> int:
        return self.x.shape[0] // 2

    def verify(self) -> dict:
        J = standard_symplectic(self.ell)
        basis = sp_basis(self.ell)
        return {
            "kinematically_equivalent": kinematically_equivalent(self.rho0, self.rho1),
            "ix_in_sp": contains(basis, 1j * self.x) and symplectic_defect(1j * self.x, J) < 1e-12,
            "iy_not_in_sp": (not contains(basis, 1j * self.y)) and symplectic_defect(1j * self.y, J) > 0,
        }


def sp_counterexample(ell: int, weights: Sequence[float]) -> Counterexample:
    """Build ``rho0 = I/(2 ell) + x`` and ``rho1 = I/(2 ell) + y``.

    ``x = diag(-w, w)`` lies in sp(ell); ``y`` swaps ``w_1`` and ``w_2`` in
    the negative block and does not.  Requires
    ``0 < w_1 < ... < w_ell < 1/(2 ell)``.
    """
    w = np.asarray(weights, dtype=float)
    if ell < 2:
        raise ValueError("need ell >= 2 to swap two weights")
    if w.shape != (ell,):
        raise ValueError(f"expected {ell} weights, got {w.size}")
    if not (w[0] > 0 and np.all(np.diff(w) > 0) and w[-1] < 1.0 / (2 * ell)):
        raise ValueError("weights must satisfy 0 < w1 < ... < w_ell < 1/(2 ell)")
    neg = -w.copy()
    x = np.diag(np.concatenate([neg, w])).astype(np.complex128)
    neg[[0, 1]] = neg[[1, 0]]
    y = np.diag(np.concatenate([neg, w])).astype(np.complex128)
    eye = np.eye(2 * ell) / (2 * ell)
    return Counterexample(validate_density(eye + x), validate_density(eye + y), x, y)
