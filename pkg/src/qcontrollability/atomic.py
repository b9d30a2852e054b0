"""Hamiltonians for dipole transitions between two degenerate atomic levels.

States are ordered canonically: the lower level's sublevels ``m = -F..F``
followed by the upper level's ``m' = -F'..F'``.  Linear (``pi``) polarization
couples ``m' = m``, ``sigma+`` couples ``m' = m + 1`` and ``sigma-`` couples
``m' = m - 1``.  Every allowed pair gets the same coupling strength ``d``.
"""

from __future__ import annotations

import enum
import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import connected_components

from .liealg import Classification, GeneratorSet, classify, generate_closure
from .matcore import as_matrix

logger = logging.getLogger(__name__)

EDGE_TOL = 1e-14


class Polarization(enum.Enum):
    PI = "pi"
    SIGMA_PLUS = "sigma+"
    SIGMA_MINUS = "sigma-"

    @property
    def delta_m(self) -> int:
        return {"pi": 0, "sigma+": 1, "sigma-": -1}[self.value]

    @classmethod
    def parse(cls, name) -> "Polarization":
        if isinstance(name, cls):
            return name
        aliases = {"sigma_plus": "sigma+", "sigma_minus": "sigma-"}
        try:
            return cls(aliases.get(name, name))
        except ValueError:
            raise ValueError(f"unknown polarization {name!r}") from None


@dataclass(frozen=True)
class LevelSpec:
    F: int
    energy: float

    def __post_init__(self):
        if int(self.F) != self.F or self.F < 0:
            raise ValueError(f"F must be a non-negative integer, got {self.F}")

    @property
    def sublevels(self) -> int:
        return 2 * int(self.F) + 1


@dataclass(frozen=True)
class AtomicSystemSpec:
    lower: LevelSpec
    upper: LevelSpec
    dipole: float = 1.0
    polarizations: tuple = (Polarization.PI, Polarization.SIGMA_PLUS, Polarization.SIGMA_MINUS)
    alkali_m0_suppressed: bool = False

    def __post_init__(self):
        pols = tuple(Polarization.parse(p) for p in self.polarizations)
        if not pols:
            raise ValueError("at least one polarization is required")
        if len(set(pols)) != len(pols):
            raise ValueError("duplicate polarization")
        object.__setattr__(self, "polarizations", pols)
        if abs(self.upper.F - self.lower.F) > 1:
            raise ValueError("|F_upper - F_lower| must be 0 or 1 for a dipole transition")
        if self.dipole == 0:
            raise ValueError("dipole strength must be nonzero")

    @classmethod
    def make(cls, F_lower, F_upper, E_lower=-1.0, E_upper=1.0, polarizations=("pi", "sigma+", "sigma-"),
             dipole=1.0, alkali_m0_suppressed=False) -> "AtomicSystemSpec":
        return cls(LevelSpec(F_lower, E_lower), LevelSpec(F_upper, E_upper), dipole,
                   tuple(polarizations), alkali_m0_suppressed)

    def to_dict(self) -> dict:
        return {
            "lower": {"F": int(self.lower.F), "energy": float(self.lower.energy)},
            "upper": {"F": int(self.upper.F), "energy": float(self.upper.energy)},
            "dipole": float(self.dipole),
            "polarizations": [p.value for p in self.polarizations],
            "alkali_m0_suppressed": bool(self.alkali_m0_suppressed),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AtomicSystemSpec":
        """Parse the JSON system spec; unknown fields are rejected."""
        allowed = {"lower", "upper", "dipole", "polarizations", "alkali_m0_suppressed"}
        if not isinstance(data, dict):
            raise ValueError("system spec must be a JSON object")
        extra = set(data) - allowed
        if extra:
            raise ValueError(f"unknown fields in system spec: {sorted(extra)}")
        missing = {"lower", "upper", "polarizations"} - set(data)
        if missing:
            raise ValueError(f"missing fields in system spec: {sorted(missing)}")
        levels = []
        for key in ("lower", "upper"):
            lv = data[key]
            if not isinstance(lv, dict) or set(lv) != {"F", "energy"}:
                raise ValueError(f"{key!r} must have exactly the fields 'F' and 'energy'")
            levels.append(LevelSpec(lv["F"], float(lv["energy"])))
        return cls(levels[0], levels[1], float(data.get("dipole", 1.0)),
                   tuple(data["polarizations"]), bool(data.get("alkali_m0_suppressed", False)))


@dataclass(frozen=True)
class HamiltonianSet:
    """Drift ``H0`` plus labelled control Hamiltonians on a common state space."""

    H0: np.ndarray
    controls: tuple
    state_labels: tuple = ()
    warnings: tuple = ()

    @classmethod
    def from_matrices(cls, H0, controls: Sequence, labels: Optional[Sequence[str]] = None) -> "HamiltonianSet":
        H0 = as_matrix(H0)
        mats = [as_matrix(H) for H in controls]
        for H in [H0, *mats]:
            if H.shape != H0.shape:
                raise ValueError("all Hamiltonians must share one shape")
            if not np.allclose(H, H.conj().T, atol=1e-10):
                raise ValueError("Hamiltonians must be Hermitian")
        if labels is None:
            labels = [f"H{k + 1}" for k in range(len(mats))]
        return cls(H0, tuple(zip(labels, mats)))

    @property
    def dim(self) -> int:
        return self.H0.shape[0]

    @property
    def hamiltonians(self) -> list:
        return [self.H0] + [H for _, H in self.controls]

    def generator_set(self) -> GeneratorSet:
        return GeneratorSet.from_hamiltonians(self.hamiltonians)

    def restrict(self, indices: Sequence[int]) -> "HamiltonianSet":
        """Sub-block on ``indices``; controls that vanish there are dropped."""
        ix = np.asarray(indices)
        sub = np.ix_(ix, ix)
        controls = tuple((lab, H[sub]) for lab, H in self.controls if np.any(np.abs(H[sub]) > EDGE_TOL))
        labels = tuple(self.state_labels[i] for i in ix) if self.state_labels else ()
        return HamiltonianSet(self.H0[sub], controls, labels)


def build_hamiltonians(spec: AtomicSystemSpec) -> HamiltonianSet:
    Fl, Fu = int(spec.lower.F), int(spec.upper.F)
    nl = 2 * Fl + 1
    n = nl + 2 * Fu + 1
    labels = tuple([(0, m) for m in range(-Fl, Fl + 1)] + [(1, m) for m in range(-Fu, Fu + 1)])
    H0 = np.diag([spec.lower.energy] * nl + [spec.upper.energy] * (n - nl)).astype(np.complex128)

    controls, warnings = [], []
    for pol in spec.polarizations:
        H = np.zeros((n, n), dtype=np.complex128)
        for m in range(-Fl, Fl + 1):
            mu = m + pol.delta_m
            if abs(mu) > Fu:
                continue
            if pol is Polarization.PI and spec.alkali_m0_suppressed and Fl == Fu and m == 0:
                continue
            i, j = m + Fl, nl + mu + Fu
            H[i, j] = H[j, i] = spec.dipole
        if not np.any(H):
            msg = f"polarization {pol.value} couples no sublevels; dropped"
            logger.warning(msg)
            warnings.append(msg)
            continue
        controls.append((pol.value, H))
    if not controls:
        raise ValueError("no polarization produces a nonzero coupling")
    return HamiltonianSet(H0, tuple(controls), labels, tuple(warnings))


@dataclass(frozen=True)
class CouplingGraph:
    n: int
    edges: frozenset

    def components(self) -> list:
        """Connected components as sorted index tuples, ordered by smallest index."""
        if self.edges:
            rows, cols = zip(*self.edges)
        else:
            rows, cols = (), ()
        adj = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(self.n, self.n))
        _, lab = connected_components(adj, directed=False)
        comps = {}
        for i, c in enumerate(lab):
            comps.setdefault(c, []).append(i)
        return sorted((tuple(v) for v in comps.values()), key=lambda c: c[0])

    @property
    def is_connected(self) -> bool:
        return len(self.components()) == 1


def coupling_graph(hset: HamiltonianSet) -> CouplingGraph:
    edges = set()
    for _, H in hset.controls:
        ii, jj = np.nonzero(np.abs(H) > EDGE_TOL)
        edges.update((int(min(i, j)), int(max(i, j))) for i, j in zip(ii, jj) if i != j)
    return CouplingGraph(hset.dim, frozenset(edges))


@dataclass(frozen=True)
class Component:
    indices: tuple
    hset: HamiltonianSet

    @property
    def trivial(self) -> bool:
        return len(self.indices) == 1


def decompose(hset: HamiltonianSet) -> list:
    """Split into non-interacting subsystems (connected components of the coupling graph)."""
    return [Component(c, hset.restrict(c)) for c in coupling_graph(hset).components()]


@dataclass
class ComponentReport:
    indices: tuple
    classification: Optional[Classification]

    @property
    def trivial(self) -> bool:
        return len(self.indices) == 1


@dataclass
class SystemReport:
    """Global, coupled-subspace and per-subsystem classifications of one system.

    ``effective`` is the classification restricted to the states that take
    part in at least one coupling (uncoupled sublevels only pick up phases);
    it equals ``classification`` when every state is coupled.
    """

    dim: int
    classification: Classification
    components: list
    effective: Classification
    coupled_indices: tuple
    spec: Optional[AtomicSystemSpec] = None
    warnings: list = field(default_factory=list)
    summary: list = field(default_factory=list)

    @property
    def symplectic(self):
        return self.classification.symplectic


def _describe(cls: Classification) -> str:
    n = cls.dim_space
    if cls.degrees.completely:
        return f"completely controllable (dynamical Lie algebra u({n}))"
    if cls.degrees.density_matrix:
        return f"density-matrix and observable controllable (dynamical Lie algebra su({n}))"
    if cls.degrees.pure_state:
        return (f"pure-state controllable only (dynamical Lie algebra {cls.label}); "
                "not density-matrix or observable controllable")
    return f"not controllable (trace-zero algebra of dimension {cls.dimension})"


def _summarize(report: SystemReport) -> list:
    lines = [_describe(report.classification)]
    nontrivial = [c for c in report.components if not c.trivial]
    if len(report.components) > 1:
        sizes = ", ".join(str(len(c.indices)) for c in report.components)
        lines.append(f"decomposes into {len(report.components)} non-interacting subsystems of sizes {sizes}")
        if nontrivial and all(len(c.indices) == 2 for c in nontrivial) and report.effective.dimension <= 3:
            lines.append("behaves effectively like a two-state system")
        for c in nontrivial:
            cc = c.classification
            states = ",".join(str(i) for i in c.indices)
            if cc.degrees.completely:
                lines.append(f"subsystem {{{states}}}: effectively completely controllable {len(c.indices)}-state system")
            else:
                lines.append(f"subsystem {{{states}}}: {_describe(cc)}")
    return lines


def analyze_hamiltonians(hset: HamiltonianSet, spec: Optional[AtomicSystemSpec] = None) -> SystemReport:
    """Classify a system globally and per non-interacting subsystem."""
    global_cls = classify(hset.generator_set())
    comps = []
    for comp in decompose(hset):
        if comp.trivial:
            comps.append(ComponentReport(comp.indices, None))
            continue
        gens = comp.hset.generator_set()
        comps.append(ComponentReport(comp.indices, classify(gens, generate_closure(gens))))
    coupled = tuple(sorted(i for c in comps if not c.trivial for i in c.indices))
    if len(coupled) == hset.dim:
        effective = global_cls
    else:
        effective = classify(hset.restrict(coupled).generator_set())
    warnings = list(hset.warnings)
    warnings += [f"state {c.indices[0]} is uncoupled" for c in comps if c.trivial]
    report = SystemReport(hset.dim, global_cls, comps, effective, coupled, spec, warnings)
    report.summary = _summarize(report)
    return report


def analyze_system(spec: AtomicSystemSpec) -> SystemReport:
    return analyze_hamiltonians(build_hamiltonians(spec), spec)

