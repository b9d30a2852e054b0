"""Degree-of-controllability analysis for finite-dimensional quantum control systems."""

from .atomic import (
    AtomicSystemSpec,
    HamiltonianSet,
    LevelSpec,
    Polarization,
    analyze_hamiltonians,
    analyze_system,
    build_hamiltonians,
    coupling_graph,
    decompose,
)
from .kinematics import (
    DensityMatrix,
    Observable,
    expectation,
    expectation_bounds,
    extremal_states,
    kinematically_equivalent,
    purity_class,
    validate_density,
)
from .liealg import (
    AlgebraType,
    Classification,
    GeneratorSet,
    classify,
    contains,
    find_symplectic_form,
    generate_closure,
    is_standard_equivalent,
    standard_symplectic,
)
from .reachability import (
    ControlSchedule,
    TargetUnitary,
    check_unitary,
    group_invariant_defect,
    propagate,
    sp_counterexample,
)

__version__ = "0.1.0"
