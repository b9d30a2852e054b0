"""Kinematic limits on an expectation value.

Unitary evolution preserves the spectrum of a density matrix, so the
reachable values of <A> lie between the sorted-weight pairings of the
eigenvalues of rho and A.  A density-matrix controllable system attains both.
"""
import numpy as np

from qcontrollability import Observable, expectation, expectation_bounds, extremal_states, validate_density
from qcontrollability.kinematics import kinematically_equivalent, purity_class
from qcontrollability.matcore import random_unitary

rho = validate_density(np.diag([0.5, 0.3, 0.2]))
A = Observable.from_matrix(np.diag([1.0, 2.0, 3.0]))

lo, hi = expectation_bounds(rho, A)
print(f"<A> now {expectation(rho, A):.3f}, reachable range [{lo:.3f}, {hi:.3f}]")

minus, plus = extremal_states(rho, A)
print("state attaining the maximum:\n", np.round(plus.matrix.real, 12))

rng = np.random.default_rng(1)
samples = [expectation(validate_density(V @ rho.matrix @ V.conj().T), A)
           for V in (random_unitary(3, rng) for _ in range(2000))]
print(f"2000 random rotations span [{min(samples):.3f}, {max(samples):.3f}]")

# Kinematic equivalence is just equality of spectra.
pure = validate_density(np.diag([1.0, 0, 0, 0]))
bell = validate_density(np.array([[0.5, 0, 0, 0.5], [0, 0, 0, 0], [0, 0, 0, 0], [0.5, 0, 0, 0.5]]))
mixed = validate_density(np.diag([0.5, 0, 0, 0.5]))
print("\n", purity_class(pure), purity_class(bell), purity_class(mixed))
print(" pure ~ bell:", kinematically_equivalent(pure, bell), " pure ~ mixed:", kinematically_equivalent(pure, mixed))
