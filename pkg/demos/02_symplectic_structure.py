"""When equal couplings make the algebra symplectic.

For F -> F transitions with the same dipole strength on every line, the
generated algebra is sp(2F+1) rather than su(2(2F+1)).  The invariant
antisymmetric form J can be recovered numerically from the generators alone.
"""
import numpy as np

from qcontrollability import AtomicSystemSpec, build_hamiltonians, classify, generate_closure
from qcontrollability.liealg import symplectic_defect

spec = AtomicSystemSpec.make(1, 1, -1.0, 1.0)
hset = build_hamiltonians(spec)
cls = classify(hset.generator_set())
print(cls.label, "of dimension", cls.dimension, "on", hset.dim, "states")

J = cls.symplectic.J
print("\nJ (states ordered lower m=-1,0,1 then upper m'=-1,0,1):")
print(np.round(J.real).astype(int))
print("eigenvalues of J:", np.round(np.linalg.eigvals(J), 12) + 0)

# every element of the algebra satisfies X^T J + J X = 0
basis = generate_closure(hset.generator_set())
print("largest defect over the basis:", max(symplectic_defect(X, J) for X in basis))

# Suppressing the m=0 <-> m'=0 pi line, as happens for alkali D lines,
# leaves both the algebra and J unchanged.
alkali = classify(build_hamiltonians(
    AtomicSystemSpec.make(1, 1, -1.0, 1.0, alkali_m0_suppressed=True)).generator_set())
print("\nalkali variant:", alkali.label, "same J:", np.allclose(alkali.symplectic.J, J, atol=1e-8))
