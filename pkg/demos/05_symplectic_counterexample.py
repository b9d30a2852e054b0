"""Two states with identical spectra that a symplectic system cannot connect.

rho0 = I/2l + diag(-w, w) commutes with the sp(l) structure; exchanging two
of the negative weights gives rho1 with the same eigenvalues but outside the
orbit of the symplectic group.  So sp-type systems are pure-state but not
density-matrix controllable.
"""
import numpy as np

from qcontrollability.reachability import sp_counterexample

ce = sp_counterexample(2, (0.05, 0.1))
print("rho0 diagonal:", np.diag(ce.rho0.matrix).real)
print("rho1 diagonal:", np.diag(ce.rho1.matrix).real)
for name, ok in ce.verify().items():
    print(f"  {name}: {ok}")

ce = sp_counterexample(3, (0.02, 0.05, 0.1))
print("\nl=3:", all(ce.verify().values()))
