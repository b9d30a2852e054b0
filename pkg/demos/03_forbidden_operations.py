"""Operations no control field can implement.

A symplectic system only reaches unitaries with U^T J U = J.  Swapping the
population of a single lower sublevel with its upper partner violates this.
"""
import numpy as np

from qcontrollability import AtomicSystemSpec, build_hamiltonians, classify
from qcontrollability.reachability import (
    ControlSchedule,
    TargetUnitary,
    check_unitary,
    propagate,
    sublevel_swap,
)

hset = build_hamiltonians(AtomicSystemSpec.make(1, 1, -1.0, 1.0))
cls = classify(hset.generator_set())

for m in (-1, 0, 1):
    v = check_unitary(TargetUnitary(sublevel_swap(hset, m)), cls, hset)
    print(f"swap m={m:+d}: {v.verdict:<26} {v.reason}  defect={v.witness:.6f}")

# Anything the controls actually produce passes the test.
rng = np.random.default_rng(0)
for _ in range(3):
    U = propagate(hset, ControlSchedule.random(6, len(hset.controls), rng))
    v = check_unitary(TargetUnitary(U), cls, hset)
    print("random pulse sequence:", v.verdict, f"defect={v.witness:.1e}")

# Block structure: with only circular polarizations the states split into
# two non-interacting triples, and mixing them is forbidden too.
circ = build_hamiltonians(AtomicSystemSpec.make(1, 1, -1.0, 1.0, polarizations=("sigma+", "sigma-")))
P = np.eye(6)
P[[0, 1]] = P[[1, 0]]
v = check_unitary(TargetUnitary(P), classify(circ.generator_set()), circ)
print("\nmixing the two triples:", v.verdict, v.reason)
