"""Degree of controllability for dipole transitions between Zeeman-split levels.

Each system is a lower level with angular momentum F and an upper level with
F', driven by some subset of the pi, sigma+ and sigma- polarizations.
"""
from qcontrollability import AtomicSystemSpec, analyze_system

ALL = ("pi", "sigma+", "sigma-")

cases = [
    (0, 0, ("pi",)),
    (0, 1, ALL),
    (1, 1, ("pi",)),
    (1, 1, ("pi", "sigma+")),
    (1, 1, ("sigma+", "sigma-")),
    (1, 2, ALL),
    (1, 2, ("pi",)),
    (2, 2, ALL),
]

for Fl, Fu, pols in cases:
    # generic energies, so the drift has an identity component
    report = analyze_system(AtomicSystemSpec.make(Fl, Fu, 1.0, 2.0, polarizations=pols))
    c = report.classification
    print(f"F={Fl} -> F'={Fu}  {'+'.join(pols):<18} N={report.dim:<3} {c.label:<14} dim={c.dimension}")
    for line in report.summary:
        print("    ", line)

# The energy choice matters only for the identity component.  With a traceless
# drift the two-level system loses the global phase and drops from complete to
# density-matrix controllability.
for E in [(1.0, 2.0), (-1.0, 1.0)]:
    c = analyze_system(AtomicSystemSpec.make(0, 0, *E, polarizations=("pi",))).classification
    print(f"\nE = {E}: {c.label}, completely controllable: {c.degrees.completely}")
