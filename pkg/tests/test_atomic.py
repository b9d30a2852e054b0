import numpy as np
import pytest

from qcontrollability.atomic import (
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
from qcontrollability.liealg import AlgebraType, GeneratorSet, classify

import diagram_matrices as pm

ALL = ("pi", "sigma+", "sigma-")
E1, E2 = 0.7, 1.9


def build(Fl, Fu, pols=ALL, E=(E1, E2), **kw):
    return build_hamiltonians(AtomicSystemSpec.make(Fl, Fu, *E, polarizations=pols, **kw))


def test_f00_pi_matrices():
    d = 2.5
    h = build_hamiltonians(AtomicSystemSpec(LevelSpec(0, E1), LevelSpec(0, E2), d, ("pi",)))
    np.testing.assert_array_equal(h.H0, np.diag([E1, E2]))
    ((label, H1),) = h.controls
    assert label == "pi"
    np.testing.assert_array_equal(H1, [[0, d], [d, 0]])


@pytest.mark.parametrize("key", sorted(pm.SYSTEMS))
def test_matches_diagram_matrices_up_to_relabelling(key):
    Fl, Fu = key
    system = pm.SYSTEMS[key]
    perm = pm.canonical_index(system["order"], Fl)
    pols = list(system["controls"])
    h = build(Fl, Fu, pols)
    assert [lab for lab, _ in h.controls] == pols
    theirs_all = pm.diagram_set(system, E1, E2, pols)
    for ours, theirs in zip(h.hamiltonians, theirs_all):
        np.testing.assert_array_equal(ours, pm.to_canonical(theirs, perm))


@pytest.mark.parametrize("key", sorted(pm.SYSTEMS))
def test_classification_matches_diagram_order(key):
    Fl, Fu = key
    system = pm.SYSTEMS[key]
    pols = list(system["controls"])
    ours = classify(build(Fl, Fu, pols).generator_set())
    theirs = classify(GeneratorSet.from_hamiltonians(pm.diagram_set(system, E1, E2, pols)))
    assert ours == theirs


def test_asymmetric_sigma_plus_variants():
    for M in (pm.F12_SIGMA_PLUS_ASYMMETRIC, pm.F22_SIGMA_PLUS_ASYMMETRIC):
        assert not np.array_equal(M, M.T)


def test_alkali_suppression_zeroes_only_m0_pi_entry():
    plain = dict(build(1, 1, ("pi",)).controls)["pi"]
    alkali = dict(build(1, 1, ("pi",), alkali_m0_suppressed=True).controls)["pi"]
    diff = np.argwhere(plain != alkali)
    # canonical indices: lower m=0 is 1, upper m=0 is 4
    assert sorted(map(tuple, diff)) == [(1, 4), (4, 1)]
    assert alkali[1, 4] == 0


def test_alkali_flag_ignored_for_different_F():
    assert np.array_equal(dict(build(1, 2, ("pi",), alkali_m0_suppressed=True).controls)["pi"],
                          dict(build(1, 2, ("pi",)).controls)["pi"])


def test_impossible_polarization_is_dropped_with_warning():
    h = build(0, 0, ("pi", "sigma+"))
    assert [lab for lab, _ in h.controls] == ["pi"]
    assert any("sigma+" in w for w in h.warnings)


def test_all_controls_empty_is_an_error():
    with pytest.raises(ValueError):
        build(0, 0, ("sigma+", "sigma-"))


@pytest.mark.parametrize("bad", [
    dict(F_lower=0, F_upper=2),
    dict(F_lower=1, F_upper=1, dipole=0.0),
    dict(F_lower=1, F_upper=1, polarizations=()),
    dict(F_lower=1, F_upper=1, polarizations=("pi", "sigma")),
])
def test_invalid_specs(bad):
    kw = dict(bad)
    with pytest.raises(ValueError):
        AtomicSystemSpec.make(kw.pop("F_lower"), kw.pop("F_upper"), **kw)


def test_spec_json_roundtrip_and_strictness():
    data = {"lower": {"F": 1, "energy": -1.0}, "upper": {"F": 1, "energy": 1.0}, "dipole": 1.0,
            "polarizations": ["pi", "sigma+", "sigma-"], "alkali_m0_suppressed": False}
    spec = AtomicSystemSpec.from_dict(data)
    assert spec.to_dict() == data
    with pytest.raises(ValueError):
        AtomicSystemSpec.from_dict(dict(data, colour="red"))
    with pytest.raises(ValueError):
        AtomicSystemSpec.from_dict(dict(data, polarizations=["pi", "circular"]))


@pytest.mark.parametrize("Fl,Fu", [(0, 0), (0, 1), (1, 1), (1, 2), (2, 2), (2, 3), (3, 3)])
def test_selection_rules_and_hermiticity(Fl, Fu):
    h = build(Fl, Fu)
    np.testing.assert_array_equal(h.H0, np.diag(np.diag(h.H0)))
    assert set(np.diag(h.H0).real) <= {E1, E2}
    for label, H in h.controls:
        np.testing.assert_array_equal(H, H.T)
        assert np.all(H.imag == 0) and np.all(np.diag(H) == 0)
        dm = Polarization.parse(label).delta_m
        for i, j in np.argwhere(H != 0):
            (li, mi), (lj, mj) = h.state_labels[i], h.state_labels[j]
            assert li != lj
            m_low, m_up = (mi, mj) if li == 0 else (mj, mi)
            assert m_up - m_low == dm


def test_coupling_graph_examples():
    g = coupling_graph(build(0, 0, ("pi",)))
    assert g.edges == {(0, 1)}
    g = coupling_graph(build(1, 1, ("pi",)))
    assert g.edges == {(0, 3), (1, 4), (2, 5)}
    sizes = sorted(len(c) for c in coupling_graph(build(1, 2, ("sigma+", "sigma-"))).components())
    assert sizes == [3, 5]


def test_decompose_examples():
    (comp,) = decompose(build(0, 1))
    assert comp.indices == (0, 1, 2, 3)
    comps = decompose(build(2, 2, ("sigma+", "sigma-")))
    assert [len(c.indices) for c in comps] == [5, 5]
    # pi + sigma- for F=1->2 in diagram numbering: states 1..7 coupled, state 8 alone
    comps = decompose(build(1, 2, ("pi", "sigma-")))
    perm = pm.canonical_index(pm.F12["order"], 1)
    inverse = {c: p + 1 for p, c in enumerate(perm)}
    diagram_sets = sorted(sorted(inverse[i] for i in c.indices) for c in comps)
    assert diagram_sets == [[1, 2, 3, 4, 5, 6, 7], [8]]
    assert [c.trivial for c in comps] == [False, True]


@pytest.mark.parametrize("Fl,Fu,pols", [
    (1, 1, ("pi",)), (1, 1, ("sigma+", "sigma-")), (1, 2, ("pi", "sigma+")),
    (1, 2, ("sigma+", "sigma-")), (2, 2, ("sigma+", "sigma-")), (2, 2, ("pi",)),
])
def test_decomposition_reassembles(Fl, Fu, pols):
    h = build(Fl, Fu, pols)
    comps = decompose(h)
    covered = sorted(i for c in comps for i in c.indices)
    assert covered == list(range(h.dim))
    H0 = np.zeros_like(h.H0)
    controls = {lab: np.zeros_like(H) for lab, H in h.controls}
    for c in comps:
        ix = np.ix_(c.indices, c.indices)
        H0[ix] = c.hset.H0
        for lab, H in c.hset.controls:
            controls[lab][ix] = H
    np.testing.assert_array_equal(H0, h.H0)
    for lab, H in h.controls:
        np.testing.assert_array_equal(controls[lab], H)


@pytest.mark.parametrize("F", [1, 2, 3])
def test_pi_only_blocks_are_congruent(F):
    comps = decompose(build(F, F, ("pi",)))
    assert len(comps) == 2 * F + 1
    ref = comps[0].hset
    for c in comps[1:]:
        np.testing.assert_array_equal(c.hset.H0, ref.H0)
        np.testing.assert_array_equal(c.hset.controls[0][1], ref.controls[0][1])


def test_analyze_f12_all():
    r = analyze_system(AtomicSystemSpec.make(1, 2, -1.0, 1.0))
    assert (r.classification.algebra_type, r.classification.dimension) == (AlgebraType.SU_N, 63)
    assert r.classification.degrees.density_matrix


def test_analyze_f11_circular_only():
    r = analyze_system(AtomicSystemSpec.make(1, 1, -1.0, 1.0, ("sigma+", "sigma-")))
    assert r.classification.algebra_type is AlgebraType.OTHER
    assert [len(c.indices) for c in r.components] == [3, 3]
    for c in r.components:
        assert (c.classification.algebra_type, c.classification.dimension) == (AlgebraType.SU_N, 8)
        assert c.classification.degrees.completely
    assert any("effectively completely controllable 3-state" in s for s in r.summary)


def test_analyze_f22_all():
    r = analyze_system(AtomicSystemSpec.make(2, 2, -1.0, 1.0))
    c = r.classification
    assert (c.algebra_type, c.dimension) == (AlgebraType.SP_HALF_N, 55)
    assert c.degrees.pure_state and not c.degrees.density_matrix
    assert r.symplectic is not None
    assert "pure-state controllable only" in r.summary[0]


def test_analyze_f12_pi_effective_two_level():
    r = analyze_system(AtomicSystemSpec.make(1, 2, -1.0, 1.0, ("pi",)))
    # the uncoupled m' = +-2 sublevels add a central u(1) on the full space
    assert r.classification.dimension == 4
    assert r.coupled_indices == (0, 1, 2, 4, 5, 6)
    assert r.effective.dimension == 3
    assert "behaves effectively like a two-state system" in r.summary


def test_analyze_raw_hamiltonians_matches_spec_route():
    spec = AtomicSystemSpec.make(0, 0, 1.0, 2.0, ("pi",))
    via_spec = analyze_system(spec)
    raw = HamiltonianSet.from_matrices(np.diag([1.0, 2.0]), [np.array([[0, 1.0], [1.0, 0]])])
    via_raw = analyze_hamiltonians(raw)
    assert via_raw.classification == via_spec.classification
    assert via_raw.summary == via_spec.summary
