"""Reference Hamiltonians in coupling-diagram state order, with d = 1.

Each system lists ``order``: the (level, m) label of every basis state in
diagram order, level 0 = lower.  Drift matrices use the pattern code
1 -> E_lower, 2 -> E_upper.  Controls are keyed by polarization name.

Two sigma+ matrices are kept in an asymmetric variant as well (F=1->2 row 5,
F=2->2 rows 8 and 10).  ``*_ASYMMETRIC`` holds those; the fixtures use the
symmetric completion of their upper triangles.
"""

import numpy as np


def _sym_from_upper(M):
    U = np.triu(np.asarray(M, dtype=float), 1)
    return U + U.T


def drift(pattern, E1, E2):
    pattern = np.asarray(pattern)
    return np.diag(np.where(pattern == 1, E1, E2)).astype(complex)


F00 = {
    "order": [(0, 0), (1, 0)],
    "H0": [1, 2],
    "controls": {"pi": np.array([[0, 1], [1, 0]])},
}

F01 = {
    "order": [(0, 0), (1, -1), (1, 0), (1, 1)],
    "H0": [1, 2, 2, 2],
    "controls": {
        "pi": np.array([[0, 0, 1, 0],
                        [0, 0, 0, 0],
                        [1, 0, 0, 0],
                        [0, 0, 0, 0]]),
        "sigma-": np.array([[0, 1, 0, 0],
                            [1, 0, 0, 0],
                            [0, 0, 0, 0],
                            [0, 0, 0, 0]]),
        "sigma+": np.array([[0, 0, 0, 1],
                            [0, 0, 0, 0],
                            [0, 0, 0, 0],
                            [1, 0, 0, 0]]),
    },
}

F11 = {
    "order": [(0, -1), (1, -1), (0, 0), (1, 0), (0, 1), (1, 1)],
    "H0": [1, 2, 1, 2, 1, 2],
    "controls": {
        "pi": np.array([[0, 1, 0, 0, 0, 0],
                        [1, 0, 0, 0, 0, 0],
                        [0, 0, 0, 1, 0, 0],
                        [0, 0, 1, 0, 0, 0],
                        [0, 0, 0, 0, 0, 1],
                        [0, 0, 0, 0, 1, 0]]),
        "sigma-": np.array([[0, 0, 0, 0, 0, 0],
                            [0, 0, 1, 0, 0, 0],
                            [0, 1, 0, 0, 0, 0],
                            [0, 0, 0, 0, 1, 0],
                            [0, 0, 0, 1, 0, 0],
                            [0, 0, 0, 0, 0, 0]]),
        "sigma+": np.array([[0, 0, 0, 1, 0, 0],
                            [0, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 1],
                            [1, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 0],
                            [0, 0, 1, 0, 0, 0]]),
    },
}

F12_SIGMA_PLUS_ASYMMETRIC = np.array([[0, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 1, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 1, 0],
                                     [1, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 1],
                                     [0, 0, 0, 1, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 1, 0, 0]])

F12 = {
    "order": [(1, -2), (0, -1), (1, -1), (0, 0), (1, 0), (0, 1), (1, 1), (1, 2)],
    "H0": [2, 1, 2, 1, 2, 1, 2, 2],
    "controls": {
        "pi": np.array([[0, 0, 0, 0, 0, 0, 0, 0],
                        [0, 0, 1, 0, 0, 0, 0, 0],
                        [0, 1, 0, 0, 0, 0, 0, 0],
                        [0, 0, 0, 0, 1, 0, 0, 0],
                        [0, 0, 0, 1, 0, 0, 0, 0],
                        [0, 0, 0, 0, 0, 0, 1, 0],
                        [0, 0, 0, 0, 0, 1, 0, 0],
                        [0, 0, 0, 0, 0, 0, 0, 0]]),
        "sigma-": np.array([[0, 1, 0, 0, 0, 0, 0, 0],
                            [1, 0, 0, 0, 0, 0, 0, 0],
                            [0, 0, 0, 1, 0, 0, 0, 0],
                            [0, 0, 1, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 1, 0, 0],
                            [0, 0, 0, 0, 1, 0, 0, 0],
                            [0, 0, 0, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 0, 0, 0]]),
        "sigma+": _sym_from_upper(F12_SIGMA_PLUS_ASYMMETRIC),
    },
}

F22_SIGMA_PLUS_ASYMMETRIC = np.array([[0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
                                     [1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                                     [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
                                     [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                                     [0, 0, 0, 0, 0, 0, 0, 1, 0, 0]])

F22 = {
    "order": [(0, -2), (1, -2), (0, -1), (1, -1), (0, 0), (1, 0), (0, 1), (1, 1), (0, 2), (1, 2)],
    "H0": [1, 2, 1, 2, 1, 2, 1, 2, 1, 2],
    "controls": {
        "pi": np.kron(np.eye(5), np.array([[0, 1], [1, 0]])),
        "sigma-": np.array([[0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
                            [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
                            [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
                            [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 0, 1, 0, 0, 0],
                            [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
                            [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
                            [0, 0, 0, 0, 0, 0, 0, 1, 0, 0],
                            [0, 0, 0, 0, 0, 0, 0, 0, 0, 0]]),
        "sigma+": _sym_from_upper(F22_SIGMA_PLUS_ASYMMETRIC),
    },
}

SYSTEMS = {(0, 0): F00, (0, 1): F01, (1, 1): F11, (1, 2): F12, (2, 2): F22}

# Population swap of the m = 0 sublevels (diagram states 3 and 4) of F=1->1.
DIAGRAM_SWAP_U = np.array([[1, 0, 0, 0, 0, 0],
                         [0, 1, 0, 0, 0, 0],
                         [0, 0, 0, 1, 0, 0],
                         [0, 0, 1, 0, 0, 0],
                         [0, 0, 0, 0, 1, 0],
                         [0, 0, 0, 0, 0, 1]], dtype=complex)

DIAGRAM_J = np.array([[0, 0, 0, 0, 0, +1],
                         [0, 0, 0, 0, -1, 0],
                         [0, 0, 0, +1, 0, 0],
                         [0, 0, -1, 0, 0, 0],
                         [0, +1, 0, 0, 0, 0],
                         [-1, 0, 0, 0, 0, 0]], dtype=complex)


def canonical_index(order, F_lower):
    """Map diagram position -> canonical position (lower m ascending, then upper)."""
    nl = 2 * F_lower + 1
    F_upper = (len(order) - nl - 1) // 2
    return [m + F_lower if lvl == 0 else nl + m + F_upper for lvl, m in order]


def to_canonical(M, perm):
    """Relabel a diagram-order matrix into canonical order."""
    M = np.asarray(M)
    out = np.zeros_like(M, dtype=complex)
    out[np.ix_(perm, perm)] = M
    return out


def diagram_set(system, E1, E2, polarizations):
    """``[H0, controls...]`` in diagram order."""
    return [drift(system["H0"], E1, E2)] + [system["controls"][p].astype(complex) for p in polarizations]
