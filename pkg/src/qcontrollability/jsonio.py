"""JSON encodings for matrices, reports and canonical serialization.

Matrices are ``{"dim": N, "entries": [[[re, im], ...], ...]}`` in row-major
order.  :func:`dumps` writes sorted keys and floats with 17 significant
digits, so parsing and re-serializing its output is byte-identical.
"""

from __future__ import annotations

import json
import math

import numpy as np

from .liealg import Classification


def encode_matrix(A) -> dict:
    A = np.asarray(A, dtype=np.complex128)
    return {
        "dim": int(A.shape[0]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def decode_matrix(obj) -> np.ndarray:
    if not isinstance(obj, dict) or set(obj) != {"dim", "entries"}:
        raise ValueError("matrix must be an object with exactly 'dim' and 'entries'")
    n = obj["dim"]
    rows = obj["entries"]
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"matrix 'dim' must be a positive integer, got {n!r}")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ValueError(f"matrix 'entries' must be {n}x{n}")
    try:
        arr = np.array(rows, dtype=float)
    except (TypeError, ValueError):
        raise ValueError("matrix entries must be [re, im] number pairs") from None
    if arr.shape != (n, n, 2):
        raise ValueError("matrix entries must be [re, im] number pairs")
    if not np.all(np.isfinite(arr)):
        raise ValueError("matrix entries must be finite")
    return arr[..., 0] + 1j * arr[..., 1]


def decode_wrapped(obj, kind: str) -> np.ndarray:
    """Unwrap ``{"kind": kind, "matrix": {...}}``."""
    if not isinstance(obj, dict) or set(obj) != {"kind", "matrix"}:
        raise ValueError(f"expected an object with 'kind' and 'matrix' for a {kind}")
    if obj["kind"] != kind:
        raise ValueError(f"expected kind {kind!r}, got {obj['kind']!r}")
    return decode_matrix(obj["matrix"])


def _format_float(x: float) -> str:
    if not math.isfinite(x):
        raise ValueError("cannot serialize non-finite float")
    if x == 0.0:
        x = 0.0  # drop the sign of -0.0
    return format(x, ".17g")


def _write(obj, out: list) -> None:
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, (int, np.integer)):
        out.append(str(int(obj)))
    elif isinstance(obj, (float, np.floating)):
        out.append(_format_float(float(obj)))
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for k, key in enumerate(sorted(obj)):
            if k:
                out.append(",")
            out.append(json.dumps(str(key)) + ":")
            _write(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for k, item in enumerate(obj):
            if k:
                out.append(",")
            _write(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj) -> str:
    out: list = []
    _write(obj, out)
    return "".join(out)


def classification_to_dict(cls: Classification) -> dict:
    return {
        "algebra_type": cls.algebra_type.value,
        "label": cls.label,
        "dimension": cls.dimension,
        "dim_space": cls.dim_space,
        "has_identity_component": cls.has_identity_component,
        "degrees": {
            "completely": cls.degrees.completely,
            "density_matrix": cls.degrees.density_matrix,
            "observable": cls.degrees.observable,
            "pure_state": cls.degrees.pure_state,
        },
        "J": encode_matrix(cls.symplectic.J) if cls.symplectic is not None else None,
    }


def report_to_dict(report) -> dict:
    return {
        "spec": report.spec.to_dict() if report.spec is not None else None,
        "dim": report.dim,
        "classification": classification_to_dict(report.classification),
        "effective": dict(classification_to_dict(report.effective), indices=list(report.coupled_indices)),
        "components": [
            {
                "indices": list(c.indices),
                "trivial": c.trivial,
                "classification": classification_to_dict(c.classification) if c.classification else None,
            }
            for c in report.components
        ],
        "warnings": list(report.warnings),
        "summary": list(report.summary),
    }
