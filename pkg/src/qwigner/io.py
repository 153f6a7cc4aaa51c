"""Matrix-tuple JSON files.

Schema::

    {"n": 2, "d": 2,
     "operators": [ d x d nested lists of [re, im] pairs, ... n of them ],
     "state": d x d nested list of [re, im] pairs}   # optional, default I/d
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .core import DEFAULT_TOL, DimensionMismatch, OperatorTuple, maximally_mixed, validate_state, validate_tuple

__all__ = ["load_system", "system_from_dict", "system_to_dict", "dump_system"]


def _decode(m):
    a = np.asarray(m, dtype=float)
    if a.ndim != 3 or a.shape[-1] != 2:
        raise DimensionMismatch(f"matrix entries must be [re, im] pairs, got array of shape {a.shape}")
    return a[..., 0] + 1j * a[..., 1]


def _encode(m):
    m = np.asarray(m, dtype=complex)
    return np.stack([m.real, m.imag], axis=-1).tolist()


def system_from_dict(doc: dict, tol=DEFAULT_TOL):
    ops = [_decode(m) for m in doc["operators"]]
    A = validate_tuple(ops, tol)
    if "n" in doc and doc["n"] != A.n:
        raise DimensionMismatch(f"header says n = {doc['n']}, file has {A.n} operators")
    if "d" in doc and doc["d"] != A.d:
        raise DimensionMismatch(f"header says d = {doc['d']}, operators are {A.d} x {A.d}")
    if doc.get("state") is None:
        rho = maximally_mixed(A.d)
    else:
        rho = validate_state(_decode(doc["state"]), A.d, tol)
    return A, rho


def load_system(path, tol=DEFAULT_TOL):
    """Read ``(OperatorTuple, rho)`` from a JSON file."""
    return system_from_dict(json.loads(Path(path).read_text()), tol)


def system_to_dict(A: OperatorTuple, rho=None) -> dict:
    doc = {"n": A.n, "d": A.d, "operators": [_encode(a) for a in A.ops]}
    if rho is not None:
        doc["state"] = _encode(rho)
    return doc


def dump_system(A: OperatorTuple, rho=None, path=None) -> str:
    text = json.dumps(system_to_dict(A, rho))
    if path is not None:
        Path(path).write_text(text + "\n")
    return text
