"""JSON matrix files.

A matrix file is a JSON object::

    {"rows": 2, "cols": 2, "entries": [[[0.5, 0.0], [1.0, 0.0]], [[0.0, 0.0], [0.0, 0.0]]]}

where each entry is a ``[re, im]`` pair. Floats are written with Python's
shortest round-trip representation, so reading back gives identical bits.
"""

from __future__ import annotations

import json
import math
from pathlib import Path

import numpy as np

from .errors import InputError


def to_document(A) -> dict:
    A = np.asarray(A, dtype=np.complex128)
    if A.ndim != 2:
        raise InputError(f"matrix must be 2-dimensional, got shape {A.shape}")
    return {
        "rows": int(A.shape[0]),
        "cols": int(A.shape[1]),
        "entries": [[[float(z.real), float(z.imag)] for z in row] for row in A],
    }


def _number(x, where):
    if isinstance(x, bool) or not isinstance(x, (int, float)):
        raise InputError(f"{where}: expected a number, got {x!r}")
    if not math.isfinite(x):
        raise InputError(f"{where}: non-finite value {x!r}")
    return float(x)


def from_document(doc) -> np.ndarray:
    if not isinstance(doc, dict):
        raise InputError("matrix file must hold a JSON object")
    for key in ("rows", "cols", "entries"):
        if key not in doc:
            raise InputError(f"matrix file is missing {key!r}")
    rows, cols, entries = doc["rows"], doc["cols"], doc["entries"]
    for name, v in (("rows", rows), ("cols", cols)):
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InputError(f"{name} must be a positive integer, got {v!r}")
    if not isinstance(entries, list) or len(entries) != rows:
        raise InputError(f"entries must be a list of {rows} rows")
    out = np.empty((rows, cols), dtype=np.complex128)
    for i, row in enumerate(entries):
        if not isinstance(row, list) or len(row) != cols:
            got = len(row) if isinstance(row, list) else type(row).__name__
            raise InputError(f"row {i} must hold {cols} entries, got {got}")
        for c, pair in enumerate(row):
            if not isinstance(pair, list) or len(pair) != 2:
                raise InputError(f"entry ({i}, {c}) must be a [re, im] pair, got {pair!r}")
            out[i, c] = complex(_number(pair[0], f"entry ({i}, {c})"), _number(pair[1], f"entry ({i}, {c})"))
    return out


def dumps(A) -> str:
    return json.dumps(to_document(A))


def loads(text: str) -> np.ndarray:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"not valid JSON: {exc}") from None
    return from_document(doc)


def write_matrix(path, A) -> None:
    Path(path).write_text(dumps(A) + "\n")


def read_matrix(path) -> np.ndarray:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    return loads(text)
