"""Plain-text serialization: matrix files and reports with fixed float formatting.

Floats are written with 17 significant digits so every double round-trips
exactly; infinities (legal only inside report grids) are written as the
strings "inf" / "-inf".  Serialization is deterministic, so identical inputs
produce byte-identical text.
"""
from __future__ import annotations

import json
import math

import numpy as np

from .errors import MatrixFileError


def format_float(x: float) -> str:
    if math.isnan(x):
        raise ValueError("NaN is not serializable")
    return format(float(x), ".17g")


def _is_scalar(x) -> bool:
    return x is None or isinstance(x, (bool, int, float, str, np.integer, np.floating))


def _emit_scalar(x, out: list[str]) -> None:
    if x is None:
        out.append("null")
    elif isinstance(x, bool):
        out.append("true" if x else "false")
    elif isinstance(x, str):
        out.append(json.dumps(x))
    elif isinstance(x, (int, np.integer)):
        out.append(str(int(x)))
    elif isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x):
            out.append('"inf"' if x > 0 else '"-inf"')
        else:
            out.append(format_float(x))
    else:
        raise TypeError(f"not serializable: {type(x)!r}")


def _emit(obj, out: list[str], indent: int) -> None:
    pad = "  " * indent
    if _is_scalar(obj):
        _emit_scalar(obj, out)
    elif isinstance(obj, dict):
        if not obj:
            out.append("{}")
            return
        out.append("{\n")
        items = list(obj.items())
        for i, (key, val) in enumerate(items):
            out.append("  " * (indent + 1))
            out.append(json.dumps(str(key)))
            out.append(": ")
            _emit(val, out, indent + 1)
            out.append(",\n" if i < len(items) - 1 else "\n")
        out.append(pad + "}")
    elif isinstance(obj, (list, tuple)):
        seq = list(obj)
        if not seq:
            out.append("[]")
            return
        if all(_is_scalar(x) for x in seq):
            out.append("[")
            for i, x in enumerate(seq):
                if i:
                    out.append(", ")
                _emit_scalar(x, out)
            out.append("]")
            return
        out.append("[\n")
        for i, x in enumerate(seq):
            out.append("  " * (indent + 1))
            _emit(x, out, indent + 1)
            out.append(",\n" if i < len(seq) - 1 else "\n")
        out.append(pad + "]")
    else:
        raise TypeError(f"not serializable: {type(obj)!r}")


def dumps(obj) -> str:
    out: list[str] = []
    _emit(obj, out, 0)
    return "".join(out)


def matrix_to_text(m) -> str:
    """Serialize a complex matrix as rows, cols, and row-major [re, im] pairs."""
    m = np.asarray(m, dtype=np.complex128)
    if m.ndim != 2 or m.size == 0:
        raise MatrixFileError(f"expected a nonempty 2-d matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise MatrixFileError("matrix entries must be finite")
    rows, cols = m.shape
    data = [[float(z.real), float(z.imag)] for z in m.reshape(-1)]
    return dumps({"rows": rows, "cols": cols, "data": data}) + "\n"


def _is_number(x) -> bool:
    return isinstance(x, (int, float)) and not isinstance(x, bool) and math.isfinite(x)


def matrix_from_text(text: str) -> np.ndarray:
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise MatrixFileError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MatrixFileError("top level must be an object")
    rows = obj.get("rows")
    cols = obj.get("cols")
    data = obj.get("data")
    if not isinstance(rows, int) or isinstance(rows, bool) or rows < 1:
        raise MatrixFileError("rows must be a positive integer")
    if not isinstance(cols, int) or isinstance(cols, bool) or cols < 1:
        raise MatrixFileError("cols must be a positive integer")
    if not isinstance(data, list) or len(data) != rows * cols:
        raise MatrixFileError(f"data must list exactly rows*cols = {rows * cols} entries")
    values = np.empty(rows * cols, dtype=np.complex128)
    for i, entry in enumerate(data):
        if not isinstance(entry, list) or len(entry) != 2 or not all(_is_number(v) for v in entry):
            raise MatrixFileError(f"entry {i} must be a [re, im] pair of finite numbers")
        values[i] = complex(entry[0], entry[1])
    return values.reshape(rows, cols)


def read_matrix_file(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        return matrix_from_text(fh.read())


def write_matrix_file(path, m) -> None:
    text = matrix_to_text(m)
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(text)
