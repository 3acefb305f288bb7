"""Deterministic number and JSON formatting for CLI output.

Floats are rounded at 1e-12 (values below it collapse to 0) and printed
with 15 significant digits, so identical inputs always produce identical
bytes; dictionary keys are emitted sorted.
"""
from __future__ import annotations

import json
import math


def fmt_number(x) -> str:
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return str(x)
    x = float(x)
    if not math.isfinite(x):
        raise ValueError("cannot format a non-finite number")
    if abs(x) < 1e-12:
        x = 0.0
    return f"{x:.15g}"


def dumps(obj) -> str:
    """JSON with sorted keys and fixed float formatting."""
    out = []
    _emit(obj, out)
    return "".join(out)


def _emit(obj, out: list):
    if obj is None:
        out.append("null")
    elif obj is True:
        out.append("true")
    elif obj is False:
        out.append("false")
    elif isinstance(obj, str):
        out.append(json.dumps(obj))
    elif isinstance(obj, (int, float)):
        out.append(fmt_number(obj))
    elif isinstance(obj, dict):
        out.append("{")
        for i, key in enumerate(sorted(obj)):
            if i:
                out.append(",")
            out.append(json.dumps(str(key)))
            out.append(":")
            _emit(obj[key], out)
        out.append("}")
    elif isinstance(obj, (list, tuple)):
        out.append("[")
        for i, item in enumerate(obj):
            if i:
                out.append(",")
            _emit(item, out)
        out.append("]")
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
