"""Polytope files and the JSON/CSV writers used by the command line.

Polytope file (JSON)::

    {"dimension": 3, "vertices": [[x, y, z], ...], "edge_norm": 1.0}

``edge_norm`` is optional and defaults to 1. ``NaN`` and ``Infinity`` are
rejected. Every float written by this module uses 17 significant digits
(``format(x, ".17g")``), which round-trips binary64 exactly; output is
therefore byte-identical for identical inputs.
"""

from __future__ import annotations

import json
import math
from numbers import Integral, Real

import numpy as np

from .exceptions import ContractViolation, PolytopeFileError
from .geometry import Polytope

__all__ = [
    "format_float",
    "dumps",
    "load_polytope",
    "parse_polytope",
    "polytope_to_dict",
    "save_polytope",
    "write_csv",
]


def format_float(x: float) -> str:
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"cannot serialize non-finite value {x!r}")
    return format(x, ".17g")


def _encode(obj, indent, level):
    pad = "" if indent is None else "\n" + " " * (indent * (level + 1))
    end = "" if indent is None else "\n" + " " * (indent * level)
    sep = ", " if indent is None else ","
    if obj is None or isinstance(obj, (bool, np.bool_)):
        return json.dumps(None if obj is None else bool(obj))
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, Integral):
        return str(int(obj))
    if isinstance(obj, Real):
        return format_float(obj)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [pad + json.dumps(str(k)) + ": " + _encode(v, indent, level + 1) for k, v in obj.items()]
        return "{" + sep.join(items) + end + "}"
    if isinstance(obj, (list, tuple, np.ndarray)):
        if len(obj) == 0:
            return "[]"
        items = [pad + _encode(v, indent, level + 1) for v in obj]
        return "[" + sep.join(items) + end + "]"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(obj, indent: int | None = 2) -> str:
    """JSON text with every float written to 17 significant digits."""
    return _encode(obj, indent, 0)


def _reject_constant(name):
    raise PolytopeFileError(f"non-finite number {name} in polytope file")


def parse_polytope(text: str, name: str | None = None) -> Polytope:
    try:
        data = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as exc:
        raise PolytopeFileError(f"invalid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise PolytopeFileError("polytope file must hold a JSON object")
    missing = {"dimension", "vertices"} - data.keys()
    if missing:
        raise PolytopeFileError(f"polytope file is missing {', '.join(sorted(missing))}")
    dim = data["dimension"]
    if isinstance(dim, bool) or dim not in (2, 3):
        raise PolytopeFileError(f"dimension must be 2 or 3, got {dim!r}")
    verts = data["vertices"]
    if not isinstance(verts, list) or not all(isinstance(v, list) for v in verts):
        raise PolytopeFileError("vertices must be a list of coordinate lists")
    for v in verts:
        if len(v) != dim:
            raise PolytopeFileError(f"vertex {v!r} does not have {dim} coordinates")
        if not all(isinstance(c, (int, float)) and not isinstance(c, bool) for c in v):
            raise PolytopeFileError(f"vertex {v!r} has non-numeric coordinates")
    edge_norm = data.get("edge_norm", 1.0)
    if isinstance(edge_norm, bool) or not isinstance(edge_norm, (int, float)):
        raise PolytopeFileError(f"edge_norm must be a number, got {edge_norm!r}")
    try:
        return Polytope(verts, edge_norm=edge_norm, name=name)
    except ContractViolation as exc:
        raise PolytopeFileError(str(exc)) from None


def load_polytope(path) -> Polytope:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise PolytopeFileError(f"cannot read {path}: {exc.strerror or exc}") from None
    return parse_polytope(text, name=str(path))


def polytope_to_dict(P: Polytope) -> dict:
    return {
        "dimension": P.dimension,
        "vertices": P.vertices.tolist(),
        "edge_norm": P.edge_norm,
    }


def save_polytope(P: Polytope, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(polytope_to_dict(P)) + "\n")


def write_csv(path, header, columns) -> None:
    """Write equal-length columns under a header row.

    Integer columns are written as integers, everything else with 17
    significant digits.
    """
    cols = [np.asarray(c) for c in columns]
    if len(cols) != len(header):
        raise ValueError("one header entry per column required")
    fmts = []
    for c in cols:
        if np.issubdtype(c.dtype, np.integer):
            fmts.append("%d")
        else:
            if not np.all(np.isfinite(c)):
                raise ValueError("cannot serialize non-finite values")
            fmts.append("%.17g")
    table = np.column_stack(cols) if cols[0].size else np.empty((0, len(cols)))
    with open(path, "w", encoding="utf-8") as fh:
        np.savetxt(fh, table, fmt=fmts, delimiter=",", header=",".join(header), comments="")
