"""Deterministic JSON documents for frames, grids, contrails, and reports.

Floats are written with 17 significant digits, enough for a double to
re-parse bit-identically, and the writer walks containers in insertion
order, so equal inputs always produce byte-identical text.
"""

from __future__ import annotations

import math
from typing import Any

import numpy as np

from .analysis import Contrail, GridSpec, LANDMARKS, VerificationReport, hemisphere_views
from .errors import UndefinedAxisError
from .homotopy import HomotopyKind, S_MAX, T_MAX, axial_angle, lift, rotation_angle
from .quaternions import to_axis_angle, to_matrix


def _fmt_float(x: float) -> str:
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite float in JSON document")
    if x == int(x) and abs(x) < 1e16:
        return repr(float(x))  # keeps "1.0" instead of "1"
    return format(x, ".17g")


def to_json(obj: Any) -> str:
    """Serialize dicts/lists/scalars (and numpy arrays) deterministically."""
    if isinstance(obj, dict):
        inner = ",".join(f"{to_json(str(k))}:{to_json(v)}" for k, v in obj.items())
        return "{" + inner + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ",".join(to_json(v) for v in obj) + "]"
    if isinstance(obj, np.ndarray):
        return to_json(obj.tolist())
    if isinstance(obj, bool) or isinstance(obj, np.bool_):
        return "true" if obj else "false"
    if obj is None:
        return "null"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if isinstance(obj, str):
        out = obj.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
        return f'"{out}"'
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def frame_pose(kind: HomotopyKind, s: float, t: float) -> dict:
    """One pose document: lift, matrix, canonical axis-angle, landmark images.

    The landmark vectors are the matrix applied to the rest directions of
    the fingers (-e1), thumb (e2), and candle (e3).
    """
    q = lift(kind, s, t)
    mat = to_matrix(q)
    aa = to_axis_angle(q)
    return {
        "kind": kind.value,
        "s": float(s),
        "t": float(t),
        "quaternion": [q.r, q.x, q.y, q.z],
        "matrix": [float(v) for v in mat.m.ravel()],
        "axis": [float(v) for v in aa.axis] if aa.axis_defined else None,
        "angle": float(aa.angle),
        "landmarks": {
            "fingers": [float(v) for v in mat.apply(LANDMARKS["fingers"])],
            "thumb": [float(v) for v in mat.apply(LANDMARKS["thumb"])],
            "candle": [float(v) for v in mat.apply(LANDMARKS["candle"])],
        },
    }


def movie_grid(kind: HomotopyKind, ns: int, nt: int) -> dict:
    """Grid of poses, row-major with t down the rows and s across the columns."""
    s_vals = [S_MAX * j / (ns - 1) for j in range(ns)]
    t_vals = [T_MAX * i / (nt - 1) for i in range(nt)]
    poses = [frame_pose(kind, s, t) for t in t_vals for s in s_vals]
    return {"kind": kind.value, "ns": ns, "nt": nt, "poses": poses}


def contrail_document(trail: Contrail) -> dict:
    return {
        "landmark": trail.landmark,
        "s": float(trail.s),
        "points": [[float(c) for c in p] for p in trail.points],
    }


def reports_document(reports: list[VerificationReport]) -> dict:
    return {
        "all_passed": all(r.passed for r in reports),
        "reports": [r.as_dict() for r in reports],
    }


def phi_theta_document(ns: int, nt: int) -> dict:
    """Axis-angle coordinate surfaces of the double-tipping family.

    phi is null at cells where the rotation is the identity and its axis
    undefined.
    """
    s_vals = [S_MAX * i / (ns - 1) for i in range(ns)]
    t_vals = [T_MAX * j / (nt - 1) for j in range(nt)]
    phi_rows: list[list[float | None]] = []
    theta_rows: list[list[float]] = []
    for s in s_vals:
        phi_row: list[float | None] = []
        theta_row: list[float] = []
        for t in t_vals:
            theta_row.append(rotation_angle(s, t))
            try:
                phi_row.append(axial_angle(s, t))
            except UndefinedAxisError:
                phi_row.append(None)
        phi_rows.append(phi_row)
        theta_rows.append(theta_row)
    return {"s": s_vals, "t": t_vals, "phi": phi_rows, "theta": theta_rows}


def phi_theta_csv(ns: int, nt: int) -> str:
    """CSV export of the coordinate surfaces: columns s, t, phi, theta."""
    doc = phi_theta_document(ns, nt)
    lines = ["s,t,phi,theta"]
    for i, s in enumerate(doc["s"]):
        for j, t in enumerate(doc["t"]):
            phi = doc["phi"][i][j]
            phi_txt = "" if phi is None else _fmt_float(phi)
            lines.append(f"{_fmt_float(s)},{_fmt_float(t)},{phi_txt},{_fmt_float(doc['theta'][i][j])}")
    return "\n".join(lines) + "\n"


def hemiviews_document(ns: int, nt: int) -> dict:
    """The two hemispherical projections of the lift, as (r, x, z) point grids."""
    view1, view2 = hemisphere_views(GridSpec(ns, nt, include_edges=True))
    return {
        "coordinates": ["r", "x", "z"],
        "raw_hemisphere": view1.tolist(),
        "front_hemisphere": view2.tolist(),
    }
