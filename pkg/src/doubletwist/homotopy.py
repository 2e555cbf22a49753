"""Closed-form untanglings of the double-twist loop in SO(3).

The central object is the double-tipping family: the double twist about
the z-axis, rewritten as the pointwise product of two single-twists, whose
axes are tipped symmetrically left and right in the x = 0 plane as the
homotopy parameter s runs from 0 to pi/2.  Its unit-quaternion lift has
the closed form

    (1 - 2 cos^2(s) sin^2(t/2)) + I (sin(2s) sin^2(t/2)) + K (cos(s) sin(t))

with no J component at all, so every rotation it uses has its axis in the
x-z plane.  A second family ("FK") lets the K axial component spill into
the J direction and serves as the contrast case whose axes billow out of
that plane.

Scalar entry points return core types; the ``*_grid`` helpers evaluate the
same formulas over parameter grids as numpy arrays for the verification
module.  All functions are pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .errors import InvalidInputError, UndefinedAxisError
from .quaternions import (
    RotationMatrix,
    UnitQuaternion,
    as_unit_vector,
    from_axis_angle,
    qmul,
    same_rotation,
    to_matrix,
)

S_MAX = math.pi / 2
T_MAX = 2 * math.pi
_DOMAIN_SLACK = 1e-9


class HomotopyKind(Enum):
    DOUBLE_TIP = "D"
    FK = "FK"

    @classmethod
    def parse(cls, text: str) -> "HomotopyKind":
        key = str(text).strip().lower()
        if key in ("d", "doubletip", "double-tip", "double_tip"):
            return cls.DOUBLE_TIP
        if key == "fk":
            return cls.FK
        raise InvalidInputError(f"unknown homotopy kind {text!r} (expected D or FK)")


@dataclass(frozen=True)
class HomotopyParams:
    """Point (s, t) of the closed parameter rectangle [0, pi/2] x [0, 2pi]."""

    s: float
    t: float

    def __post_init__(self):
        check_domain(self.s, self.t)


def check_domain(s: float, t: float) -> None:
    if not (-_DOMAIN_SLACK <= s <= S_MAX + _DOMAIN_SLACK):
        raise InvalidInputError(f"s = {s} outside [0, pi/2]")
    if not (-_DOMAIN_SLACK <= t <= T_MAX + _DOMAIN_SLACK):
        raise InvalidInputError(f"t = {t} outside [0, 2pi]")


def double_tip_lift(s: float, t: float) -> UnitQuaternion:
    """Unit-quaternion lift of the double-tipping family at (s, t).

    The I component is never negative and the J component is identically
    zero.  At s = 0 this is cos(t) + sin(t) K (the double twist); at
    s = pi/2 it is constantly 1.
    """
    check_domain(s, t)
    half = math.sin(0.5 * t)
    r = 1.0 - 2.0 * math.cos(s) ** 2 * half * half
    x = math.sin(2.0 * s) * half * half
    z = math.cos(s) * math.sin(t)
    n = math.sqrt(r * r + x * x + z * z)
    return UnitQuaternion(r / n, x / n, 0.0, z / n)


def fk_lift(s: float, t: float) -> UnitQuaternion:
    """Lift of the billowing-axis variant.

    Real and I components agree with ``double_tip_lift``; the axial K
    component is rotated by s toward J, giving J = sin(s) cos(s) sin(t)
    and K = cos(s)^2 sin(t).
    """
    check_domain(s, t)
    half = math.sin(0.5 * t)
    cs = math.cos(s)
    r = 1.0 - 2.0 * cs * cs * half * half
    x = math.sin(2.0 * s) * half * half
    y = math.sin(s) * cs * math.sin(t)
    z = cs * cs * math.sin(t)
    n = math.sqrt(r * r + x * x + y * y + z * z)
    return UnitQuaternion(r / n, x / n, y / n, z / n)


def lift(kind: HomotopyKind, s: float, t: float) -> UnitQuaternion:
    return double_tip_lift(s, t) if kind is HomotopyKind.DOUBLE_TIP else fk_lift(s, t)


def double_tip_rotation(s: float, t: float) -> RotationMatrix:
    """The double-tipping family as a rotation matrix: conjugation by its lift."""
    return to_matrix(double_tip_lift(s, t))


def axial_angle(s: float, t: float) -> float:
    """Angle phi in the x-z plane from the +x axis to the rotation axis.

    Computed as atan2 of the lift's (K, I) components, which stays finite
    on the domain edges where the textbook quotient csc(s) cot(t/2) blows
    up.  The I component is never negative, so the value lies in
    [-pi/2, pi/2]; the rotation axis is (cos(phi), 0, sin(phi)).
    Raises UndefinedAxisError where the rotation is the identity.
    """
    q = double_tip_lift(s, t)
    if rotation_angle(s, t) <= 1e-9 or 2.0 * math.pi - rotation_angle(s, t) <= 1e-9:
        raise UndefinedAxisError(f"rotation at (s={s}, t={t}) is the identity; axis undefined")
    return math.atan2(q.z, q.x)


def rotation_angle(s: float, t: float) -> float:
    """Rotation angle theta in [0, 2pi]: 2 arccos of the lift's real part."""
    check_domain(s, t)
    half = math.sin(0.5 * t)
    r = 1.0 - 2.0 * math.cos(s) ** 2 * half * half
    return 2.0 * math.acos(min(1.0, max(-1.0, r)))


@dataclass(frozen=True)
class HomotopySample:
    """One evaluated cell of a homotopy: lift, matrix, and axis coordinates."""

    params: HomotopyParams
    q: UnitQuaternion
    matrix: RotationMatrix
    phi: float | None
    theta: float


def sample(kind: HomotopyKind, s: float, t: float) -> HomotopySample:
    params = HomotopyParams(s, t)
    q = lift(kind, s, t)
    theta = 2.0 * math.acos(min(1.0, max(-1.0, q.r)))
    phi: float | None
    if kind is HomotopyKind.DOUBLE_TIP:
        try:
            phi = axial_angle(s, t)
        except UndefinedAxisError:
            phi = None
    else:
        phi = None  # FK axes leave the x-z plane; consumers use to_axis_angle
    return HomotopySample(params, q, to_matrix(q), phi, theta)


def single_twist(axis, t: float) -> UnitQuaternion:
    """Lift of the loop rotating by t about a fixed axis, t in [0, 2pi].

    Endpoints map to the identity rotation; the lift ends at -1 rather
    than 1, which is the double cover at work.
    """
    if not (-_DOMAIN_SLACK <= t <= T_MAX + _DOMAIN_SLACK):
        raise InvalidInputError(f"t = {t} outside [0, 2pi]")
    return from_axis_angle(axis, t)


def tipped_single_twist(s: float, t: float) -> UnitQuaternion:
    """Single twist whose axis is tipped by s from +z toward -y.

    At s = 0 this is the twist about +z; at s = pi the axis is upside
    down, so the loop runs the +z twist clockwise instead.
    """
    if not (-_DOMAIN_SLACK <= s <= math.pi + _DOMAIN_SLACK):
        raise InvalidInputError(f"tipping angle s = {s} outside [0, pi]")
    axis = (0.0, -math.sin(s), math.cos(s))
    return single_twist(axis, t)


def double_tip_factors(s: float, t: float) -> tuple[UnitQuaternion, UnitQuaternion]:
    """The two tipped single-twist lifts whose product is the double-tipping lift.

    Returns (right_tipped, left_tipped) with axes (0, +-sin s, cos s); the
    left-tipped rotation acts first under conjugation, so the product is
    qmul(right, left).
    """
    check_domain(s, t)
    left = from_axis_angle((0.0, -math.sin(s), math.cos(s)), t)
    right = from_axis_angle((0.0, math.sin(s), math.cos(s)), t)
    return right, left


def concat_vs_product_check(axis, n: int, tol: float = 1e-9) -> bool:
    """Check that squaring a single twist pointwise equals concatenating it.

    Samples n values of t; at each, compares the concatenated-and-
    reparametrized double traversal against the pointwise product of the
    twist with itself, as rotations.
    """
    if n < 2:
        raise InvalidInputError("need at least 2 samples")
    u = as_unit_vector(axis, "axis")
    for i in range(n):
        t = T_MAX * i / (n - 1)
        if t <= math.pi:
            concat = single_twist(u, 2.0 * t)
        else:
            concat = single_twist(u, 2.0 * t - T_MAX)
        tw = single_twist(u, t)
        if not same_rotation(concat, qmul(tw, tw), tol):
            return False
    return True


# ---------------------------------------------------------------------------
# Vectorized grid kernels (same formulas, numpy in and out)


def double_tip_grid(s_vals: np.ndarray, t_vals: np.ndarray) -> np.ndarray:
    """Lift components over the outer grid of s_vals x t_vals, shape (ns, nt, 4)."""
    s = np.asarray(s_vals, dtype=float)[:, None]
    t = np.asarray(t_vals, dtype=float)[None, :]
    half2 = np.sin(0.5 * t) ** 2
    r = 1.0 - 2.0 * np.cos(s) ** 2 * half2
    x = np.sin(2.0 * s) * half2
    z = np.cos(s) * np.sin(t)
    y = np.zeros(np.broadcast_shapes(r.shape, z.shape))
    return np.stack(np.broadcast_arrays(r, x, y, z), axis=-1)


def fk_grid(s_vals: np.ndarray, t_vals: np.ndarray) -> np.ndarray:
    s = np.asarray(s_vals, dtype=float)[:, None]
    t = np.asarray(t_vals, dtype=float)[None, :]
    half2 = np.sin(0.5 * t) ** 2
    cs = np.cos(s)
    r = 1.0 - 2.0 * cs**2 * half2
    x = np.sin(2.0 * s) * half2
    y = np.sin(s) * cs * np.sin(t)
    z = cs**2 * np.sin(t)
    return np.stack(np.broadcast_arrays(r, x, y, z), axis=-1)


def lift_grid(kind: HomotopyKind, s_vals, t_vals) -> np.ndarray:
    if kind is HomotopyKind.DOUBLE_TIP:
        return double_tip_grid(s_vals, t_vals)
    return fk_grid(s_vals, t_vals)


def rotate_grid(q: np.ndarray, v: np.ndarray) -> np.ndarray:
    """Rotate one vector v by every quaternion in q, shape (..., 4) -> (..., 3)."""
    r = q[..., 0]
    u = q[..., 1:]
    uv = np.cross(u, v)
    uuv = np.cross(u, uv)
    return v + 2.0 * (r[..., None] * uv + uuv)
