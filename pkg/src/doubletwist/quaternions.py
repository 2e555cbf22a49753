"""Quaternion arithmetic and the conjugation action on 3-space.

Rotations are represented four ways: unit quaternions, 3x3 matrices,
axis-angle pairs, and points of the closed unit ball with antipodal
boundary identification.  Conjugation q v conj(q) by a unit quaternion q
rotates a vector v counterclockwise (looking toward the origin from the
tip of the axis); q and -q act identically, so quaternion comparisons
meant at the rotation level must go through ``same_rotation`` or
``rotation_distance`` rather than raw components.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InvalidInputError

UNIT_TOL = 1e-9
# Input 3-vectors are accepted as "unit" up to this slack and renormalized;
# published reference directions are often rounded to 5 decimals.
VECTOR_UNIT_SLACK = 1e-6

_PLACEHOLDER_AXIS = np.array([0.0, 0.0, 1.0])


def as_unit_vector(v, name: str = "vector") -> np.ndarray:
    """Validate that v is a unit 3-vector (within slack) and return it renormalized."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise InvalidInputError(f"{name} must be a 3-vector, got shape {a.shape}")
    n = float(np.linalg.norm(a))
    if abs(n - 1.0) > VECTOR_UNIT_SLACK:
        raise InvalidInputError(f"{name} must be a unit vector, |norm - 1| = {abs(n - 1.0):.3e}")
    return a / n


@dataclass(frozen=True)
class Quaternion:
    """Element r + xI + yJ + zK of the quaternion algebra."""

    r: float
    x: float
    y: float
    z: float

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        return qmul(self, other)

    def __neg__(self) -> "Quaternion":
        return type(self)(-self.r, -self.x, -self.y, -self.z)

    def conjugate(self) -> "Quaternion":
        return type(self)(self.r, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return math.sqrt(self.r * self.r + self.x * self.x + self.y * self.y + self.z * self.z)

    @property
    def imag(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def components(self) -> np.ndarray:
        return np.array([self.r, self.x, self.y, self.z])

    def normalized(self) -> "UnitQuaternion":
        n = self.norm()
        if n == 0.0:
            raise InvalidInputError("cannot normalize the zero quaternion")
        return UnitQuaternion(self.r / n, self.x / n, self.y / n, self.z / n)

    def isclose(self, other: "Quaternion", tol: float = 1e-12) -> bool:
        """Componentwise closeness at the lift (S^3) level; sign-sensitive."""
        return (
            abs(self.r - other.r) <= tol
            and abs(self.x - other.x) <= tol
            and abs(self.y - other.y) <= tol
            and abs(self.z - other.z) <= tol
        )


class UnitQuaternion(Quaternion):
    """Quaternion constrained to the unit sphere S^3 at construction time."""

    def __init__(self, r: float, x: float, y: float, z: float):
        n = math.sqrt(r * r + x * x + y * y + z * z)
        if abs(n - 1.0) > UNIT_TOL:
            raise InvalidInputError(f"unit quaternion required, |norm - 1| = {abs(n - 1.0):.3e}")
        object.__setattr__(self, "r", float(r))
        object.__setattr__(self, "x", float(x))
        object.__setattr__(self, "y", float(y))
        object.__setattr__(self, "z", float(z))

    def inverse(self) -> "UnitQuaternion":
        return self.conjugate()


IDENTITY = UnitQuaternion(1.0, 0.0, 0.0, 0.0)


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    """Hamilton product, via IJ = K, JK = I, KI = J and I^2 = J^2 = K^2 = -1."""
    r = a.r * b.r - a.x * b.x - a.y * b.y - a.z * b.z
    x = a.r * b.x + a.x * b.r + a.y * b.z - a.z * b.y
    y = a.r * b.y - a.x * b.z + a.y * b.r + a.z * b.x
    z = a.r * b.z + a.x * b.y - a.y * b.x + a.z * b.r
    if isinstance(a, UnitQuaternion) and isinstance(b, UnitQuaternion):
        # product of unit quaternions drifts from S^3 only by rounding
        n = math.sqrt(r * r + x * x + y * y + z * z)
        return UnitQuaternion(r / n, x / n, y / n, z / n)
    return Quaternion(r, x, y, z)


def conj(q: Quaternion) -> Quaternion:
    return q.conjugate()


def rotate(q: UnitQuaternion, v) -> np.ndarray:
    """Apply the rotation carried by q to a 3-vector: imaginary part of q (0,v) conj(q)."""
    p = Quaternion(0.0, *np.asarray(v, dtype=float))
    out = qmul(qmul(q, p), q.conjugate())
    return out.imag


def from_axis_angle(axis, gamma: float) -> UnitQuaternion:
    """Unit quaternion cos(gamma/2) + sin(gamma/2) * axis.

    Conjugation by the result rotates by gamma counterclockwise about the
    unit vector ``axis``.  gamma may be any real; the lift is 4pi-periodic.
    """
    u = as_unit_vector(axis, "axis")
    h = 0.5 * math.fmod(gamma, 4.0 * math.pi)
    c, s = math.cos(h), math.sin(h)
    return UnitQuaternion(c, s * u[0], s * u[1], s * u[2])


@dataclass(frozen=True)
class AxisAngle:
    """Canonical axis-angle form: angle in [0, pi], axis flipped as needed.

    When the rotation is the identity the axis is meaningless; a placeholder
    (0, 0, 1) is stored and ``axis_defined`` is False.
    """

    axis: np.ndarray
    angle: float
    axis_defined: bool = True

    def __post_init__(self):
        a = np.asarray(self.axis, dtype=float)
        object.__setattr__(self, "axis", a)
        if not (0.0 <= self.angle <= math.pi + 1e-12):
            raise InvalidInputError(f"canonical angle must lie in [0, pi], got {self.angle}")


def to_axis_angle(q: UnitQuaternion) -> AxisAngle:
    """Canonical axis-angle of the rotation carried by q.

    The raw decomposition q = cos(g/2) + sin(g/2) u has g in [0, 2pi]; for
    g > pi the same rotation is returned as (-u, 2pi - g) so the canonical
    angle always lies in [0, pi].
    """
    imag = q.imag
    s = float(np.linalg.norm(imag))
    if s < 1e-12:
        return AxisAngle(_PLACEHOLDER_AXIS.copy(), 0.0, axis_defined=False)
    # atan2 form stays accurate for tiny angles where sqrt(1 - r^2) cancels
    gamma = 2.0 * math.atan2(s, q.r)
    u = imag / s
    # at gamma = pi both (u, pi) and (-u, pi) are canonical; keep the raw axis
    # when only rounding pushed gamma past pi
    if gamma > math.pi + 1e-9:
        return AxisAngle(-u, 2.0 * math.pi - gamma)
    return AxisAngle(u, min(gamma, math.pi))


@dataclass(frozen=True)
class RotationMatrix:
    """Orthogonal 3x3 matrix with determinant +1."""

    m: np.ndarray

    def __post_init__(self):
        a = np.asarray(self.m, dtype=float)
        if a.shape != (3, 3):
            raise InvalidInputError(f"rotation matrix must be 3x3, got {a.shape}")
        if np.abs(a @ a.T - np.eye(3)).max() > UNIT_TOL:
            raise InvalidInputError("matrix is not orthogonal within 1e-9")
        if abs(np.linalg.det(a) - 1.0) > UNIT_TOL:
            raise InvalidInputError("matrix determinant is not 1 within 1e-9")
        a.setflags(write=False)
        object.__setattr__(self, "m", a)

    def apply(self, v) -> np.ndarray:
        return self.m @ np.asarray(v, dtype=float)

    def isclose(self, other: "RotationMatrix", tol: float = 1e-12) -> bool:
        return bool(np.abs(self.m - other.m).max() <= tol)


def to_matrix(q: UnitQuaternion) -> RotationMatrix:
    """Rotation matrix of q; columns are the images of e1, e2, e3.

    Uses the homogeneous closed form rather than three conjugations, so it
    serves as an independent route against ``rotate``.  to_matrix(q) equals
    to_matrix(-q).
    """
    r, x, y, z = q.r, q.x, q.y, q.z
    m = np.array(
        [
            [1 - 2 * (y * y + z * z), 2 * (x * y - r * z), 2 * (x * z + r * y)],
            [2 * (x * y + r * z), 1 - 2 * (x * x + z * z), 2 * (y * z - r * x)],
            [2 * (x * z - r * y), 2 * (y * z + r * x), 1 - 2 * (x * x + y * y)],
        ]
    )
    return RotationMatrix(m)


@dataclass(frozen=True)
class BallPoint:
    """Point rho*u of the closed unit ball modeling a rotation by rho*pi about u.

    Boundary points (rho = 1) are identified with their antipodes.
    """

    rho: float
    u: np.ndarray = field(default_factory=lambda: _PLACEHOLDER_AXIS.copy())

    def __post_init__(self):
        if not (0.0 <= self.rho <= 1.0 + 1e-12):
            raise InvalidInputError(f"rho must lie in [0, 1], got {self.rho}")
        object.__setattr__(self, "u", np.asarray(self.u, dtype=float))

    def __eq__(self, other) -> bool:
        if not isinstance(other, BallPoint):
            return NotImplemented
        return self.isclose(other, tol=1e-12)

    def isclose(self, other: "BallPoint", tol: float = 1e-9) -> bool:
        if abs(self.rho - other.rho) > tol:
            return False
        if self.rho <= tol:
            return True  # center: axis meaningless
        if np.linalg.norm(self.u - other.u) <= tol:
            return True
        # antipodal boundary identification
        return self.rho >= 1.0 - tol and bool(np.linalg.norm(self.u + other.u) <= tol)


def to_ball_point(q: UnitQuaternion) -> BallPoint:
    aa = to_axis_angle(q)
    return BallPoint(aa.angle / math.pi, aa.axis)


def rotation_distance(a: UnitQuaternion, b: UnitQuaternion) -> float:
    """Angle of the rotation a^-1 b in SO(3): 2*arccos|<a, b>|, in [0, pi].

    Computed through the chord between a and the nearer of +-b, which keeps
    full precision for nearly identical rotations where the arccos form
    bottoms out near 1e-8.
    """
    d = np.array([a.r - b.r, a.x - b.x, a.y - b.y, a.z - b.z])
    s = np.array([a.r + b.r, a.x + b.x, a.y + b.y, a.z + b.z])
    c = min(float(np.linalg.norm(d)), float(np.linalg.norm(s)))
    return 4.0 * math.asin(min(1.0, 0.5 * c))


def same_rotation(a: UnitQuaternion, b: UnitQuaternion, tol: float = 1e-9) -> bool:
    """True when a and b act identically on 3-space within tol (sign-blind)."""
    return rotation_distance(a, b) <= tol
