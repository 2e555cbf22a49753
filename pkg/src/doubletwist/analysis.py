"""Numerical certification of the untangling's geometric claims.

Each ``verify_*`` function probes one theorem-level property of the
double-tipping family at a chosen grid resolution and returns a
:class:`VerificationReport`.  The remaining operations are the geometric
probes those checks are built from: the evaluation map on a landmark
vector, hinge points and their fiber circles, contrails, preimage
cluster counting, parameter search, and inversion.

Everything is deterministic: randomized checks take an explicit seed and
use numpy's seeded generator, so reports reproduce bit-for-bit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage
from scipy.spatial import cKDTree

from .errors import (
    EdgeDegenerateError,
    HingeDegeneracyError,
    InvalidInputError,
    ResourceLimitError,
    SearchFailureError,
)
from .homotopy import (
    S_MAX,
    T_MAX,
    HomotopyKind,
    check_domain,
    lift,
    lift_grid,
    rotate_grid,
)
from .quaternions import UnitQuaternion, as_unit_vector, rotate, rotation_distance

GRID_CELL_CAP = 16_777_216

LANDMARKS = {
    "fingers": np.array([-1.0, 0.0, 0.0]),
    "thumb": np.array([0.0, 1.0, 0.0]),
    "candle": np.array([0.0, 0.0, 1.0]),
}


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan for the parameter rectangle.

    With ``include_edges`` the grid is the closed rectangle; without it,
    the ns x nt points are spaced strictly inside (the open interior),
    excluding s in {0, pi/2} and t in {0, 2pi}.
    """

    ns: int
    nt: int
    include_edges: bool = True

    def __post_init__(self):
        if self.ns < 2 or self.nt < 2:
            raise InvalidInputError("grid needs at least 2 samples per axis")
        if self.ns * self.nt > GRID_CELL_CAP:
            raise ResourceLimitError(f"grid of {self.ns * self.nt} cells exceeds cap {GRID_CELL_CAP}")

    def s_values(self) -> np.ndarray:
        if self.include_edges:
            return np.linspace(0.0, S_MAX, self.ns)
        return S_MAX * np.arange(1, self.ns + 1) / (self.ns + 1)

    def t_values(self) -> np.ndarray:
        if self.include_edges:
            return np.linspace(0.0, T_MAX, self.nt)
        return T_MAX * np.arange(1, self.nt + 1) / (self.nt + 1)


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one theorem-level check."""

    check_name: str
    passed: bool
    metric: float
    details: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "passed": self.passed,
            "metric": self.metric,
            "details": self.details,
        }


@dataclass(frozen=True)
class Contrail:
    """Path on the sphere traced by one landmark during a single movie (fixed s)."""

    landmark: str
    s: float
    points: np.ndarray  # (nt, 3)


@dataclass(frozen=True)
class HingeFiberSample:
    """Discretized circle of rotations carrying v to its hinge point."""

    v: np.ndarray
    rotations: list[UnitQuaternion]


def hinge(v) -> np.ndarray:
    """Reflection of v across the x-z plane: negate the y-coordinate."""
    a = np.asarray(v, dtype=float)
    if a.shape != (3,):
        raise InvalidInputError("hinge expects a 3-vector")
    return a * np.array([1.0, -1.0, 1.0])


def evaluate(v, kind: HomotopyKind, s: float, t: float) -> np.ndarray:
    """Image of v under the homotopy's rotation at (s, t)."""
    u = as_unit_vector(v, "v")
    return rotate(lift(kind, s, t), u)


def _sphere_angle(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Great-circle angle between unit vectors, stable near 0 and pi."""
    d = np.linalg.norm(a - b, axis=-1)
    s = np.linalg.norm(a + b, axis=-1)
    return 2.0 * np.arctan2(d, s)


def _rot_dist_grid(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Rotation distance between unit-quaternion arrays, chord form."""
    d = np.linalg.norm(a - b, axis=-1)
    s = np.linalg.norm(a + b, axis=-1)
    c = np.minimum(d, s)
    return 4.0 * np.arcsin(np.clip(0.5 * c, -1.0, 1.0))


# ---------------------------------------------------------------------------
# Theorem-level checks


def verify_in_p(kind: HomotopyKind, grid: GridSpec) -> VerificationReport:
    """Max |J component| of the lift over the grid.

    The double-tipping lift has no J component at all, so it passes with a
    metric at rounding scale; the billowing variant peaks at 0.5 and fails
    by design.
    """
    q = lift_grid(kind, grid.s_values(), grid.t_values())
    metric = float(np.abs(q[..., 2]).max())
    k = int(np.abs(q[..., 2]).argmax())
    i, j = divmod(k, q.shape[1])
    return VerificationReport(
        check_name="in-p",
        passed=metric <= 1e-15,
        metric=metric,
        details={
            "kind": kind.value,
            "grid": [grid.ns, grid.nt],
            "argmax_s": float(grid.s_values()[i]),
            "argmax_t": float(grid.t_values()[j]),
        },
    )


def verify_injectivity(grid: GridSpec, tol: float) -> VerificationReport:
    """Search for distinct grid cells mapping to the same rotation.

    Candidate pairs are found by a KD-tree range query over the lifts
    (inserted at both signs, so near-antipodal lifts of one rotation are
    caught), excluding pairs of adjacent cells (Chebyshev distance <= 1 in
    grid indices).

    The based-loop identifications force a resolution caveat: near the
    collapsed edges the whole neighborhood of the rectangle maps inside a
    tiny ball around the identity rotation, so non-neighboring cells there
    sit closer than any fixed tolerance once the grid is fine enough.
    Pairs whose images both fall within that identity halo (radius derived
    from the grid steps and tol) are therefore counted as collisions only
    when they are exact duplicates (distance <= 1e-12, the prescribed edge
    identifications themselves).  Outside the halo a collision is any
    non-neighboring pair within tol.

    metric: the smallest non-neighboring pairwise rotation distance found
    outside the halo (a lower bound of ``search radius`` when none exist).
    Passes when there are no collisions and the metric exceeds tol.
    """
    s_vals, t_vals = grid.s_values(), grid.t_values()
    ds = float(s_vals[1] - s_vals[0])
    dt = float(t_vals[1] - t_vals[0])
    q = lift_grid(HomotopyKind.DOUBLE_TIP, s_vals, t_vals)
    pts = q.reshape(-1, 4)
    n = len(pts)
    nt = grid.nt

    halo_radius = max(2.0 * math.sqrt(tol / ds), 4.0 * tol / dt, 8.0 * tol)
    from_identity = 2.0 * np.arccos(np.clip(np.abs(pts[:, 0]), -1.0, 1.0))
    in_halo = from_identity < halo_radius

    search_radius = max(2.0 * tol, 1e-3)
    tree = cKDTree(np.vstack([pts, -pts]))
    pairs = tree.query_pairs(2.0 * math.sin(search_radius / 4.0), output_type="ndarray")
    if len(pairs):
        a = pairs[:, 0] % n
        b = pairs[:, 1] % n
        keep = a != b
        a, b = a[keep], b[keep]
        ia, ja = a // nt, a % nt
        ib, jb = b // nt, b % nt
        nonneighbor = (np.abs(ia - ib) > 1) | (np.abs(ja - jb) > 1)
        a, b = a[nonneighbor], b[nonneighbor]
    else:
        a = b = np.array([], dtype=int)

    if len(a):
        dist = _rot_dist_grid(pts[a], pts[b])
        both_halo = in_halo[a] & in_halo[b]
        duplicates = dist <= 1e-12
        collisions = (dist <= tol) & (duplicates | ~both_halo)
        n_collisions = int(collisions.sum())
        outside = ~both_halo
        metric = float(dist[outside].min()) if outside.any() else search_radius
        min_overall = float(dist.min())
    else:
        n_collisions = 0
        metric = search_radius
        min_overall = search_radius

    passed = n_collisions == 0 and metric > tol
    return VerificationReport(
        check_name="injective",
        passed=passed,
        metric=metric,
        details={
            "grid": [grid.ns, grid.nt],
            "include_edges": grid.include_edges,
            "tol": tol,
            "collisions": n_collisions,
            "candidate_pairs": int(len(a)),
            "identity_halo_radius": halo_radius,
            "min_distance_incl_halo": min_overall,
        },
    )


def surjectivity_targets(n_targets: int, seed: int) -> np.ndarray:
    """Seeded rotations with axes in the x-z plane: uniform phi and theta."""
    rng = np.random.default_rng(seed)
    # uniform over (-pi/2, pi/2]: numpy's half-open interval is flipped
    phi = math.pi / 2 - rng.uniform(0.0, math.pi, n_targets)
    theta = rng.uniform(0.0, T_MAX, n_targets)
    return np.stack(
        [
            np.cos(theta / 2),
            np.sin(theta / 2) * np.cos(phi),
            np.zeros(n_targets),
            np.sin(theta / 2) * np.sin(phi),
        ],
        axis=-1,
    )


def verify_surjectivity(grid: GridSpec, n_targets: int, tol: float, *, seed: int) -> VerificationReport:
    """Check that every sampled x-z-axis rotation is near some grid image.

    Draws ``n_targets`` seeded target rotations and reports the worst
    nearest-grid rotation distance; passes when all targets are within tol.
    """
    q = lift_grid(HomotopyKind.DOUBLE_TIP, grid.s_values(), grid.t_values()).reshape(-1, 4)
    targets = surjectivity_targets(n_targets, seed)
    worst = 0.0
    chunk = max(1, int(5e7) // max(1, len(q)))
    for c in range(0, len(targets), chunk):
        block = targets[c : c + chunk]
        dots = np.abs(block @ q.T).max(axis=1)
        worst = max(worst, float((2.0 * np.arccos(np.clip(dots, -1.0, 1.0))).max()))
    return VerificationReport(
        check_name="surjective",
        passed=worst <= tol,
        metric=worst,
        details={"grid": [grid.ns, grid.nt], "n_targets": n_targets, "tol": tol, "seed": seed},
    )


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, a: int) -> int:
        while self.parent[a] != a:
            self.parent[a] = self.parent[self.parent[a]]
            a = self.parent[a]
        return a

    def union(self, a: int, b: int) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra


def preimage_clusters(v, w, grid: GridSpec, tol: float) -> int:
    """Number of interior solution clusters of ``evaluate(v, ., .) == w``.

    Cells whose image lies within the angular tolerance of w are grouped
    by 8-neighbor adjacency on the rectangle, with two refinements imposed
    by the quotient structure of a based nullhomotopy:

    * clusters touching the identity edges (t in {0, 2pi} or s = pi/2) are
      edge-degenerate (they correspond to w ~ v) and are excluded;
    * near the s = 0 edge the rectangle double-covers the twist loop, so
      matched cells are glued to matched cells a half period away in t.
      The gluing band covers s up to tol, where the rotation gap between
      (s, t) and (s, t + pi) (about 2*sqrt(2)*s) still allows both copies
      to match one target.

    For a regular target w away from hinge(v) the count is 1: the mod-two
    degree evidence.
    """
    u = as_unit_vector(v, "v")
    wu = as_unit_vector(w, "w")
    h = hinge(u)
    hinge_angle = float(_sphere_angle(wu, h))
    if hinge_angle < tol:
        raise HingeDegeneracyError(
            f"target within {tol} of the hinge point (angle {hinge_angle:.3e}); preimage is a circle"
        )
    s_vals, t_vals = grid.s_values(), grid.t_values()
    q = lift_grid(HomotopyKind.DOUBLE_TIP, s_vals, t_vals)
    images = rotate_grid(q, u)
    angles = _sphere_angle(images, wu)
    mask = angles < tol
    labels, n_labels = ndimage.label(mask, structure=np.ones((3, 3), dtype=int))
    if n_labels == 0:
        return 0

    uf = _UnionFind(n_labels + 1)

    # glue the double-cover shadow: matched low-s cells at t and t + pi
    dt = float(t_vals[1] - t_vals[0])
    shift = int(round(math.pi / dt))
    glue_rows = np.where(s_vals <= tol)[0]
    for i in glue_rows:
        row = labels[i]
        matched = np.where(row != 0)[0]
        for j in matched:
            for j2 in (j + shift - 1, j + shift, j + shift + 1):
                if 0 <= j2 < grid.nt and row[j2] != 0:
                    uf.union(int(row[j]), int(row[j2]))

    # identity edges: first/last t columns and the s = pi/2 row (when present)
    edge_labels: set[int] = set()
    if grid.include_edges:
        for strip in (labels[:, 0], labels[:, -1], labels[-1, :]):
            edge_labels |= {int(lab) for lab in np.unique(strip) if lab != 0}

    roots = {uf.find(lab) for lab in range(1, n_labels + 1)}
    degenerate_roots = {uf.find(lab) for lab in edge_labels}
    return len(roots - degenerate_roots)


def solve_every_which_way(kind: HomotopyKind, v, w, tol: float) -> tuple[float, float]:
    """Find (s, t) whose rotation carries v to w within the angular tolerance.

    Deterministic coarse-to-fine search: a 128x128 scan picks well-
    separated seeds, each refined by a 17x17 window that slides while the
    minimum sits on its boundary and shrinks fourfold otherwise, for up to
    12 shrink levels.  A based nullhomotopy of the double twist must admit
    a solution for every (v, w); failure raises SearchFailureError.
    """
    u = as_unit_vector(v, "v")
    wu = as_unit_vector(w, "w")

    n0 = 128
    s_vals = np.linspace(0.0, S_MAX, n0)
    t_vals = np.linspace(0.0, T_MAX, n0)
    angles = _sphere_angle(rotate_grid(lift_grid(kind, s_vals, t_vals), u), wu)
    order = np.argsort(angles.ravel())[:256]
    seeds: list[tuple[float, float]] = []
    taken: list[tuple[int, int]] = []
    for f in order:
        i, j = divmod(int(f), n0)
        if all(abs(i - i2) > 3 or abs(j - j2) > 3 for i2, j2 in taken):
            seeds.append((float(s_vals[i]), float(t_vals[j])))
            taken.append((i, j))
        if len(seeds) == 8:
            break

    m = 8
    best: tuple[float, float, float] | None = None
    for s0, t0 in seeds:
        sc, tc = s0, t0
        rs = 2.0 * (s_vals[1] - s_vals[0])
        rt = 2.0 * (t_vals[1] - t_vals[0])
        levels = slides = 0
        while levels < 12 and slides < 40:
            ss = np.clip(np.linspace(sc - rs, sc + rs, 2 * m + 1), 0.0, S_MAX)
            tt = np.clip(np.linspace(tc - rt, tc + rt, 2 * m + 1), 0.0, T_MAX)
            window = _sphere_angle(rotate_grid(lift_grid(kind, ss, tt), u), wu)
            k = int(window.argmin())
            i, j = divmod(k, 2 * m + 1)
            sc, tc = float(ss[i]), float(tt[j])
            on_edge = i in (0, 2 * m) or j in (0, 2 * m)
            at_domain_wall = sc in (0.0, S_MAX) or tc in (0.0, T_MAX)
            if on_edge and not at_domain_wall:
                slides += 1  # track along a narrow valley without losing scale
            else:
                rs /= 4.0
                rt /= 4.0
                levels += 1
        res = float(_sphere_angle(rotate(lift(kind, sc, tc), u), wu))
        if best is None or res < best[0]:
            best = (res, sc, tc)
        if best[0] <= tol * 1e-3:
            break

    assert best is not None
    if best[0] > tol:
        raise SearchFailureError(
            f"no (s, t) found within {tol} for v={list(u)}, w={list(wu)}; best residual {best[0]:.3e}"
        )
    return best[1], best[2]


def hinge_fiber(v, n: int) -> HingeFiberSample:
    """The circle of x-z-plane rotations carrying v to hinge(v).

    For each axis (cos phi, 0, sin phi) there is exactly one rotation
    carrying v to its hinge; the angle is solved in closed form from the
    component of v orthogonal to the axis.  Samples are spaced uniformly
    in the lift's arc length over phi in [0, pi], endpoints included, so
    the first and last entries are antipodal lifts of the same rotation:
    the loop is homotopically essential.
    """
    if n < 3:
        raise InvalidInputError("need at least 3 fiber samples")
    u = as_unit_vector(v, "v")
    if abs(u[1]) <= 1e-12:
        raise HingeDegeneracyError(
            "v lies on the x-z equator, so hinge(v) = v and the fiber is the circle of rotations about v"
        )
    target = hinge(u)

    def lift_at(phis: np.ndarray) -> np.ndarray:
        axes = np.stack([np.cos(phis), np.zeros_like(phis), np.sin(phis)], axis=-1)
        v_perp = u - (axes @ u)[:, None] * axes
        w_perp = target - (axes @ target)[:, None] * axes
        cosg = (v_perp * w_perp).sum(-1)
        sing = (axes * np.cross(v_perp, w_perp)).sum(-1)
        gamma = np.mod(np.arctan2(sing, cosg), T_MAX)
        return np.concatenate(
            [np.cos(gamma / 2)[:, None], np.sin(gamma / 2)[:, None] * axes], axis=-1
        )

    dense = np.linspace(0.0, math.pi, 4096)
    qd = lift_at(dense)
    seg = _rot_dist_grid(qd[:-1], qd[1:])
    cum = np.concatenate([[0.0], np.cumsum(seg)])
    phis = np.interp(np.linspace(0.0, cum[-1], n), cum, dense)
    q = lift_at(phis)
    rotations = [UnitQuaternion(*(row / np.linalg.norm(row))) for row in q]
    return HingeFiberSample(u, rotations)


def contrail(landmark: str, s: float, nt: int) -> Contrail:
    """Closed path of one landmark vector over a full movie at fixed s."""
    if landmark not in LANDMARKS:
        raise InvalidInputError(f"unknown landmark {landmark!r}; expected one of {sorted(LANDMARKS)}")
    if nt < 2:
        raise InvalidInputError("contrail needs at least 2 samples")
    check_domain(s, 0.0)
    t_vals = np.linspace(0.0, T_MAX, nt)
    q = lift_grid(HomotopyKind.DOUBLE_TIP, np.array([s]), t_vals)[0]
    points = rotate_grid(q, LANDMARKS[landmark])
    return Contrail(landmark, s, points)


def antipode_visits(landmark: str, s: float, nt: int, tol: float) -> int:
    """Count separated time intervals where the landmark points at its antipode.

    Walks t through the open interval (0, 2pi) with hysteresis: a visit
    begins when the angular distance to the antipode drops below tol and
    ends once it climbs above 2*tol.
    """
    if nt < 64:
        raise InvalidInputError("antipode counting needs nt >= 64")
    trail = contrail(landmark, s, nt)
    target = -LANDMARKS[landmark]
    angles = _sphere_angle(trail.points, target)[1:-1]
    count = 0
    inside = False
    for a in angles:
        if not inside and a < tol:
            count += 1
            inside = True
        elif inside and a > 2.0 * tol:
            inside = False
    return count


def invert_double_tip(target: UnitQuaternion, tol: float = 1e-9) -> tuple[float, float]:
    """The unique interior (s, t) whose double-tipping rotation matches target.

    The closed formulas invert exactly: tan(s) equals the ratio of the
    I component to (1 - real part) on the I >= 0 sheet, then t follows
    from the real part with its branch fixed by the sign of the K
    component.  A damped Newton polish on the (real, K) components
    absorbs rounding.  Targets outside the x-z-axis subspace are invalid;
    the identity and the double-twist edge have no unique preimage.
    """
    comp = np.array([target.r, target.x, target.y, target.z], dtype=float)
    imag_norm = float(np.linalg.norm(comp[1:]))
    if imag_norm <= 1e-12:
        raise EdgeDegenerateError("target is the identity; every boundary parameter maps there")
    if abs(comp[2]) / imag_norm > 1e-9:
        raise InvalidInputError("target axis leaves the x-z plane; not in the image subspace")
    if comp[1] < 0.0:
        comp = -comp
    r_t, x_t, z_t = comp[0], comp[1], comp[3]
    if x_t / imag_norm <= 1e-9:
        raise EdgeDegenerateError("target lies on the double-twist edge; its preimage is not unique")

    s0 = math.atan2(x_t, 1.0 - r_t)
    sh = min(1.0, math.sqrt(max(0.0, 1.0 - r_t) / 2.0) / math.cos(s0))
    t0 = 2.0 * math.asin(sh)
    if z_t < 0.0:
        t0 = T_MAX - t0
    sc, tc = s0, t0

    for _ in range(8):
        cs, sn = math.cos(sc), math.sin(sc)
        shh, chh = math.sin(tc / 2.0), math.cos(tc / 2.0)
        f0 = 1.0 - 2.0 * cs * cs * shh * shh - r_t
        f1 = cs * math.sin(tc) - z_t
        nf = f0 * f0 + f1 * f1
        if nf < 1e-32:
            break
        j00 = 4.0 * cs * sn * shh * shh
        j01 = -2.0 * cs * cs * shh * chh
        j10 = -sn * math.sin(tc)
        j11 = cs * math.cos(tc)
        det = j00 * j11 - j01 * j10
        if abs(det) < 1e-300:
            break
        step_s = (j11 * f0 - j01 * f1) / det
        step_t = (-j10 * f0 + j00 * f1) / det
        lam, improved = 1.0, False
        for _ in range(20):
            s2 = min(max(sc - lam * step_s, 0.0), S_MAX)
            t2 = min(max(tc - lam * step_t, 0.0), T_MAX)
            cs2, sh2 = math.cos(s2), math.sin(t2 / 2.0)
            g0 = 1.0 - 2.0 * cs2 * cs2 * sh2 * sh2 - r_t
            g1 = cs2 * math.sin(t2) - z_t
            if g0 * g0 + g1 * g1 < nf:
                improved = True
                break
            lam /= 2.0
        if not improved:
            break
        sc, tc = s2, t2

    residual = rotation_distance(lift(HomotopyKind.DOUBLE_TIP, sc, tc), target)
    if residual > tol:
        raise SearchFailureError(f"inversion residual {residual:.3e} exceeds {tol}")
    return sc, tc


def hemisphere_views(grid: GridSpec) -> tuple[np.ndarray, np.ndarray]:
    """Two hemispherical pictures of the lift in (r, x, z) coordinates.

    View 1 is the raw lift (it lives on the x >= 0 hemisphere).  View 2
    re-projects to the r >= 0 hemisphere by replacing r-negative points
    with their antipodes, the vantage in which the family visibly teases
    the doubled diameter apart.
    """
    q = lift_grid(HomotopyKind.DOUBLE_TIP, grid.s_values(), grid.t_values())
    view1 = q[..., [0, 1, 3]].copy()
    view2 = view1.copy()
    flip = view2[..., 0] < 0.0
    view2[flip] *= -1.0
    return view1, view2


# ---------------------------------------------------------------------------
# Composite seeded checks used by the verification CLI


def fibonacci_sphere(n: int) -> np.ndarray:
    """Quasi-uniform unit vectors by the golden-angle lattice."""
    i = np.arange(n)
    golden = math.pi * (3.0 - math.sqrt(5.0))
    z = 1.0 - 2.0 * (i + 0.5) / n
    rad = np.sqrt(1.0 - z * z)
    th = golden * i
    return np.stack([rad * np.cos(th), rad * np.sin(th), z], axis=-1)


def degree_pairs(n_pairs: int, seed: int, exclusion: float = 0.05) -> list[tuple[np.ndarray, np.ndarray]]:
    """Seeded (v, w) pairs for degree evidence.

    w is redrawn while it falls inside the exclusion cone around hinge(v)
    or around v itself: the hinge preimage is a circle and near-identity
    targets merge into the edge-degenerate cluster, so neither is a
    regular value of the evaluation map.
    """
    rng = np.random.default_rng(seed)

    def draw() -> np.ndarray:
        vec = rng.normal(size=3)
        return vec / np.linalg.norm(vec)

    pairs = []
    while len(pairs) < n_pairs:
        v = draw()
        w = draw()
        if _sphere_angle(w, hinge(v)) < exclusion or _sphere_angle(w, v) < exclusion:
            continue
        pairs.append((v, w))
    return pairs


def verify_degree(grid: GridSpec, n_pairs: int, tol: float, *, seed: int) -> VerificationReport:
    """preimage_clusters must equal 1 for every seeded regular (v, w) pair."""
    pairs = degree_pairs(n_pairs, seed)
    bad = []
    for v, w in pairs:
        c = preimage_clusters(v, w, grid, tol)
        if c != 1:
            bad.append({"v": [float(x) for x in v], "w": [float(x) for x in w], "clusters": c})
    return VerificationReport(
        check_name="degree",
        passed=not bad,
        metric=float(len(bad)),
        details={"n_pairs": n_pairs, "grid": [grid.ns, grid.nt], "tol": tol, "seed": seed, "failures": bad},
    )


def verify_every_which_way(n_side: int, tol: float) -> VerificationReport:
    """solve_every_which_way must succeed for all pairs of lattice directions, both kinds."""
    pts = fibonacci_sphere(n_side)
    worst = 0.0
    solved = 0
    for kind in (HomotopyKind.DOUBLE_TIP, HomotopyKind.FK):
        for v in pts:
            for w in pts:
                s, t = solve_every_which_way(kind, v, w, tol)
                res = float(_sphere_angle(evaluate(v, kind, s, t), w))
                worst = max(worst, res)
                solved += 1
    return VerificationReport(
        check_name="every-which-way",
        passed=worst <= tol,
        metric=worst,
        details={"pairs_per_kind": n_side * n_side, "solved": solved, "tol": tol},
    )


def thumb_visit_profile(nt: int = 4097, tol: float = 0.01) -> list[int]:
    """Antipode visits of the thumb at s = k*pi/16 for k = 0..8."""
    return [antipode_visits("thumb", k * math.pi / 16.0, nt, tol) for k in range(9)]


def candle_visit_profile(nt: int = 4097, tol: float = 0.01) -> list[int]:
    return [antipode_visits("candle", k * math.pi / 16.0, nt, tol) for k in range(9)]


def verify_thumb_counts(nt: int = 4097, tol: float = 0.01) -> VerificationReport:
    """The thumb meets its antipode twice before s = pi/4, once there, never after."""
    counts = thumb_visit_profile(nt, tol)
    expected = [2, 2, 2, 2, 1, 0, 0, 0, 0]
    mism = sum(1 for c, e in zip(counts, expected) if c != e)
    return VerificationReport(
        check_name="thumb-counts",
        passed=mism == 0,
        metric=float(mism),
        details={"counts": counts, "expected": expected, "s_values": [f"{k}*pi/16" for k in range(9)]},
    )


def verify_candle_once(nt: int = 4097, tol: float = 0.01) -> VerificationReport:
    """The candle turns fully upside down exactly once, at (s, t) = (pi/4, pi)."""
    counts = candle_visit_profile(nt, tol)
    expected = [0, 0, 0, 0, 1, 0, 0, 0, 0]
    mism = sum(1 for c, e in zip(counts, expected) if c != e)
    return VerificationReport(
        check_name="candle-once",
        passed=mism == 0,
        metric=float(mism),
        details={
            "counts": counts,
            "expected": expected,
            "unique_visit": {"s": math.pi / 4.0, "t": math.pi},
        },
    )
