"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the per-criterion
lines and timings.  Tolerances are pinned here and nowhere else.
"""

import json
import math
import time
from contextlib import contextmanager

import numpy as np

from doubletwist.analysis import (
    GridSpec,
    degree_pairs,
    fibonacci_sphere,
    hinge,
    hinge_fiber,
    invert_double_tip,
    preimage_clusters,
    solve_every_which_way,
    verify_injectivity,
    verify_surjectivity,
)
from doubletwist.cli import main
from doubletwist.homotopy import (
    HomotopyKind,
    concat_vs_product_check,
    double_tip_factors,
    double_tip_grid,
    double_tip_lift,
    double_tip_rotation,
    lift_grid,
    rotate_grid,
)
from doubletwist.quaternions import qmul, rotate, rotation_distance


@contextmanager
def criterion(number: int, title: str):
    started = time.monotonic()
    try:
        yield
    except BaseException:
        print(f"ACCEPTANCE {number:2d} [{title}]: FAIL ({time.monotonic() - started:.1f}s)")
        raise
    print(f"ACCEPTANCE {number:2d} [{title}]: PASS ({time.monotonic() - started:.1f}s)")


def sphere_angle(a, b):
    a = np.asarray(a, float)
    b = np.asarray(b, float)
    return 2 * math.atan2(float(np.linalg.norm(a - b)), float(np.linalg.norm(a + b)))


def rot_z(angle):
    return np.array(
        [
            [math.cos(angle), -math.sin(angle), 0.0],
            [math.sin(angle), math.cos(angle), 0.0],
            [0.0, 0.0, 1.0],
        ]
    )


def test_c01_formula_fidelity():
    with criterion(1, "formula fidelity on 513x513 grid"):
        started = time.monotonic()
        s_vals = np.linspace(0.0, math.pi / 2, 513)
        t_vals = np.linspace(0.0, 2 * math.pi, 513)
        q = double_tip_grid(s_vals, t_vals)
        norms = np.linalg.norm(q, axis=-1)
        assert np.abs(norms - 1.0).max() <= 1e-12
        assert np.abs(q[..., 2]).max() <= 1e-15
        assert q[..., 1].min() >= -1e-15
        assert time.monotonic() - started < 5.0


def test_c02_boundary_contract():
    with criterion(2, "boundary loops: double twist and constants"):
        for t in np.linspace(0.0, 2 * math.pi, 257):
            assert np.abs(double_tip_rotation(0.0, t).m - rot_z(2 * t)).max() <= 1e-12
            assert np.abs(double_tip_rotation(math.pi / 2, t).m - np.eye(3)).max() <= 1e-12
        for s in np.linspace(0.0, math.pi / 2, 257):
            assert np.abs(double_tip_rotation(s, 0.0).m - np.eye(3)).max() <= 1e-12
            assert np.abs(double_tip_rotation(s, 2 * math.pi).m - np.eye(3)).max() <= 1e-12


def test_c03_factorization():
    with criterion(3, "tipped-factor product reproduces the closed form"):
        worst = 0.0
        for s in np.linspace(0.0, math.pi / 2, 65):
            for t in np.linspace(0.0, 2 * math.pi, 65):
                right, left = double_tip_factors(s, t)
                prod = qmul(right, left)
                q = double_tip_lift(s, t)
                worst = max(
                    worst,
                    abs(prod.r - q.r),
                    abs(prod.x - q.x),
                    abs(prod.y - q.y),
                    abs(prod.z - q.z),
                )
        assert worst <= 1e-12


def test_c04_concatenation_equals_pointwise_product():
    with criterion(4, "concatenation = pointwise product for z and y twists"):
        assert concat_vs_product_check((0.0, 0.0, 1.0), 64, tol=1e-9)
        assert concat_vs_product_check((0.0, 1.0, 0.0), 64, tol=1e-9)


def test_c05_injectivity():
    with criterion(5, "injectivity on the 201x201 interior grid"):
        started = time.monotonic()
        report = verify_injectivity(GridSpec(201, 201, include_edges=False), 1e-4)
        assert report.details["collisions"] == 0
        assert report.passed
        assert time.monotonic() - started < 30.0


def test_c06_surjectivity():
    with criterion(6, "surjectivity onto the x-z-axis rotations"):
        started = time.monotonic()
        report = verify_surjectivity(GridSpec(512, 512), 1000, 0.05, seed=42)
        assert report.passed
        assert report.metric <= 0.05
        assert time.monotonic() - started < 60.0


def test_c07_degree_evidence():
    with criterion(7, "single preimage cluster for 50 regular targets"):
        grid = GridSpec(512, 512)
        for v, w in degree_pairs(50, seed=42):
            assert preimage_clusters(v, w, grid, 0.03) == 1


def test_c08_every_which_way():
    with criterion(8, "every-which-way for both families"):
        started = time.monotonic()
        pts = fibonacci_sphere(12)
        worst = 0.0
        for kind in (HomotopyKind.DOUBLE_TIP, HomotopyKind.FK):
            for v in pts:
                for w in pts:
                    s, t = solve_every_which_way(kind, v, w, 1e-3)
                    q = lift_grid(kind, np.array([s]), np.array([t]))[0, 0]
                    res = sphere_angle(rotate_grid(q, v), w)
                    worst = max(worst, res)
        assert worst <= 1e-3
        assert time.monotonic() - started < 120.0


def test_c09_hinge_fiber():
    with criterion(9, "hinge fiber circle for the figure-eight landmark"):
        v = np.array([0.85, 0.4, 0.34278])
        target = hinge(v)
        fib = hinge_fiber(v, 360)
        assert len(fib.rotations) == 360
        for q in fib.rotations:
            assert abs(q.y) <= 1e-9
            assert np.abs(rotate(q, v) - target).max() <= 1e-9
        first, last = fib.rotations[0], fib.rotations[-1]
        assert max(
            abs(first.r + last.r), abs(first.x + last.x),
            abs(first.y + last.y), abs(first.z + last.z),
        ) <= 1e-9


def test_c10_landmark_counts():
    with criterion(10, "antipode visit counts for candle and thumb"):
        from doubletwist.analysis import candle_visit_profile, thumb_visit_profile

        assert candle_visit_profile() == [0, 0, 0, 0, 1, 0, 0, 0, 0]
        assert thumb_visit_profile() == [2, 2, 2, 2, 1, 0, 0, 0, 0]


def test_c11_inversion_round_trips():
    with criterion(11, "closed-form inversion round trips"):
        rng = np.random.default_rng(42)
        for _ in range(200):
            s0 = rng.uniform(0.0, math.pi / 2)
            t0 = rng.uniform(0.0, 2 * math.pi)
            target = double_tip_lift(s0, t0)
            s, t = invert_double_tip(target)
            assert rotation_distance(double_tip_lift(s, t), target) <= 1e-9


def test_c12_cli_contract(tmp_path, capsys):
    with criterion(12, "CLI verify-all exit code and sampled center pose"):
        report_path = tmp_path / "reports.json"
        code = main(["verify", "all", "--seed", "42", "--out", str(report_path), "--quiet"])
        assert code == 0
        doc = json.loads(report_path.read_text())
        assert doc["all_passed"] is True
        assert len(doc["reports"]) == 7

        grid_path = tmp_path / "grid.json"
        assert main(["sample", "--ns", "9", "--nt", "9", "--out", str(grid_path), "--quiet"]) == 0
        grid = json.loads(grid_path.read_text())
        center = grid["poses"][4 * 9 + 4]
        assert np.abs(np.array(center["axis"]) - np.array([1.0, 0.0, 0.0])).max() <= 1e-9
        assert abs(center["angle"] - math.pi) <= 1e-9
