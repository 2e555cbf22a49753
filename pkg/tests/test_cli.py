"""Tests for the command-line interface and its file formats."""

import json
import math

import numpy as np
import pytest

from doubletwist.cli import main
from doubletwist.homotopy import HomotopyKind, double_tip_lift
from doubletwist.serialize import frame_pose, movie_grid, to_json


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr().out
    return code, out


# ---------------------------------------------------------------------------
# serializer


def test_to_json_floats_round_trip_bit_identically():
    values = [math.pi, 1 / 3, 1e-17, 123456.789, -0.0, 2.0, 5e-324]
    text = to_json(values)
    parsed = json.loads(text)
    for a, b in zip(values, parsed):
        assert a == b and math.copysign(1, a) == math.copysign(1, b)


def test_to_json_deterministic():
    doc = frame_pose(HomotopyKind.DOUBLE_TIP, 0.37, 4.1)
    assert to_json(doc) == to_json(frame_pose(HomotopyKind.DOUBLE_TIP, 0.37, 4.1))


def test_to_json_rejects_non_finite():
    with pytest.raises(ValueError):
        to_json(float("nan"))


# ---------------------------------------------------------------------------
# frame pose and movie grid documents


def test_frame_pose_fields():
    pose = frame_pose(HomotopyKind.DOUBLE_TIP, 0.3, 1.0)
    q = double_tip_lift(0.3, 1.0)
    assert pose["quaternion"] == [q.r, q.x, q.y, q.z]
    m = np.array(pose["matrix"]).reshape(3, 3)
    for key, rest in (("fingers", [-1, 0, 0]), ("thumb", [0, 1, 0]), ("candle", [0, 0, 1])):
        want = m @ np.array(rest, dtype=float)
        assert np.abs(np.array(pose["landmarks"][key]) - want).max() <= 1e-15
        assert abs(np.linalg.norm(pose["landmarks"][key]) - 1) <= 1e-9


def test_frame_pose_identity_has_null_axis():
    pose = frame_pose(HomotopyKind.DOUBLE_TIP, 0.3, 0.0)
    assert pose["axis"] is None
    assert pose["angle"] == 0.0


def test_movie_grid_layout():
    doc = movie_grid(HomotopyKind.DOUBLE_TIP, 9, 9)
    assert doc["ns"] == 9 and doc["nt"] == 9
    assert len(doc["poses"]) == 81
    # row-major: t down the rows, s across the columns
    pose = doc["poses"][2 * 9 + 5]
    assert abs(pose["s"] - (math.pi / 2) * 5 / 8) <= 1e-15
    assert abs(pose["t"] - (2 * math.pi) * 2 / 8) <= 1e-15


def test_movie_grid_center_pose_axis_and_angle():
    doc = movie_grid(HomotopyKind.DOUBLE_TIP, 9, 9)
    center = doc["poses"][4 * 9 + 4]
    assert np.abs(np.array(center["axis"]) - (1, 0, 0)).max() <= 1e-9
    assert abs(center["angle"] - math.pi) <= 1e-9


# ---------------------------------------------------------------------------
# commands


def test_cmd_sample_round_trip(tmp_path, capsys):
    out = tmp_path / "grid.json"
    code, _ = run_cli(["sample", "--ns", "5", "--nt", "5", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["poses"]) == 25
    for pose in doc["poses"]:
        q = double_tip_lift(pose["s"], pose["t"])
        assert pose["quaternion"] == [q.r, q.x, q.y, q.z]  # bit-identical re-parse


def test_cmd_sample_two_by_two_all_identity(tmp_path, capsys):
    out = tmp_path / "grid.json"
    code, _ = run_cli(["sample", "--ns", "2", "--nt", "2", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert len(doc["poses"]) == 4
    for pose in doc["poses"]:
        assert np.abs(np.array(pose["matrix"]).reshape(3, 3) - np.eye(3)).max() <= 1e-12


def test_cmd_sample_fk_has_out_of_plane_axis(tmp_path, capsys):
    out = tmp_path / "grid.json"
    code, _ = run_cli(["sample", "--kind", "FK", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert any(pose["axis"] is not None and abs(pose["axis"][1]) > 1e-6 for pose in doc["poses"])


def test_cmd_frames_alias(tmp_path, capsys):
    out = tmp_path / "grid.json"
    code, _ = run_cli(["frames", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    assert len(json.loads(out.read_text())["poses"]) == 81


def test_cmd_sample_unwritable_path(capsys):
    code = main(["sample", "--out", "/nonexistent-dir/grid.json", "--quiet"])
    err = capsys.readouterr().err
    assert code != 0
    assert "error" in err.lower()


def test_cmd_contrail(tmp_path, capsys):
    out = tmp_path / "trail.json"
    code, _ = run_cli(
        ["contrail", "--landmark", "thumb", "--s", str(math.pi / 4), "--nt", "256", "--out", str(out), "--quiet"],
        capsys,
    )
    assert code == 0
    doc = json.loads(out.read_text())
    pts = np.array(doc["points"])
    assert pts.shape == (256, 3)
    assert np.abs(pts[0] - pts[-1]).max() <= 1e-9


def test_cmd_phitheta_csv(tmp_path, capsys):
    out = tmp_path / "surf.csv"
    code, _ = run_cli(["phitheta", "--ns", "5", "--nt", "5", "--csv", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "s,t,phi,theta"
    assert len(lines) == 26
    first = lines[1].split(",")
    assert first[2] == ""  # phi undefined at the identity corner


def test_cmd_hemiviews(tmp_path, capsys):
    out = tmp_path / "hemi.json"
    code, _ = run_cli(["hemiviews", "--ns", "9", "--nt", "9", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    raw = np.array(doc["raw_hemisphere"])
    assert raw.shape == (9, 9, 3)


def test_cmd_compare(tmp_path, capsys):
    out = tmp_path / "cmp.json"
    code, _ = run_cli(["compare", "--ns", "3", "--nt", "3", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["kinds"] == ["D", "FK"]
    assert len(doc["grids"]["D"]["poses"]) == 9
    assert len(doc["grids"]["FK"]["poses"]) == 9


def test_cmd_verify_single_fast_check(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run_cli(["verify", "in-p", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["all_passed"] is True
    assert doc["reports"][0]["check_name"] == "in-p"


def test_cmd_verify_in_p_on_fk_fails(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run_cli(["verify", "in-p", "--kind", "FK", "--out", str(out), "--quiet"], capsys)
    assert code == 1
    doc = json.loads(out.read_text())
    assert doc["all_passed"] is False
    assert abs(doc["reports"][0]["metric"] - 0.5) <= 1e-12


def test_cmd_verify_thumb_and_candle(tmp_path, capsys):
    out = tmp_path / "report.json"
    code, _ = run_cli(["verify", "thumb-counts", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    code, _ = run_cli(["verify", "candle-once", "--out", str(out), "--quiet"], capsys)
    assert code == 0
    doc = json.loads(out.read_text())
    assert doc["reports"][0]["details"]["counts"] == [0, 0, 0, 0, 1, 0, 0, 0, 0]


def test_cmd_verify_unknown_check_usage_error(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["verify", "no-such-check"])
    assert exc.value.code == 2


def test_console_script_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "doubletwist.cli", "sample", "--ns", "2", "--nt", "2", "--quiet"],
        capture_output=True,
        text=True,
        timeout=60,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert len(doc["poses"]) == 4
