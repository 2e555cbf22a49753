"""Command-line front end: sampling, verification, export, and serve mode.

Exit codes: 0 on success (and for ``verify`` only when every selected
check passed), 1 when a verification fails or an input error occurs,
2 for usage errors (argparse's convention).  All angles are radians on
disk and on the wire; ``--degrees`` only changes the human-readable log
lines printed to stderr.
"""

from __future__ import annotations

import argparse
import math
import sys

from . import analysis
from .analysis import GridSpec
from .errors import DoubleTwistError
from .homotopy import HomotopyKind
from .serialize import (
    contrail_document,
    hemiviews_document,
    movie_grid,
    phi_theta_csv,
    phi_theta_document,
    reports_document,
    to_json,
)

CHECK_NAMES = [
    "in-p",
    "injective",
    "surjective",
    "degree",
    "every-which-way",
    "thumb-counts",
    "candle-once",
]


def _write(path: str | None, text: str) -> None:
    if path in (None, "-"):
        sys.stdout.write(text + ("\n" if not text.endswith("\n") else ""))
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _log(args, message: str) -> None:
    if not getattr(args, "quiet", False):
        print(message, file=sys.stderr)


def _angle_text(args, radians: float) -> str:
    if getattr(args, "degrees", False):
        return f"{math.degrees(radians):.4f} deg"
    return f"{radians:.6f} rad"


def run_check(name: str, seed: int, kind: HomotopyKind, tol: float | None):
    def tol_or(default: float) -> float:
        return default if tol is None else tol

    if name == "in-p":
        return analysis.verify_in_p(kind, GridSpec(257, 257))
    if name == "injective":
        return analysis.verify_injectivity(GridSpec(201, 201, include_edges=False), tol_or(1e-4))
    if name == "surjective":
        return analysis.verify_surjectivity(GridSpec(512, 512), 1000, tol_or(0.05), seed=seed)
    if name == "degree":
        return analysis.verify_degree(GridSpec(512, 512), 50, tol_or(0.03), seed=seed)
    if name == "every-which-way":
        return analysis.verify_every_which_way(12, tol_or(1e-3))
    if name == "thumb-counts":
        return analysis.verify_thumb_counts()
    if name == "candle-once":
        return analysis.verify_candle_once()
    raise DoubleTwistError(f"unknown check {name!r}")


def cmd_verify(args) -> int:
    names = CHECK_NAMES if args.check == "all" else [args.check]
    kind = HomotopyKind.parse(args.kind)
    reports = []
    for name in names:
        report = run_check(name, args.seed, kind, args.tol)
        reports.append(report)
        _log(args, f"{name}: {'PASS' if report.passed else 'FAIL'} (metric {report.metric:.3e})")
    _write(args.out, to_json(reports_document(reports)))
    return 0 if all(r.passed for r in reports) else 1


def cmd_sample(args) -> int:
    kind = HomotopyKind.parse(args.kind)
    doc = movie_grid(kind, args.ns, args.nt)
    _write(args.out, to_json(doc))
    _log(args, f"sampled {args.ns}x{args.nt} poses of kind {kind.value}")
    return 0


def cmd_contrail(args) -> int:
    trail = analysis.contrail(args.landmark, args.s, args.nt)
    _write(args.out, to_json(contrail_document(trail)))
    _log(args, f"contrail {args.landmark} at s = {_angle_text(args, args.s)}, {args.nt} samples")
    return 0


def cmd_hemiviews(args) -> int:
    _write(args.out, to_json(hemiviews_document(args.ns, args.nt)))
    return 0


def cmd_phitheta(args) -> int:
    if args.csv:
        _write(args.out, phi_theta_csv(args.ns, args.nt))
    else:
        _write(args.out, to_json(phi_theta_document(args.ns, args.nt)))
    return 0


def cmd_compare(args) -> int:
    doc = {
        "kinds": ["D", "FK"],
        "grids": {
            "D": movie_grid(HomotopyKind.DOUBLE_TIP, args.ns, args.nt),
            "FK": movie_grid(HomotopyKind.FK, args.ns, args.nt),
        },
    }
    _write(args.out, to_json(doc))
    return 0


def cmd_serve(args) -> int:
    from .server import serve_forever

    kind = HomotopyKind.parse(args.kind)
    _log(args, f"serving on http://{args.host}:{args.port} (default kind {kind.value})")
    try:
        serve_forever(args.port, args.host, kind)
    except OSError as exc:
        print(f"error: cannot bind {args.host}:{args.port}: {exc}", file=sys.stderr)
        return 1
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="doubletwist",
        description="Sample, verify, and serve the double-tipping untangling of the double twist.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, ns_default=9, nt_default=9):
        p.add_argument("--kind", default="D", help="homotopy kind: D or FK")
        p.add_argument("--ns", type=int, default=ns_default, help="samples along s")
        p.add_argument("--nt", type=int, default=nt_default, help="samples along t")
        p.add_argument("--out", default="-", help="output path ('-' for stdout)")
        p.add_argument("--quiet", action="store_true", help="suppress log lines on stderr")
        p.add_argument("--degrees", action="store_true",
                       help="print log angles in degrees (serialized data stays in radians)")

    p = sub.add_parser("sample", help="write a grid of frame poses")
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("frames", help="alias of sample with the 9x9 movie defaults")
    common(p)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("verify", help="run theorem-level checks")
    p.add_argument("check", choices=CHECK_NAMES + ["all"], help="check name or 'all'")
    p.add_argument("--seed", type=int, default=42, help="seed for the randomized checks")
    p.add_argument("--tol", type=float, default=None, help="override the check's tolerance")
    p.add_argument("--kind", default="D", help="kind for the in-p check (D or FK)")
    p.add_argument("--out", default="-", help="output path for the report list")
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("contrail", help="export one landmark path at fixed s")
    p.add_argument("--landmark", choices=sorted(analysis.LANDMARKS), required=True)
    p.add_argument("--s", type=float, required=True, help="homotopy parameter in [0, pi/2]")
    p.add_argument("--nt", type=int, default=256)
    p.add_argument("--out", default="-")
    p.add_argument("--quiet", action="store_true")
    p.add_argument("--degrees", action="store_true")
    p.set_defaults(func=cmd_contrail)

    p = sub.add_parser("hemiviews", help="export the two hemispherical lift views")
    p.add_argument("--ns", type=int, default=65)
    p.add_argument("--nt", type=int, default=65)
    p.add_argument("--out", default="-")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_hemiviews)

    p = sub.add_parser("phitheta", help="export the axis/angle coordinate surfaces")
    p.add_argument("--ns", type=int, default=65)
    p.add_argument("--nt", type=int, default=65)
    p.add_argument("--csv", action="store_true", help="CSV (columns s,t,phi,theta) instead of JSON")
    p.add_argument("--out", default="-")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_phitheta)

    p = sub.add_parser("compare", help="emit D and FK movie grids side by side")
    common(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("serve", help="serve the explorer backend over HTTP")
    p.add_argument("--port", type=int, default=8787)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--kind", default="D")
    p.add_argument("--quiet", action="store_true")
    p.set_defaults(func=cmd_serve)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except DoubleTwistError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
