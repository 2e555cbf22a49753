"""Loopback JSON backend for the interactive explorer.

GET-only and stateless: every handler is a pure function of its query
string, so identical requests produce byte-identical bodies.  Intended as
a local visualization backend, bound to 127.0.0.1 unless told otherwise.
"""

from __future__ import annotations

import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from urllib.parse import parse_qs, urlparse

from .analysis import LANDMARKS, contrail, hinge, hinge_fiber
from .errors import DoubleTwistError
from .homotopy import HomotopyKind
from .quaternions import as_unit_vector
from .serialize import (
    contrail_document,
    frame_pose,
    movie_grid,
    phi_theta_document,
    to_json,
)


def _get_float(params: dict, name: str, default: float | None = None) -> float:
    if name not in params:
        if default is None:
            raise ValueError(f"missing query parameter {name!r}")
        return default
    return float(params[name][0])


def _get_int(params: dict, name: str, default: int, lo: int = 2, hi: int = 1025) -> int:
    value = int(params[name][0]) if name in params else default
    if not (lo <= value <= hi):
        raise ValueError(f"{name} must lie in [{lo}, {hi}], got {value}")
    return value


def _get_kind(params: dict, default: HomotopyKind) -> HomotopyKind:
    if "kind" in params:
        return HomotopyKind.parse(params["kind"][0])
    return default


class ExplorerHandler(BaseHTTPRequestHandler):
    default_kind = HomotopyKind.DOUBLE_TIP

    def log_message(self, fmt, *args):  # keep test output quiet
        pass

    def do_GET(self):
        url = urlparse(self.path)
        params = parse_qs(url.query)
        try:
            body = self._route(url.path, params)
        except (DoubleTwistError, ValueError) as exc:
            self._send(400, to_json({"error": str(exc)}))
            return
        if body is None:
            self._send(404, to_json({"error": f"unknown path {url.path}"}))
            return
        self._send(200, body)

    def _route(self, path: str, params: dict) -> str | None:
        if path == "/frame":
            kind = _get_kind(params, self.default_kind)
            s = _get_float(params, "s")
            t = _get_float(params, "t")
            return to_json(frame_pose(kind, s, t))
        if path == "/contrail":
            landmark = params.get("landmark", ["fingers"])[0]
            if landmark not in LANDMARKS:
                raise ValueError(f"unknown landmark {landmark!r}")
            s = _get_float(params, "s")
            n = _get_int(params, "n", 256, hi=65537)
            return to_json(contrail_document(contrail(landmark, s, n)))
        if path == "/grid":
            kind = _get_kind(params, self.default_kind)
            ns = _get_int(params, "ns", 9, hi=129)
            nt = _get_int(params, "nt", 9, hi=129)
            return to_json(movie_grid(kind, ns, nt))
        if path == "/phi-theta":
            ns = _get_int(params, "ns", 65)
            nt = _get_int(params, "nt", 65)
            return to_json(phi_theta_document(ns, nt))
        if path == "/hinge":
            v = as_unit_vector(
                [_get_float(params, "vx"), _get_float(params, "vy"), _get_float(params, "vz")], "v"
            )
            doc = {"v": [float(c) for c in v], "hinge": [float(c) for c in hinge(v)]}
            if "n" in params:
                fib = hinge_fiber(v, _get_int(params, "n", 64))
                doc["fiber"] = [[q.r, q.x, q.y, q.z] for q in fib.rotations]
            return to_json(doc)
        return None

    def _send(self, status: int, body: str) -> None:
        payload = body.encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(payload)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(payload)


def make_server(port: int, host: str = "127.0.0.1", kind_default: HomotopyKind = HomotopyKind.DOUBLE_TIP) -> ThreadingHTTPServer:
    handler = type("Handler", (ExplorerHandler,), {"default_kind": kind_default})
    return ThreadingHTTPServer((host, port), handler)


def serve_forever(port: int, host: str = "127.0.0.1", kind_default: HomotopyKind = HomotopyKind.DOUBLE_TIP) -> None:
    server = make_server(port, host, kind_default)
    try:
        server.serve_forever()
    finally:
        server.server_close()


def serve_in_thread(port: int, host: str = "127.0.0.1") -> tuple[ThreadingHTTPServer, threading.Thread]:
    """Start the backend on a daemon thread; used by tests and notebooks."""
    server = make_server(port, host)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    return server, thread
