"""Command-line interface and the JSON-over-HTTP service behind it.

Exit codes: 0 success, 1 domain error, 2 budget/Unknown verdicts, 64 usage.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from . import catalog, codec
from .cluster import enumerate_clusters, g_vector_of, initial_seed, mutate_seed
from .gfan import build_gfan, check_sign_coherence, contains_point, density_estimate, is_complete
from .qp import jacobian_dim_truncated, qp_mutate
from .quiver import Quiver, b_matrix, classify, from_b_matrix, mutate, mutation_class
from . import surface as surf

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_BUDGET = 2
EXIT_USAGE = 64


def _print(payload, as_json: bool, text_fn=None):
    if as_json:
        print(codec.canon_json(payload))
    elif text_fn is not None:
        print(text_fn(payload))
    else:
        print(payload)


def _load_quiver_arg(path: str) -> Quiver:
    name = path.lower()
    builders = {
        "a1": lambda: catalog.linear_a(1), "a2": lambda: catalog.linear_a(2),
        "a3": lambda: catalog.linear_a(3), "a4": lambda: catalog.linear_a(4),
        "d4": lambda: catalog.dynkin_quiver("D", 4), "e6": lambda: catalog.dynkin_quiver("E", 6),
        "e7": lambda: catalog.dynkin_quiver("E", 7), "e8": lambda: catalog.dynkin_quiver("E", 8),
        "k2": lambda: catalog.kronecker(2), "k3": lambda: catalog.kronecker(3),
        "x6": catalog.x6, "x7": catalog.x7, "markov": catalog.markov,
    }
    if name in builders:
        return builders[name]()
    return codec.load_quiver(path)


def cmd_mutate(args) -> int:
    q = _load_quiver_arg(args.quiver)
    out = mutate(q, args.at)
    _print(codec.quiver_to_obj(out), args.json, lambda o: codec.quiver_to_text(out).rstrip())
    return EXIT_OK


def cmd_class(args) -> int:
    q = _load_quiver_arg(args.quiver)
    res = mutation_class(q, max_quivers=args.budget, max_weight=args.max_weight)
    payload = {
        "size": len(res.representatives),
        "status": str(res.status) if not isinstance(res.status, str) else res.status,
        "edges": len(res.edges),
    }
    _print(payload, args.json, lambda o: f"{o['size']} representatives, status {o['status']}")
    if res.status != "Exhausted":
        return EXIT_BUDGET
    return EXIT_OK


def cmd_classify(args) -> int:
    q = _load_quiver_arg(args.quiver)
    verdict = classify(q, budget=args.budget)
    _print({"verdict": str(verdict)}, args.json, lambda o: o["verdict"])
    return EXIT_BUDGET if verdict.bucket == "Unknown" else EXIT_OK


def _load_qp_arg(path: str):
    builders = {
        "a3-zero": catalog.qp_a3_zero, "cycle3": catalog.qp_cycle3,
        "k2-zero": catalog.qp_kronecker, "t1": catalog.qp_t1,
        "t1-prime": catalog.qp_t1_prime, "t2-tame": catalog.qp_t2_tame,
        "t2-wild": catalog.qp_t2_wild, "x6": catalog.qp_x6, "x7": catalog.qp_x7,
    }
    name = path.lower()
    if name in builders:
        return builders[name]()
    return codec.load_qp(path)


def cmd_qp_mutate(args) -> int:
    qp = _load_qp_arg(args.qp)
    out = qp_mutate(qp, args.at)
    _print(codec.qp_to_obj(out), True)
    return EXIT_OK


def cmd_jacobian_dim(args) -> int:
    qp = _load_qp_arg(args.qp)
    prof = jacobian_dim_truncated(qp, args.trunc)
    verdict = prof.verdict if isinstance(prof.verdict, str) else f"StabilizedAt({prof.verdict[1]})"
    _print({"dims": list(prof.dims), "verdict": verdict}, args.json,
           lambda o: f"dims {o['dims']} verdict {o['verdict']}")
    return EXIT_OK


def cmd_cluster_vars(args) -> int:
    q = _load_quiver_arg(args.quiver)
    enum = enumerate_clusters(q, budget=args.budget, depth=args.depth, keep_seeds=True)
    B0 = b_matrix(q)
    variables = {}
    for s in enum.seeds:
        for p in s.cluster:
            g = g_vector_of(p, B0)
            variables.setdefault(g, p)
    payload = {
        "status": enum.status,
        "clusters": len(enum.g_matrices),
        "variables": [{"g": list(g), "laurent": variables[g].to_text()}
                      for g in sorted(variables)],
    }
    _print(payload, args.json,
           lambda o: "\n".join([f"clusters: {o['clusters']} ({o['status']})"]
                               + [f"g={tuple(v['g'])}  {v['laurent']}" for v in o["variables"]]))
    return EXIT_OK if enum.exhausted else EXIT_BUDGET


def cmd_gfan(args) -> int:
    q = _load_quiver_arg(args.quiver)
    fan = build_gfan(q, budget=args.budget, depth=args.depth)
    rays = fan.rays
    ray_index = {r: i for i, r in enumerate(rays)}
    payload = {
        "rays": [list(r) for r in rays],
        "cones": sorted([sorted(ray_index[g] for g in c.generators) for c in fan.maximal_cones]),
        "status": fan.status if isinstance(fan.status, str) else f"Truncated({fan.status[1]})",
    }
    text = codec.canon_json(payload)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return EXIT_OK if fan.status == "Exhausted" else EXIT_BUDGET


def cmd_check_complete(args) -> int:
    with open(args.fan) as fh:
        obj = json.load(fh)
    from .gfan import Cone, GFan, _build_adjacency
    rays = [tuple(r) for r in obj["rays"]]
    cones = tuple(Cone(tuple(rays[i] for i in c)) for c in obj["cones"])
    status = obj["status"] if obj["status"] == "Exhausted" else ("Truncated", 0)
    fan = GFan(len(rays[0]) if rays else 0, cones, _build_adjacency(cones), status)
    verdict = is_complete(fan)
    if verdict == "Complete":
        _print({"verdict": "Complete"}, args.json, lambda o: "Complete")
        return EXIT_OK
    if verdict == "Unknown":
        _print({"verdict": "Unknown"}, args.json, lambda o: "Unknown")
        return EXIT_BUDGET
    _print({"verdict": "Incomplete", "witness": list(verdict[1])}, args.json,
           lambda o: f"Incomplete (witness ray {tuple(o['witness'])})")
    return EXIT_OK


def cmd_check_dense(args) -> int:
    q = _load_quiver_arg(args.quiver)
    frac = density_estimate(q, samples=args.samples, depth=args.depth, rng_seed=args.seed)
    payload = {"fraction": f"{frac.numerator}/{frac.denominator}", "value": float(frac)}
    _print(payload, args.json, lambda o: o["fraction"])
    return EXIT_OK if frac >= Fraction(95, 100) else EXIT_BUDGET


def cmd_contains(args) -> int:
    q = _load_quiver_arg(args.quiver)
    v = tuple(int(x) for x in args.vector.split(","))
    verdict = contains_point(q, v, depth=args.depth)
    if verdict[0] == "InCone":
        _print({"verdict": "InCone", "history": list(verdict[1])}, args.json,
               lambda o: f"InCone via {o['history']}")
        return EXIT_OK
    _print({"verdict": "NotFoundWithin", "depth": args.depth}, args.json,
           lambda o: f"NotFoundWithin({args.depth})")
    return EXIT_BUDGET


def _load_surface(spec: str) -> surf.MarkedSurface:
    kind, _, rest = spec.partition(":")
    nums = [int(x) for x in rest.split(",")] if rest else []
    if kind == "disc":
        return surf.disc(nums[0])
    if kind in ("punctured-disc", "punctured_disc", "pdisc"):
        return surf.punctured_disc(nums[0])
    if kind == "annulus":
        return surf.annulus(nums[0], nums[1])
    raise ValueError(f"unknown surface spec {spec!r} (use disc:M, pdisc:M, annulus:P,Q)")


def cmd_surface(args) -> int:
    S = _load_surface(args.surface)
    if args.action == "arcs":
        arcs = surf.enumerate_tagged_arcs(S, winding_bound=args.winding)
        payload = [codec.arc_to_obj(a) for a in arcs]
        _print(payload, args.json, lambda o: "\n".join(str(x) for x in o))
        return EXIT_OK
    if args.action == "triangulate":
        T = surf.initial_triangulation(S)
        _print(codec.triangulation_to_obj(T), True)
        return EXIT_OK
    T = codec.triangulation_from_obj(json.loads(open(args.triangulation).read())) \
        if args.triangulation else surf.initial_triangulation(S)
    if args.action == "quiver":
        q = surf.quiver_of_triangulation(T)
        _print(codec.quiver_to_obj(q), args.json, lambda o: codec.quiver_to_text(q).rstrip())
        return EXIT_OK
    if args.action == "flip":
        arc = T.arcs[args.at - 1]
        T2 = surf.flip(T, arc)
        _print(codec.triangulation_to_obj(T2), True)
        return EXIT_OK
    if args.action == "shear":
        with open(args.lamination) as fh:
            lam_obj = json.load(fh)
        lams = [codec.laminate_from_obj(S, o) for o in lam_obj]
        v = surf.shear_of_lamination(T, lams)
        _print({"shear": list(v)}, args.json, lambda o: str(tuple(o["shear"])))
        return EXIT_OK
    raise ValueError(args.action)


def cmd_verify(args) -> int:
    S = _load_surface(args.surface)
    T = surf.initial_triangulation(S)
    rep = surf.verify_arc_gvector_correspondence(T, budget=args.depth,
                                                 exhaustive=args.exhaustive)
    payload = {"arcs_matched": rep["arcs_matched"],
               "triangulations_seen": rep["triangulations_seen"]}
    _print(payload, args.json,
           lambda o: f"{o['arcs_matched']} arcs matched over {o['triangulations_seen']} triangulations")
    return EXIT_OK


# ---------------------------------------------------------------------------
# HTTP service
# ---------------------------------------------------------------------------

def _enc_int(x) -> str:
    return str(int(x))


def _enc_matrix(M) -> list:
    return [[_enc_int(x) for x in row] for row in M]


def _dec_matrix(M) -> list:
    return [[int(x) for x in row] for row in M]


def api_quiver_mutate(body: dict) -> dict:
    B = _dec_matrix(body["b_matrix"])
    k = int(body["k"])
    q = from_b_matrix(B)
    return {"b_matrix": _enc_matrix(b_matrix(mutate(q, k)))}


def api_cluster_step(body: dict) -> dict:
    B = _dec_matrix(body["b_matrix"])
    history = [int(k) for k in body.get("history", [])]
    q = from_b_matrix(B)
    B0 = b_matrix(q)
    s = initial_seed(q)
    for k in history:
        s = mutate_seed(s, k)
    if "k" in body and body["k"] is not None:
        s = mutate_seed(s, int(body["k"]))
    mut = surf.seed_mutable_quiver(s)
    return {
        "b_matrix": _enc_matrix(b_matrix(mut)),
        "g_matrix": [[_enc_int(x) for x in g] for g in s.g_matrix(B0)],
        "variables": [p.to_text() for p in s.cluster],
        "history": list(s.history),
    }


def api_classify(body: dict) -> dict:
    q = from_b_matrix(_dec_matrix(body["b_matrix"]))
    verdict = classify(q, budget=int(body.get("budget", 10000)))
    return {"verdict": str(verdict)}


def api_gfan_contains(body: dict) -> dict:
    q = from_b_matrix(_dec_matrix(body["b_matrix"]))
    v = tuple(int(x) for x in body["v"])
    depth = int(body.get("depth", 50))
    verdict = contains_point(q, v, depth=depth)
    if verdict[0] == "InCone":
        return {"verdict": "InCone", "history": list(verdict[1])}
    return {"verdict": "NotFoundWithin", "history": []}


_ROUTES = {
    "/api/quiver/mutate": api_quiver_mutate,
    "/api/cluster/step": api_cluster_step,
    "/api/classify": api_classify,
    "/api/gfan/contains": api_gfan_contains,
}


class _Handler(BaseHTTPRequestHandler):
    server_version = "clusterforge/0.1"

    def log_message(self, fmt, *fargs):
        if getattr(self.server, "verbose", False):
            super().log_message(fmt, *fargs)

    def _reply(self, code: int, payload: dict):
        raw = codec.canon_json(payload).encode()
        self.send_response(code)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(raw)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()
        self.wfile.write(raw)

    def do_OPTIONS(self):
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.end_headers()

    def do_GET(self):
        if self.path == "/api/health":
            self._reply(200, {"status": "ok"})
        else:
            self._reply(404, {"error": "not found"})

    def do_POST(self):
        handler = _ROUTES.get(self.path)
        if handler is None:
            self._reply(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
            self._reply(200, handler(body))
        except Exception as exc:  # surfaced to the client, never silent
            self._reply(400, {"error": str(exc)})


def cmd_serve(args) -> int:
    server = ThreadingHTTPServer((args.host, args.port), _Handler)
    server.verbose = args.verbose
    print(f"clusterforge API on http://{args.host}:{args.port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    return EXIT_OK


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="clusterforge",
                                 description="exact quiver mutation, cluster algebras, "
                                             "g-vector fans, QPs, and surface laminations")
    sub = ap.add_subparsers(dest="cmd", required=True)

    def common(p):
        p.add_argument("--json", action="store_true", help="machine-readable output")

    p = sub.add_parser("mutate", help="mutate a quiver at a vertex")
    p.add_argument("quiver")
    p.add_argument("--at", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_mutate)

    p = sub.add_parser("class", help="enumerate the mutation class")
    p.add_argument("quiver")
    p.add_argument("--budget", type=int, default=10000)
    p.add_argument("--max-weight", type=int, default=3)
    common(p)
    p.set_defaults(fn=cmd_class)

    p = sub.add_parser("classify", help="mutation-type classification")
    p.add_argument("quiver")
    p.add_argument("--budget", type=int, default=10000)
    common(p)
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("qp-mutate", help="QP-mutation at a vertex")
    p.add_argument("qp")
    p.add_argument("--at", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_qp_mutate)

    p = sub.add_parser("jacobian-dim", help="truncated Jacobian dimension profile")
    p.add_argument("qp")
    p.add_argument("--trunc", type=int, default=12)
    common(p)
    p.set_defaults(fn=cmd_jacobian_dim)

    p = sub.add_parser("cluster-vars", help="enumerate cluster variables with g-vectors")
    p.add_argument("quiver")
    p.add_argument("--depth", type=int, default=10)
    p.add_argument("--budget", type=int, default=100000)
    common(p)
    p.set_defaults(fn=cmd_cluster_vars)

    p = sub.add_parser("gfan", help="build the g-vector fan")
    p.add_argument("quiver")
    p.add_argument("--budget", type=int, default=100000)
    p.add_argument("--depth", type=int, default=None)
    p.add_argument("--out", default=None)
    common(p)
    p.set_defaults(fn=cmd_gfan)

    p = sub.add_parser("check-complete", help="completeness of a fan file")
    p.add_argument("fan")
    common(p)
    p.set_defaults(fn=cmd_check_complete)

    p = sub.add_parser("check-dense", help="seeded density estimate")
    p.add_argument("quiver")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--depth", type=int, default=20)
    p.add_argument("--seed", type=int, required=True)
    common(p)
    p.set_defaults(fn=cmd_check_dense)

    p = sub.add_parser("contains", help="integer-point cone membership")
    p.add_argument("quiver")
    p.add_argument("--vector", required=True, help="comma-separated integers")
    p.add_argument("--depth", type=int, default=50)
    common(p)
    p.set_defaults(fn=cmd_contains)

    p = sub.add_parser("surface", help="surface subcommands")
    p.add_argument("action", choices=["arcs", "triangulate", "flip", "quiver", "shear"])
    p.add_argument("surface", help="disc:M | pdisc:M | annulus:P,Q")
    p.add_argument("--winding", type=int, default=2)
    p.add_argument("--triangulation", default=None, help="path to a .surf triangulation")
    p.add_argument("--at", type=int, default=1, help="1-based arc index for flip")
    p.add_argument("--lamination", default=None, help="path to a lamination JSON")
    common(p)
    p.set_defaults(fn=cmd_surface)

    p = sub.add_parser("verify", help="arc/g-vector correspondence check")
    p.add_argument("surface", help="disc:M | pdisc:M | annulus:P,Q")
    p.add_argument("--depth", type=int, default=6)
    p.add_argument("--exhaustive", action="store_true")
    common(p)
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("serve", help="run the JSON-over-HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8675)
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(fn=cmd_serve)

    return ap


def main(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code not in (0, None) else 0
    try:
        return args.fn(args)
    except (ValueError, ArithmeticError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
