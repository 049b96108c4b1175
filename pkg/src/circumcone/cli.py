"""Command-line client.

Thin wrapper over the handler layer: each subcommand builds a request
model from JSON files / flags, calls the handler in-process, and prints
the response as JSON (or raw CSV for the trace/figure commands).

Exit codes: 0 success, 1 domain failure (degenerate geometry, infeasible
point, failed verification), 2 malformed input or usage.
"""
from __future__ import annotations

import argparse
import json
import os
import sys

from pydantic import ValidationError

from . import handlers
from .errors import CircumconeError
from .schemas import (
    BaseSpec,
    BregmanRequest,
    CircumRequest,
    ConeSpec,
    DepthRequest,
    FcpgRequest,
    FigureRequest,
    LegendreSpec,
    LinfSpec,
    SocpSpec,
    StepRequest,
    VerifyRequest,
    ZooRequest,
)

SEED_ENV = "CIRCUMCONE_SEED"


def _load_json(path: str) -> dict:
    with open(path) as fh:
        return json.load(fh)


def _vector(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _problem_spec(path: str):
    payload = _load_json(path)
    kind = payload.get("type")
    if kind == "linf":
        return LinfSpec(**payload)
    if kind == "socp":
        return SocpSpec(**payload)
    raise ValueError(f"problem file needs type 'linf' or 'socp', got {kind!r}")


def _seed(args) -> int:
    env = os.environ.get(SEED_ENV)
    return int(env) if env is not None else args.seed


def _emit(model) -> None:
    print(json.dumps(model.model_dump(), indent=2))


def _cmd_circum(args) -> int:
    req = CircumRequest(base=BaseSpec(**_load_json(args.base)),
                        route=args.route)
    _emit(handlers.compute_circum(req))
    return 0


def _cmd_depth(args) -> int:
    base = BaseSpec(**_load_json(args.base)) if args.base else None
    cone = ConeSpec(**_load_json(args.cone)) if args.cone else None
    req = DepthRequest(base=base, cone=cone,
                       direction=_vector(args.direction))
    _emit(handlers.compute_depth(req))
    return 0


def _cmd_step(args) -> int:
    req = StepRequest(problem=_problem_spec(args.problem),
                      point=_vector(args.point))
    _emit(handlers.compute_step(req))
    return 0


def _cmd_zoo(args) -> int:
    req = ZooRequest(cone=ConeSpec(**_load_json(args.cone)),
                     hypothesis=args.hypothesis, samples=args.samples,
                     seed=_seed(args))
    _emit(handlers.compute_zoo(req))
    return 0


def _cmd_bregman(args) -> int:
    req = BregmanRequest(h=LegendreSpec(**_load_json(args.h)),
                         base=BaseSpec(**_load_json(args.base)))
    _emit(handlers.compute_bregman(req))
    return 0


def _cmd_fcpg(args) -> int:
    req = FcpgRequest(problem=_problem_spec(args.problem),
                      x0=_vector(args.x0), max_iter=args.max_iter,
                      tol=args.tol)
    sys.stdout.write(handlers.run_fcpg_csv(req).csv)
    return 0


def _cmd_verify(args) -> int:
    req = VerifyRequest(suite=args.suite, seed=_seed(args))
    resp = handlers.run_verify(req)
    _emit(resp)
    return 0 if resp.ok else 1


def _cmd_figure(args) -> int:
    sys.stdout.write(handlers.figure_csv(FigureRequest(name=args.name)).csv)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="circumcone",
        description="Circumcentric directions of convex cones")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("circum", help="circumcentric direction of a base")
    p.add_argument("base", help="JSON base file {n, vectors}")
    p.add_argument("--route", choices=("gram", "proj", "system"),
                   default="gram")
    p.set_defaults(fn=_cmd_circum)

    p = sub.add_parser("depth", help="directional depth inside the polar")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--base", help="JSON base file")
    g.add_argument("--cone", help="JSON cone descriptor file")
    p.add_argument("--direction", required=True,
                   help="comma-separated components of w")
    p.set_defaults(fn=_cmd_depth)

    p = sub.add_parser("step", help="active cone and sharp step at a point")
    p.add_argument("problem", help="JSON problem file (type linf or socp)")
    p.add_argument("--point", required=True,
                   help="comma-separated feasible point")
    p.set_defaults(fn=_cmd_step)

    p = sub.add_parser("zoo", help="closed forms for named cones")
    p.add_argument("cone", help="JSON cone descriptor file")
    p.add_argument("--hypothesis", action="store_true",
                   help="run the sampled affine-hull check")
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_zoo)

    p = sub.add_parser("bregman", help="Bregman direction for a base")
    p.add_argument("h", help="JSON Legendre spec {family, p?, A?}")
    p.add_argument("base", help="JSON base file")
    p.set_defaults(fn=_cmd_bregman)

    p = sub.add_parser("fcpg", help="run the projected-gradient driver")
    p.add_argument("problem", help="JSON problem file (type linf or socp)")
    p.add_argument("--x0", required=True,
                   help="comma-separated starting point")
    p.add_argument("--max-iter", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-8)
    p.set_defaults(fn=_cmd_fcpg)

    p = sub.add_parser("verify", help="randomized falsification suites")
    p.add_argument("--suite", choices=("all", "depth", "ball", "weyl"),
                   default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("figure", help="CSV data for the worked examples")
    p.add_argument("name", choices=("orthant", "soc"))
    p.set_defaults(fn=_cmd_figure)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.fn(args)
    except CircumconeError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValidationError, ValueError, json.JSONDecodeError,
            OSError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
