"""Command-line interface.

Every command prints one JSON object (sorted keys) on stdout and diagnostics
on stderr.  Exit status: 0 ok, 1 a checked property failed, 2 bad input.
"""

from __future__ import annotations

import argparse
import csv
import io as _io
import sys
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

from . import io
from .delta import MonotoneMap
from .filters import (
    closed_form_member,
    hom_path_member,
    theta_skorokhod_member,
    u_neighborhood_member,
)
from .generators import Generator
from .metrics import d_mu, d_prime, sup_dist, v1_dist, v2_dist, v3_dist
from .oracle import (
    Report,
    oracle_dist,
    oracle_membership,
    oracle_product_bijection,
)
from .realization import (
    RealizationPoint,
    StepFunction,
    coordinates,
    eval_point,
    from_step,
    homeo_apply,
    to_step,
)
from .sset import precompose_edgewise, validate

OK, VIOLATION, ERROR = "ok", "violation", "error"
EXIT = {OK: 0, VIOLATION: 1, ERROR: 2}


@dataclass
class CommandResult:
    status: str
    payload: dict = field(default_factory=dict)
    diagnostics: list[str] = field(default_factory=list)

    @property
    def exit_code(self) -> int:
        return EXIT[self.status]


class UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# -- loading helpers ------------------------------------------------------------

def _load_point(path: str) -> RealizationPoint:
    p = Path(path)
    return io.point_from_json(io.read_json(p), p.parent)


def _load_value(path: str) -> StepFunction | RealizationPoint:
    """A step function or a point, whichever the file holds."""
    p = Path(path)
    data = io.read_json(p)
    if "s" in data and "N" in data:
        return io.step_from_json(data)
    return io.point_from_json(data, p.parent)


def _as_step(v) -> StepFunction:
    return v if isinstance(v, StepFunction) else to_step(v)


def _as_point(v) -> RealizationPoint:
    return from_step(v) if isinstance(v, StepFunction) else v


def _theta(text: str, cod: int) -> MonotoneMap:
    try:
        vals = tuple(int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"θ must be comma-separated indices, got {text!r}") from None
    return MonotoneMap(vals, cod)


# -- commands -------------------------------------------------------------------

def cmd_validate(args) -> CommandResult:
    X = io.load_sset_arg(args.sset)
    problems = validate(X)
    payload = {"counts": list(X.counts()), "violations": problems}
    return CommandResult(VIOLATION if problems else OK, payload, problems)


def cmd_eval(args) -> CommandResult:
    p = _load_point(args.point)
    ts = io.q_list(args.at)
    if not ts:
        raise UsageError("--at needs at least one time")
    if any(b < a for a, b in zip(ts, ts[1:])) or not all(0 <= t <= 1 for t in ts):
        raise UsageError("--at times must be nondecreasing in [0,1]")
    s = eval_point(p, ts)
    payload = {"at": [io.q_str(t) for t in ts], "simplex": s.to_json()}
    if p.sset.is_standard:
        payload["values"] = list(p.sset.values_of(s))
    return CommandResult(OK, payload)


METRICS = {
    "sup": lambda a, b: sup_dist(_as_step(a), _as_step(b)),
    "v1": lambda a, b: v1_dist(_as_step(a), _as_step(b)),
    "v2": lambda a, b: v2_dist(_as_step(a), _as_step(b)),
    "v3": lambda a, b: v3_dist(_as_step(a), _as_step(b)),
    "dmu": lambda a, b: d_mu(_as_point(a), _as_point(b)),
    "dprime": lambda a, b: d_prime(_as_point(a), _as_point(b)),
}


def cmd_dist(args) -> CommandResult:
    a, b = _load_value(args.a), _load_value(args.b)
    value = METRICS[args.metric](a, b)
    return CommandResult(OK, {"metric": args.metric, "value": io.q_str(value)})


def cmd_product_check(args) -> CommandResult:
    X, Y = io.load_sset_arg(args.x), io.load_sset_arg(args.y)
    grid = io.q_list(args.grid)
    if not all(0 < g < 1 for g in grid):
        raise UsageError("grid points must lie strictly between 0 and 1")
    report = oracle_product_bijection(X, Y, grid, args.bound)
    return _report_result(report)


def cmd_homeo(args) -> CommandResult:
    phi = io.homeo_from_json(io.read_json(args.phi))
    p = _load_point(args.point)
    return CommandResult(OK, {"point": io.point_to_json(homeo_apply(phi, p))})


def cmd_member(args) -> CommandResult:
    kind, delta = args.kind, io.q_parse(args.delta)
    if kind in ("theta", "closed"):
        if not args.path:
            raise UsageError(f"--kind {kind} needs --path")
        P = io.path_from_json(io.read_json(args.path))
        if kind == "closed":
            result = closed_form_member(P, delta)
        else:
            _need(args, "theta", "n", "N")
            result = theta_skorokhod_member(P, _theta(args.theta, P.M), args.n, args.N, delta)
    elif kind == "hom":
        _need(args, "f", "n", "N")
        result = hom_path_member(_as_step(_load_value(args.f)), args.n, args.N, delta)
    else:
        _need(args, "f", "g")
        f, g = _as_step(_load_value(args.f)), _as_step(_load_value(args.g))
        result = u_neighborhood_member(f, g, delta)
    return CommandResult(OK, {"kind": kind, "delta": io.q_str(delta), "member": result})


def _need(args, *names: str) -> None:
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        raise UsageError(f"--kind {args.kind} needs " + ", ".join(f"--{m}" for m in missing))


def cmd_subdivide(args) -> CommandResult:
    X = io.load_sset_arg(args.sset)
    E = precompose_edgewise(X)
    return CommandResult(OK, {"counts": list(E.counts()), "sset": E.to_json()})


def cmd_oracle(args) -> CommandResult:
    gen = Generator(args.seed)
    if args.cases < 0:
        raise UsageError("--cases must be nonnegative")
    if args.suite == "membership":
        report = Report("membership")
        for _ in range(args.cases):
            M = gen.rng.randint(1, 3)
            P = gen.chain(M, gen.rng.randint(1, 4))
            n = gen.rng.randint(1, 3)
            N = gen.rng.randint(2 * n, 2 * n + 2)
            theta, delta = gen.monotone(n, M), gen.positive()
            report.cases += 1
            a, b = oracle_membership(P, theta, n, N, delta), theta_skorokhod_member(P, theta, n, N, delta)
            if a != b:
                report.fail(f"{io.path_to_json(P)} θ={theta!r} n={n} N={N} δ={delta}: oracle {a}, closed form {b}")
    elif args.suite == "dist":
        report = Report("dist")
        closed = {"v1": v1_dist, "v2": v2_dist, "v3": v3_dist}
        for _ in range(args.cases):
            N, pool = gen.rng.randint(1, 5), gen.pool()
            f, g = gen.step(N, pool), gen.step(N, pool)
            for kind, fn in closed.items():
                report.cases += 1
                a, b = oracle_dist(kind, f, g), fn(f, g)
                if a != b:
                    report.fail(f"{kind} {io.step_to_json(f)} {io.step_to_json(g)}: oracle {a}, closed form {b}")
    else:
        report = Report("product")
        for _ in range(args.cases):
            X, Y = gen.sset(), gen.sset()
            sub = oracle_product_bijection(X, Y, io.q_list(args.grid), args.bound)
            report.cases += sub.cases
            report.failures += sub.failures
    return _report_result(report)


def cmd_export_coords(args) -> CommandResult:
    path = Path(args.points)
    data = io.read_json(path)
    items = data["points"] if isinstance(data, dict) else data
    buf = _io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    for item in items:
        p = io.point_from_json(item, path.parent)
        writer.writerow([io.q_str(c) for c in coordinates(p)])
    return CommandResult(OK, {"csv": buf.getvalue()})


def _report_result(report: Report) -> CommandResult:
    return CommandResult(OK if report.ok else VIOLATION, report.to_json(), report.failures[:20])


# -- parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skorokhod-sset", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("validate", help="check a simplicial-set presentation")
    p.add_argument("sset", help="delta:N or a JSON file")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("eval", help="evaluate a point at times t1 <= ... <= tn")
    p.add_argument("point")
    p.add_argument("--at", required=True, help="comma-separated rationals")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("dist", help="distance between two points or step functions")
    p.add_argument("--metric", required=True, choices=sorted(METRICS))
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_dist)

    p = sub.add_parser("product-check", help="exhaustive |X x Y| = |X| x |Y| check")
    p.add_argument("x")
    p.add_argument("y")
    p.add_argument("--grid", default="1/4,1/2,3/4")
    p.add_argument("--bound", type=int, default=2)
    p.add_argument("--seed", type=int, default=0, help="accepted for symmetry; the check is exhaustive")
    p.set_defaults(func=cmd_product_check)

    p = sub.add_parser("homeo", help="PL homeomorphism actions")
    hs = p.add_subparsers(dest="action", required=True, parser_class=_Parser)
    a = hs.add_parser("apply")
    a.add_argument("phi")
    a.add_argument("point")
    a.set_defaults(func=cmd_homeo)

    p = sub.add_parser("member", help="Skorokhod-neighborhood membership")
    p.add_argument("--kind", required=True, choices=["theta", "closed", "hom", "U"])
    p.add_argument("--delta", required=True)
    p.add_argument("--path", help="path-simplex JSON (theta, closed)")
    p.add_argument("--theta", help="comma-separated indices (theta)")
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--f", help="step or point JSON (hom, U)")
    p.add_argument("--g", help="step or point JSON (U)")
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("subdivide", help="edgewise subdivision X∘e")
    p.add_argument("sset")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("oracle", help="cross-check closed forms against brute force")
    p.add_argument("--suite", required=True, choices=["membership", "dist", "product"])
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--grid", default="1/4,1/2,3/4")
    p.add_argument("--bound", type=int, default=2)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("export-coords", help="CSV of step-function coordinates, one point per line")
    p.add_argument("points", help="JSON list of points over a standard simplex")
    p.set_defaults(func=cmd_export_coords)
    return parser


def run(argv: Sequence[str] | None = None) -> CommandResult:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        return CommandResult(ERROR, {"error": str(exc)}, [str(exc)])
    except (ValueError, KeyError, TypeError, OSError) as exc:
        msg = f"{type(exc).__name__}: {exc}"
        return CommandResult(ERROR, {"error": msg}, [msg])


def main(argv: Sequence[str] | None = None) -> int:
    result = run(argv)
    if "csv" in result.payload and result.status == OK:
        sys.stdout.write(result.payload["csv"])
    else:
        sys.stdout.write(io.dumps({"status": result.status, **result.payload}) + "\n")
    for line in result.diagnostics:
        print(line, file=sys.stderr)
    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
