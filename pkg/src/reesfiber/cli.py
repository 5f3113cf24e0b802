"""``reesfiber`` command line front end.

Exit codes: 0 success, 1 validation or consistency failure, 2 malformed input.
"""

from __future__ import annotations

import argparse
import sys
from typing import Sequence

from . import io
from .basloc import SBLSet, is_finitely_generated, resolve_sbl
from .curve_rr import euler_char, h1_vanishes, restriction_degree
from .dualgraph import DualGraph, QDivisor
from .errors import ConsistencyError, InputError
from .fibercone import radical_decomposition
from .oracle import BACKEND, DEFAULT_WINDOW, FiltrationFamily, IntroExample, MonomialValuation
from .oracle import filtration_ideal, gamma_bruteforce, new_generators
from .projmodel import build_proj, gamma_exceptional
from .zariski import zariski_decompose

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED = 0, 1, 2


class _Invalid(Exception):
    pass


def _sbl_choice(text: str) -> tuple[str, str | None]:
    if text == "rational":
        return "rational", None
    if text.startswith("explicit:") and len(text) > len("explicit:"):
        return "explicit", text[len("explicit:"):]
    raise argparse.ArgumentTypeError("expected 'rational' or 'explicit:<file>'")


def _weights(text: str) -> tuple[int, int]:
    try:
        wx, wy = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError("expected WX,WY") from None
    return wx, wy


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    graph = argparse.ArgumentParser(add_help=False)
    graph.add_argument("--graph", required=True, help="dual graph JSON")

    divisor = argparse.ArgumentParser(add_help=False)
    divisor.add_argument("--divisor", required=True, help="divisor JSON")

    sbl = argparse.ArgumentParser(add_help=False)
    sbl.add_argument("--sbl", required=True, type=_sbl_choice, help="rational | explicit:<file>")

    p = argparse.ArgumentParser(prog="reesfiber", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    sub.add_parser("validate", parents=[common, graph], help="check the dual graph hypotheses")
    sub.add_parser("zariski", parents=[common, graph, divisor], help="local Zariski decomposition")

    rr = sub.add_parser("rr", parents=[common], help="Riemann-Roch numerics on a curve")
    rr.add_argument("--graph")
    rr.add_argument("--divisor")
    rr.add_argument("--curve", type=int)
    rr.add_argument("--deg", type=int)
    rr.add_argument("--pa", type=int)

    sub.add_parser("classify", parents=[common, graph, divisor, sbl], help="fiber cone and analytic spread")
    sub.add_parser("proj", parents=[common, graph, divisor, sbl], help="structure of Proj of the Rees algebra")
    gm = sub.add_parser("gamma", parents=[common, graph, divisor, sbl], help="gamma of an exceptional curve")
    gm.add_argument("--curve", type=int, required=True)

    oracle = sub.add_parser("oracle", help="monomial-ideal brute force on k[[x,y]]")
    osub = oracle.add_subparsers(dest="oracle_command", required=True)
    og = osub.add_parser("gamma", parents=[common])
    og.add_argument("--spec", required=True)
    og.add_argument("--w", type=_weights, required=True, help="valuation weights WX,WY")
    og.add_argument("--n", type=int, default=DEFAULT_WINDOW)
    oi = osub.add_parser("ideal", parents=[common])
    oi.add_argument("--spec", required=True)
    oi.add_argument("--n", type=int, required=True)
    ow = osub.add_parser("witness", parents=[common])
    ow.add_argument("--family", choices=("intro", "spec"), default="intro")
    ow.add_argument("--spec")
    ow.add_argument("--n", type=int, default=DEFAULT_WINDOW)
    return p


def _load_graph(path: str) -> DualGraph:
    g = io.graph_from_json(io.load_json(path))
    if not g.report.valid:
        raise _Invalid("invalid dual graph: " + "; ".join(g.report.problems))
    return g


def _load_divisor(path: str) -> QDivisor:
    return io.divisor_from_json(io.load_json(path))


def _delta(g: DualGraph, d: QDivisor) -> QDivisor:
    return zariski_decompose(g, d).Delta


def _sbl(g: DualGraph, delta: QDivisor, choice: tuple[str, str | None]) -> SBLSet:
    kind, path = choice
    if kind == "rational":
        return resolve_sbl(g, delta, "rational")
    return resolve_sbl(g, delta, "explicit", io.sbl_components_from_json(io.load_json(path)))


def _text(obj: dict, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    for k in sorted(obj):
        v = obj[k]
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{k}:")
            lines.append(_text(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{k}:")
            lines.extend(f"{pad}  - {_scalar(x)}" for x in v)
        else:
            lines.append(f"{pad}{k}: {_scalar(v)}")
    return "\n".join(lines)


def _scalar(v) -> str:
    if isinstance(v, dict):
        return "{" + ", ".join(f"{k}: {_scalar(v[k])}" for k in sorted(v)) + "}"
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, bool):
        return "yes" if v else "no"
    return str(v)


def _dispatch(args: argparse.Namespace) -> tuple[dict, int]:
    cmd = args.command
    if cmd == "validate":
        g = io.graph_from_json(io.load_json(args.graph))
        rep = g.report
        return io.report_to_json(rep), EXIT_OK if rep.valid else EXIT_INVALID

    if cmd == "zariski":
        g = _load_graph(args.graph)
        return io.zariski_to_json(zariski_decompose(g, _load_divisor(args.divisor))), EXIT_OK

    if cmd == "rr":
        if args.graph is not None:
            if args.divisor is None or args.curve is None:
                raise InputError("rr with --graph also needs --divisor and --curve")
            g = _load_graph(args.graph)
            deg = restriction_degree(g, _load_divisor(args.divisor), args.curve)
            pa = g.curve(args.curve).p_a if args.pa is None else args.pa
            out = {"curve": args.curve, "degree": io.format_rational(deg), "pa": pa}
            if deg.denominator != 1:
                out["note"] = "degree is not integral; Riemann-Roch numerics need an integral divisor"
                return out, EXIT_OK
            deg = int(deg)
        else:
            if args.deg is None or args.pa is None:
                raise InputError("rr needs either --graph/--divisor/--curve or --deg/--pa")
            deg, pa = args.deg, args.pa
            out = {"degree": io.format_rational(deg), "pa": pa}
        if pa < 0:
            raise InputError("arithmetic genus must be >= 0")
        out["euler_char"] = euler_char(deg, pa)
        out["h1_vanishes"] = h1_vanishes(deg, pa)
        out["h1_verdict"] = "vanishes" if out["h1_vanishes"] else "inconclusive"
        return out, EXIT_OK

    if cmd in ("classify", "proj", "gamma"):
        g = _load_graph(args.graph)
        delta = _delta(g, _load_divisor(args.divisor))
        sbl = _sbl(g, delta, args.sbl)
        if cmd == "classify":
            out = io.fibercone_to_json(radical_decomposition(g, delta, sbl))
            out["finitely_generated"] = is_finitely_generated(sbl)
            out.update(io.sbl_to_json(sbl))
            return out, EXIT_OK
        if cmd == "proj":
            return io.proj_to_json(build_proj(g, delta, sbl)), EXIT_OK
        out = io.gamma_to_json(gamma_exceptional(g, delta, sbl, args.curve))
        out["curve"] = args.curve
        return out, EXIT_OK

    if cmd == "oracle":
        if args.n < 1:
            raise InputError("--n must be >= 1")
        ocmd = args.oracle_command
        if ocmd == "gamma":
            spec = io.spec_from_json(io.load_json(args.spec))
            res = gamma_bruteforce(spec, MonomialValuation(*args.w), args.n)
            out = io.gamma_bruteforce_to_json(res)
            out["backend"] = BACKEND
            return out, EXIT_OK
        if ocmd == "ideal":
            spec = io.spec_from_json(io.load_json(args.spec))
            ideal = filtration_ideal(spec, args.n)
            return {"n": args.n, "gens": io.staircase_to_json(ideal), "min_generators": len(ideal)}, EXIT_OK
        if args.family == "intro":
            family = IntroExample()
        else:
            if args.spec is None:
                raise InputError("--family spec needs --spec")
            family = FiltrationFamily(io.spec_from_json(io.load_json(args.spec)))
        fresh = {n: new_generators(family, n) for n in range(1, args.n + 1)}
        missing = [n for n, gens in fresh.items() if not gens]
        out = {
            "family": args.family,
            "window": args.n,
            "fresh": {str(n): [list(p) for p in gens] for n, gens in fresh.items()},
            "fresh_at_every_degree": not missing,
            "degrees_without_fresh_generators": missing,
        }
        return out, EXIT_OK

    raise InputError(f"unknown command {cmd!r}")  # argparse prevents this


def run(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_MALFORMED
    try:
        out, code = _dispatch(args)
    except (_Invalid, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    fmt = getattr(args, "format", "json")
    print(io.dumps(out) if fmt == "json" else _text(out))
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
