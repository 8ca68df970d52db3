"""Command-line front end.

JSON goes to stdout, diagnostics to stderr. Exit codes: 0 success / valid /
equivalent, 1 negative verdict, 2 usage or input error.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import bounds, generators
from .circle import Coloring, fmt, verify_coloring
from .constructive import color_2degenerate, lift_fu, lift_fuv
from .errors import NotDegenerate, SignedCircError, StructureMismatch
from .graph import SignedGraph, dumps, is_equivalent, loads, switch
from .solver import analyze_tightness, chi_c


class UsageError(Exception):
    pass


def _read_graph(path: str) -> SignedGraph:
    return loads(Path(path).read_text(encoding="utf-8"))


def _write_text(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _emit_json(payload: dict, emit: str | None) -> None:
    text = json.dumps(payload, indent=2) + "\n"
    sys.stdout.write(text)
    if emit:
        Path(emit).write_text(text, encoding="utf-8")


def certificate(switch_set, coloring: Coloring) -> dict:
    return {"switch_set": sorted(switch_set), "coloring": coloring.to_json()}


def read_certificate(data: dict) -> tuple[list[int], Coloring]:
    """Accept a bare coloring, a ``{switch_set, coloring}`` certificate, or a
    ``chic`` result carrying a ``witness``."""
    if "coloring" in data:
        return list(data.get("switch_set", [])), Coloring.from_json(data["coloring"])
    if "witness" in data:
        if data["witness"] is None:
            raise UsageError("result has no witness coloring")
        return [], Coloring.from_json(data["witness"])
    if "r" in data and "f" in data:
        return [], Coloring.from_json(data)
    raise UsageError("unrecognised coloring JSON")


def _load_coloring(path: str) -> tuple[list[int], Coloring]:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON ({exc})") from None
    try:
        return read_certificate(data)
    except (KeyError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"{path}: malformed coloring ({exc})") from None


# -- subcommands -------------------------------------------------------------

def cmd_gen(args) -> int:
    fam, params = args.family, args.params

    def need(k):
        if len(params) != k:
            raise UsageError(f"gen {fam} takes {k} parameter(s)")

    if fam == "omega":
        need(1)
        g = generators.omega(int(params[0]))
    elif fam == "gammastar":
        need(1)
        g = generators.gamma_star(int(params[0]))
    elif fam == "sgraph":
        need(1)
        g = generators.s_of(_read_graph(params[0]))
    elif fam == "t2":
        need(1)
        g = generators.t2_of(_read_graph(params[0]))
    elif fam == "kn":
        if len(params) not in (1, 2):
            raise UsageError("gen kn takes N [+|-]")
        g = generators.complete(int(params[0]), params[1] if len(params) == 2 else "+")
    elif fam == "cycle":
        need(2)
        g = generators.cycle(int(params[0]), params[1])
    else:
        raise UsageError(f"unknown family {fam!r}")
    _write_text(dumps(g, [f"generated: {fam} {' '.join(params)}"]), args.output)
    return 0


def cmd_chic(args) -> int:
    g = _read_graph(args.file)
    res = chi_c(g, jobs=args.jobs)
    payload = res.to_json()
    if res.kind == "solved":
        payload["tightness"] = analyze_tightness(g, res.witness).to_json()
    else:
        payload["tightness"] = None
    _emit_json(payload, args.emit)
    return 0


def cmd_color2deg(args) -> int:
    g = _read_graph(args.file)
    try:
        s, c = color_2degenerate(g)
    except NotDegenerate as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    _emit_json(certificate(s, c), args.emit)
    return 0


def cmd_verify(args) -> int:
    g = _read_graph(args.file)
    switch_set, c = _load_coloring(args.coloring)
    target = switch(g, switch_set) if switch_set else g
    bad = verify_coloring(target, c)
    if bad is None:
        _emit_json({"valid": True, "r": fmt(c.r)}, None)
        return 0
    _emit_json({"valid": False, "r": fmt(c.r), "violation": bad.to_json()}, None)
    return 1


def cmd_transform(args) -> int:
    g = _read_graph(args.file)
    if args.op == "fu":
        if args.vertex is None:
            raise UsageError("transform fu needs --vertex")
        out, z = generators.f_u(g, args.vertex)
        _write_text(dumps(out, [f"f_u at vertex {args.vertex}", f"z {z}"]), args.output)
    else:
        if args.edge is None:
            raise UsageError("transform fuv needs --edge U V")
        u, v = args.edge
        out = generators.f_uv(g, u, v)
        n = g.n
        _write_text(dumps(out, [f"f_uv at edge {u} {v}",
                                f"u' {n} v' {n + 1} x {n + 2} y {n + 3}"]), args.output)
    return 0


def cmd_lift(args) -> int:
    g = _read_graph(args.file)
    _, c = _load_coloring(args.coloring)
    if args.op == "fu":
        if args.vertex is None:
            raise UsageError("lift fu needs --vertex")
        s, out = lift_fu(g, args.vertex, c)
        payload = certificate(s, out)
    else:
        if args.edge is None:
            raise UsageError("lift fuv needs --edge U V")
        out = lift_fuv(g, args.edge[0], args.edge[1], c)
        payload = certificate([], out)
    _emit_json(payload, args.emit)
    return 0


def cmd_switch(args) -> int:
    g = _read_graph(args.file)
    try:
        members = [int(x) for x in args.set.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad vertex list {args.set!r}") from None
    _write_text(dumps(switch(g, members)), args.output)
    return 0


def cmd_equiv(args) -> int:
    a, b = _read_graph(args.a), _read_graph(args.b)
    ok, witness = is_equivalent(a, b)
    _emit_json({"equivalent": ok, "switch_set": sorted(witness) if ok else None}, None)
    return 0 if ok else 1


def cmd_bound(args) -> int:
    value = bounds.bound(args.cls, args.n)
    payload = {"class": args.cls, "n": args.n, "bound": fmt(value)}
    code = 0
    if args.maxmin_check:
        mm = bounds.maxmin_verify(args.n, args.cls)
        payload["maxmin"] = {"optimizer": mm.optimizer, "value": fmt(mm.value), "agrees": mm.agrees}
        code = 0 if mm.agrees else 1
    _emit_json(payload, None)
    return code


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="signedcirc",
                                     description="Circular coloring of signed graphs")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a graph family")
    p.add_argument("family", choices=["omega", "gammastar", "sgraph", "t2", "kn", "cycle"])
    p.add_argument("params", nargs="*")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("chic", help="exact circular chromatic number")
    p.add_argument("file")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--emit")
    p.set_defaults(func=cmd_chic)

    p = sub.add_parser("color2deg", help="constructive coloring of a 2-degenerate graph")
    p.add_argument("file")
    p.add_argument("--emit")
    p.set_defaults(func=cmd_color2deg)

    p = sub.add_parser("verify", help="check a coloring or certificate")
    p.add_argument("file")
    p.add_argument("coloring")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("transform", help="apply f_u or f_uv")
    p.add_argument("op", choices=["fu", "fuv"])
    p.add_argument("file")
    p.add_argument("--vertex", type=int)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_transform)

    p = sub.add_parser("lift", help="lift a coloring through f_u or f_uv")
    p.add_argument("op", choices=["fu", "fuv"])
    p.add_argument("file")
    p.add_argument("--vertex", type=int)
    p.add_argument("--edge", type=int, nargs=2, metavar=("U", "V"))
    p.add_argument("--coloring", required=True)
    p.add_argument("--emit")
    p.set_defaults(func=cmd_lift)

    p = sub.add_parser("switch", help="switch a vertex set")
    p.add_argument("file")
    p.add_argument("--set", required=True, help="comma-separated vertex ids")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_switch)

    p = sub.add_parser("equiv", help="test switching equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.set_defaults(func=cmd_equiv)

    p = sub.add_parser("bound", help="closed-form upper bounds")
    p.add_argument("--class", dest="cls", choices=list(bounds.FAMILIES), required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--maxmin-check", action="store_true")
    p.set_defaults(func=cmd_bound)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 2
    try:
        return args.func(args)
    except (UsageError, SignedCircError, StructureMismatch, IndexError, ValueError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
