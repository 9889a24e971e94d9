"""``atq`` command line.

Subcommands read JSON documents from a path or ``-`` (stdin) and write
JSON (or SVG) to stdout, so the K3 construction runs as a pipeline::

    atq catalog build cp2_blowup9 | atq trade - --trade vertex=0,t=2 ... | atq quantize -

Exit status: 0 success, 1 domain error (JSON error object on stderr),
2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import io
from .catalog import CATALOG, SemitoricModel, build, sample_spin_oscillator, sample_spin_spin
from .diagram import ClosedBase, Diagram, monodromy, nodal_slide, nodal_trade, symplectic_sum, validate
from .errors import AtqError, InvalidDiagram, ParseError
from .graded import GradedQuant
from .lattice import area, is_delzant, lattice_points
from .mv import FFCovering, build_ff_covering_map, kernel_cokernel, kunneth, local_ff_quantization
from .quantization import Window, quantize_semitoric, report, report_closed
from .render import render


class UsageError(Exception):
    pass


def _read(source: str, stdin) -> str:
    if source == "-":
        return stdin.read()
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from None


def _load(source: str, stdin):
    return io.loads(_read(source, stdin))


def _kv(text: str, keys: dict) -> dict:
    """Parse ``a=1,b=2`` against ``{name: converter}``."""
    out = {}
    for part in text.split(","):
        k, sep, v = part.partition("=")
        if not sep or k not in keys:
            raise UsageError(f"bad option {text!r}; expected keys {sorted(keys)}")
        try:
            out[k] = keys[k](v)
        except (ValueError, ZeroDivisionError):
            raise UsageError(f"bad value for {k}: {v!r}") from None
    return out


def _window(text: str) -> Window:
    parts = text.split(",")
    if len(parts) != 4:
        raise UsageError("--window takes x0,y0,x1,y1")
    try:
        return Window.of(*(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"bad window {text!r}") from None


def _emit(obj, fmt: str) -> str:
    if fmt == "svg":
        if not isinstance(obj, (Diagram, ClosedBase)):
            raise UsageError("SVG output is available for diagrams and closed bases only")
        return render(obj)
    return io.dumps(obj)


def _need_diagram(obj):
    if not isinstance(obj, Diagram):
        raise ParseError("expected a diagram document")
    return obj


def cmd_validate(args, stdin):
    obj = _load(args.input, stdin)
    halves = {"a": obj.half_a, "b": obj.half_b} if isinstance(obj, ClosedBase) else {"": _need_diagram(obj)}
    violations = []
    for name, d in halves.items():
        for v in validate(d):
            violations.append(v._replace(detail=f"half {name}: {v.detail}") if name else v)
    payload = json.dumps({"valid": not violations, "violations": [v.to_json() for v in violations]},
                         indent=2) + "\n"
    if violations:
        exc = InvalidDiagram(f"{len(violations)} violation(s)", violations)
        exc.payload = payload
        raise exc
    return payload


def _info(d: Diagram) -> dict:
    interior, boundary = lattice_points(d.polygon)
    delzant = None
    if d.polygon.is_integral:
        delzant = [ok for _, ok in is_delzant(d.polygon)]
    return {
        "area": str(area(d.polygon)),
        "affine_perimeter": str(d.polygon.perimeter_affine()),
        "interior_points": len(interior),
        "boundary_points": len(boundary),
        "delzant": delzant,
        "nodes": len(d.nodes),
        "monodromies": [[list(r) for r in monodromy(n).rows()] for n in d.canonical().nodes],
    }


def cmd_info(args, stdin):
    obj = _load(args.input, stdin)
    if isinstance(obj, ClosedBase):
        out = {"half_a": _info(obj.half_a), "half_b": _info(obj.half_b), "tag": obj.tag}
    else:
        out = _info(_need_diagram(obj))
    return json.dumps(out, indent=2) + "\n"


def cmd_quantize(args, stdin):
    obj = _load(args.input, stdin)
    if isinstance(obj, SemitoricModel):
        window = _window(args.window) if args.window else obj.window
        r = quantize_semitoric(obj.region, obj.nodes, window)
    elif args.window:
        raise UsageError("--window applies to semitoric inputs only")
    elif isinstance(obj, ClosedBase):
        r = report_closed(obj)
    else:
        r = report(_need_diagram(obj))
    return io.dumps(r)


def _on_halves(obj, half, fn):
    if isinstance(obj, ClosedBase):
        if half is None:
            raise UsageError("closed base input needs --half a|b")
        a, b = (fn(obj.half_a), obj.half_b) if half == "a" else (obj.half_a, fn(obj.half_b))
        return symplectic_sum(a, b, tag=obj.tag, note=obj.gluing_note)
    return fn(_need_diagram(obj))


def cmd_trade(args, stdin):
    specs = [_kv(s, {"vertex": int, "t": Fraction, "k": int}) for s in args.trade]

    def apply(d):
        for s in specs:
            if "vertex" not in s or "t" not in s:
                raise UsageError("--trade needs vertex=INDEX,t=RAT")
            d = nodal_trade(d, s["vertex"], s["t"], s.get("k", 1))
        return d

    return _emit(_on_halves(_load(args.input, stdin), args.half, apply), args.format)


def cmd_slide(args, stdin):
    specs = [_kv(s, {"node": int, "t": Fraction}) for s in args.slide]

    def apply(d):
        d = d.canonical()
        for s in specs:
            if "node" not in s or "t" not in s:
                raise UsageError("--slide needs node=INDEX,t=RAT")
            d = nodal_slide(d, s["node"], s["t"])
        if args.all_by is not None:
            for i in range(len(d.nodes)):
                d = nodal_slide(d, i, d.nodes[i].t + Fraction(args.all_by))
        return d

    return _emit(_on_halves(_load(args.input, stdin), args.half, apply), args.format)


def cmd_sum(args, stdin):
    a = _need_diagram(_load(args.a, stdin))
    b = _need_diagram(_load(args.b, stdin))
    c = symplectic_sum(a, b, prequantum_compatible=not args.incompatible, tag=args.tag)
    return _emit(c, args.format)


def cmd_mv(args, stdin):
    c = FFCovering(args.nodes, compact=args.compact, bs=args.bs)
    f = build_ff_covering_map(c)
    ker, coker = kernel_cokernel(f)
    g = local_ff_quantization(c)
    out = {
        "nodes": c.n_nodes,
        "compact": c.compact,
        "bs": c.bs,
        "domain": str(f.domain),
        "codomain": str(f.codomain),
        "matrix": [list(r) for r in f.matrix],
        "note": f.note,
        "kernel_rank": ker,
        "cokernel_rank": coker,
        "graded": g.to_json(),
    }
    return json.dumps(out, indent=2) + "\n"


def _graded_arg(text: str, stdin) -> GradedQuant:
    raw = text if text.lstrip().startswith("{") else _read(text, stdin)
    try:
        obj = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from None
    try:
        return GradedQuant.from_json(obj.get("graded", obj))
    except (AttributeError, TypeError, ValueError, IndexError):
        raise ParseError("expected {degree: [finite, smooth], ...}") from None


def cmd_kunneth(args, stdin):
    g = kunneth(_graded_arg(args.a, stdin), _graded_arg(args.b, stdin))
    return io.dumps(g)


def cmd_catalog(args, stdin):
    if args.action == "list":
        rows = []
        for name, e in CATALOG.items():
            row = {"name": name, "description": e.description,
                   "parameters": {k: str(v) for k, v in e.parameters.items()}}
            if e.expected is not None:
                row["expected"] = e.expected.to_json()
            rows.append(row)
        return json.dumps(rows, indent=2) + "\n"
    if args.action == "build":
        if not args.name:
            raise UsageError("catalog build needs a fixture name")
        return _emit(build(args.name), args.format)
    if args.action == "sample":
        if args.name == "spin-spin":
            s = sample_spin_spin(args.grid)
        elif args.name == "spin-oscillator":
            s = sample_spin_oscillator(args.grid, args.radius)
        else:
            raise UsageError("catalog sample takes spin-spin or spin-oscillator")
        return s.to_csv()
    raise UsageError(f"unknown catalog action {args.action}")


def cmd_render(args, stdin):
    obj = _load(args.input, stdin)
    if not isinstance(obj, (Diagram, ClosedBase)):
        raise ParseError("render takes a diagram or closed base")
    return render(obj)


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="atq", description="Real geometric quantization of almost toric bases.")
    sub = ap.add_subparsers(dest="command", required=True)

    def with_input(p):
        p.add_argument("input", help="JSON file, or - for stdin")
        return p

    def with_format(p):
        p.add_argument("--format", choices=["json", "svg"], default="json")
        return p

    with_input(sub.add_parser("validate", help="check diagram invariants")).set_defaults(fn=cmd_validate)
    with_input(sub.add_parser("info", help="areas, lattice counts, Delzant test, monodromies")).set_defaults(
        fn=cmd_info)
    p = with_input(sub.add_parser("quantize", help="Bohr-Sommerfeld classification and quantization"))
    p.add_argument("--window", help="x0,y0,x1,y1 (semitoric inputs)")
    p.set_defaults(fn=cmd_quantize)

    p = with_format(with_input(sub.add_parser("trade", help="nodal trades")))
    p.add_argument("--trade", action="append", default=[], metavar="vertex=INDEX,t=RAT[,k=INT]")
    p.add_argument("--half", choices=["a", "b"])
    p.set_defaults(fn=cmd_trade)

    p = with_format(with_input(sub.add_parser("slide", help="nodal slides")))
    p.add_argument("--slide", action="append", default=[], metavar="node=INDEX,t=RAT")
    p.add_argument("--all-by", metavar="RAT", help="slide every node by this amount along its eigenline")
    p.add_argument("--half", choices=["a", "b"])
    p.set_defaults(fn=cmd_slide)

    p = with_format(sub.add_parser("sum", help="symplectic sum of two fully traded diagrams"))
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--tag")
    p.add_argument("--incompatible", action="store_true",
                   help="pre-quantum bundles do not agree on the gluing torus")
    p.set_defaults(fn=cmd_sum)

    p = sub.add_parser("mv", help="focus-focus local model via Mayer-Vietoris")
    p.add_argument("--nodes", type=int, required=True)
    p.add_argument("--compact", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--bs", action=argparse.BooleanOptionalAction, default=True)
    p.set_defaults(fn=cmd_mv)

    p = sub.add_parser("kunneth", help="Kunneth product of two graded quantizations")
    p.add_argument("a", help="inline JSON {degree: [finite, smooth]} or a file")
    p.add_argument("b")
    p.set_defaults(fn=cmd_kunneth)

    p = with_format(sub.add_parser("catalog", help="worked examples"))
    p.add_argument("action", choices=["list", "build", "sample"])
    p.add_argument("name", nargs="?")
    p.add_argument("--grid", type=int, default=8)
    p.add_argument("--radius", type=float, default=2.0)
    p.set_defaults(fn=cmd_catalog)

    with_input(sub.add_parser("render", help="SVG drawing")).set_defaults(fn=cmd_render)
    return ap


def run(argv=None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = _parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        out = args.fn(args, stdin)
    except UsageError as exc:
        stderr.write(f"atq: {exc}\n")
        return 2
    except AtqError as exc:
        payload = getattr(exc, "payload", None)
        if payload:
            stdout.write(payload)
        stderr.write(json.dumps(exc.to_json()) + "\n")
        return 1
    stdout.write(out)
    return 0


def main() -> None:
    raise SystemExit(run())


if __name__ == "__main__":
    main()
