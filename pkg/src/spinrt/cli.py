"""Command-line interface and the JSON presentation file format.

A presentation file looks like::

    {"r": 4,
     "diagram": ["cup 0 cw", "cap 0"],
     "components": [{"id": 0, "role": "physical", "orientation": "as drawn",
                     "color": {"type": "simple", "alpha": [0.3, 0]},
                     "spin": [1.3, 0]}]}

Surgery components carry no color.  ``spin`` may be omitted for physical
components (it then defaults to the degree of the color) and, for
``spin-solve``, on surgery components too.
"""
from __future__ import annotations

import argparse
import json
import sys

from . import surgery
from .diagram import DEFAULT_MAX_SIZE, TangleDiagram, f_prime, format_events
from .errors import InvalidOpening, NotComputable, NotRenormalizable, ResourceGuard, SpinRTError
from .repcat import Eps, Formal, Simple, degree
from .scalar import ScalarContext
from .spin import solve_spin
from .surgery import PHYSICAL, SURGERY, Component, LinkPresentation

EXIT_OK, EXIT_INPUT, EXIT_NOT_COMPUTABLE, EXIT_RESOURCE = 0, 1, 2, 3


class InputError(SpinRTError, ValueError):
    """Malformed file or command-line argument."""


# -- file format ------------------------------------------------------------------


def _complex(value, what: str) -> complex:
    if isinstance(value, (int, float)):
        return complex(value)
    if isinstance(value, (list, tuple)) and len(value) == 2 \
            and all(isinstance(x, (int, float)) for x in value):
        return complex(value[0], value[1])
    raise InputError(f"{what}: expected a number or [re, im], got {value!r}")


def _pair(z: complex) -> list:
    z = complex(z)
    return [z.real, z.imag]


def color_from_json(ctx: ScalarContext, obj):
    if obj is None:
        return None
    if not isinstance(obj, dict) or "type" not in obj:
        raise InputError(f"color must be an object with a 'type', got {obj!r}")
    kind = obj["type"]
    if kind == "simple":
        return Simple(_complex(obj.get("alpha"), "simple color alpha"))
    if kind == "eps":
        k = obj.get("k", 1)
        if not isinstance(k, int):
            raise InputError(f"eps color needs an integer k, got {k!r}")
        return Eps(k)
    if kind == "kirby":
        alpha = _complex(obj.get("alpha"), "kirby color alpha")
        scale = _complex(obj.get("scale", 1), "kirby color scale")
        return surgery.kirby_color(ctx, alpha, obj.get("form", "omega"), scale)
    if kind == "formal":
        terms = obj.get("terms")
        if not isinstance(terms, list) or not terms:
            raise InputError("formal color needs a nonempty 'terms' list")
        return Formal(tuple((_complex(t.get("coef", 1), "formal coefficient"),
                             color_from_json(ctx, t.get("color"))) for t in terms))
    raise InputError(f"unknown color type {kind!r}")


def color_to_json(color):
    if color is None:
        return None
    if isinstance(color, Simple):
        return {"type": "simple", "alpha": _pair(color.alpha)}
    if isinstance(color, Eps):
        return {"type": "eps", "k": color.k}
    if isinstance(color, Formal):
        return {"type": "formal",
                "terms": [{"coef": _pair(c), "color": color_to_json(col)} for c, col in color.terms]}
    raise InputError(f"color {color!r} has no file representation")


def parse_file_data(data):
    """Level, diagram and component records (sorted by id) of a parsed file."""
    if not isinstance(data, dict):
        raise InputError("presentation file must hold a JSON object")
    for key in ("diagram", "components"):
        if key not in data:
            raise InputError(f"missing field {key!r}")
    diagram = TangleDiagram.parse(data["diagram"])
    comps = data["components"]
    if not isinstance(comps, list):
        raise InputError("'components' must be a list")
    ids = [c.get("id", i) if isinstance(c, dict) else None for i, c in enumerate(comps)]
    if sorted(ids) != list(range(len(comps))):
        raise InputError(f"component ids must be 0..{len(comps) - 1}, got {ids}")
    return data.get("r"), diagram, sorted(comps, key=lambda c: c.get("id", 0))


def presentation_from_json(data, r: int | None = None, tol: float | None = None,
                           require_spin: bool = True):
    """Build (ctx, LinkPresentation) from parsed JSON.

    Surgery components with no spin value get 0 when ``require_spin`` is
    false (the value is then solved for).
    """
    file_r, diagram, records = parse_file_data(data)
    r = r if r is not None else file_r
    if r is None:
        raise InputError("no level r given (file field 'r' or --r)")
    try:
        ctx = ScalarContext(int(r), **({"tol": tol} if tol else {}))
    except (TypeError, ValueError) as exc:
        raise InputError(str(exc)) from exc
    comps = []
    for rec in records:
        role = rec.get("role")
        if role not in (SURGERY, PHYSICAL):
            raise InputError(f"component {rec.get('id')}: role must be 'surgery' or 'physical'")
        color = color_from_json(ctx, rec.get("color"))
        if "spin" in rec and rec["spin"] is not None:
            spin = _complex(rec["spin"], f"component {rec.get('id')} spin")
        elif role == PHYSICAL and color is not None:
            spin = degree(color).value
        elif not require_spin:
            spin = 0j
        else:
            raise InputError(f"component {rec.get('id')} has no spin value")
        comps.append(Component(role, color, spin))
    return ctx, LinkPresentation(diagram, tuple(comps))


def presentation_to_json(p: LinkPresentation, r: int) -> dict:
    comps = []
    for i, c in enumerate(p.components):
        rec = {"id": i, "role": c.role, "orientation": "as drawn"}
        if c.role == PHYSICAL:
            rec["color"] = color_to_json(c.color)
        rec["spin"] = _pair(c.spin)
        comps.append(rec)
    return {"r": r, "diagram": format_events(p.diagram.events), "components": comps}


def load(path: str, r=None, tol=None, require_spin=True):
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc})") from exc
    return presentation_from_json(data, r, tol, require_spin)


# -- output ----------------------------------------------------------------------


def fmt_number(x: float) -> str:
    s = format(x, ".15g")
    return "0" if s == "-0" else s


def fmt_complex(z: complex) -> str:
    z = complex(z)
    return f"{fmt_number(z.real)} {fmt_number(z.imag)}"


def _fmt_vec(v) -> str:
    return "[" + ", ".join(f"({fmt_complex(x)})" for x in v) + "]"


# -- commands -----------------------------------------------------------------------


def cmd_eval(args, out) -> int:
    ctx, p = load(args.file, args.r, args.tol)
    if p.surgery_ids and not surgery.is_computable(p, ctx):
        raise NotComputable("a surgery component has an integral spin value")
    colors = surgery.evaluation_colors(ctx, p)
    value = f_prime(ctx, p.diagram, colors, opened=args.open, max_size=args.max_size,
                    terms_max=args.terms_max)
    print(fmt_complex(value), file=out)
    return EXIT_OK


def cmd_invariant(args, out) -> int:
    ctx, p = load(args.file, args.r, args.tol)
    report = surgery.require_valid(p, ctx)
    res = surgery.invariant_N_details(ctx, p, terms_max=args.terms_max, max_size=args.max_size)
    print(f"N {fmt_complex(res.value)}", file=out)
    print("signature {} {} {}".format(*res.signature), file=out)
    print(f"terms {res.terms}", file=out)
    print(f"computable {'yes' if report.computable else 'no'}", file=out)
    print(f"admissible {'yes' if report.admissible else 'no'}", file=out)
    return EXIT_OK


def cmd_spin_solve(args, out) -> int:
    ctx, p = load(args.file, args.r, args.tol, require_spin=False)
    B, lk, _ = p.linking
    sol = solve_spin(B, lk, p.spin.w)
    print(f"particular {_fmt_vec(sol.particular)}", file=out)
    for gen, order in sol.torsion:
        print(f"torsion order {order} generator {_fmt_vec(gen)}", file=out)
    print(f"free rank {sol.free_rank}", file=out)
    for vec in sol.free:
        print(f"free direction {list(vec)}", file=out)
    if sol.count is not None:
        print(f"count {sol.count}", file=out)
        for rep in sol.representatives():
            comps = list(p.components)
            for sid, c in zip(p.surgery_ids, rep):
                comps[sid] = Component(SURGERY, None, c)
            flag = surgery.is_computable(p.with_components(comps), ctx)
            print(f"solution {_fmt_vec(rep)} computable {'yes' if flag else 'no'}", file=out)
    return EXIT_OK


def _parse_int(text: str, spec: str) -> int:
    try:
        return int(text)
    except ValueError as exc:
        raise InputError(f"move {spec!r}: {text!r} is not an integer") from exc


def apply_move(ctx, p: LinkPresentation, spec: str) -> surgery.MoveResult:
    """Apply one move given as ``kind:args`` (see the --move help)."""
    parts = spec.split(":")
    kind = parts[0]
    if kind == "orient" and len(parts) == 2:
        return surgery.orientation_move(p, _parse_int(parts[1], spec))
    if kind == "k1" and len(parts) in (3, 4):
        sign = _parse_int(parts[2], spec)
        if len(parts) == 4 and parts[3] != "remove":
            raise InputError(f"move {spec!r}: the optional fourth field must be 'remove'")
        direction = -1 if len(parts) == 4 else 1
        return surgery.k1_move(ctx, p, _parse_int(parts[1], spec), sign, direction)
    if kind == "k2" and len(parts) == 3:
        return surgery.k2_move(p, _parse_int(parts[1], spec), _parse_int(parts[2], spec))
    if kind == "hopf" and len(parts) == 3:
        try:
            beta = complex(*(float(x) for x in parts[2].split(",")))
        except (TypeError, ValueError) as exc:
            raise InputError(f"move {spec!r}: beta must be 're' or 're,im'") from exc
        return surgery.hopf_stabilize(ctx, p, _parse_int(parts[1], spec), beta)
    if kind == "birth" and len(parts) == 2:
        return surgery.birth_around(ctx, p, _parse_int(parts[1], spec))
    raise InputError(f"unrecognized move {spec!r}")


def cmd_kirby(args, out) -> int:
    ctx, p = load(args.file, args.r, args.tol)
    surgery.require_valid(p, ctx)
    q = p
    for spec in args.move:
        q = apply_move(ctx, q, spec).presentation
        surgery.require_valid(q, ctx)
    text = json.dumps(presentation_to_json(q, ctx.r), indent=1)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text, file=out)
    if args.check:
        kw = {"terms_max": args.terms_max, "max_size": args.max_size}
        before = surgery.invariant_N(ctx, p, **kw)
        after = surgery.invariant_N(ctx, q, **kw)
        dev = abs(before - after) / max(abs(before), abs(after), 1e-300)
        stream = sys.stderr if not args.out else out
        print(f"before {fmt_complex(before)}", file=stream)
        print(f"after {fmt_complex(after)}", file=stream)
        print(f"deviation {dev:.3e}", file=stream)
    return EXIT_OK


def cmd_selftest(args, out) -> int:
    from .selftest import run_all

    results = run_all()
    for a in results:
        print(f"{'PASS' if a.passed else 'FAIL'} {a.name}: {a.detail}", file=out)
    return EXIT_OK if all(a.passed for a in results) else EXIT_INPUT


# -- entry point ----------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--r", type=int, help="level r (overrides the file)")
    common.add_argument("--tol", type=float, help="integrality tolerance")
    common.add_argument("--terms-max", type=int, default=surgery.DEFAULT_TERMS_MAX,
                        help="limit on the number of expanded color terms")
    common.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE,
                        help="limit on the contraction state size")

    parser = argparse.ArgumentParser(prog="spinrt", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="renormalized link invariant F'")
    p.add_argument("file")
    p.add_argument("--open", type=int, help="component to cut open")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("invariant", parents=[common], help="the 3-manifold invariant N")
    p.add_argument("file")
    p.set_defaults(func=cmd_invariant)

    p = sub.add_parser("spin-solve", parents=[common], help="solve the characteristic equation")
    p.add_argument("file")
    p.set_defaults(func=cmd_spin_solve)

    p = sub.add_parser("kirby", parents=[common], help="apply moves and write the result",
                       formatter_class=argparse.RawDescriptionHelpFormatter,
                       epilog="moves: orient:ID  k1:ID:+1|-1[:remove]  k2:SLIDER:OVER  "
                              "hopf:ID:RE[,IM]  birth:ID")
    p.add_argument("file")
    p.add_argument("--move", action="append", required=True, help="move spec, repeatable")
    p.add_argument("--check", action="store_true", help="compare N before and after")
    p.add_argument("--out", help="output file (default: standard output)")
    p.set_defaults(func=cmd_kirby)

    p = sub.add_parser("selftest", help="run the anchor checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def exit_code_for(exc: BaseException) -> int:
    if isinstance(exc, ResourceGuard):
        return EXIT_RESOURCE
    if isinstance(exc, (NotComputable, NotRenormalizable, InvalidOpening)):
        return EXIT_NOT_COMPUTABLE
    return EXIT_INPUT


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (SpinRTError, ValueError) as exc:
        code = exit_code_for(exc)
        label = {EXIT_RESOURCE: "resource limit", EXIT_NOT_COMPUTABLE: "not computable"}.get(
            code, "invalid input")
        if isinstance(exc, NotRenormalizable):
            label = "not renormalizable"
        print(f"spinrt: {label}: {exc}", file=sys.stderr)
        return code


if __name__ == "__main__":
    sys.exit(main())
