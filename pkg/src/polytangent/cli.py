"""Command-line front end.

Every subcommand prints a single envelope, as readable text by default
or as one JSON object with ``--json``.  The envelope always has the
keys command, inputs, result, status, error; inputs are echoed in
canonical form so output does not depend on input formatting.

Exit codes: 0 ok, 2 input error, 3 internal invariant violation (a
tangent certificate failed to re-verify, which should never happen).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .decomposition import decompose, quotient_table, remainder_valuation
from .dual import Dual, ElementaryFn, eval_elementary, eval_poly
from .parser import LoweringError, ParseError, lower_poly, lower_ratfun, parse
from .plotting import render_figure
from .polynomial import LinearFunction, Polynomial, X
from .rational import to_decimal
from .rules import RULES, VERIFIERS
from .tangency import (
    INFINITE,
    CertificateError,
    derivative,
    intersection_multiplicity,
    ratfun_derivative,
    tangent_at,
    taylor_shift,
)

_DUAL_TAGS = ("exp", "log", "sin", "cos", "tan")  # pow_const is API-only


def _envelope(command, inputs, result, status="ok", error=None) -> dict:
    return {
        "command": command,
        "inputs": inputs,
        "result": result,
        "status": status,
        "error": error,
    }


def _poly(text: str) -> Polynomial:
    return lower_poly(parse(text))


def _finite_or_marker(value):
    return "INFINITE" if value == INFINITE else value


# -- command handlers --------------------------------------------------------


def _cmd_tangent(args) -> dict:
    f = _poly(args.expr)
    p = Fraction(args.p)
    t = tangent_at(f, p)
    factored = f"({X - p})^2 * ({t.cofactor})"
    result = {
        "point": str(t.point),
        "slope": str(t.slope),
        "intercept": str(t.intercept),
        "cofactor": str(t.cofactor),
        "equation": t.equation(),
        "certificate": {
            "difference": str(f - t.line.as_polynomial()),
            "factored": factored,
            "verified": True,
        },
    }
    return _envelope("tangent", {"expr": str(f), "p": str(p)}, result)


def _cmd_derive(args) -> dict:
    tree = parse(args.expr)
    try:
        f = lower_poly(tree)
    except LoweringError:
        r = lower_ratfun(tree)
        result = {"kind": "rational_function", "derivative": str(ratfun_derivative(r))}
        return _envelope("derive", {"expr": str(r)}, result)
    result = {"kind": "polynomial", "derivative": str(derivative(f))}
    return _envelope("derive", {"expr": str(f)}, result)


def _cmd_check(args) -> dict:
    f = _poly(args.expr)
    line = LinearFunction(Fraction(args.k), Fraction(args.b))
    p = Fraction(args.p)
    m = intersection_multiplicity(f, line, p)
    result = {
        "line": line.equation(),
        "multiplicity": _finite_or_marker(m),
        "tangent": m >= 2,
    }
    inputs = {
        "expr": str(f),
        "k": str(line.slope),
        "b": str(line.intercept),
        "p": str(p),
    }
    return _envelope("check", inputs, result)


def _cmd_mult(args) -> dict:
    env = _cmd_check(args)
    result = {"line": env["result"]["line"], "multiplicity": env["result"]["multiplicity"]}
    return _envelope("mult", env["inputs"], result)


def _cmd_decompose(args) -> dict:
    f = _poly(args.expr)
    x0 = Fraction(args.x0)
    d = decompose(f, x0)
    result = {
        "x0": str(d.x0),
        "value": str(d.value),
        "slope": str(d.slope),
        "remainder": d.remainder.render("t"),
        "valuation": _finite_or_marker(remainder_valuation(d)),
    }
    return _envelope("decompose", {"expr": str(f), "x0": str(x0)}, result)


def _cmd_expand(args) -> dict:
    f = _poly(args.expr)
    p = Fraction(args.p)
    e = taylor_shift(f, p)
    result = {
        "center": str(e.center),
        "coefficients": [str(c) for c in e.coeffs],
        "polynomial": Polynomial(e.coeffs).render("t"),
    }
    return _envelope("expand", {"expr": str(f), "p": str(p)}, result)


def _cmd_table(args) -> dict:
    f = _poly(args.expr)
    x0 = Fraction(args.x0)
    rows = quotient_table(f, x0, args.steps)
    result = {
        "x0": str(x0),
        "slope": str(derivative(f)(x0)),
        "rows": [
            {
                "h": str(r.h),
                "dy": str(r.dy),
                "quotient": str(r.quotient),
                "gap": str(r.gap),
                "h_decimal": to_decimal(r.h),
                "quotient_decimal": to_decimal(r.quotient),
                "gap_decimal": to_decimal(r.gap),
            }
            for r in rows
        ],
    }
    return _envelope("table", {"expr": str(f), "x0": str(x0), "steps": args.steps}, result)


def _cmd_rules(args) -> dict:
    f = _poly(args.f)
    g = _poly(args.g)
    reports = []
    for name in RULES:
        try:
            rep = VERIFIERS[name](f, g)
        except ZeroDivisionError as exc:
            reports.append(
                {"rule": name, "lhs": None, "rhs": None, "holds": None, "error": str(exc)}
            )
            continue
        reports.append(
            {"rule": name, "lhs": str(rep.lhs), "rhs": str(rep.rhs), "holds": rep.holds}
        )
    return _envelope("rules", {"f": str(f), "g": str(g)}, {"reports": reports})


def _cmd_dual(args) -> dict:
    a = Fraction(args.a)
    b = Fraction(args.b)
    if args.fn in _DUAL_TAGS:
        out = eval_elementary(ElementaryFn(args.fn), Dual(float(a), float(b)))
        inputs = {"fn": args.fn, "a": str(a), "b": str(b)}
        result = {"kind": "elementary", "real": out.real, "eps": out.eps}
        return _envelope("dual", inputs, result)
    f = _poly(args.fn)
    out = eval_poly(f, Dual(a, b))
    inputs = {"fn": str(f), "a": str(a), "b": str(b)}
    result = {"kind": "polynomial", "real": str(out.real), "eps": str(out.eps)}
    return _envelope("dual", inputs, result)


def _cmd_plot(args) -> dict:
    f = _poly(args.expr)
    p = Fraction(args.p)
    try:
        lo_text, hi_text = args.range.split(",")
        lo, hi = Fraction(lo_text), Fraction(hi_text)
    except ValueError:
        raise ValueError(f"--range must be lo,hi with lo < hi, got {args.range!r}")
    try:
        w_text, h_text = args.size.lower().split("x")
        width, height = int(w_text), int(h_text)
    except ValueError:
        raise ValueError(f"--size must be WxH, got {args.size!r}")
    dx = Fraction(args.dx) if args.dx is not None else None
    svg, info = render_figure(f, p, lo, hi, dx=dx, width=width, height=height)
    Path(args.out).write_text(svg, encoding="utf-8")
    result = {
        "out": args.out,
        "size": f"{width}x{height}",
        "range": f"{lo},{hi}",
        "slope": str(info["slope"]),
        "intercept": str(info["intercept"]),
        "samples": info["samples"],
        "dx": str(dx) if dx is not None else None,
        "delta_y": str(info["delta_y"]) if dx is not None else None,
        "differential": str(info["differential"]) if dx is not None else None,
    }
    inputs = {"expr": str(f), "p": str(p), "range": f"{lo},{hi}"}
    if dx is not None:
        inputs["dx"] = str(dx)
    return _envelope("plot", inputs, result)


_HANDLERS = {
    "tangent": _cmd_tangent,
    "derive": _cmd_derive,
    "check": _cmd_check,
    "mult": _cmd_mult,
    "decompose": _cmd_decompose,
    "expand": _cmd_expand,
    "table": _cmd_table,
    "rules": _cmd_rules,
    "dual": _cmd_dual,
    "plot": _cmd_plot,
}


# -- text rendering ------------------------------------------------------------


def _text_lines(env: dict) -> list[str]:
    cmd = env["command"]
    inputs = env["inputs"]
    r = env["result"]
    if env["status"] == "error":
        return [f"error: {env['error']}"]
    if cmd == "tangent":
        return [
            f"tangent to f(x) = {inputs['expr']} at p = {inputs['p']}",
            f"  {r['equation']}",
            f"  slope     k = {r['slope']}",
            f"  intercept b = {r['intercept']}",
            f"  cofactor  Q = {r['cofactor']}",
            f"  certificate: {r['certificate']['difference']} = {r['certificate']['factored']}",
        ]
    if cmd == "derive":
        return [f"d/dx {inputs['expr']} = {r['derivative']}"]
    if cmd in ("check", "mult"):
        lines = [
            f"f(x) = {inputs['expr']} against {r['line']} at p = {inputs['p']}",
            f"  intersection multiplicity: {r['multiplicity']}",
        ]
        if cmd == "check":
            verdict = "tangent" if r["tangent"] else "not tangent"
            lines.append(f"  verdict: {verdict}")
        return lines
    if cmd == "decompose":
        return [
            f"f(x0 + t) for f(x) = {inputs['expr']}, x0 = {inputs['x0']}",
            f"  value     f(x0)  = {r['value']}",
            f"  slope     f'(x0) = {r['slope']}",
            f"  remainder R(t)   = {r['remainder']}",
            f"  valuation        = {r['valuation']}",
        ]
    if cmd == "expand":
        return [
            f"f({inputs['p']} + t) = {r['polynomial']}",
            f"  coefficients: {', '.join(r['coefficients'])}",
        ]
    if cmd == "table":
        lines = [
            f"difference quotients for f(x) = {inputs['expr']} at x0 = {r['x0']} "
            f"(slope {r['slope']})",
            f"  {'h':>12}  {'dy/dx':>16}  {'gap':>16}  {'gap (decimal)':>16}",
        ]
        for row in r["rows"]:
            lines.append(
                f"  {row['h']:>12}  {row['quotient']:>16}  {row['gap']:>16}  "
                f"{row['gap_decimal']:>16}"
            )
        return lines
    if cmd == "rules":
        lines = [f"differentiation rules for f = {inputs['f']}, g = {inputs['g']}"]
        for rep in r["reports"]:
            if rep["holds"] is None:
                lines.append(f"  {rep['rule']:>8}: input error: {rep['error']}")
            else:
                word = "holds" if rep["holds"] else "FAILS"
                lines.append(f"  {rep['rule']:>8}: {word}  {rep['lhs']} == {rep['rhs']}")
        return lines
    if cmd == "dual":
        return [
            f"{inputs['fn']} at ({inputs['a']} + {inputs['b']}*eps)",
            f"  real = {r['real']}",
            f"  eps  = {r['eps']}",
        ]
    if cmd == "plot":
        lines = [
            f"wrote {r['out']} ({r['size']}, x in [{r['range']}], {r['samples']} samples)",
            f"  tangent: slope {r['slope']}, intercept {r['intercept']}",
        ]
        if r["dx"] is not None:
            lines.append(
                f"  secant: dx = {r['dx']}, dy = {r['delta_y']}, "
                f"differential = {r['differential']}"
            )
        return lines
    return [json.dumps(env)]


def _emit(env: dict, args) -> None:
    if args.json:
        payload = json.dumps(env, indent=2) + "\n"
    else:
        payload = "\n".join(_text_lines(env)) + "\n"
    if args.output:
        Path(args.output).write_text(payload, encoding="utf-8")
    else:
        sys.stdout.write(payload)


def _raw_inputs(args) -> dict:
    skip = {"command", "json", "output"}
    return {k: str(v) for k, v in vars(args).items() if k not in skip and v is not None}


# -- argument parsing ------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="polytangent",
        description="Tangents and derivatives of polynomials by the double-root "
        "criterion, over exact rational arithmetic.",
    )
    ap.add_argument("--json", action="store_true", help="emit one JSON object")
    ap.add_argument("--output", metavar="PATH", help="write the output to PATH instead of stdout")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tangent", help="tangent line at a point")
    p.add_argument("expr")
    p.add_argument("p")

    p = sub.add_parser("derive", help="derivative of a polynomial or rational function")
    p.add_argument("expr")

    p = sub.add_parser("check", help="test whether y = k*x + b is tangent at p")
    p.add_argument("expr")
    p.add_argument("k")
    p.add_argument("b")
    p.add_argument("p")

    p = sub.add_parser("mult", help="intersection multiplicity of a line at p")
    p.add_argument("expr")
    p.add_argument("k")
    p.add_argument("b")
    p.add_argument("p")

    p = sub.add_parser("decompose", help="value + slope*t + remainder about x0")
    p.add_argument("expr")
    p.add_argument("x0")

    p = sub.add_parser("expand", help="rewrite f in powers of t = x - p")
    p.add_argument("expr")
    p.add_argument("p")

    p = sub.add_parser("table", help="exact difference-quotient table")
    p.add_argument("expr")
    p.add_argument("x0")
    p.add_argument("--steps", type=int, default=6, help="rows, h = 1/10 .. 1/10^steps")

    p = sub.add_parser("rules", help="verify the differentiation rules for f and g")
    p.add_argument("f")
    p.add_argument("g")

    p = sub.add_parser("dual", help="evaluate at a + b*eps (polynomial or exp/log/sin/cos/tan)")
    p.add_argument("fn")
    p.add_argument("a")
    p.add_argument("b")

    p = sub.add_parser("plot", help="SVG figure: curve, tangent, optional secant")
    p.add_argument("expr")
    p.add_argument("p")
    p.add_argument("--range", required=True, metavar="LO,HI")
    p.add_argument("--dx", help="draw the secant to p + dx with increment annotations")
    p.add_argument("--size", default="800x600", metavar="WxH")
    p.add_argument("--out", default="plot.svg", metavar="FILE", help="SVG destination")

    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    handler = _HANDLERS[args.command]
    try:
        env = handler(args)
    except CertificateError as exc:
        env = _envelope(args.command, _raw_inputs(args), None, "error", str(exc))
        _emit(env, args)
        return 3
    except (ParseError, LoweringError, ValueError, ZeroDivisionError, OSError) as exc:
        env = _envelope(args.command, _raw_inputs(args), None, "error", str(exc))
        _emit(env, args)
        return 2
    _emit(env, args)
    return 0
