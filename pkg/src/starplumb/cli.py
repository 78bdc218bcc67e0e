"""Command line front end.

Verbs: check (definiteness, fundamental cycle, rationality), family
(gen / id), seifert (to-graph / from-graph), template build, verify,
render.  All file interchange is JSON with exact "p/q" rationals; SVG
output is display only, coordinates rounded to 6 significant digits.

Exit codes: 0 success, 1 failed verification or obstructed template,
2 malformed input.
"""

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .families import FamilyTag, generate, recognize
from .graph_core import (
    StarPlumbing,
    fraction_from_str,
    fraction_to_str,
    intersection_matrix,
    is_negative_definite_matrix,
    is_negative_definite_star,
)
from .rationality import fundamental_cycle, is_rational
from .seifert import SeifertData, plumbing_to_seifert, seifert_to_plumbing
from .toric import (
    Condition4Error,
    Template,
    TemplateError,
    build_template,
    template_from_json_dict,
    template_to_json_dict,
    verify_template,
)

__all__ = ["main", "render_svg"]

_FAMILY_ALIASES = {
    "Gamma": "Gamma", "Delta": "Delta", "Lambda": "Lambda",
    "gamma": "Gamma", "delta": "Delta", "lambda": "Lambda",
    "Γ": "Gamma", "Δ": "Delta", "Λ": "Lambda",
}

_COLORS = ("#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b")


def _fail(msg):
    print(f"error: {msg}", file=sys.stderr)
    return 2


def _load_json(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise ValueError(f"{path}: {e.strerror or e}") from None
    except json.JSONDecodeError as e:
        raise ValueError(f"{path}: invalid JSON at line {e.lineno} column {e.colno}") from None


def _emit(text, out):
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        print(text, end="" if text.endswith("\n") else "\n")


def _rational_arg(v, what):
    """Accept an int or a "p/q" string; floats stay out of the kernel."""
    if isinstance(v, int) and not isinstance(v, bool):
        return Fraction(v)
    if isinstance(v, str):
        return fraction_from_str(v)
    raise ValueError(f"{what} must be an integer or a 'p/q' string, got {v!r}")


# ---------------------------------------------------------------- check

def _check_one(path):
    g = StarPlumbing.from_json_dict(_load_json(path))
    nd_star = is_negative_definite_star(g)
    nd_minor = is_negative_definite_matrix(intersection_matrix(g))
    rec = {
        "file": str(path),
        "negative_definite_star": nd_star,
        "negative_definite_minors": nd_minor,
        "fundamental_cycle": None,
        "pa": None,
        "rational": None,
        "l_space": None,
    }
    if nd_star:
        z = fundamental_cycle(g)
        rational, pa = is_rational(g)
        rec.update(
            fundamental_cycle=list(z),
            pa=fraction_to_str(pa),
            rational=rational,
            l_space=True if rational else None,
        )
    return rec


def _print_check(rec):
    print(f"{rec['file']}:")
    print(f"  negative-definite (star criterion): {str(rec['negative_definite_star']).lower()}")
    print(f"  negative-definite (leading minors): {str(rec['negative_definite_minors']).lower()}")
    if rec["rational"] is None and rec["fundamental_cycle"] is None:
        print("  fundamental cycle: undefined (graph is not negative definite)")
        return
    print(f"  fundamental cycle: {' '.join(str(c) for c in rec['fundamental_cycle'])}")
    print(f"  p_a: {rec['pa']}")
    print(f"  rational: {str(rec['rational']).lower()}")
    if rec["l_space"]:
        print("  L-space: true")
    else:
        print("  L-space: unknown (rationality certificate only certifies positives)")


def _cmd_check(args):
    if bool(args.graph) == bool(args.batch):
        return _fail("check needs a graph file or --batch DIR (not both)")
    if args.batch:
        paths = sorted(p for p in Path(args.batch).iterdir() if p.suffix == ".json")
        if not paths:
            return _fail(f"no .json files in {args.batch}")
    else:
        paths = [args.graph]
    records = [_check_one(p) for p in paths]
    if args.json:
        payload = records if args.batch else records[0]
        print(json.dumps(payload, indent=2))
    else:
        for rec in records:
            _print_check(rec)
    return 0


# --------------------------------------------------------------- family

def _cmd_family(args):
    if args.action == "gen":
        fam = _FAMILY_ALIASES.get(args.family)
        if fam is None:
            return _fail(f"unknown family {args.family!r}: use Gamma, Delta or Lambda")
        g = generate(FamilyTag(fam, args.p, args.q, args.r))
        doc = json.dumps(g.to_json_dict(), indent=2)
        if args.out:
            _emit(doc + "\n", args.out)
        if args.json or not args.out:
            if args.json:
                print(doc)
            else:
                legs = "  |  ".join(" ".join(str(w) for w in leg) for leg in g.legs)
                print(f"{fam}({args.p},{args.q},{args.r}): central {g.central}, legs  {legs}")
        return 0
    g = StarPlumbing.from_json_dict(_load_json(args.graph))
    tag = recognize(g)
    if args.json:
        print(json.dumps(tag.to_json_dict() if tag else None, indent=2))
    elif tag:
        print(f"{tag.family}({tag.p},{tag.q},{tag.r})")
    else:
        print("no family match")
    return 0


# -------------------------------------------------------------- seifert

def _cmd_seifert(args):
    if args.action == "to-graph":
        sd = SeifertData.from_json_dict(_load_json(args.seifert))
        g = seifert_to_plumbing(sd)
        doc = json.dumps(g.to_json_dict(), indent=2)
        if args.out:
            _emit(doc + "\n", args.out)
        if args.json:
            print(doc)
        elif not args.out:
            legs = "  |  ".join(" ".join(str(w) for w in leg) for leg in g.legs)
            print(f"central {g.central}, legs  {legs}")
        return 0
    g = StarPlumbing.from_json_dict(_load_json(args.graph))
    sd = plumbing_to_seifert(g)
    doc = json.dumps(sd.to_json_dict(), indent=2)
    if args.out:
        _emit(doc + "\n", args.out)
    if args.json:
        print(doc)
    elif not args.out:
        print(f"e0 {sd.e0}, ratios  " + "  ".join(fraction_to_str(r) for r in sd.ratios))
    return 0


# ------------------------------------------------------------- template

def _parse_areas(args, g):
    lambdas = [[Fraction(1)] * len(leg) for leg in g.legs]
    lambda0 = Fraction(1)
    if args.areas:
        d = _load_json(args.areas)
        if not isinstance(d, dict) or not set(d) <= {"legs", "lambda0"}:
            raise ValueError('areas JSON must be {"legs": [["p/q",...],...], "lambda0": "p/q"}')
        if "legs" in d:
            rows = d["legs"]
            if not isinstance(rows, list) or not all(isinstance(r, list) for r in rows):
                raise ValueError("'legs' in the areas file must be a list of lists")
            lambdas = [[_rational_arg(x, "area") for x in row] for row in rows]
        if "lambda0" in d:
            lambda0 = _rational_arg(d["lambda0"], "lambda0")
    if args.lambda0 is not None:
        lambda0 = fraction_from_str(args.lambda0)
    return lambdas, lambda0


def _cmd_template(args):
    g = StarPlumbing.from_json_dict(_load_json(args.graph))
    lambdas, lambda0 = _parse_areas(args, g)
    u_split = None
    if args.u_split:
        try:
            u_split = [int(tok) for tok in args.u_split.split(",")]
        except ValueError:
            raise ValueError(f"--u-split must be comma-separated integers, got {args.u_split!r}")
    try:
        t = build_template(g, lambdas, lambda0, u_split=u_split)
    except Condition4Error as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    doc = json.dumps(template_to_json_dict(t, g), indent=2)
    if args.out:
        _emit(doc + "\n", args.out)
    if args.json:
        print(doc)
    elif not args.out:
        print(f"template built: {len(t.legs)} leg(s), y0 = {t.y0}, lambda0 = {t.lambda0}, "
              f"u-split {' '.join(str(u) for u in t.u_split)}")
        for i, lt in enumerate(t.legs):
            pts = " ".join(f"({fraction_to_str(x)}, {fraction_to_str(y)})" for x, y in lt.points)
            print(f"  leg {i}: sigma {lt.sigma}, K {lt.K}, points  {pts}")
    return 0


def _verify_loaded(path):
    t, g = template_from_json_dict(_load_json(path))
    lambdas = [lt.lambdas[1:-1] for lt in t.legs]
    return t, g, verify_template(t, g, lambdas, t.lambda0)


def _cmd_verify(args):
    _, _, report = _verify_loaded(args.template)
    if args.json:
        print(json.dumps(report.to_json_dict(), indent=2))
    else:
        for c in report.checks:
            mark = "PASS" if c.ok else "FAIL"
            print(f"{mark} {c.name}: expected {c.expected}, got {c.actual}")
        n = len(report.checks)
        if report.passed:
            print(f"verified: all {n} checks passed")
        else:
            print(f"FAILED {len(report.failed())} of {n} checks")
    return 0 if report.passed else 1


# --------------------------------------------------------------- render

def render_svg(t: Template) -> str:
    """Deterministic SVG of a template: one polyline per leg chain, a
    dashed ray from the origin along each last edge, labeled points.

    Point labels carry the exact rational coordinates; pixel positions
    are decimal approximations (6 significant digits, display only).
    """
    scale = 90.0
    xs = [float(x) for lt in t.legs for x, _ in lt.points] + [0.0]
    ys = [float(y) for lt in t.legs for _, y in lt.points] + [0.0]
    pad = 0.8
    x_lo, x_hi = min(xs) - pad, max(xs) + pad
    y_lo, y_hi = min(ys) - pad, max(ys) + pad

    def fmt(v):
        return f"{v:.6g}"

    def sx(v):
        return fmt((float(v) - x_lo) * scale)

    def sy(v):
        return fmt((y_hi - float(v)) * scale)

    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{fmt((x_hi - x_lo) * scale)}" '
        f'height="{fmt((y_hi - y_lo) * scale)}">',
        f'<line x1="{sx(x_lo)}" y1="{sy(0)}" x2="{sx(x_hi)}" y2="{sy(0)}" '
        'stroke="#bbbbbb" stroke-width="1"/>',
        f'<line x1="{sx(0)}" y1="{sy(y_lo)}" x2="{sx(0)}" y2="{sy(y_hi)}" '
        'stroke="#bbbbbb" stroke-width="1"/>',
    ]
    for i, lt in enumerate(t.legs):
        color = _COLORS[i % len(_COLORS)]
        ex, ey = lt.points[-1]
        out.append(
            f'<line x1="{sx(0)}" y1="{sy(0)}" x2="{sx(float(ex) * 1.25)}" '
            f'y2="{sy(float(ey) * 1.25)}" stroke="{color}" stroke-width="1" '
            'stroke-dasharray="6 4"/>'
        )
        poly = " ".join(f"{sx(x)},{sy(y)}" for x, y in lt.points)
        out.append(f'<polyline points="{poly}" fill="none" stroke="{color}" stroke-width="2"/>')
        for j, (x, y) in enumerate(lt.points):
            out.append(f'<circle cx="{sx(x)}" cy="{sy(y)}" r="3" fill="{color}"/>')
            out.append(
                f'<text x="{fmt(float(sx(x)) + 5)}" y="{fmt(float(sy(y)) - 5)}" '
                f'font-size="11" font-family="sans-serif" fill="{color}">'
                f'P{i},{j} = ({fraction_to_str(x)}, {fraction_to_str(y)})</text>'
            )
    out.append(f'<circle cx="{sx(0)}" cy="{sy(0)}" r="3" fill="#333333"/>')
    out.append(f'<text x="{fmt(float(sx(0)) + 5)}" y="{fmt(float(sy(0)) + 14)}" '
               'font-size="11" font-family="sans-serif" fill="#333333">O</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


def _cmd_render(args):
    t, _, report = _verify_loaded(args.template)
    if not report.passed:
        bad = ", ".join(c.name for c in report.failed())
        print(f"check failed: template does not verify ({bad}); refusing to render",
              file=sys.stderr)
        return 1
    _emit(render_svg(t), args.out)
    return 0


# --------------------------------------------------------------- driver

def _nonneg(v):
    n = int(v)
    if n < 0:
        raise argparse.ArgumentTypeError("must be nonnegative")
    return n


def _parser():
    ap = argparse.ArgumentParser(
        prog="starplumb",
        description="Star-shaped plumbing graphs: definiteness, Seifert data, "
                    "family recognition, moment-polygon templates, rationality.",
    )
    sub = ap.add_subparsers(dest="cmd", required=True)

    c = sub.add_parser("check", help="definiteness tests, fundamental cycle, rationality")
    c.add_argument("graph", nargs="?", help="graph JSON file")
    c.add_argument("--batch", metavar="DIR", help="check every .json file in DIR (sorted)")
    c.add_argument("--json", action="store_true", help="machine-readable output")

    f = sub.add_parser("family", help="generate or identify family graphs")
    fsub = f.add_subparsers(dest="action", required=True)
    fg = fsub.add_parser("gen", help="emit the graph of a (family, p, q, r) tag")
    fg.add_argument("family", help="Gamma, Delta or Lambda (unicode letters accepted)")
    fg.add_argument("p", type=_nonneg)
    fg.add_argument("q", type=_nonneg)
    fg.add_argument("r", type=_nonneg)
    fg.add_argument("--json", action="store_true")
    fg.add_argument("-o", "--out", help="write graph JSON here")
    fi = fsub.add_parser("id", help="recognize a graph file as a family member")
    fi.add_argument("graph")
    fi.add_argument("--json", action="store_true")

    s = sub.add_parser("seifert", help="convert between Seifert data and graphs")
    ssub = s.add_subparsers(dest="action", required=True)
    s2g = ssub.add_parser("to-graph", help="Seifert JSON to graph")
    s2g.add_argument("seifert")
    s2g.add_argument("--json", action="store_true")
    s2g.add_argument("-o", "--out")
    g2s = ssub.add_parser("from-graph", help="graph JSON to Seifert data")
    g2s.add_argument("graph")
    g2s.add_argument("--json", action="store_true")
    g2s.add_argument("-o", "--out")

    t = sub.add_parser("template", help="build a moment-polygon template")
    tsub = t.add_subparsers(dest="action", required=True)
    tb = tsub.add_parser("build", help="build and solve the template of a graph")
    tb.add_argument("graph")
    tb.add_argument("--areas", metavar="FILE",
                    help='areas JSON {"legs": [["p/q",...],...], "lambda0": "p/q"}; default all 1')
    tb.add_argument("--lambda0", metavar="P/Q", help="central area over 2 pi (overrides the file)")
    tb.add_argument("--u-split", metavar="U1,U2,...",
                    help="integers summing to -central, one per leg")
    tb.add_argument("--json", action="store_true")
    tb.add_argument("-o", "--out", help="write template JSON here")

    v = sub.add_parser("verify", help="re-check every condition of a template file")
    v.add_argument("template")
    v.add_argument("--json", action="store_true")

    r = sub.add_parser("render", help="SVG picture of a verified template")
    r.add_argument("template")
    r.add_argument("-o", "--out", help="write SVG here (default stdout)")

    return ap


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else int(e.code)
    dispatch = {
        "check": _cmd_check,
        "family": _cmd_family,
        "seifert": _cmd_seifert,
        "template": _cmd_template,
        "verify": _cmd_verify,
        "render": _cmd_render,
    }
    try:
        return dispatch[args.cmd](args)
    except Condition4Error as e:
        print(f"check failed: {e}", file=sys.stderr)
        return 1
    except ValueError as e:
        return _fail(str(e))


if __name__ == "__main__":
    sys.exit(main())
