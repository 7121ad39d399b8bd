"""Command-line interface.

Exit codes: 0 success, 2 parse/usage error, 3 internal consistency failure.
All output is deterministic: JSON uses sorted keys and fixed separators.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .cut import AmountTooLargeError, NoOpCutError, blowup_corner, cut_polyhedron
from .foliation import DEFAULT_TOL, classify_leaves
from .gale import (
    augment_ghosts,
    chamber_from_triangulation,
    gale_dual,
    is_balanced,
    is_odd,
    is_polytopal,
    relation_basis,
)
from .jsonio import (
    fan_to_json,
    leaf_report_to_json,
    matrix_to_json,
    point_config_to_json,
    polyhedron_from_json,
    polyhedron_to_json,
    cut_result_to_json,
    vec_to_json,
    vector_config_from_json,
    vector_config_to_json,
)
from .pipeline import (
    PipelineInconsistency,
    build_report,
    hirzebruch_vector_config,
    trapezoid,
    triangulation_from_fan,
)
from .fan import normal_fan
from .polyhedron import InfeasibleRegionError, NotPointedError
from .quasilattice import hirzebruch_quasilattice, z2
from .scalar import ParamSpec, Q, parse_scalar
from .svg import chamber_figure, polytope_figure


def _dump(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n"


def _tol(args) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("QUASITORIC_TOL")
    return float(env) if env else DEFAULT_TOL


def _param(text: str) -> ParamSpec:
    return ParamSpec(parse_scalar(text))


def _write_svg(directory: str, name: str, content: str):
    os.makedirs(directory, exist_ok=True)
    path = os.path.join(directory, name)
    with open(path, "w") as f:
        f.write(content)


def cmd_report(args) -> int:
    a = _param(args.a)
    doc = build_report(a)
    sys.stdout.write(_dump(doc.to_json()))
    if args.svg_dir:
        _write_svg(args.svg_dir, "polytope.svg", polytope_figure(doc.polytope, doc.fan))
        _write_svg(
            args.svg_dir,
            "chamber.svg",
            chamber_figure(doc.gale_points, doc.chamber, doc.polytopal_witness),
        )
    return 0


def cmd_normal_fan(args) -> int:
    if args.a is not None:
        p = trapezoid(_param(args.a))
    else:
        p = polyhedron_from_json(json.load(sys.stdin))
    fan = normal_fan(p)
    sys.stdout.write(_dump(fan_to_json(fan)))
    if args.svg_dir:
        _write_svg(args.svg_dir, "fan.svg", polytope_figure(p, fan))
    return 0


def cmd_gale_dual(args) -> int:
    if args.a is not None:
        vc = hirzebruch_vector_config(_param(args.a))
    else:
        vc = augment_ghosts(vector_config_from_json(json.load(sys.stdin)))
    rows = relation_basis(vc)
    lam = gale_dual(vc)
    out = {
        "vector_config": vector_config_to_json(vc),
        "balanced": is_balanced(vc),
        "odd": is_odd(vc),
        "relation_matrix": matrix_to_json(rows),
        "gale_points": point_config_to_json(lam),
    }
    if args.a is not None:
        a = _param(args.a)
        fan = normal_fan(trapezoid(a))
        chamber = chamber_from_triangulation(triangulation_from_fan(fan), len(vc))
        polytopal, witness = is_polytopal(lam, chamber)
        out["polytopal"] = polytopal
        out["witness"] = vec_to_json(witness) if witness else None
        if args.svg_dir:
            _write_svg(args.svg_dir, "chamber.svg", chamber_figure(lam, chamber, witness))
    sys.stdout.write(_dump(out))
    return 0


def cmd_cut(args) -> int:
    p = polyhedron_from_json(json.load(sys.stdin))
    nu = (parse_scalar(args.nu_x), parse_scalar(args.nu_y))
    c = parse_scalar(args.level)
    q = hirzebruch_quasilattice(_param(args.a)) if args.a is not None else z2()
    result = cut_polyhedron(p, q, nu, c)
    sys.stdout.write(_dump(cut_result_to_json(result)))
    if args.svg_dir:
        face = result.reduced_face
        if len(face.vertices) >= 2:
            seg = (face.vertices[0], face.vertices[-1])
        else:
            seg = (face.vertices[0], face.vertices[0])
        _write_svg(args.svg_dir, "cut.svg", polytope_figure(p, cut_line=seg))
    return 0


def cmd_blowup(args) -> int:
    p = polyhedron_from_json(json.load(sys.stdin))
    vertex = (parse_scalar(args.vx), parse_scalar(args.vy))
    nu = (parse_scalar(args.nu_x), parse_scalar(args.nu_y))
    out = blowup_corner(p, vertex, nu, parse_scalar(args.amount))
    sys.stdout.write(_dump(polyhedron_to_json(out)))
    if args.svg_dir:
        _write_svg(args.svg_dir, "blowup.svg", polytope_figure(out))
    return 0


def cmd_classify_leaves(args) -> int:
    report = classify_leaves(_param(args.a))
    sys.stdout.write(_dump(leaf_report_to_json(report)))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quasitoric",
        description="Generalized Hirzebruch surfaces: polytopes, Gale duals, "
        "cuts, and foliations with exact arithmetic.",
    )
    parser.add_argument("--tol", type=float, default=None,
                        help="floating-point tolerance (default env QUASITORIC_TOL or 1e-9)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("report", help="full pipeline report for a parameter a")
    p.add_argument("a", help="parameter, e.g. '2', '3/2', 'sqrt(2)', '1+sqrt(2)'")
    p.add_argument("--svg-dir", default=None)
    p.set_defaults(func=cmd_report)

    p = sub.add_parser("normal-fan", help="normal fan of the trapezoid P_a or of a JSON polyhedron on stdin")
    p.add_argument("--a", default=None)
    p.add_argument("--svg-dir", default=None)
    p.set_defaults(func=cmd_normal_fan)

    p = sub.add_parser("gale-dual", help="relation matrix and dual points for V_a or a JSON config on stdin")
    p.add_argument("--a", default=None)
    p.add_argument("--svg-dir", default=None)
    p.set_defaults(func=cmd_gale_dual)

    p = sub.add_parser("cut", help="cut a JSON polyhedron (stdin) along <mu,nu> = level")
    p.add_argument("nu_x")
    p.add_argument("nu_y")
    p.add_argument("level")
    p.add_argument("--a", default=None, help="tag the quasilattice Q_a instead of Z^2")
    p.add_argument("--svg-dir", default=None)
    p.set_defaults(func=cmd_cut)

    p = sub.add_parser("blowup", help="chop the corner of a JSON polyhedron (stdin)")
    p.add_argument("vx")
    p.add_argument("vy")
    p.add_argument("nu_x")
    p.add_argument("nu_y")
    p.add_argument("amount")
    p.add_argument("--svg-dir", default=None)
    p.set_defaults(func=cmd_blowup)

    p = sub.add_parser("classify-leaves", help="leaf classification of the foliation for a")
    p.add_argument("a")
    p.set_defaults(func=cmd_classify_leaves)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 2 if e.code not in (0, None) else 0
    try:
        return args.func(args)
    except PipelineInconsistency as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (InfeasibleRegionError, NotPointedError, NoOpCutError, AmountTooLargeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, json.JSONDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
