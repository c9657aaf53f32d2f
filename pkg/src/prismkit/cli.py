"""
Command-line front end.

Exit status: 0 on success, 1 when a predicate subcommand (``special``,
``decide-horizontal``) answers no, 2 on unreadable or invalid input.
Reports are ``key: value`` lines, or one JSON document with ``--json``.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import io
from .builders import BuildError, involution_bundle, mapping_torus, prismify
from .fibration import FibrationError, NotSpecial, classify_circuits, extract_fibration, horizontal_surface
from .manifold3 import is_simplicial3, validate3
from .prism import Failure, complex_stats, is_special, validate_prism_complex
from .report import InvalidInput
from .seifert import (
    build_slope_curves,
    decide_horizontal,
    euler_number,
    extension_rectangle,
    extension_surface,
    pn_closure_check,
)
from .surface import NotAnAutomorphism


def _edge_text(edge) -> str:
    return "-".join(f"({c},{lv})" for c, lv in sorted(edge))


def _face_text(face) -> str:
    return {("h", 0): "bot", ("h", 1): "top"}.get(face, f"v{face[1]}")


def _failure(f: Failure) -> dict:
    prism, part = f.where
    out = {"condition": f.condition, "prism": prism}
    if isinstance(part, frozenset):
        out["edge"] = _edge_text(part)
    else:
        out["face"] = _face_text(part)
    if f.incidence is not None:
        out["incidence"] = f.incidence
    return out


def _failure_text(d: dict) -> str:
    text = f"{d['condition']} at prism {d['prism']} " + (f"edge {d['edge']}" if "edge" in d else f"face {d['face']}")
    return text + (f" (incidence {d['incidence']})" if "incidence" in d else "")


def _plain(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple)):
        return " ".join(_plain(v) for v in value) if value else "-"
    if isinstance(value, dict):
        return " ".join(f"{k}={_plain(v)}" for k, v in value.items())
    return str(value)


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    return value


def emit(args, report: dict, out=None) -> None:
    out = out or sys.stdout
    if args.json:
        json.dump(_jsonable(report), out, sort_keys=True, indent=2)
        out.write("\n")
        return
    for key, value in report.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            for n, item in enumerate(value):
                out.write(f"{key}[{n}]: {_plain(item)}\n")
        elif key == "e":
            out.write(f"e = {value}\n")
        else:
            out.write(f"{key}: {_plain(value)}\n")


def _write_complex(args, text: str) -> None:
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load(parse, path):
    text, source = io.read_text(path)
    return parse(text, source)


def _load_complex(path):
    c = _load(io.parse_prism, path)
    report = validate_prism_complex(c)
    if not report.ok:
        raise InvalidInput(f"prism complex in {path}", report)
    return c


def cmd_validate3(args) -> int:
    t = _load(io.parse_tri3, args.file)
    report = validate3(t, strict_links=args.strict_links)
    out = {"valid": report.ok, "tetrahedra": t.size}
    out.update({k: v for k, v in sorted(report.details.items())})
    if report.ok:
        out["simplicial"] = is_simplicial3(t)
    out["violations"] = [str(v) for v in report.violations]
    emit(args, out)
    return 0 if report.ok else 2


def cmd_prismify(args) -> int:
    t = _load(io.parse_tri3, args.file)
    report = validate3(t, strict_links=args.strict_links)
    if not report.ok:
        raise InvalidInput(f"triangulation in {args.file}", report)
    _write_complex(args, io.format_prism(prismify(t)))
    return 0


def cmd_mapping_torus(args) -> int:
    t = _load(io.parse_surface, args.surface)
    f = io.complete_map(_load(io.parse_map, args.map), t)
    _write_complex(args, io.format_prism(mapping_torus(t, f)))
    return 0


def cmd_involution_bundle(args) -> int:
    t = _load(io.parse_surface, args.surface)
    psi0 = io.complete_map(_load(io.parse_map, args.map0), t)
    psi1 = io.complete_map(_load(io.parse_map, args.map1), t)
    _write_complex(args, io.format_prism(involution_bundle(t, psi0, psi1)))
    return 0


def cmd_validate_prism(args) -> int:
    c = _load(io.parse_prism, args.file)
    report = validate_prism_complex(c)
    out = {"valid": report.ok, "prisms": c.size}
    if report.ok:
        out["edge_classes"] = len(report.details["edge_classes"])
    out["violations"] = [str(v) for v in report.violations]
    emit(args, out)
    return 0 if report.ok else 2


def cmd_special(args) -> int:
    cert = is_special(_load_complex(args.file))
    out = {"special": cert.special}
    if not cert.special:
        out["witness"] = _failure_text(_failure(cert.witness))
        if args.certificate:
            out["failures"] = [_failure(f) for f in cert.failures]
    emit(args, out)
    return 0 if cert.special else 1


def _stats_report(c) -> dict:
    s = complex_stats(c)
    hist = {f"{kind}/{where}/{inc}": count for (kind, where, inc), count in s.edge_class_histogram.items()}
    return {
        "prisms": s.prisms,
        "horizontal_faces_glued": s.horizontal_faces_glued,
        "horizontal_faces_unglued": s.horizontal_faces_unglued,
        "vertical_faces_glued": s.vertical_faces_glued,
        "vertical_faces_unglued": s.vertical_faces_unglued,
        "boundary_present": s.boundary_present,
        "edge_class_histogram": hist,
    }


def cmd_stats(args) -> int:
    c = _load_complex(args.file)
    out = _stats_report(c)
    if args.certificate:
        cert = is_special(c)
        out["special"] = cert.special
        out["failures"] = [_failure(f) for f in cert.failures]
    emit(args, out)
    return 0


def _stats_dict(s) -> dict:
    return {
        "euler_characteristic": s.euler_characteristic,
        "orientable": s.orientable,
        "boundary_components": s.boundary_components,
        "components": s.components,
    }


def cmd_fiber(args) -> int:
    fb = extract_fibration(_load_complex(args.file))
    hs = horizontal_surface(fb)
    out = {
        "n": fb.n,
        "fiber_lengths": fb.fiber_lengths(),
        "fibers": [
            {"length": f.length, "edge_classes": list(f.edge_classes), "vertex_classes": list(f.vertex_classes)}
            for f in fb.vertex_fibers
        ],
        "circuits": [
            {"prisms": list(cc.circuit), "return_map": list(cc.return_map), "topology": cc.topology}
            for cc in classify_circuits(fb)
        ],
        "surface": _stats_dict(hs.stats),
        "surface_components": [_stats_dict(s) for s in hs.component_stats],
    }
    emit(args, out)
    return 0


def cmd_euler(args) -> int:
    e = euler_number(_load(io.parse_params, args.params))
    emit(args, {"e": e})
    return 0


def cmd_decide_horizontal(args) -> int:
    d = decide_horizontal(_load(io.parse_params, args.params))
    out = {"horizontal": d.exists, "reason": d.reason}
    if d.euler is not None:
        out["e"] = d.euler
    emit(args, out)
    return 0 if d.exists else 1


def cmd_curves(args) -> int:
    cs = build_slope_curves(args.p, args.q, args.k)
    out = {
        "n": cs.n,
        "components": len(cs.components),
        "meets_longitude": cs.meets_longitude,
        "meets_meridian": cs.meets_meridian,
        "slope": cs.slope,
        "curves": [
            {"residues_on_longitude": sorted(pt.residue for pt in comp if (pt.segment, pt.step) == ("alpha", 0))}
            for comp in cs.components
        ],
    }
    emit(args, out)
    return 0


def cmd_pn_check(args) -> int:
    emit(args, pn_closure_check(args.n))
    return 0


def _residues(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma separated integers, got {text!r}") from None


def _trace(surface) -> list[str]:
    return [",".join(map(str, sorted(step))) for step in surface.boundary_trace]


def cmd_extension(args) -> int:
    r = extension_rectangle(args.gamma, args.n)
    emit(args, {"kind": r.kind, "n": r.n, "cells": len(r.cells), "boundary_trace": _trace(r)})
    return 0


def cmd_extension2(args) -> int:
    s = extension_surface(args.lam, args.n, twisted=args.twisted, laps=args.laps)
    out = {
        "kind": s.kind,
        "n": s.n,
        "classification": s.classification,
        "boundary_components": s.boundary_components,
        "cells": len(s.cells),
        "boundary_trace": _trace(s),
    }
    emit(args, out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one JSON document")
    common.add_argument(
        "--strict-links",
        action="store_true",
        default=os.environ.get("PRISMKIT_STRICT") == "1",
        help="also check edge links of 3-dimensional triangulations (PRISMKIT_STRICT=1)",
    )
    common.add_argument("--certificate", action="store_true", help="list every failure, not just the witness")

    parser = argparse.ArgumentParser(prog="prismkit", description="Prism complexes and Seifert fibred spaces.")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, func, help):
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("validate3", cmd_validate3, "check a tetrahedral triangulation")
    p.add_argument("file")
    p = add("prismify", cmd_prismify, "prism complex structure of a triangulated 3-manifold")
    p.add_argument("file")
    p.add_argument("-o", "--output")
    p = add("mapping-torus", cmd_mapping_torus, "special prism complex of a mapping torus")
    p.add_argument("surface")
    p.add_argument("map")
    p.add_argument("-o", "--output")
    p = add("involution-bundle", cmd_involution_bundle, "special prism complex of a pair of free involutions")
    p.add_argument("surface")
    p.add_argument("map0")
    p.add_argument("map1")
    p.add_argument("-o", "--output")
    for name, func, help in (
        ("validate-prism", cmd_validate_prism, "check a prism complex"),
        ("special", cmd_special, "is the prism complex special?"),
        ("stats", cmd_stats, "face and edge class counts"),
        ("fiber", cmd_fiber, "circle fibration of a special prism complex"),
    ):
        add(name, func, help).add_argument("file")
    for name, func, help in (
        ("euler", cmd_euler, "Euler number of a closed fibration"),
        ("decide-horizontal", cmd_decide_horizontal, "does a horizontal surface exist?"),
    ):
        add(name, func, help).add_argument("--params", required=True)
    p = add("curves", cmd_curves, "disjoint curves of slope q/p on the boundary torus")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-q", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p = add("pn-check", cmd_pn_check, "closure of P(n) under reflection and antipode")
    p.add_argument("-n", type=int, required=True)
    p = add("extension", cmd_extension, "horizontal rectangle over an arc")
    p.add_argument("--gamma", type=_residues, required=True, help="residues, comma separated")
    p.add_argument("-n", type=int, required=True)
    p = add("extension2", cmd_extension2, "horizontal annulus or Mobius strip over a closed curve")
    p.add_argument("--lambda", dest="lam", type=_residues, required=True, help="residues, comma separated")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--twisted", action="store_true")
    p.add_argument("--laps", type=int, default=1, help="times the curve winds around the base circle")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (io.FormatError, InvalidInput, BuildError, NotAnAutomorphism, NotSpecial, FibrationError, ValueError) as exc:
        print(f"prismkit {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
