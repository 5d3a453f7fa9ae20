"""Command line frontend.

    delzant <command> [flags] FILE

Commands: validate, faces, volume-poly, count, ehrhart, khovanskii,
boundary-formula, hilbert-cy, cross-check.  Reports go to stdout (text,
json, or tsv per --output); diagnostics go to stderr.  Exit codes are
documented in errors.py and in the README.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .counting import DEFAULT_BUDGET, count_points, count_report, ehrhart_interpolate
from .errors import DelzantError, FormulaViolationError, NotDelzantError
from .hilbert import cross_check, cy_hilbert_polynomial
from .operators import (
    boundary_count_formula,
    khovanskii_count,
    operator_applied_polynomial,
    symbolic_ehrhart,
)
from .polyfile import parse_polytope_file
from .polytope import build_face_lattice, enumerate_vertices, validate_delzant
from .volume import boundary_volume_polynomial, volume_polynomial

BUDGET_ENV = "DELZANT_BUDGET"

EXIT_OK = 0
EXIT_UNEXPECTED = 1
EXIT_USAGE = 2


def _face_key_text(active_set) -> str:
    return "{" + ",".join(str(i + 1) for i in active_set) + "}"


def _parse_region(text: str):
    """--region full|interior|boundary|face=1,2 (facet numbers are 1-based)."""
    if text in ("full", "interior", "boundary"):
        return text, None
    if text.startswith("face="):
        try:
            indices = tuple(sorted(int(tok) - 1 for tok in text[5:].split(",")))
        except ValueError:
            raise argparse.ArgumentTypeError(f"bad face index list in {text!r}")
        if not indices or any(i < 0 for i in indices):
            raise argparse.ArgumentTypeError(f"bad face index list in {text!r}")
        return "face", indices
    raise argparse.ArgumentTypeError(
        f"unknown region {text!r}; use full, interior, boundary, or face=1,2"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="delzant",
        description="Exact lattice point counts and Hilbert polynomials "
        "for Delzant polytopes.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, **kwargs):
        p = sub.add_parser(name, help=help_text, **kwargs)
        p.add_argument("file", help="polytope file ('-' reads stdin)")
        p.add_argument(
            "--output",
            choices=("text", "json", "tsv"),
            default="text",
            help="report format (default text)",
        )
        p.add_argument(
            "--normalize",
            action="store_true",
            help="divide non-primitive normals by their gcd when the offset allows",
        )
        p.add_argument(
            "--budget",
            type=int,
            default=None,
            help=f"max points to classify (default {DEFAULT_BUDGET}, "
            f"env {BUDGET_ENV})",
        )
        return p

    add("validate", "check the Delzant condition at every vertex")
    add("faces", "list the face lattice")
    add("volume-poly", "volume and boundary-volume polynomials in the offsets")

    p = add("count", "count lattice points of the k-fold dilate")
    p.add_argument("--k", type=int, default=1, help="dilation factor (default 1)")
    p.add_argument(
        "--region",
        type=_parse_region,
        default=("full", None),
        help="full, interior, boundary, or face=1,2 (default full)",
    )

    p = add("ehrhart", "Ehrhart polynomial in the dilation factor")
    p.add_argument(
        "--kind",
        choices=("full", "interior", "boundary"),
        default="full",
        help="which count the polynomial tracks (default full)",
    )
    p.add_argument(
        "--method",
        choices=("interpolate", "operator"),
        default="interpolate",
        help="brute-force interpolation or the operator route (default interpolate)",
    )

    add("khovanskii", "lattice point count via the Todd operator formula")
    add("boundary-formula", "boundary point count via the A-hat operator formula")
    add("hilbert-cy", "boundary Hilbert polynomial, three ways, with agreement check")
    add("cross-check", "run every identity in the package against the input")
    return parser


def _load_spec(args):
    if args.file == "-":
        text = sys.stdin.read()
    else:
        with open(args.file, "r", encoding="utf-8") as handle:
            text = handle.read()
    return parse_polytope_file(text, normalize=args.normalize)


def _budget(args) -> int:
    if args.budget is not None:
        return args.budget
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        return int(env)
    return DEFAULT_BUDGET


def _polytope_json(spec) -> dict:
    return {
        "name": spec.name,
        "dim": spec.dim,
        "facets": [
            {"normal": list(normal), "offset": offset}
            for normal, offset in spec.facets
        ],
    }


def _emit(args, payload: dict, text_lines: list[str], tsv_rows: list[tuple]) -> None:
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    elif args.output == "tsv":
        for row in tsv_rows:
            print("\t".join(str(x) for x in row))
    else:
        for line in text_lines:
            print(line)


def _require_delzant(spec):
    charts = enumerate_vertices(spec)
    report = validate_delzant(spec, charts)
    if not report.ok:
        raise NotDelzantError(report)
    return charts


def cmd_validate(args, spec) -> int:
    charts = enumerate_vertices(spec)
    report = validate_delzant(spec, charts)
    payload = {
        "command": "validate",
        "polytope": _polytope_json(spec),
        "delzant": report.ok,
        "vertices": len(charts),
        "failures": [
            {
                "active_set": [i + 1 for i in f.active_set],
                "vertex": [str(c) for c in f.anchor],
                "det": f.det,
            }
            for f in report.failures
        ],
    }
    lines = [f"vertices: {len(charts)}", f"delzant: {'pass' if report.ok else 'fail'}"]
    rows = [("delzant", "pass" if report.ok else "fail"), ("vertices", len(charts))]
    for f in report.failures:
        coords = ", ".join(str(c) for c in f.anchor)
        lines.append(f"vertex ({coords}): det {f.det} != +-1")
        rows.append(("failure", f"({coords})", f.det))
    _emit(args, payload, lines, rows)
    return EXIT_OK if report.ok else NotDelzantError.exit_code


def cmd_faces(args, spec) -> int:
    charts = _require_delzant(spec)
    lattice = build_face_lattice(spec, charts)
    records = sorted(
        lattice.faces.values(), key=lambda r: (-r.dim, r.active_set)
    )
    payload = {
        "command": "faces",
        "polytope": _polytope_json(spec),
        "euler_sum": lattice.euler_sum(),
        "faces": [
            {
                "active_set": [i + 1 for i in rec.active_set],
                "dim": rec.dim,
                "vertices": [list(c.anchor_ints()) for c in rec.charts],
            }
            for rec in records
        ],
    }
    by_dim: dict[int, int] = {}
    for rec in records:
        by_dim[rec.dim] = by_dim.get(rec.dim, 0) + 1
    profile = ", ".join(f"{by_dim[d]} of dim {d}" for d in sorted(by_dim))
    lines = [f"faces: {len(records)} ({profile})"]
    rows = []
    for rec in records:
        label = _face_key_text(rec.active_set) if rec.active_set else "{}"
        vertices = " ".join(str(c.anchor_ints()) for c in rec.charts)
        lines.append(f"F {label}: dim {rec.dim}, vertices {vertices}")
        rows.append((label, rec.dim, len(rec.charts)))
    _emit(args, payload, lines, rows)
    return EXIT_OK


def cmd_volume_poly(args, spec) -> int:
    charts = _require_delzant(spec)
    lattice = build_face_lattice(spec, charts)
    vol = volume_polynomial(spec, lattice)
    boundary = boundary_volume_polynomial(vol)
    at_anchor = vol.poly.evaluate(spec.offsets())
    boundary_at_anchor = boundary.poly.evaluate(spec.offsets())
    payload = {
        "command": "volume-poly",
        "polytope": _polytope_json(spec),
        "volume": vol.poly.to_text(),
        "volume_at_anchor": str(at_anchor),
        "boundary_volume": boundary.poly.to_text(),
        "boundary_volume_at_anchor": str(boundary_at_anchor),
        "per_facet": [p.to_text() for p in boundary.per_facet],
    }
    lines = [
        f"volume: {vol.poly.to_text()}",
        f"volume at anchor: {at_anchor}",
        f"boundary volume: {boundary.poly.to_text()}",
        f"boundary volume at anchor: {boundary_at_anchor}",
    ]
    rows = [
        ("volume", vol.poly.to_text()),
        ("volume_at_anchor", at_anchor),
        ("boundary_volume", boundary.poly.to_text()),
        ("boundary_volume_at_anchor", boundary_at_anchor),
    ]
    for i, p in enumerate(boundary.per_facet, start=1):
        lines.append(f"facet {i}: {p.to_text()}")
        rows.append((f"facet_{i}", p.to_text()))
    _emit(args, payload, lines, rows)
    return EXIT_OK


def cmd_count(args, spec) -> int:
    charts = _require_delzant(spec)
    region, face = args.region
    value = count_points(
        spec, args.k, region, face=face, budget=_budget(args), charts=charts
    )
    region_text = region if face is None else "face=" + ",".join(
        str(i + 1) for i in face
    )
    payload = {
        "command": "count",
        "polytope": _polytope_json(spec),
        "k": args.k,
        "region": region_text,
        "count": value,
    }
    if args.output == "json":
        # the JSON report mirrors the full CountReport, not just the one region
        lattice = build_face_lattice(spec, charts)
        report = count_report(
            spec, lattice, args.k, budget=_budget(args), charts=charts
        )
        payload.update(
            total=report.total,
            interior=report.interior,
            boundary=report.boundary,
            per_face=[
                {"active_set": [i + 1 for i in key], "count": report.per_face[key]}
                for key in sorted(report.per_face)
            ],
        )
    _emit(args, payload, [str(value)], [("k", args.k), ("region", region_text), ("count", value)])
    return EXIT_OK


def cmd_ehrhart(args, spec) -> int:
    charts = _require_delzant(spec)
    applied_text = None
    if args.method == "operator":
        if args.kind == "interior":
            print(
                "error: --method operator supports kinds full and boundary only",
                file=sys.stderr,
            )
            return EXIT_USAGE
        lattice = build_face_lattice(spec, charts)
        vol = volume_polynomial(spec, lattice)
        result = symbolic_ehrhart(spec, vol, args.kind)
        applied_text = operator_applied_polynomial(spec, vol, args.kind).to_text()
    else:
        result = ehrhart_interpolate(
            spec, args.kind, budget=_budget(args), charts=charts
        )
    payload = {
        "command": "ehrhart",
        "polytope": _polytope_json(spec),
        "kind": args.kind,
        "method": args.method,
        "polynomial": result.to_text(),
        "coefficients": [str(c) for c in result.poly.coeffs],
        "operator_applied": applied_text,
    }
    lines = [f"{args.kind} Ehrhart: {result.to_text()}"]
    rows = [("kind", args.kind), ("method", args.method), ("polynomial", result.to_text())]
    _emit(args, payload, lines, rows)
    return EXIT_OK


def _cmd_operator_count(args, spec, kind: str) -> int:
    charts = _require_delzant(spec)
    lattice = build_face_lattice(spec, charts)
    vol = volume_polynomial(spec, lattice)
    if kind == "full":
        value = khovanskii_count(spec, vol)
        command = "khovanskii"
    else:
        value = boundary_count_formula(spec, vol)
        command = "boundary-formula"
    applied = operator_applied_polynomial(spec, vol, kind)
    payload = {
        "command": command,
        "polytope": _polytope_json(spec),
        "count": value,
        "operator_applied": applied.to_text(),
    }
    _emit(
        args,
        payload,
        [str(value)],
        [("count", value), ("operator_applied", applied.to_text())],
    )
    return EXIT_OK


def cmd_hilbert_cy(args, spec) -> int:
    report = cy_hilbert_polynomial(spec, budget=_budget(args))
    per_face = [
        {
            "active_set": [i + 1 for i in key],
            "dim": spec.dim - len(key),
            "polynomial": report.per_face[key].to_text(),
        }
        for key in sorted(report.per_face)
    ]
    payload = {
        "command": "hilbert-cy",
        "polytope": _polytope_json(spec),
        "agree": report.agree,
        "by_inclusion_exclusion": report.by_inclusion_exclusion.to_text(),
        "by_operator_formula": report.by_operator_formula.to_text(),
        "by_oracle": report.by_oracle.to_text(),
        "per_face": per_face,
    }
    lines = [
        f"boundary Ehrhart: {report.by_oracle.to_text()}",
        "agreement: inclusion-exclusion, operator, and oracle routes all equal",
    ]
    rows = [
        ("boundary_ehrhart", report.by_oracle.to_text()),
        ("agree", report.agree),
    ]
    for key in sorted(report.per_face):
        lines.append(f"face {_face_key_text(key)}: {report.per_face[key].to_text()}")
        rows.append((f"face {_face_key_text(key)}", report.per_face[key].to_text()))
    _emit(args, payload, lines, rows)
    return EXIT_OK


def cmd_cross_check(args, spec) -> int:
    report = cross_check(spec, budget=_budget(args))
    payload = {
        "command": "cross-check",
        "polytope": _polytope_json(spec),
        "ok": report.ok,
        "checks": [
            {"name": c.name, "ok": c.ok, "detail": c.detail} for c in report.checks
        ],
    }
    lines = [
        f"{c.name}: {'pass' if c.ok else 'FAIL'} ({c.detail})" for c in report.checks
    ]
    passed = sum(1 for c in report.checks if c.ok)
    lines.append(f"cross-check: {passed}/{len(report.checks)} checks passed")
    rows = [(c.name, "pass" if c.ok else "fail", c.detail) for c in report.checks]
    _emit(args, payload, lines, rows)
    return EXIT_OK if report.ok else FormulaViolationError.exit_code


COMMANDS = {
    "validate": cmd_validate,
    "faces": cmd_faces,
    "volume-poly": cmd_volume_poly,
    "count": cmd_count,
    "ehrhart": cmd_ehrhart,
    "khovanskii": lambda args, spec: _cmd_operator_count(args, spec, "full"),
    "boundary-formula": lambda args, spec: _cmd_operator_count(args, spec, "boundary"),
    "hilbert-cy": cmd_hilbert_cy,
    "cross-check": cmd_cross_check,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        spec = _load_spec(args)
        return COMMANDS[args.command](args, spec)
    except DelzantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_UNEXPECTED


if __name__ == "__main__":
    sys.exit(main())
