"""Command-line front end.

Subcommands: verify, scan, desingularize, subdivide, suspend, family,
complex, certify.  Fan arguments accept a path to a fan document or one of
the builtin names "barnette" (the embedded singular fan over the Barnette
sphere) and "desingularized" (its smooth refinement, always recomputed by
the subdivision pipeline, never shipped).  Exit codes: 0 success, 1
verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys
import time
from pathlib import Path

from . import barnette, io
from .complexes import (
    f_vector,
    link,
    star,
    underlying_complex,
    verify_barnette_obstruction,
)
from .errors import FankitError, ParseError
from .fan import Fan, smoothness_report, verify_completeness
from .polytopality import certify_realization
from .scan import default_workers, scan_box
from .subdivide import desingularize_barnette, generate_family, stellar_subdivide, suspend_fan

BUILTIN_FANS = ("barnette", "desingularized")


def _resolve_fan(source: str) -> tuple[Fan, str, str]:
    """Fan plus (name, sha256-of-canonical-document) for the inputs digest."""
    if source in BUILTIN_FANS and not Path(source).exists():
        if source == "barnette":
            fan = barnette.barnette_fan()
        else:
            fan, _ = desingularize_barnette()
        digest = io.bytes_digest(
            io.dumps_canonical(io.fan_to_document(fan, name=source)).encode()
        )
        return fan, source, digest
    fan = io.load_fan(source)
    return fan, source, io.file_digest(source)


def _parse_point(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ParseError(f"bad point {text!r}: expected comma-separated integers") from None


def _parse_labels(text: str) -> tuple[str, ...]:
    labels = tuple(part.strip() for part in text.split(",") if part.strip())
    if not labels:
        raise ParseError(f"bad label list {text!r}")
    return labels


def _report(command: str, inputs: dict, results: dict, verdict: bool, started: float) -> dict:
    return {
        "schema": io.REPORT_SCHEMA,
        "command": command,
        "inputs": inputs,
        "results": results,
        "verdict": verdict,
        "timing_seconds": round(time.perf_counter() - started, 6),
    }


def _emit(report: dict, fmt: str, lines: list[str]) -> None:
    if fmt == "json":
        print(io.dumps_canonical(report), end="")
    else:
        for line in lines:
            print(line)


def _cone_str(labels) -> str:
    return ",".join(labels)


def _completeness_results(fan: Fan, witness) -> tuple[dict, list[str], bool]:
    comp = verify_completeness(fan, witness)
    smooth = smoothness_report(fan)
    results = {
        "rays": len(fan.rays),
        "max_cones": len(fan.max_cones),
        "ambient_dim": fan.ambient_dim,
        "completeness": {
            "facet_count": comp.facet_count,
            "all_facets_paired": comp.all_facets_paired,
            "all_pairs_opposite": comp.all_pairs_opposite,
            "witness": [str(x) for x in comp.witness],
            "witness_multiplicity": comp.witness_multiplicity,
            "unpaired_facets": [list(f) for f in comp.unpaired_facets],
            "verdict": comp.verdict,
        },
        "smoothness": {
            "smooth": smooth.smooth,
            "determinants": [str(d) for d in smooth.determinants],
            "singular_cones": [
                {"cone": _cone_str(fan.cone_labels(i)), "determinant": str(smooth.determinants[i])}
                for i in smooth.singular_cones
            ],
        },
    }
    lines = [
        f"fan: {len(fan.rays)} rays, {len(fan.max_cones)} maximal cones, dimension {fan.ambient_dim}",
        f"completeness: {'PASS' if comp.verdict else 'FAIL'}"
        f" ({comp.facet_count} facets, paired={comp.all_facets_paired},"
        f" opposite={comp.all_pairs_opposite},"
        f" witness {comp.witness} multiplicity {comp.witness_multiplicity})",
    ]
    if comp.unpaired_facets:
        lines.append(
            "unpaired facets: " + "; ".join(_cone_str(f) for f in comp.unpaired_facets)
        )
    if smooth.smooth:
        lines.append("smoothness: all determinants +-1")
    else:
        sing = ", ".join(
            f"{_cone_str(fan.cone_labels(i))} (det {smooth.determinants[i]})"
            for i in smooth.singular_cones
        )
        lines.append(f"smoothness: {len(smooth.singular_cones)} singular cone(s): {sing}")
    return results, lines, comp.verdict


def cmd_verify(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.fan)
    witness = _parse_point(args.witness) if args.witness else None
    results, lines, ok = _completeness_results(fan, witness)
    report = _report("verify", {"fan": {"name": name, "sha256": digest}}, results, ok, started)
    lines.append(f"verdict: {'PASS' if ok else 'FAIL'}")
    _emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_scan(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.fan)
    workers = args.workers if args.workers is not None else default_workers()
    rep = scan_box(
        fan,
        args.bound,
        collect_one_face=args.collect_one_face,
        workers=workers,
        backend=args.backend,
    )
    ok = rep.not_covered == 0 and rep.sum_matches
    results = {
        "bound": rep.bound,
        "backend": rep.backend,
        "workers": rep.workers,
        "counts_by_min_face_dim": {str(d): str(n) for d, n in rep.counts_by_dim.items()},
        "not_covered": str(rep.not_covered),
        "total": str(rep.total),
        "sum_matches": rep.sum_matches,
        "not_covered_witnesses": [[str(x) for x in p] for p in rep.not_covered_witnesses],
    }
    lines = [
        f"fan: {name}; box [-{rep.bound}, {rep.bound}]^{rep.ambient_dim}"
        f" ({rep.total} points); backend {rep.backend}, workers {rep.workers}",
    ]
    if fan.ambient_dim == 4:
        for cls, count in rep.counts.items():
            lines.append(f"  {cls.value:<18} {count}")
    else:
        for d in sorted(rep.counts_by_dim, reverse=True):
            lines.append(f"  min-face dim {d}: {rep.counts_by_dim[d]}")
        lines.append(f"  not covered: {rep.not_covered}")
    if args.collect_one_face:
        results["one_face_points"] = [[str(x) for x in p] for p in rep.one_face_points]
        lines.append(f"one-face points collected: {len(rep.one_face_points)}")
    lines.append(f"sum check: {'PASS' if rep.sum_matches else 'FAIL'}")
    lines.append(f"verdict: {'PASS' if ok else 'FAIL'}")
    report = _report("scan", {"fan": {"name": name, "sha256": digest}}, results, ok, started)
    _emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_desingularize(args) -> int:
    started = time.perf_counter()
    fan, steps = desingularize_barnette()
    step_entries = []
    lines = []
    for i, step in enumerate(steps, start=1):
        step_entries.append(
            {
                "new_ray_label": step.new_ray_label,
                "new_ray": [str(x) for x in step.new_ray],
                "replaced": [_cone_str(c) for c in step.affected_cones],
                "produced": [_cone_str(c) for c in step.produced_cones],
            }
        )
        lines.append(
            f"step {i:2d}: new ray {step.new_ray_label} = {step.new_ray};"
            f" replaced {len(step.affected_cones)} cone(s)"
            f" [{'; '.join(_cone_str(c) for c in step.affected_cones)}]"
            f" with {len(step.produced_cones)}"
        )
    results, verify_lines, ok = _completeness_results(fan, None)
    results["steps"] = step_entries
    lines.extend(verify_lines)
    inputs = {"fan": {"name": "barnette"}}
    if args.out:
        doc = io.fan_to_document(
            fan,
            name="desingularized-barnette",
            metadata={"provenance": "stellar subdivision pipeline over the embedded Barnette fan"},
        )
        io.save_document(args.out, doc)
        results["out"] = {"path": str(args.out), "sha256": io.file_digest(args.out)}
        lines.append(f"wrote fan document to {args.out}")
    report = _report("desingularize", inputs, results, ok, started)
    lines.append(f"verdict: {'PASS' if ok else 'FAIL'}")
    _emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_subdivide(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.fan)
    if (args.cone is None) == (args.point is None):
        raise ParseError("exactly one of --cone and --point is required")
    if args.cone:
        labels = _parse_labels(args.cone)
        missing = [l for l in labels if l not in fan.label_index]
        if missing:
            raise ParseError(f"unknown ray label(s) {missing}")
        point = tuple(
            sum(fan.ray_vector(l)[i] for l in labels) for i in range(fan.ambient_dim)
        )
    else:
        point = _parse_point(args.point)
    label = args.label or _next_free_label(fan)
    refined, step = stellar_subdivide(fan, point, label)
    io.save_document(args.out, io.fan_to_document(refined, name=Path(args.out).stem))
    results = {
        "new_ray_label": step.new_ray_label,
        "new_ray": [str(x) for x in step.new_ray],
        "replaced": [_cone_str(c) for c in step.affected_cones],
        "produced": [_cone_str(c) for c in step.produced_cones],
        "rays": len(refined.rays),
        "max_cones": len(refined.max_cones),
        "out": {"path": str(args.out), "sha256": io.file_digest(args.out)},
    }
    lines = [
        f"subdivided {name} at {step.new_ray} (new ray {label!r})",
        f"replaced {len(step.affected_cones)} cone(s) with {len(step.produced_cones)}",
        f"result: {len(refined.rays)} rays, {len(refined.max_cones)} maximal cones",
        f"wrote fan document to {args.out}",
    ]
    report = _report(
        "subdivide", {"fan": {"name": name, "sha256": digest}}, results, True, started
    )
    _emit(report, args.format, lines)
    return 0


def _next_free_label(fan: Fan, prefix: str = "p") -> str:
    k = 1
    while f"{prefix}{k}" in fan.label_index:
        k += 1
    return f"{prefix}{k}"


def cmd_suspend(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.fan)
    suspended = suspend_fan(fan)
    io.save_document(args.out, io.fan_to_document(suspended, name=Path(args.out).stem))
    results = {
        "rays": len(suspended.rays),
        "max_cones": len(suspended.max_cones),
        "ambient_dim": suspended.ambient_dim,
        "out": {"path": str(args.out), "sha256": io.file_digest(args.out)},
    }
    lines = [
        f"suspended {name}: {len(suspended.rays)} rays,"
        f" {len(suspended.max_cones)} maximal cones, dimension {suspended.ambient_dim}",
        f"wrote fan document to {args.out}",
    ]
    report = _report(
        "suspend", {"fan": {"name": name, "sha256": digest}}, results, True, started
    )
    _emit(report, args.format, lines)
    return 0


def cmd_family(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.base)
    members = generate_family(fan, args.count)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    entries = []
    lines = [f"family of {args.count} fan(s) grown from {name}"]
    for i, member in enumerate(members, start=1):
        path = out_dir / f"family-{i:03d}.json"
        io.save_document(path, io.fan_to_document(member, name=f"{name}-family-{i}"))
        fv = f_vector(underlying_complex(member))
        entries.append(
            {
                "index": i,
                "rays": len(member.rays),
                "max_cones": len(member.max_cones),
                "f_vector": [str(x) for x in fv],
                "path": str(path),
                "sha256": io.file_digest(path),
            }
        )
        lines.append(
            f"  member {i}: {len(member.rays)} rays, {len(member.max_cones)} cones,"
            f" f-vector {fv} -> {path}"
        )
    report = _report(
        "family",
        {"base": {"name": name, "sha256": digest}, "count": args.count},
        {"members": entries},
        True,
        started,
    )
    _emit(report, args.format, lines)
    return 0


def cmd_complex(args) -> int:
    started = time.perf_counter()
    fan, name, digest = _resolve_fan(args.fan)
    c = underlying_complex(fan)
    results: dict = {"vertices": len(c.vertex_labels), "facets": len(c.facets)}
    lines = [f"underlying complex of {name}: {len(c.vertex_labels)} vertices, {len(c.facets)} facets"]
    ok = True
    if args.star:
        sub = star(c, _parse_labels(args.star))
        facets = sorted(sorted(f) for f in sub.facet_label_sets())
        results["star"] = [",".join(f) for f in facets]
        lines.append(f"star({args.star}): {len(facets)} facet(s)")
        lines.extend(f"  {','.join(f)}" for f in facets)
    elif args.link:
        sub = link(c, _parse_labels(args.link))
        faces = sorted(sorted(f) for f in sub.facet_label_sets())
        results["link"] = [",".join(f) for f in faces]
        lines.append(f"link({args.link}): {len(faces)} face(s)")
        lines.extend(f"  {','.join(f)}" for f in faces)
    elif args.obstruction:
        rep = verify_barnette_obstruction(c)
        results["obstruction"] = {
            "verdict": rep.verdict,
            "facts": [
                {"name": f.name, "passed": f.passed, "detail": f.detail} for f in rep.facts
            ],
            "computed_star": [",".join(f) for f in rep.computed_star],
            "recorded_star_mismatch": [",".join(f) for f in rep.recorded_star_mismatch],
        }
        ok = rep.verdict
        for f in rep.facts:
            lines.append(f"  {'PASS' if f.passed else 'FAIL'} {f.name}: {f.detail}")
        lines.append(f"obstruction verdict: {'PASS' if ok else 'FAIL'}")
    else:
        fv = f_vector(c)
        results["f_vector"] = [str(x) for x in fv]
        lines.append(f"f-vector: {fv}")
    if args.out:
        io.save_document(args.out, io.complex_to_document(c, name=f"{name}-complex"))
        results["out"] = {"path": str(args.out), "sha256": io.file_digest(args.out)}
        lines.append(f"wrote complex document to {args.out}")
    report = _report(
        "complex", {"fan": {"name": name, "sha256": digest}}, results, ok, started
    )
    _emit(report, args.format, lines)
    return 0 if ok else 1


def cmd_certify(args) -> int:
    started = time.perf_counter()
    c = io.load_complex(args.complex)
    r = io.load_realization(args.realization)
    missing = [v for v in c.vertex_labels if v not in r.coords]
    if missing:
        raise ParseError(f"realization lacks coordinates for {missing}")
    rep = certify_realization(c, r)
    results = {
        "passed": rep.passed,
        "facets_checked": rep.facets_checked,
        "non_facets_checked": rep.non_facets_checked,
    }
    lines = [
        f"complex: {len(c.vertex_labels)} vertices, {len(c.facets)} facets;"
        f" realization dimension {r.dim}",
    ]
    if rep.first_violation is not None:
        results["first_violation"] = {
            "facet": list(rep.first_violation.facet),
            "reason": rep.first_violation.reason,
            "vertex": rep.first_violation.vertex,
        }
        witness = rep.first_violation
        lines.append(
            f"realization rejected: facet {','.join(witness.facet)}: {witness.reason}"
            + (f" (vertex {witness.vertex})" if witness.vertex else "")
        )
    lines.append(
        "certificate: PASS (boundary complex of a simplicial polytope)"
        if rep.passed
        else "certificate: FAIL (this realization is rejected; no claim about other realizations)"
    )
    inputs = {
        "complex": {"path": args.complex, "sha256": io.file_digest(args.complex)},
        "realization": {"path": args.realization, "sha256": io.file_digest(args.realization)},
    }
    report = _report("certify", inputs, results, rep.passed, started)
    _emit(report, args.format, lines)
    return 0 if rep.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fankit",
        description="Exact verification and transformation of rational polyhedral fans.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("text", "json"), default="text")

    p = sub.add_parser("verify", help="completeness and smoothness report for a fan")
    p.add_argument("fan", help="fan document path or builtin name (barnette, desingularized)")
    p.add_argument("--witness", help="generic witness point, comma-separated integers")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="classify all lattice points of a box against a fan")
    p.add_argument("fan")
    p.add_argument("--bound", type=int, required=True, help="box half-width B >= 1")
    p.add_argument("--workers", type=int, default=None,
                   help="parallel workers (default: $FANKIT_WORKERS, else 1)")
    p.add_argument("--collect-one-face", action="store_true",
                   help="collect the minimal-face-dimension-1 points (the ray multiples)")
    p.add_argument("--backend", choices=("auto", "compiled", "numpy", "python"), default="auto")
    add_format(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("desingularize",
                       help="run the subdivision pipeline on the embedded Barnette fan")
    p.add_argument("--out", help="write the resulting fan document here")
    add_format(p)
    p.set_defaults(func=cmd_desingularize)

    p = sub.add_parser("subdivide", help="stellar subdivision of a fan at a point")
    p.add_argument("fan")
    p.add_argument("--cone", help="comma-separated ray labels; subdivides at their vector sum")
    p.add_argument("--point", help="comma-separated integer coordinates")
    p.add_argument("--label", help="label for the new ray")
    p.add_argument("--out", required=True)
    add_format(p)
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("suspend", help="suspension of a fan (dimension rises by one)")
    p.add_argument("fan")
    p.add_argument("--out", required=True)
    add_format(p)
    p.set_defaults(func=cmd_suspend)

    p = sub.add_parser("family", help="grow successive smooth complete fans by subdivision")
    p.add_argument("--base", default="desingularized",
                   help="base fan (default: the desingularized builtin)")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--out-dir", required=True)
    add_format(p)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("complex", help="operations on a fan's underlying simplicial complex")
    p.add_argument("fan")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--star", metavar="V1,V2,...")
    group.add_argument("--link", metavar="V1,V2,...")
    group.add_argument("--f-vector", action="store_true")
    group.add_argument("--obstruction", action="store_true",
                       help="check the combinatorial non-polytopality facts")
    p.add_argument("--out", help="also write the complex document here")
    add_format(p)
    p.set_defaults(func=cmd_complex)

    p = sub.add_parser("certify", help="check a claimed convex realization of a complex")
    p.add_argument("complex")
    p.add_argument("realization")
    add_format(p)
    p.set_defaults(func=cmd_certify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except FankitError as e:
        print(f"error: {type(e).__name__}: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
