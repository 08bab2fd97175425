"""Command-line interface.

Subcommands: generate (family graphs with known spectra), apply
(evolution operations producing claims), spectrum (grouped eigenvalue
listing), verify (re-check claims or global invariants), demo (replay
the worked-example catalog).

Exit codes: 0 success, 1 verification failure, 2 argument or input
error, 3 precondition violation (use --force to build anyway; claims
are then suppressed).  The environment variable SPECTRA_TOL overrides
the default residual tolerance for verification.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

import numpy as np

from . import report
from .families import (
    FAMILY_NAMES,
    FamilySpec,
    example_catalog,
    generate,
)
from .graph import (
    PreconditionError,
    format_edge_list,
    induced_motif,
    read_edge_list,
    write_edge_list,
)
from .ops import (
    attach_multi_subgraphs,
    attach_subgraph,
    attach_subgraph_multi_anchor,
    couple_via_neighbors,
    double_motif_repeated,
    double_vertex_repeated,
    duplicate_class_claims,
)
from .spectral import laplacian_spectrum
from .verify import (
    Tolerances,
    check_fixture,
    soundness_sweep,
    verify_claims,
    verify_graph_invariants,
)


def _tolerances() -> Tolerances:
    env = os.environ.get("SPECTRA_TOL")
    if env is None:
        return Tolerances()
    try:
        return Tolerances(residual=float(env))
    except ValueError:
        raise ValueError(f"SPECTRA_TOL is not a number: {env!r}") from None


def _parse_ints(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ValueError(f"expected comma-separated integers, got {text!r}") from None


def _parse_floats(text: str) -> tuple[float, ...]:
    try:
        return tuple(float(part) for part in text.split(",") if part.strip() != "")
    except ValueError:
        raise ValueError(f"expected comma-separated numbers, got {text!r}") from None


def _parse_contact_arg(text: str):
    return "all" if text.strip() == "all" else _parse_ints(text)


def _fmt_value(v: float) -> str:
    shown = 0.0 if abs(v) < 1e-12 else v
    return f"{shown:.10g}"


def cmd_generate(args) -> int:
    spec = FamilySpec(args.family, n=args.n, m=args.m, p=args.p, seed=args.seed)
    g, expected = generate(spec)
    if args.output:
        write_edge_list(g, args.output)
        print(f"wrote {args.output}: {g.n} vertices, {g.num_edges} edges")
    else:
        sys.stdout.write(format_edge_list(g))
    if args.expected_out:
        entries = []
        for value, count in expected.entries:
            exact = (f"{value.numerator}/{value.denominator}"
                     if isinstance(value, Fraction) else None)
            entries.append({"eigenvalue": float(value), "eigenvalue_exact": exact,
                            "multiplicity": count})
        payload = {
            "schema_version": report.SCHEMA_VERSION,
            "family": args.family,
            "parameters": {k: v for k, v in
                           (("n", args.n), ("m", args.m), ("p", args.p),
                            ("seed", args.seed)) if v is not None},
            "coverage": expected.coverage,
            "entries": entries,
        }
        report.write_report(args.expected_out, payload)
        print(f"wrote {args.expected_out}: {expected.coverage} coverage, "
              f"{len(entries)} known groups")
    return 0


def _run_apply_operation(args):
    host = read_edge_list(args.graph)
    force = args.force
    op = args.operation
    if op == "double-vertex":
        params = {"vertex": args.vertex, "repeat": args.repeat}
        result = double_vertex_repeated(host, args.vertex, args.repeat,
                                        allow_disconnected=force)
    elif op == "double-motif":
        vertices = _parse_ints(args.motif)
        params = {"motif": list(vertices), "repeat": args.repeat}
        result = double_motif_repeated(host, induced_motif(host, vertices),
                                       args.repeat, allow_disconnected=force)
    elif op == "couple":
        attachment = read_edge_list(args.attachment)
        if args.f1:
            vecs = np.asarray([_parse_floats(t) for t in args.f1])
        else:
            vecs = _eigenvalue_one_functions(attachment)
        params = {"attachment": args.attachment, "host_vertex": args.host_vertex,
                  "attach_vertex": args.attach_vertex,
                  "f1": [list(v) for v in vecs]}
        result = couple_via_neighbors(host, attachment, args.host_vertex,
                                      args.attach_vertex, vecs,
                                      allow_disconnected=force)
    elif op == "attach":
        sigma = read_edge_list(args.sigma)
        contact = _parse_contact_arg(args.sigma_c)
        anchors = args.anchor
        params = {"sigma": args.sigma, "sigma_c": args.sigma_c, "anchors": anchors}
        if len(anchors) == 1:
            result = attach_subgraph(host, sigma, contact, anchors[0],
                                     allow_disconnected=force)
        else:
            result = attach_subgraph_multi_anchor(host, sigma, contact, anchors,
                                                  allow_disconnected=force)
    elif op == "attach-multi":
        sigma = read_edge_list(args.sigma)
        assignments = []
        for item in args.assign:
            if "@" not in item:
                raise ValueError(f"--assign expects 'contacts@anchor', got {item!r}")
            contacts, anchor = item.rsplit("@", 1)
            assignments.append((_parse_contact_arg(contacts), int(anchor)))
        params = {"sigma": args.sigma, "assignments": args.assign}
        result = attach_multi_subgraphs(host, sigma, assignments,
                                        allow_disconnected=force)
    elif op == "duplicate-classes":
        params = {}
        result = duplicate_class_claims(host, allow_disconnected=force)
    else:  # pragma: no cover - argparse restricts choices
        raise ValueError(f"unknown operation {op!r}")
    return result, {"name": op, "parameters": params}


def _eigenvalue_one_functions(g) -> np.ndarray:
    """Eigenvalue-1 eigenfunctions of a graph, from its spectrum."""
    spectrum = laplacian_spectrum(g)
    mask = np.abs(spectrum.eigenvalues - 1.0) <= spectrum.group_tol
    if not mask.any():
        raise ValueError("attachment has no eigenvalue-1 eigenfunctions; pass --f1")
    inv_sqrt = 1.0 / np.sqrt(np.asarray(g.degrees, dtype=float))
    return (spectrum.eigenvectors[:, mask] * inv_sqrt[:, None]).T


def cmd_apply(args) -> int:
    result, operation = _run_apply_operation(args)
    if args.output:
        write_edge_list(result.graph, args.output)
    if args.report:
        report.write_report(args.report, report.result_to_report(result, operation))
    print(f"{operation['name']}: {result.graph.n} vertices, "
          f"{result.graph.num_edges} edges, {len(result.claims)} claim(s)")
    for claim in result.claims:
        exact = f" (= {claim.eigenvalue_exact})" if claim.eigenvalue_exact else ""
        print(f"  eigenvalue {_fmt_value(claim.eigenvalue)}{exact} "
              f"multiplicity >= {claim.multiplicity_at_least} [{claim.provenance}]")
    for warning in result.warnings:
        print(f"  warning: {warning}")
    if args.output:
        print(f"wrote {args.output}")
    if args.report:
        print(f"wrote {args.report}")
    return 0


def cmd_spectrum(args) -> int:
    g = read_edge_list(args.graph)
    spectrum = laplacian_spectrum(g, args.group_tol)
    groups = spectrum.groups()
    if args.format == "plain":
        print("; ".join(f"{_fmt_value(v)} ×{c}" for v, c in groups))
    elif args.format == "csv":
        for v, c in groups:
            print(f"{v:.17g},{c}")
    else:
        payload = {
            "schema_version": report.SCHEMA_VERSION,
            "eigenvalues": [float(v) for v in spectrum.eigenvalues],
            "groups": [{"eigenvalue": float(v), "multiplicity": c}
                       for v, c in groups],
        }
        sys.stdout.write(report.dumps(payload))
    return 0


def cmd_verify(args) -> int:
    tols = _tolerances()
    if not args.result and not args.graph:
        raise ValueError("verify needs --result or --graph")
    reports = []
    result = None
    if args.result:
        data = report.read_report(args.result)
        result = report.report_to_result(data)
        claim_report = verify_claims(result, tols)
        reports.append(claim_report)
        for rec in claim_report.claim_records:
            status = "PASS" if rec.passed else "FAIL"
            print(f"{status} claim {rec.provenance} eigenvalue "
                  f"{_fmt_value(rec.eigenvalue)}: residual {rec.max_residual:.3g}, "
                  f"rank {rec.rank}, multiplicity {rec.numeric_multiplicity} "
                  f"(oracle {rec.oracle_multiplicity}, claimed >= "
                  f"{rec.multiplicity_at_least})"
                  + (f" [{rec.detail}]" if rec.detail else ""))
        if args.output:
            data["verification"] = report.verification_to_list(claim_report)
            report.write_report(args.output, data)
            print(f"wrote {args.output}")
    if args.invariants or args.graph:
        g = read_edge_list(args.graph) if args.graph else result.graph
        inv_report = verify_graph_invariants(g, tols)
        reports.append(inv_report)
        for rec in inv_report.invariant_records:
            status = "PASS" if rec.passed else "FAIL"
            print(f"{status} invariant {rec.name}: {rec.detail}")
    ok = all(r.passed for r in reports)
    print("verification PASSED" if ok else "verification FAILED")
    return 0 if ok else 1


def cmd_demo(args) -> int:
    tols = _tolerances()
    fixtures = example_catalog()
    if args.only:
        fixtures = tuple(f for f in fixtures if f.name == args.only)
        if not fixtures:
            raise ValueError(f"no fixture named {args.only!r}")
    all_ok = True
    for fixture in fixtures:
        case = fixture.build()
        rep = check_fixture(case, tols)
        ok = rep.passed
        all_ok &= ok
        status = "PASS" if ok else "FAIL"
        print(f"{status}  {fixture.name:24s} {fixture.summary}")
        if not ok:
            for line in rep.failures():
                print(f"      {line}")
    if args.seed_sweep:
        trials = soundness_sweep(trials=args.seed_sweep, tols=tols)
        bad = [t for t in trials if not t.passed]
        all_ok &= not bad
        print(f"{'PASS' if not bad else 'FAIL'}  random-operation sweep: "
              f"{len(trials) - len(bad)}/{len(trials)} trials clean")
        for t in bad:
            print(f"      trial {t.index} ({t.operation}): {t.detail}")
    return 0 if all_ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eigenmotif",
        description="Evolve graphs while tracking guaranteed normalized-Laplacian "
                    "eigenvalues, and verify the guarantees numerically.")
    sub = parser.add_subparsers(dest="command", required=True)

    p_gen = sub.add_parser("generate", help="build a family graph with known spectrum")
    p_gen.add_argument("--family", required=True, choices=FAMILY_NAMES)
    p_gen.add_argument("--n", type=int, default=None)
    p_gen.add_argument("--m", type=int, default=None)
    p_gen.add_argument("--p", type=float, default=None)
    p_gen.add_argument("--seed", type=int, default=None)
    p_gen.add_argument("-o", "--output", default=None, help="edge-list output path")
    p_gen.add_argument("--expected-out", default=None,
                       help="write the known spectrum as JSON")
    p_gen.set_defaults(func=cmd_generate)

    p_apply = sub.add_parser("apply", help="run an evolution operation")
    op_sub = p_apply.add_subparsers(dest="operation", required=True)

    def common_apply(sp):
        sp.add_argument("--graph", required=True, help="host edge-list path")
        sp.add_argument("-o", "--output", default=None, help="evolved edge-list path")
        sp.add_argument("--report", default=None, help="claims JSON path")
        sp.add_argument("--force", action="store_true",
                        help="build even when a precondition fails (suppresses claims)")
        sp.set_defaults(func=cmd_apply)

    sp = op_sub.add_parser("double-vertex", help="add twins of one vertex")
    sp.add_argument("--vertex", type=int, required=True)
    sp.add_argument("--repeat", type=int, default=1)
    common_apply(sp)

    sp = op_sub.add_parser("double-motif", help="copy an induced motif")
    sp.add_argument("--motif", required=True, help="comma-separated vertex list")
    sp.add_argument("--repeat", type=int, default=1)
    common_apply(sp)

    sp = op_sub.add_parser("couple", help="join a second graph through a vertex's neighbors")
    sp.add_argument("--attachment", required=True, help="attachment edge-list path")
    sp.add_argument("--host-vertex", type=int, required=True)
    sp.add_argument("--attach-vertex", type=int, required=True)
    sp.add_argument("--f1", action="append", default=[],
                    help="eigenvalue-1 eigenfunction of the attachment "
                         "(comma-separated, repeatable; default: computed)")
    common_apply(sp)

    sp = op_sub.add_parser("attach", help="attach a block to one or more anchors")
    sp.add_argument("--sigma", required=True, help="block edge-list path")
    sp.add_argument("--sigma-c", required=True,
                    help="contact vertices of the block ('all' or comma list)")
    sp.add_argument("--anchor", type=int, action="append", required=True,
                    help="host anchor vertex (repeatable)")
    common_apply(sp)

    sp = op_sub.add_parser("attach-multi",
                           help="attach a block with per-anchor contact sets")
    sp.add_argument("--sigma", required=True, help="block edge-list path")
    sp.add_argument("--assign", action="append", required=True,
                    help="assignment 'contacts@anchor', e.g. '0,1@2' (repeatable)")
    common_apply(sp)

    sp = op_sub.add_parser("duplicate-classes",
                           help="eigenvalue-1 claims from equal-neighborhood vertices")
    common_apply(sp)

    p_spec = sub.add_parser("spectrum", help="grouped eigenvalues of a graph")
    p_spec.add_argument("--graph", required=True)
    p_spec.add_argument("--format", choices=("plain", "json", "csv"), default="plain")
    p_spec.add_argument("--group-tol", type=float, default=1e-8)
    p_spec.set_defaults(func=cmd_spectrum)

    p_verify = sub.add_parser("verify", help="re-check claims or graph invariants")
    p_verify.add_argument("--result", default=None, help="claims JSON from apply")
    p_verify.add_argument("--graph", default=None, help="edge-list to check invariants on")
    p_verify.add_argument("--invariants", action="store_true",
                          help="also check the five global spectral invariants")
    p_verify.add_argument("--output", default=None,
                          help="rewrite the report with the verification section filled")
    p_verify.set_defaults(func=cmd_verify)

    p_demo = sub.add_parser("demo", help="replay the worked-example catalog")
    p_demo.add_argument("--only", default=None, help="run a single fixture by name")
    p_demo.add_argument("--seed-sweep", type=int, default=0,
                        help="additionally run N random-operation trials")
    p_demo.set_defaults(func=cmd_demo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PreconditionError as exc:
        print(f"precondition violated: {exc}", file=sys.stderr)
        print("hint: --force builds the graph anyway (claims are suppressed)",
              file=sys.stderr)
        return 3
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
