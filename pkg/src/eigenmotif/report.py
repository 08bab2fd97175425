"""Lossless JSON serialization for graphs, operation results, and verdicts.

One schema (version 1) with fixed sections: graph, operation,
vertex_map, claims, verification.  Eigenvalues are stored as floats
(full repr precision) plus an exact rational string when the producing
construction pins one.  Serialization is deterministic: sorted keys,
two-space indent, trailing newline.
"""

from __future__ import annotations

import json

import numpy as np

from .graph import Graph, VertexMap, build_graph
from .ops import EigenClaim, OperationResult
from .verify import VerificationReport

SCHEMA_VERSION = 1


def graph_to_dict(g: Graph) -> dict:
    return {"n": g.n, "edges": [[u, v] for u, v in g.edges()]}


def graph_from_dict(d: dict) -> Graph:
    return build_graph(int(d["n"]), [(int(u), int(v)) for u, v in d["edges"]])


def vertex_map_to_dict(vm: VertexMap) -> dict:
    return {"images": list(vm.images),
            "new_by_round": [list(r) for r in vm.new_by_round]}


def vertex_map_from_dict(d: dict) -> VertexMap:
    return VertexMap(tuple(int(v) for v in d["images"]),
                     tuple(tuple(int(v) for v in r) for r in d["new_by_round"]))


def claim_to_dict(c: EigenClaim) -> dict:
    return {
        "eigenvalue": float(c.eigenvalue),
        "eigenvalue_exact": c.eigenvalue_exact,
        "multiplicity_at_least": c.multiplicity_at_least,
        "provenance": c.provenance,
        "eigenfunctions": [[float(x) for x in f] for f in c.eigenfunctions],
    }


def claim_from_dict(d: dict) -> EigenClaim:
    return EigenClaim(
        eigenvalue=float(d["eigenvalue"]),
        eigenfunctions=tuple(np.asarray(f, dtype=float) for f in d["eigenfunctions"]),
        multiplicity_at_least=int(d["multiplicity_at_least"]),
        provenance=d["provenance"],
        eigenvalue_exact=d.get("eigenvalue_exact"),
    )


def verification_to_list(report: VerificationReport) -> list[dict]:
    out: list[dict] = []
    for c in report.claim_records:
        out.append({
            "kind": "claim",
            "provenance": c.provenance,
            "eigenvalue": c.eigenvalue,
            "multiplicity_at_least": c.multiplicity_at_least,
            "max_residual": c.max_residual,
            "rank": c.rank,
            "numeric_multiplicity": c.numeric_multiplicity,
            "oracle_multiplicity": c.oracle_multiplicity,
            "passed": c.passed,
            "detail": c.detail,
        })
    for i in report.invariant_records:
        out.append({"kind": "invariant", "name": i.name,
                    "passed": i.passed, "detail": i.detail})
    return out


def result_to_report(result: OperationResult, operation: dict,
                     verification: VerificationReport | None = None) -> dict:
    op_section = dict(operation)
    op_section.setdefault("warnings", list(result.warnings))
    return {
        "schema_version": SCHEMA_VERSION,
        "graph": graph_to_dict(result.graph),
        "operation": op_section,
        "vertex_map": vertex_map_to_dict(result.vertex_map),
        "claims": [claim_to_dict(c) for c in result.claims],
        "verification": verification_to_list(verification) if verification else [],
    }


def report_to_result(d: dict) -> OperationResult:
    if d.get("schema_version") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {d.get('schema_version')!r}")
    return OperationResult(
        graph=graph_from_dict(d["graph"]),
        vertex_map=vertex_map_from_dict(d["vertex_map"]),
        claims=tuple(claim_from_dict(c) for c in d["claims"]),
        warnings=tuple(d.get("operation", {}).get("warnings", ())),
    )


def dumps(d: dict) -> str:
    return json.dumps(d, indent=2, sort_keys=True) + "\n"


def write_report(path, d: dict) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(d))


def read_report(path) -> dict:
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


__all__ = [
    "SCHEMA_VERSION",
    "claim_from_dict",
    "claim_to_dict",
    "dumps",
    "graph_from_dict",
    "graph_to_dict",
    "read_report",
    "report_to_result",
    "result_to_report",
    "verification_to_list",
    "vertex_map_from_dict",
    "vertex_map_to_dict",
    "write_report",
]
