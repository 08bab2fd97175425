"""Verification layer: claim checking, invariants, fixtures, sweep."""

import dataclasses

import numpy as np
import pytest

import eigenmotif.verify as verify_mod
from eigenmotif import (
    EigenClaim,
    OperationResult,
    Tolerances,
    brute_force_multiplicity_oracle,
    build_graph,
    check_fixture,
    double_vertex,
    soundness_sweep,
    verify_claims,
    verify_graph_invariants,
)
from eigenmotif.families import (
    complete_graph,
    cycle_graph,
    example_catalog,
    random_connected,
    star_graph,
)


def test_tolerances_defaults():
    tols = Tolerances()
    assert tols.group_tol == 1e-8
    assert tols.zero_sum == 1e-10
    assert tols.residual_for(100) == pytest.approx(1e-7)
    assert Tolerances(residual=1e-3).residual_for(100) == 1e-3


def test_oracle_known_multiplicities():
    assert brute_force_multiplicity_oracle(complete_graph(5), 1.25) == 4
    assert brute_force_multiplicity_oracle(complete_graph(5), 0.0) == 1
    assert brute_force_multiplicity_oracle(star_graph(6), 1.0) == 5
    assert brute_force_multiplicity_oracle(cycle_graph(5), 0.5) == 0


def test_verify_claims_passes_honest_result():
    result = double_vertex(cycle_graph(5), 0)
    report = verify_claims(result)
    assert report.passed
    (record,) = report.claim_records
    assert record.numeric_multiplicity == record.oracle_multiplicity
    assert record.max_residual <= 1e-12
    assert report.failures() == []


def test_verify_claims_flags_wrong_eigenvalue():
    result = double_vertex(cycle_graph(5), 0)
    honest = result.claims[0]
    forged = EigenClaim(1.3, honest.eigenfunctions, honest.multiplicity_at_least,
                        honest.provenance)
    report = verify_claims(OperationResult(result.graph, result.vertex_map, (forged,)))
    assert not report.passed
    (record,) = report.claim_records
    assert "residual" in record.detail
    assert report.failures()


def test_verify_claims_flags_overclaimed_multiplicity():
    g = cycle_graph(6)  # eigenvalue 1/2 is simple... times two: mult 2
    result = double_vertex(g, 1)
    honest = result.claims[0]
    # keep the honest eigenfunction but overstate the guaranteed dimension
    f = honest.eigenfunctions[0]
    shifted = np.roll(f, 1)  # independent but not an eigenfunction pair count
    forged = EigenClaim(1.0, (f, f + 0.5 * shifted), 2, honest.provenance)
    report = verify_claims(OperationResult(result.graph, result.vertex_map, (forged,)))
    assert not report.passed


def test_verify_claims_flags_route_disagreement(monkeypatch):
    result = double_vertex(cycle_graph(5), 0)
    monkeypatch.setattr(verify_mod, "brute_force_multiplicity_oracle",
                        lambda g, lam, tol: 99)
    report = verify_mod.verify_claims(result)
    assert not report.passed
    assert "routes disagree" in report.claim_records[0].detail


def test_verify_claims_empty_is_vacuously_true():
    g = build_graph(4, [(0, 1), (2, 3)])
    result = double_vertex(g, 0, allow_disconnected=True)
    assert verify_claims(result).passed


@pytest.mark.parametrize("g", [
    complete_graph(2),
    complete_graph(7),
    cycle_graph(6),       # bipartite: top eigenvalue exactly 2
    cycle_graph(7),
    star_graph(5),
    random_connected(14, 0.3, seed=9),
])
def test_invariants_hold(g):
    report = verify_graph_invariants(g)
    assert report.passed, report.failures()
    assert len(report.invariant_records) == 5


def test_invariants_reject_unusable_graphs():
    with pytest.raises(ValueError):
        verify_graph_invariants(complete_graph(1))
    with pytest.raises(ValueError):
        verify_graph_invariants(build_graph(4, [(0, 1), (2, 3)]))


def test_all_catalog_fixtures_pass():
    for fixture in example_catalog():
        report = check_fixture(fixture.build())
        assert report.passed, (fixture.name, report.failures())


def test_check_fixture_catches_tampering():
    fixture = next(f for f in example_catalog() if f.name == "edge_tripling")
    case = fixture.build()
    tampered = dataclasses.replace(case, expected_groups=((0.0, 1), (0.5, 4), (1.5, 4)))
    report = check_fixture(tampered)
    assert not report.passed
    assert any("expected_groups" in line for line in report.failures())


def test_check_fixture_catches_bad_vector():
    fixture = next(f for f in example_catalog() if f.name == "k2_attach_k2")
    case = fixture.build()
    tampered = dataclasses.replace(
        case, expected_vectors=((1.5, (0.0, 1.0, 0.0, -1.0)),))
    assert not check_fixture(tampered).passed


def test_soundness_sweep_deterministic_and_clean():
    collected: list = []
    trials = soundness_sweep(trials=30, seed=123, collect_graphs=collected)
    assert len(trials) == 30
    assert len(collected) == 30
    assert all(t.passed for t in trials), [t.detail for t in trials if not t.passed]
    again = soundness_sweep(trials=30, seed=123)
    assert [t.operation for t in trials] == [t.operation for t in again]
    assert [(t.host_size, t.output_size, t.claim_count) for t in trials] == \
           [(t.host_size, t.output_size, t.claim_count) for t in again]
