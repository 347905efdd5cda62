"""Theorem checks, exchange-graph enumeration, fault injection, report format."""

import json

import pytest

from qlab import (
    GCluster,
    GVector,
    SkewMatrix,
    VertexSet,
    check_injectivity,
    check_sign_coherent,
    check_unimodular,
    enumerate_graph,
    mutate,
    run_suites,
    transform_check,
)
import qlab.gvectors
from qlab.verify import int_det, report_dumps, report_ok, sample_transform_pairs


def gv(*coords):
    return GVector(tuple(coords))


def test_sign_coherent_ok():
    assert check_sign_coherent([gv(1, 0), gv(0, 1)]).ok


def test_sign_coherent_witness():
    result = check_sign_coherent([gv(1, 0), gv(-1, 2)])
    assert not result.ok
    assert result.coord == 0
    assert {v.coords for v in result.pair} == {(1, 0), (-1, 2)}


def test_all_a3_clusters_sign_coherent(a3):
    report = enumerate_graph(a3, 10)
    assert report.clusters == 14
    assert all(rec.sign.ok for rec in report.nodes)


def test_int_det_matches_known_values():
    assert int_det([[1, 0], [0, 1]]) == 1
    assert int_det([[0, 1], [1, 0]]) == -1
    # frozen from cofactor expansion: 2*(2-0) - 3*(8-35) + 1*(0-7)
    assert int_det([[2, 3, 1], [4, 1, 5], [7, 0, 2]]) == 78
    assert int_det([[1, 2], [2, 4]]) == 0


def test_unimodular_examples():
    vs = VertexSet(("1", "2"))
    basis = GCluster(vs, {"1": gv(1, 0), "2": gv(0, 1)})
    assert check_unimodular(basis).ok and check_unimodular(basis).det == 1
    a2_cluster = GCluster(vs, {"1": gv(-1, 1), "2": gv(0, 1)})
    result = check_unimodular(a2_cluster)
    assert result.ok and result.det == -1
    dependent = GCluster(vs, {"1": gv(1, 0), "2": gv(2, 0)})
    result = check_unimodular(dependent)
    assert not result.ok and result.det == 0


def test_enumerate_a2_pentagon(a2):
    report = enumerate_graph(a2, 6)
    assert (report.clusters, report.variables, report.closed) == (5, 5, True)


def test_enumerate_a3_associahedron(a3):
    report = enumerate_graph(a3, 10)
    assert (report.clusters, report.variables, report.closed) == (14, 9, True)


def test_enumerate_a4(a4):
    report = enumerate_graph(a4, 12)
    assert (report.clusters, report.variables, report.closed) == (42, 14, True)


def test_enumerate_kronecker_stays_open(kronecker):
    for depth in (2, 4, 6):
        report = enumerate_graph(kronecker, depth)
        assert not report.closed


def test_enumerate_depth_zero(a2):
    report = enumerate_graph(a2, 0)
    assert report.clusters == 1 and not report.closed


def test_injectivity_a2_and_a3(a2, a3):
    for b, variables in ((a2, 5), (a3, 9)):
        report = enumerate_graph(b, 10, with_oracle=True)
        result = check_injectivity(report)
        assert result.ok
        assert report.distinct_polynomials() == report.variables == variables


def test_injectivity_requires_oracle(a2):
    report = enumerate_graph(a2, 6)
    with pytest.raises(ValueError):
        check_injectivity(report)


def test_fault_injection_produces_collision(a3, monkeypatch):
    """Disabling the minus branch corrupts g-dagger data; injectivity must notice."""
    monkeypatch.setattr(qlab.gvectors, "phi_step", qlab.gvectors.phi_plus)
    report = enumerate_graph(a3, 6, with_oracle=True)
    result = check_injectivity(report)
    assert not result.ok
    assert result.witnesses


def test_transform_check_examples(a2):
    pairs = [((), "1"), ((), "2"), (("1",), "1"), (("1", "2"), "2"), (("2", "1"), "1")]
    for k in a2.vertices:
        assert transform_check(a2, k, pairs).ok


def test_transform_check_a3_samples(a3):
    pairs = sample_transform_pairs(a3, 60, 5, seed=3)
    for k in a3.vertices:
        result = transform_check(a3, k, pairs)
        assert result.ok and result.checked == 60


def test_transform_check_detects_wrong_rule(a2, monkeypatch):
    import qlab.verify

    monkeypatch.setattr(qlab.verify, "phi_step", lambda g, b, k: g)
    result = transform_check(a2, "1", [(("1",), "1")])
    assert not result.ok
    assert result.mismatches[0]["slot"] == "1"


def test_transform_check_works_from_any_base(a2):
    # the rule holds with the mutated matrix as the base node too
    assert transform_check(mutate(a2, "1"), "2", [(("1",), "1"), ((), "2")]).ok


def test_report_json_shape_and_determinism(a2):
    report = run_suites(a2, ("all",), depth=6)
    assert report["format"] == "qlab-report-v1"
    assert report["clusters"] == 5 and report["variables"] == 5
    assert report["closed"] is True
    assert report_ok(report)
    names = [c["name"] for c in report["checks"]]
    assert names == ["sign_coherence", "unimodular", "injectivity", "transform"]
    text = report_dumps(report)
    again = report_dumps(run_suites(a2, ("all",), depth=6))
    assert text == again
    parsed = json.loads(text)
    assert list(parsed) == [
        "format",
        "vertices",
        "depth",
        "closed",
        "clusters",
        "variables",
        "checks",
        "nodes",
    ]


def test_run_suites_unknown_suite(a2):
    with pytest.raises(ValueError):
        run_suites(a2, ("bogus",))
