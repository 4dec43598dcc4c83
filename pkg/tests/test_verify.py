from __future__ import annotations

import json

import pytest

from pantsgraph import verify as V
from pantsgraph.pants_graph import build_Zn
from pantsgraph.surface import chain_curves, chord


def test_z5_pentagon_passes():
    rep = V.verify_z5_pentagon()
    assert rep.outcome == V.PASS
    assert len(rep.witness["cycle"]) == 5


def test_z5_pentagon_catches_a_missing_edge():
    z = build_Zn(5)
    z.edges.pop()
    z._adj = None
    assert V.verify_z5_pentagon(z).outcome == V.FAIL


def test_z5_pentagon_catches_an_extra_vertex():
    z = build_Zn(6)
    keys = sorted(z.vertices)[:5]
    assert V.verify_z5_pentagon(z.induced(keys)).outcome == V.FAIL


def test_x5_shape():
    rep = V.verify_x5_shape()
    assert rep.ok
    assert rep.witness["attached_triangles"] == 10
    assert rep.witness["all_triangles"] == 20


def test_overlap_n5_reports_what_it_finds():
    rep = V.verify_overlap_n5(chord(1, 3), 1)
    w = rep.witness
    assert (w["overlap_vertices"], w["pentagons"], w["triangles"]) == (16, 10, 10)
    assert rep.outcome == V.FAIL


@pytest.mark.parametrize("a", chain_curves(6))
def test_restriction_checks_n6(a):
    assert V.verify_chain_restriction(6, a).ok
    for s in (1, -1):
        assert V.verify_overlap_contains(6, a, s).ok


def test_chain_restriction_n7_sample():
    assert V.verify_chain_restriction(7, chain_curves(7)[0]).ok


def test_coverage_and_farey():
    assert V.verify_exhaustion_coverage(5, 1).ok
    assert V.verify_farey().ok


def test_verify_all_is_deterministic_and_serializable():
    a = [r.to_json() for r in V.verify_all(6, seed=1, trials=10)]
    b = [r.to_json() for r in V.verify_all(6, seed=1, trials=10)]
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)
    assert all("runtime_s" not in d for d in a)
    assert all(r["outcome"] == V.PASS for r in a)
    assert "runtime_s" in V.verify_farey().to_json(with_runtime=True)
