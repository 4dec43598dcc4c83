from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_word
from pantsgraph.curves import pants_from_chords
from pantsgraph.errors import NotAdjacentError, PantsGraphError
from pantsgraph.mcg import apply
from pantsgraph.normalization import (
    dual_tree,
    flip,
    flip_partner,
    normalize_edge,
    normalize_vertex,
    orbit_cover_check,
    random_edge,
)
from pantsgraph.pants_graph import adjacent, build_Zn
from pantsgraph.surface import chord


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_dual_trees_of_zn(n):
    for p in build_Zn(n).vertices.values():
        t = dual_tree(p)
        assert t.is_valid()
        assert len(t.leaves()) == n and len(t.internal()) == n - 2


@pytest.mark.parametrize("n", [5, 6, 7])
def test_normalize_vertex_fixes_standard_vertices(n):
    z = build_Zn(n)
    standards = set()
    for p in z.vertices.values():
        s = normalize_vertex(p).standard
        assert s.key in z.vertices
        assert normalize_vertex(s).standard == s
        standards.add(s.key)
    assert len(standards) <= len(z)


@given(st.integers(0, 10**6), st.sampled_from([5, 6, 7]))
def test_normalize_vertex_preserves_shape(seed, n):
    rng = random.Random(seed)
    z = build_Zn(n)
    v = z.vertices[rng.choice(sorted(z.vertices))]
    p = apply(random_word(n, rng.randint(1, 6), rng), v)
    res = normalize_vertex(p)
    assert res.standard.key in z.vertices
    assert sorted(res.order) == list(range(1, n + 1))
    assert dual_tree(res.standard).split_profile() == dual_tree(p).split_profile()
    assert set(res.curve_map) == set(p.curves)
    assert sorted(res.curve_map.values()) == res.standard.chords()


@given(st.integers(0, 10**6), st.sampled_from([5, 6, 7]))
def test_normalize_edge(seed, n):
    rng = random.Random(seed)
    p1, p2 = random_edge(n, rng)
    assert adjacent(p1, p2)
    res = normalize_edge(p1, p2)
    q1, q2 = res.edge
    assert apply(res.word, p1) == q1 and apply(res.word, p2) == q2
    z = build_Zn(n)
    assert q1.key in z.vertices and q2.key in z.vertices and adjacent(q1, q2)
    seq = res.intersections
    assert all(a - b == 4 for a, b in zip(seq, seq[1:]))
    assert seq[-1] in (0, 2)
    assert res.twists == len(seq) - 1
    assert (res.half_twist_sign is None) == (seq[-1] == 0)


def test_normalize_edge_errors():
    n = 6
    p = pants_from_chords(n, [chord(1, 3), chord(1, 4), chord(1, 5)])
    far = pants_from_chords(n, [chord(1, 3), chord(3, 5), chord(3, 6)])
    with pytest.raises(NotAdjacentError):
        normalize_edge(p, far)
    q = flip(p, p.curves[0])
    assert adjacent(p, q)
    (new,) = set(q.curves) - set(p.curves)
    assert flip_partner(q, new) == p.curves[0]
    assert flip(q, new) == p


@pytest.mark.parametrize("n", [5, 6, 7])
def test_orbit_cover_check(n):
    rep = orbit_cover_check(n, trials=60, max_word_len=5, seed=n)
    assert rep.ok
    d = rep.to_json()
    assert d["vertex"] == {"pass": 60, "fail": 0} and d["edge"] == {"pass": 60, "fail": 0}
    assert all(int(k) % 2 == 0 for k in d["intersection_histogram"])
    assert rep.max_twists <= 3


def test_orbit_check_rejects_small_n():
    with pytest.raises(PantsGraphError):
        orbit_cover_check(4, trials=1)


def test_orbit_check_is_seeded():
    a = orbit_cover_check(6, trials=20, seed=3).to_json()
    b = orbit_cover_check(6, trials=20, seed=3).to_json()
    assert a == b
