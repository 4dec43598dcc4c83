from __future__ import annotations

import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_curve, random_word
from pantsgraph.curves import (
    Multicurve,
    PantsDecomposition,
    canonicalize,
    complement,
    curve_from_chord,
    deficiency,
    from_sequence,
    intersection_number,
    intersects_at_most,
    is_pants_decomposition,
    multicurve_from_json,
    pants_from_chords,
)
from pantsgraph.errors import InessentialCurveError, ModelMismatchError, MulticurveError, PantsGraphError
from pantsgraph.mcg import apply, dehn_twist_word
from pantsgraph.surface import SphereModel, chain_curves, chord, chords_cross, gamma_family


def test_pinned_coordinates():
    c = curve_from_chord(5, chord(1, 3))
    assert c.coords == (1, 0, 1, 0, 0, 1, 1, 1, 1)
    assert len(c.coords) == SphereModel(5).num_edges


@pytest.mark.parametrize("n", range(4, 9))
def test_chord_curves_round_trip(n):
    for ch in gamma_family(n):
        c = curve_from_chord(n, ch)
        assert c.chord() == ch
        assert canonicalize(n, c.coords) == c
        assert sorted(c.sequence) == [ch.i, ch.j]
        enclosed = set(SphereModel(n).enclosed(ch))
        assert c.cluster in (frozenset(enclosed), frozenset(set(range(1, n + 1)) - enclosed))


@pytest.mark.parametrize("n", range(4, 9))
def test_chord_intersection_oracle(n):
    gam = gamma_family(n)
    for a in gam:
        for b in gam:
            want = 2 if chords_cross(a, b) else 0
            assert intersection_number(curve_from_chord(n, a), curve_from_chord(n, b)) == want


@given(st.integers(0, 10**6), st.sampled_from([5, 6, 7]))
def test_intersection_symmetry_and_invariance(seed, n):
    rng = random.Random(seed)
    a, b = random_curve(n, rng), random_curve(n, rng)
    assert intersection_number(a, a) == 0
    i = intersection_number(a, b)
    assert i == intersection_number(b, a)
    assert i % 2 == 0  # curves on a sphere meet an even number of times
    w = random_word(n, 3, rng)
    assert intersection_number(apply(w, a), apply(w, b)) == i


@given(st.integers(0, 10**6), st.sampled_from([5, 6]), st.integers(-3, 3))
def test_twist_inequality(seed, n, k):
    # |i(T_a^k b, c) - |k| i(a,b) i(a,c)| <= i(b,c)
    rng = random.Random(seed)
    a = curve_from_chord(n, rng.choice(gamma_family(n)))
    b, c = random_curve(n, rng, 2), random_curve(n, rng, 2)
    tb = apply(dehn_twist_word(n, a.chord(), 1 if k >= 0 else -1), b) if k else b
    for _ in range(abs(k) - 1):
        tb = apply(dehn_twist_word(n, a.chord(), 1 if k > 0 else -1), tb)
    lhs = abs(intersection_number(tb, c) - abs(k) * intersection_number(a, b) * intersection_number(a, c))
    assert lhs <= intersection_number(b, c)


@given(st.integers(0, 10**6))
def test_coordinate_round_trip(seed):
    rng = random.Random(seed)
    n = rng.choice([4, 5, 6, 7])
    c = random_curve(n, rng)
    assert canonicalize(n, c.coords) == c
    assert from_sequence(n, c.sequence) == c


def test_intersects_at_most_is_capped():
    n = 6
    a = curve_from_chord(n, chord(1, 3))
    b = curve_from_chord(n, chord(1, 4))
    for _ in range(3):
        b = apply(dehn_twist_word(n, chord(2, 5), 1), b)
    full = intersection_number(a, b)
    assert full > 4
    assert intersects_at_most(a, b, 4) > 4
    assert intersects_at_most(a, b, full + 10) == full


def test_inessential_curves_rejected():
    with pytest.raises(InessentialCurveError):
        from_sequence(5, (1, 2))  # goes once around puncture 1
    with pytest.raises(InessentialCurveError):
        from_sequence(5, (1, 1))


@pytest.mark.parametrize("coords", [(1, 0), (1, 0, 1, 0, 0, 1, 1, 1, -1), (3, 0, 0, 0, 0, 0, 0, 0, 0)])
def test_malformed_coordinates(coords):
    with pytest.raises(PantsGraphError):
        canonicalize(5, coords)


def test_multicurve_checks():
    n = 6
    a, b, c = (curve_from_chord(n, chord(*x)) for x in ((1, 3), (2, 4), (1, 4)))
    with pytest.raises(MulticurveError):
        Multicurve([a, b], n)
    with pytest.raises(MulticurveError):
        Multicurve([a, a], n)
    with pytest.raises(ModelMismatchError):
        Multicurve([a, curve_from_chord(5, chord(1, 3))], n)
    with pytest.raises(MulticurveError):
        PantsDecomposition([a], n)
    m = Multicurve([c, a], n)
    assert m.curves == tuple(sorted((a, c)))
    assert deficiency(m) == 1


@pytest.mark.parametrize("n", range(4, 9))
def test_complement_of_pants_is_trivial(n):
    ch = [chord(1, k) for k in range(3, n)]
    p = pants_from_chords(n, ch)
    assert is_pants_decomposition(p)
    rep = complement(p)
    assert len(rep.pieces) == n - 2
    assert all(piece.k == 3 for piece in rep.pieces)


def test_complement_of_chain_curve():
    rep = complement(Multicurve([curve_from_chord(7, chain_curves(7)[0])], 7))
    ks = sorted(p.k for p in rep.pieces)
    assert ks == [3, 6]
    assert [p.k for p in rep.nontrivial_pieces] == [6]


def test_multicurve_json_round_trip():
    p = pants_from_chords(6, [chord(1, 3), chord(1, 4), chord(4, 6)])
    assert multicurve_from_json(6, p.to_json(), PantsDecomposition) == p
    assert multicurve_from_json(6, [c.coords for c in p.curves]) == Multicurve(p.curves, 6)
