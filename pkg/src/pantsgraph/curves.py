"""Curves, multicurves and pants decompositions on the doubled n-gon.

A curve is stored canonically by its normal coordinates over the reference
triangulation.  Internally every curve also carries its *cutting sequence*:
the cyclic list of equator sides it crosses in minimal position, where the
crossings at even positions go from the front polygon to the back polygon and
those at odd positions go back.  The cutting sequence is what the mapping
class group acts on and what the intersection algorithm reads.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

from .errors import (
    InessentialCurveError,
    InvariantViolation,
    MalformedCoordinatesError,
    ModelMismatchError,
    MulticurveError,
    NotACurveError,
)
from .surface import EQUATOR, FRONT, ChordId, SphereModel, TriangulationSpec

Letter = tuple[int, int]  # (side, +1 front->back | -1 back->front)


# --------------------------------------------------------------------------
# cutting sequences

def reduce_cyclic(letters: Iterable[Letter]) -> tuple[int, ...]:
    """Freely and cyclically reduce a closed path of side crossings.

    Returns the cutting sequence rotated so that it starts with a
    front-to-back crossing.
    """
    stack: list[Letter] = []
    for side, sign in letters:
        if stack and stack[-1][0] == side and stack[-1][1] == -sign:
            stack.pop()
        else:
            stack.append((side, sign))
    lo, hi = 0, len(stack)
    while hi - lo >= 2 and stack[lo][0] == stack[hi - 1][0] and stack[lo][1] == -stack[hi - 1][1]:
        lo += 1
        hi -= 1
    word = stack[lo:hi]
    if not word:
        return ()
    start = 0 if word[0][1] == 1 else 1
    word = word[start:] + word[:start]
    for t, (_, sign) in enumerate(word):
        if sign != (1 if t % 2 == 0 else -1):
            raise InvariantViolation("cutting sequence does not alternate")
    return tuple(side for side, _ in word)


def sequence_letters(seq: Sequence[int]) -> list[Letter]:
    return [(s, 1 if t % 2 == 0 else -1) for t, s in enumerate(seq)]


def coords_from_sequence(n: int, seq: Sequence[int]) -> tuple[int, ...]:
    w = [0] * (3 * n - 6)
    L = len(seq)
    for s in seq:
        w[s - 1] += 1
    for t in range(L):
        a, b = seq[t], seq[(t + 1) % L]
        # passage after crossing t lies in the back polygon when t is even
        base = (2 * n - 6) if t % 2 == 0 else (n - 3)
        for k in range(3, n):
            if (2 <= a <= k) != (2 <= b <= k):
                w[base + k] += 1
    return tuple(w)


def puncture_cluster(n: int, seq: Sequence[int]) -> frozenset[int]:
    """Punctures on the side of the curve that does not contain puncture n.

    Uses the abelianisation of the loop: a simple closed curve bounding the
    punctures A has exponent vector congruent to the indicator of A modulo
    the all-ones vector.
    """
    v = [0] * (n + 1)
    for t in range(0, len(seq), 2):
        a, b = seq[t], seq[t + 1]
        k = a
        while k != b:
            v[k] += 1
            k = k % n + 1
    vals = v[1:]
    hi, lo = max(vals), min(vals)
    if hi - lo > 1:
        raise InvariantViolation("sequence does not describe a simple closed curve")
    side = frozenset(k for k in range(1, n + 1) if v[k] == hi)
    if hi == lo:
        side = frozenset()
    return side if n not in side else frozenset(range(1, n + 1)) - side


# --------------------------------------------------------------------------
# tracing normal coordinates

def _corner_counts(tri: TriangulationSpec, w: Sequence[int]) -> list[tuple[int, int, int]]:
    out = []
    for t, T in enumerate(tri.triangles):
        e = T.edges
        cs = []
        for m in range(3):
            twice = w[e[m]] + w[e[m - 1]] - w[e[(m + 1) % 3]]
            if twice < 0 or twice % 2:
                raise MalformedCoordinatesError(
                    f"triangle {t} (edges {e}) violates the triangle inequality or parity"
                )
            cs.append(twice // 2)
        out.append(tuple(cs))
    return out


def _trace(tri: TriangulationSpec, w: Sequence[int], corners, e0: int, idx0: int):
    """Follow one component from point ``idx0`` of edge ``e0``.

    Yields the visited points count and the list of equator crossings.
    """
    arcs = tri.edges
    t = tri.edge_triangles[e0][0]
    e, idx = e0, idx0
    letters: list[Letter] = []
    steps = 0
    while True:
        T = tri.triangles[t]
        m = T.edges.index(e)
        X, Y = T.verts[m], T.verts[(m + 1) % 3]
        dX = idx if arcs[e].u == X else w[e] - 1 - idx
        if dX < corners[t][m]:
            e2, d, from_v = T.edges[m - 1], dX, X
        else:
            e2, d, from_v = T.edges[(m + 1) % 3], w[e] - 1 - dX, Y
        idx2 = d if arcs[e2].u == from_v else w[e2] - 1 - d
        t2 = tri.other_triangle(t, e2)
        if arcs[e2].tag == EQUATOR:
            letters.append((arcs[e2].label, 1 if T.tag == FRONT else -1))
        steps += 1
        e, idx, t = e2, idx2, t2
        if e == e0 and idx == idx0 and t == tri.edge_triangles[e0][0]:
            return steps, letters
        if steps > sum(w):
            raise InvariantViolation("trace did not close up")


def sequence_from_coords(model: SphereModel, coords: Sequence[int]) -> tuple[int, ...]:
    n = model.n
    if len(coords) != 3 * n - 6:
        raise MalformedCoordinatesError(f"expected {3 * n - 6} coordinates, got {len(coords)}")
    if any(isinstance(x, bool) or not isinstance(x, int) or x < 0 for x in coords):
        raise MalformedCoordinatesError("coordinates must be nonnegative integers")
    tri = model.reference_triangulation
    corners = _corner_counts(tri, coords)
    total = sum(coords)
    if total == 0:
        raise InessentialCurveError("the empty curve is not essential")
    e0 = next(e for e, x in enumerate(coords) if x > 0)
    steps, letters = _trace(tri, coords, corners, e0, 0)
    if steps != total:
        raise NotACurveError("coordinates describe more than one component")
    seq = reduce_cyclic(letters)
    if len(seq) != len(letters):
        raise InvariantViolation("normal curve is not in minimal position with the equator")
    return seq


# --------------------------------------------------------------------------
# curves

class Curve:
    """Isotopy class of an essential simple closed curve on S_{0,n}."""

    __slots__ = ("n", "coords", "_seq", "_cluster", "_hash")

    def __init__(self, n: int, coords: tuple[int, ...], seq: tuple[int, ...] | None = None):
        self.n = n
        self.coords = coords
        self._seq = seq
        self._cluster = None
        self._hash = hash((n, coords))

    @property
    def model(self) -> SphereModel:
        return SphereModel(self.n)

    @property
    def sequence(self) -> tuple[int, ...]:
        if self._seq is None:
            self._seq = sequence_from_coords(self.model, self.coords)
        return self._seq

    @property
    def cluster(self) -> frozenset[int]:
        """Punctures on the side away from puncture n."""
        if self._cluster is None:
            self._cluster = puncture_cluster(self.n, self.sequence)
        return self._cluster

    def chord(self) -> ChordId | None:
        """The chord this curve doubles, if it belongs to Gamma_n."""
        seq = self.sequence
        if len(seq) == 2:
            return ChordId(*seq)
        return None

    @property
    def weight(self) -> int:
        return len(self.sequence)

    def __eq__(self, other):
        return isinstance(other, Curve) and self.n == other.n and self.coords == other.coords

    def __hash__(self):
        return self._hash

    def __lt__(self, other: "Curve"):
        return (self.n, self.coords) < (other.n, other.coords)

    def __repr__(self):
        c = self.chord() if self._seq is not None else None
        if c is not None:
            return f"Curve(n={self.n}, {c!r})"
        return f"Curve(n={self.n}, coords={list(self.coords)})"

    def to_json(self) -> dict:
        return {"coords": list(self.coords)}


def from_sequence(n: int, seq: Iterable[int] | Iterable[Letter], *, check: bool = True) -> Curve:
    """Build a curve from a closed path of side crossings (reduced here)."""
    seq = list(seq)
    letters = seq if seq and isinstance(seq[0], tuple) else sequence_letters(seq)
    red = reduce_cyclic(letters)
    if not red:
        raise InessentialCurveError("path is null-homotopic")
    c = Curve(n, coords_from_sequence(n, red), red)
    if check:
        k = len(c.cluster)
        if k < 2 or k > n - 2:
            raise InessentialCurveError("curve bounds a disk or a once-punctured disk")
    return c


def canonicalize(model: SphereModel | int, raw_coords: Sequence[int]) -> Curve:
    """Validate raw normal coordinates and return the curve they describe."""
    if isinstance(model, int):
        model = SphereModel(model)
    coords = tuple(raw_coords)
    seq = sequence_from_coords(model, coords)
    c = Curve(model.n, coords, seq)
    k = len(c.cluster)
    if k < 2 or k > model.n - 2:
        raise InessentialCurveError("curve bounds a disk or a once-punctured disk")
    return c


def curve_from_chord(model: SphereModel | int, c: ChordId) -> Curve:
    if isinstance(model, int):
        model = SphereModel(model)
    model.check_chord(c)
    return _chord_curve(model.n, c)


@lru_cache(maxsize=None)
def _chord_curve(n: int, c: ChordId) -> Curve:
    seq = (c.i, c.j)
    return Curve(n, coords_from_sequence(n, seq), seq)


# --------------------------------------------------------------------------
# intersection numbers

def _ccw_pos(polygon_front: bool, side: int) -> int:
    return side if polygon_front else -side


def _intersection(n: int, A: tuple[int, ...], B: tuple[int, ...], limit: int | None) -> int:
    La, Lb = len(A), len(B)
    count = 0

    # lifts meeting inside one polygon without sharing a side
    for parity in (0, 1):
        pb = [(B[t], B[(t + 1) % Lb]) for t in range(parity, Lb, 2)]
        for t in range(parity, La, 2):
            u, v = A[t], A[(t + 1) % La]
            lo, hi = (u, v) if u < v else (v, u)
            for x, y in pb:
                if x == u or x == v or y == u or y == v:
                    continue
                if (lo < x < hi) != (lo < y < hi):
                    count += 1
        if limit is not None and count > limit:
            return count

    # lifts sharing a maximal run of side crossings
    for Bo in (B, B[::-1]):
        for i in range(La):
            ai, ap = A[i], A[i - 1]
            for j in range(i % 2, Lb, 2):
                if Bo[j] != ai or Bo[j - 1] == ap:
                    continue
                r = 1
                while A[(i + r) % La] == Bo[(j + r) % Lb]:
                    r += 1
                    if r > La + Lb:
                        raise InvariantViolation("curves share an unbounded run; are they equal?")
                start_front = i % 2 == 0  # crossing i leaves the front polygon
                end_front = (i + r - 1) % 2 == 1
                s = ai
                ds_a = (_ccw_pos(start_front, ap) - _ccw_pos(start_front, s)) % n
                ds_b = (_ccw_pos(start_front, Bo[j - 1]) - _ccw_pos(start_front, s)) % n
                e = A[(i + r - 1) % La]
                de_a = (_ccw_pos(end_front, A[(i + r) % La]) - _ccw_pos(end_front, e)) % n
                de_b = (_ccw_pos(end_front, Bo[(j + r) % Lb]) - _ccw_pos(end_front, e)) % n
                if (ds_a < ds_b) != (de_a > de_b):
                    count += 1
                    if limit is not None and count > limit:
                        return count
    return count


@lru_cache(maxsize=1 << 18)
def _intersection_cached(n: int, A: tuple[int, ...], B: tuple[int, ...]) -> int:
    return _intersection(n, A, B, None)


def intersection_number(c1: Curve, c2: Curve) -> int:
    """Geometric intersection number i(c1, c2)."""
    if c1.n != c2.n:
        raise ModelMismatchError(f"curves live on S_(0,{c1.n}) and S_(0,{c2.n})")
    if c1 == c2:
        return 0
    A, B = c1.sequence, c2.sequence
    if (c1.coords, A) > (c2.coords, B):
        A, B = B, A
    return _intersection_cached(c1.n, A, B)


def intersects_at_most(c1: Curve, c2: Curve, bound: int) -> int:
    """Intersection number, but stops counting once it exceeds ``bound``."""
    if c1.n != c2.n:
        raise ModelMismatchError("curves live on different spheres")
    if c1 == c2:
        return 0
    return _intersection(c1.n, c1.sequence, c2.sequence, bound)


# --------------------------------------------------------------------------
# multicurves

class Multicurve:
    """A set of distinct, pairwise disjoint curves, kept in canonical order."""

    __slots__ = ("n", "curves", "_key")

    def __init__(self, curves: Iterable[Curve], n: int | None = None, *, check: bool = True):
        curves = sorted(curves)
        if n is None:
            if not curves:
                raise MulticurveError("need n for an empty multicurve")
            n = curves[0].n
        self.n = n
        self.curves: tuple[Curve, ...] = tuple(curves)
        self._key = tuple(c.coords for c in self.curves)
        if check:
            self._validate()

    def _validate(self):
        if any(c.n != self.n for c in self.curves):
            raise ModelMismatchError("curves live on different spheres")
        for a, b in zip(self.curves, self.curves[1:]):
            if a == b:
                raise MulticurveError(f"repeated curve {a!r}")
        for x in range(len(self.curves)):
            for y in range(x + 1, len(self.curves)):
                if intersection_number(self.curves[x], self.curves[y]) != 0:
                    raise MulticurveError(
                        f"curves {self.curves[x]!r} and {self.curves[y]!r} intersect"
                    )
        if len(self.curves) > self.n - 3:
            raise MulticurveError("too many disjoint curves")

    @property
    def key(self) -> tuple[tuple[int, ...], ...]:
        return self._key

    def __len__(self):
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    def __contains__(self, c):
        return c in self.curves

    def __eq__(self, other):
        return isinstance(other, Multicurve) and self.n == other.n and self._key == other._key

    def __hash__(self):
        return hash((self.n, self._key))

    def __repr__(self):
        return f"{type(self).__name__}({list(self.curves)!r})"

    def chords(self) -> list[ChordId] | None:
        cs = [c.chord() for c in self.curves]
        return None if any(c is None for c in cs) else sorted(cs)

    def to_json(self) -> list:
        return [c.to_json() for c in self.curves]


class PantsDecomposition(Multicurve):
    """A maximal multicurve: n-3 curves cutting the sphere into pairs of pants."""

    __slots__ = ()

    def __init__(self, curves: Iterable[Curve], n: int | None = None, *, check: bool = True):
        super().__init__(curves, n, check=check)
        if check and not is_pants_decomposition(self):
            raise MulticurveError(f"need {self.n - 3} curves for a pants decomposition")

    def to_json(self) -> dict:
        return {"curves": [c.to_json() for c in self.curves], "canonical": True}


def pants_from_chords(n: int, chords: Iterable[ChordId]) -> PantsDecomposition:
    return PantsDecomposition((curve_from_chord(n, c) for c in chords), n, check=False)


def multicurve_from_json(n: int, data, cls=Multicurve):
    if isinstance(data, dict):
        data = data["curves"]
    curves = [canonicalize(n, item["coords"] if isinstance(item, dict) else item) for item in data]
    return cls(curves, n)


def deficiency(q: Multicurve) -> int:
    return (q.n - 3) - len(q)


@dataclass(frozen=True)
class Piece:
    punctures: tuple[int, ...]
    boundaries: tuple[int, ...]  # indices into the multicurve's curves

    @property
    def k(self) -> int:
        return len(self.punctures) + len(self.boundaries)

    @property
    def topological_type(self) -> str:
        return f"S_(0,{self.k})"

    def to_json(self) -> dict:
        return {
            "puncture_labels": list(self.punctures),
            "boundary_curve_indices": list(self.boundaries),
            "topological_type": self.topological_type,
        }


@dataclass(frozen=True)
class ComplementReport:
    pieces: tuple[Piece, ...]
    parents: tuple[int | None, ...]  # for each curve, the curve index enclosing it

    @property
    def nontrivial_pieces(self) -> tuple[Piece, ...]:
        return tuple(p for p in self.pieces if p.k >= 4)

    def to_json(self) -> dict:
        return {
            "pieces": [p.to_json() for p in self.pieces],
            "nontrivial_pieces": [p.to_json() for p in self.nontrivial_pieces],
        }


def complement(q: Multicurve) -> ComplementReport:
    """Pieces of the complement of a multicurve, from its puncture clusters.

    Disjoint curves on a sphere have nested-or-disjoint clusters (taking the
    side away from puncture n), so the pieces are the nodes of a rooted tree.
    The root piece is the one containing puncture n.
    """
    n = q.n
    clusters = [c.cluster for c in q.curves]
    order = sorted(range(len(clusters)), key=lambda m: len(clusters[m]))
    parent: list[int | None] = [None] * len(clusters)
    for x in order:
        best = None
        for y in order:
            if y == x:
                continue
            if clusters[x] < clusters[y]:
                if best is None or len(clusters[y]) < len(clusters[best]):
                    best = y
            elif clusters[x] & clusters[y] and not clusters[y] < clusters[x]:
                raise MulticurveError("curve clusters are not nested; curves intersect")
        parent[x] = best
    pieces = []
    for owner in [None] + list(range(len(clusters))):
        children = [m for m in range(len(clusters)) if parent[m] == owner]
        region = frozenset(range(1, n + 1)) if owner is None else clusters[owner]
        for m in children:
            region = region - clusters[m]
        bounds = ([] if owner is None else [owner]) + children
        pieces.append(Piece(tuple(sorted(region)), tuple(sorted(bounds))))
    return ComplementReport(tuple(pieces), tuple(parent))


def is_pants_decomposition(q: Multicurve) -> bool:
    return len(q) == q.n - 3 and not complement(q).nontrivial_pieces
