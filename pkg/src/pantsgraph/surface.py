"""Combinatorial model of the n-punctured sphere as a doubled n-gon.

Sides of the polygon are labelled ``1..n`` counterclockwise (as seen from the
front copy).  Puncture ``k`` is the polygon vertex between side ``k`` and side
``k+1`` (indices mod n), so side ``s`` runs from puncture ``s-1`` to puncture
``s`` (side 1 runs from puncture n to puncture 1).

The reference ideal triangulation consists of the ``n`` sides (the equator)
together with a fan of ``n-3`` diagonals at puncture 1 in each of the front and
back polygons.  Edge indices: side ``s`` is edge ``s-1``; the front diagonal
from puncture 1 to puncture ``k`` is edge ``n+k-3``; the back one is
``2n+k-6``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .errors import InvalidChordError, InvalidSurfaceError

FRONT = "front"
BACK = "back"
EQUATOR = "equator"


@dataclass(frozen=True, order=True)
class ChordId:
    """Unordered pair of polygon sides; stored with ``i < j``."""

    i: int
    j: int

    def __post_init__(self):
        if self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    def sides(self) -> tuple[int, int]:
        return (self.i, self.j)

    def to_json(self) -> list[int]:
        return [self.i, self.j]

    def __repr__(self):
        return f"a({self.i},{self.j})"


def chord(i: int, j: int) -> ChordId:
    return ChordId(i, j)


@dataclass(frozen=True)
class Arc:
    u: int
    v: int
    tag: str
    label: int  # side number for equator arcs, far puncture for diagonals


@dataclass(frozen=True)
class Triangle:
    tag: str
    verts: tuple[int, int, int]  # counterclockwise in the sphere's orientation
    edges: tuple[int, int, int]  # edges[k] joins verts[k] and verts[k+1]


@dataclass(frozen=True)
class TriangulationSpec:
    edges: tuple[Arc, ...]
    triangles: tuple[Triangle, ...]
    edge_triangles: tuple[tuple[int, int], ...] = field(repr=False)

    def other_triangle(self, t: int, e: int) -> int:
        a, b = self.edge_triangles[e]
        return b if a == t else a


def _check_n(n: int) -> None:
    if not isinstance(n, int) or n < 4:
        raise InvalidSurfaceError(f"need at least 4 punctures, got {n!r}")


def _build_triangulation(n: int) -> TriangulationSpec:
    edges: list[Arc] = []
    for s in range(1, n + 1):
        edges.append(Arc(n if s == 1 else s - 1, s, EQUATOR, s))
    for tag in (FRONT, BACK):
        for k in range(3, n):
            edges.append(Arc(1, k, tag, k))

    def edge_between(tag: str, p: int, q: int) -> int:
        p, q = min(p, q), max(p, q)
        if q == p + 1:
            return q - 1  # side q joins q-1 and q
        if p == 1 and q == n:
            return 0  # side 1
        assert p == 1
        return (n + q - 3) if tag == FRONT else (2 * n + q - 6)

    triangles: list[Triangle] = []
    for tag in (FRONT, BACK):
        for k in range(2, n):
            verts = (1, k, k + 1) if tag == FRONT else (1, k + 1, k)
            es = tuple(edge_between(tag, verts[m], verts[(m + 1) % 3]) for m in range(3))
            triangles.append(Triangle(tag, verts, es))

    incidence: list[list[int]] = [[] for _ in edges]
    for t, tri in enumerate(triangles):
        for e in tri.edges:
            incidence[e].append(t)
    assert all(len(x) == 2 for x in incidence)
    return TriangulationSpec(tuple(edges), tuple(triangles), tuple(tuple(x) for x in incidence))


@lru_cache(maxsize=None)
def _triangulation(n: int) -> TriangulationSpec:
    return _build_triangulation(n)


@dataclass(frozen=True)
class SphereModel:
    """The doubled n-gon model of the n-punctured sphere."""

    n: int

    def __post_init__(self):
        _check_n(self.n)

    @property
    def punctures(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def sides(self) -> tuple[int, ...]:
        return tuple(range(1, self.n + 1))

    @property
    def reference_triangulation(self) -> TriangulationSpec:
        return _triangulation(self.n)

    @property
    def num_edges(self) -> int:
        return 3 * self.n - 6

    def wrap(self, k: int) -> int:
        return (k - 1) % self.n + 1

    def check_chord(self, c: ChordId) -> ChordId:
        n = self.n
        if not (1 <= c.i <= n and 1 <= c.j <= n):
            raise InvalidChordError(f"{c!r}: side labels must lie in 1..{n}")
        if (c.j - c.i) % n in (0, 1, n - 1):
            raise InvalidChordError(f"{c!r}: sides must be distinct and non-adjacent")
        return c

    def enclosed(self, c: ChordId) -> tuple[int, ...]:
        """Punctures on the smaller side of the chord, in counterclockwise order.

        For a chord with ``i < j`` the inner side is punctures ``i..j-1``; ties
        (only possible for even n) go to the inner side.
        """
        self.check_chord(c)
        inner = tuple(range(c.i, c.j))
        if len(inner) <= self.n - len(inner):
            return inner
        return tuple(range(c.j, self.n + 1)) + tuple(range(1, c.i))

    def to_json(self) -> dict:
        return {"n": self.n}


def gamma_family(n: int) -> list[ChordId]:
    """All chords between non-adjacent sides, sorted; ``n(n-3)/2`` of them."""
    _check_n(n)
    out = []
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if not (i == 1 and j == n):
                out.append(ChordId(i, j))
    return out


def chain_curves(n: int) -> list[ChordId]:
    """Chords ``a(i, i+2)``; these enclose two adjacent punctures."""
    _check_n(n)
    seen = []
    for i in range(1, n + 1):
        c = ChordId(i, (i + 1) % n + 1)
        if c not in seen:
            seen.append(c)
    return sorted(seen)


def chords_cross(a: ChordId, b: ChordId) -> bool:
    """Cyclic interleaving of side labels; sharing a side never counts."""
    if set(a.sides()) & set(b.sides()):
        return False
    inside = (a.i < b.i < a.j) + (a.i < b.j < a.j)
    return inside == 1


def chord_from_json(data) -> ChordId:
    i, j = data
    return ChordId(int(i), int(j))
