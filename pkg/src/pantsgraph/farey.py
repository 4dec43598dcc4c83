"""The Farey graph as an exact model of the pants graph of S_{0,4}.

Chart: the chord curve a(1,3) is the slope 0/1 and a(2,4) is 1/0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .errors import NotAdjacentError


@dataclass(frozen=True, order=True)
class Slope:
    p: int
    q: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not isinstance(self.q, int):
            raise TypeError("slope entries must be integers")
        if self.q < 0 or (self.q == 0 and self.p != 1) or gcd(self.p, self.q) != 1:
            raise ValueError(f"slope {self.p}/{self.q} is not normalized")

    def to_json(self) -> list[int]:
        return [self.p, self.q]

    def __repr__(self):
        return f"{self.p}/{self.q}"


def slope(p: int, q: int) -> Slope:
    """Normalized slope p/q: reduced, with q > 0 or equal to 1/0."""
    if p == 0 and q == 0:
        raise ValueError("0/0 is not a slope")
    g = gcd(p, q)
    p, q = p // g, q // g
    if q < 0 or (q == 0 and p < 0):
        p, q = -p, -q
    return Slope(p, q)


INFINITY = Slope(1, 0)


def det(s1: Slope, s2: Slope) -> int:
    return s1.p * s2.q - s2.p * s1.q


def farey_adjacent(s1: Slope, s2: Slope) -> bool:
    return abs(det(s1, s2)) == 1


def edge_triangles(s1: Slope, s2: Slope) -> tuple[Slope, Slope]:
    """The two slopes completing the edge {s1, s2} to a Farey triangle."""
    if not farey_adjacent(s1, s2):
        raise NotAdjacentError(f"{s1!r} and {s2!r} are not Farey neighbours")
    a = slope(s1.p + s2.p, s1.q + s2.q)
    b = slope(s1.p - s2.p, s1.q - s2.q)
    return tuple(sorted((a, b)))


def _e(s1: Slope, s2: Slope) -> tuple[Slope, Slope]:
    return (s1, s2) if s1 < s2 else (s2, s1)


@dataclass
class SlopeGraph:
    vertices: set = field(default_factory=set)
    edges: set = field(default_factory=set)
    triangles: set = field(default_factory=set)  # frozensets of three slopes

    def add_triangle(self, a: Slope, b: Slope, c: Slope) -> None:
        self.vertices |= {a, b, c}
        self.edges |= {_e(a, b), _e(b, c), _e(a, c)}
        self.triangles.add(frozenset((a, b, c)))

    def copy(self) -> "SlopeGraph":
        return SlopeGraph(set(self.vertices), set(self.edges), set(self.triangles))

    def triangles_on(self, e: tuple[Slope, Slope]) -> int:
        return sum(1 for t in self.triangles if e[0] in t and e[1] in t)

    def boundary_edges(self) -> list:
        count: dict = {}
        for t in self.triangles:
            a, b, c = sorted(t)
            for e in (_e(a, b), _e(b, c), _e(a, c)):
                count[e] = count.get(e, 0) + 1
        return sorted(e for e, k in count.items() if k == 1)

    def stats(self) -> dict:
        return {"vertices": len(self.vertices), "edges": len(self.edges), "triangles": len(self.triangles)}

    def is_subgraph_of(self, other: "SlopeGraph") -> bool:
        return self.vertices <= other.vertices and self.edges <= other.edges

    def to_json(self) -> dict:
        return {
            "vertices": [s.to_json() for s in sorted(self.vertices)],
            "edges": [[a.to_json(), b.to_json()] for a, b in sorted(self.edges)],
        }

    def to_dot(self, name: str = "farey") -> str:
        verts = sorted(self.vertices)
        idx = {s: i for i, s in enumerate(verts)}
        lines = [f"graph {name} {{"]
        lines += [f'  v{i} [label="{s!r}"];' for i, s in enumerate(verts)]
        lines += [f"  v{idx[a]} -- v{idx[b]};" for a, b in sorted(self.edges)]
        lines.append("}")
        return "\n".join(lines) + "\n"


DEFAULT_TRIANGLE = (Slope(0, 1), Slope(1, 1), INFINITY)


def farey_exhaustion(start_triangle=DEFAULT_TRIANGLE, steps: int = 3) -> list[SlopeGraph]:
    """X_1 is the triangle; X_{m+1} attaches the missing triangle on every boundary edge."""
    a, b, c = start_triangle
    if not (farey_adjacent(a, b) and farey_adjacent(b, c) and farey_adjacent(a, c)):
        raise NotAdjacentError("start slopes do not form a Farey triangle")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    g = SlopeGraph()
    g.add_triangle(a, b, c)
    out = [g]
    for _ in range(steps):
        prev = out[-1]
        nxt = prev.copy()
        for e in prev.boundary_edges():
            for third in edge_triangles(*e):
                t = frozenset((e[0], e[1], third))
                if t not in prev.triangles:
                    nxt.add_triangle(e[0], e[1], third)
        out.append(nxt)
    return out
