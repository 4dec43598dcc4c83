"""Finite fragments of the pants graph of S_{0,n}."""
from __future__ import annotations

import hashlib
import sys
from collections import defaultdict, deque
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Iterator

from .curves import Curve, PantsDecomposition, intersects_at_most, pants_from_chords
from .errors import ModelMismatchError, UnsupportedError
from .surface import ChordId, SphereModel

Key = tuple  # tuple of coordinate tuples, sorted
Edge = tuple  # (Key, Key) with the smaller key first

MAX_ISO_VERTICES = 50_000


def adjacent(p1: PantsDecomposition, p2: PantsDecomposition) -> bool:
    """Whether two pants decompositions differ by one elementary move."""
    if p1.n != p2.n:
        raise ModelMismatchError("pants decompositions live on different spheres")
    s1, s2 = set(p1.curves), set(p2.curves)
    only1, only2 = s1 - s2, s2 - s1
    if len(only1) != 1 or len(only2) != 1:
        return False
    (a,), (b,) = only1, only2
    return intersects_at_most(a, b, 2) == 2


def _edge(k1: Key, k2: Key) -> Edge:
    return (k1, k2) if k1 < k2 else (k2, k1)


@dataclass
class PantsGraphFragment:
    n: int
    vertices: dict = field(default_factory=dict)  # Key -> PantsDecomposition
    edges: set = field(default_factory=set)  # set of Edge
    _adj: dict | None = field(default=None, repr=False, compare=False)

    # -- construction

    def add_vertex(self, p: PantsDecomposition) -> Key:
        if p.n != self.n:
            raise ModelMismatchError("vertex lives on a different sphere")
        self.vertices.setdefault(p.key, p)
        self._adj = None
        return p.key

    def add_edge(self, k1: Key, k2: Key) -> None:
        if k1 == k2:
            raise ValueError("self-loop")
        self.edges.add(_edge(k1, k2))
        self._adj = None

    def induced(self, keys: Iterable[Key]) -> "PantsGraphFragment":
        keys = set(keys) & self.vertices.keys()
        g = PantsGraphFragment(self.n, {k: self.vertices[k] for k in keys})
        g.edges = {e for e in self.edges if e[0] in keys and e[1] in keys}
        return g

    def copy(self) -> "PantsGraphFragment":
        return PantsGraphFragment(self.n, dict(self.vertices), set(self.edges))

    # -- queries

    def __len__(self):
        return len(self.vertices)

    def __contains__(self, item):
        key = item.key if isinstance(item, PantsDecomposition) else item
        return key in self.vertices

    @property
    def adjacency(self) -> dict:
        if self._adj is None:
            adj = {k: set() for k in self.vertices}
            for a, b in self.edges:
                adj[a].add(b)
                adj[b].add(a)
            self._adj = adj
        return self._adj

    def neighbors(self, key: Key) -> set:
        return self.adjacency[key]

    def degree(self, key: Key) -> int:
        return len(self.adjacency[key])

    def sorted_keys(self) -> list:
        return sorted(self.vertices)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        adj = self.adjacency
        start = next(iter(adj))
        seen = {start}
        todo = deque([start])
        while todo:
            v = todo.popleft()
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(adj)

    def is_subgraph_of(self, other: "PantsGraphFragment") -> bool:
        return self.vertices.keys() <= other.vertices.keys() and self.edges <= other.edges

    def stats(self) -> dict:
        return {"vertices": len(self.vertices), "edges": len(self.edges)}

    def label(self, key: Key) -> str:
        chords = self.vertices[key].chords()
        if chords is not None:
            return " ".join(repr(c) for c in chords)
        return "h" + hashlib.sha1(repr(key).encode()).hexdigest()[:10]

    # -- export

    def to_json(self) -> dict:
        keys = self.sorted_keys()
        index = {k: i for i, k in enumerate(keys)}
        verts = []
        for i, k in enumerate(keys):
            p = self.vertices[k]
            chords = p.chords()
            verts.append({
                "id": i,
                "curves": [list(c) for c in k],
                "chords": None if chords is None else [c.to_json() for c in chords],
            })
        edges = sorted([index[a], index[b]] for a, b in self.edges)
        return {"n": self.n, "vertices": verts, "edges": edges}

    def to_dot(self, name: str = "fragment") -> str:
        keys = self.sorted_keys()
        index = {k: i for i, k in enumerate(keys)}
        lines = [f"graph {name} {{"]
        for i, k in enumerate(keys):
            lines.append(f'  v{i} [label="{self.label(k)}"];')
        for a, b in sorted((index[a], index[b]) for a, b in self.edges):
            lines.append(f"  v{a} -- v{b};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def fragment_from_vertices(n: int, vertices: Iterable[PantsDecomposition]) -> PantsGraphFragment:
    """Induced subgraph of the pants graph on the given vertices.

    Candidate edges come from bucketing vertices on each (n-4)-subset of their
    curves; only pairs within a bucket can be adjacent.
    """
    g = PantsGraphFragment(n)
    for p in vertices:
        g.add_vertex(p)
    buckets: dict = defaultdict(list)
    for key, p in g.vertices.items():
        curves = p.curves
        for m in range(len(curves)):
            buckets[key[:m] + key[m + 1:]].append((curves[m], key))
    for members in buckets.values():
        if len(members) < 2:
            continue
        for x in range(len(members)):
            a, ka = members[x]
            for y in range(x + 1, len(members)):
                b, kb = members[y]
                if intersects_at_most(a, b, 2) == 2:
                    g.edges.add(_edge(ka, kb))
    return g


def union(fragments: Iterable[PantsGraphFragment], n: int) -> PantsGraphFragment:
    """Vertex union with edges recomputed as the induced subgraph."""
    verts: dict = {}
    for f in fragments:
        if f.n != n:
            raise ModelMismatchError("fragments live on different spheres")
        verts.update(f.vertices)
    return fragment_from_vertices(n, verts.values())


def intersection(g1: PantsGraphFragment, g2: PantsGraphFragment) -> PantsGraphFragment:
    if g1.n != g2.n:
        raise ModelMismatchError("fragments live on different spheres")
    keys = g1.vertices.keys() & g2.vertices.keys()
    g = g1.induced(keys)
    g.edges &= g2.edges
    return g


# --------------------------------------------------------------------------
# Z_n

@lru_cache(maxsize=None)
def _triangulations(poly: tuple[int, ...]) -> tuple[frozenset, ...]:
    """Triangulations of a convex polygon, as sets of diagonals (i, j) with i < j."""
    if len(poly) < 3:
        return (frozenset(),)
    first, last = poly[0], poly[-1]
    out = []
    for m in range(1, len(poly) - 1):
        apex = poly[m]
        extra = set()
        if m > 1:
            extra.add((first, apex))
        if m < len(poly) - 2:
            extra.add((apex, last))
        for left in _triangulations(poly[: m + 1]):
            for right in _triangulations(poly[m:]):
                out.append(frozenset(extra) | left | right)
    return tuple(out)


def zn_chord_sets(n: int) -> list[tuple[ChordId, ...]]:
    """Maximal non-crossing sets of chords, sorted.

    Chords join sides, so these are the triangulations of the dual n-gon
    whose corners are the sides.
    """
    SphereModel(n)
    sets = [tuple(sorted(ChordId(i, j) for i, j in t)) for t in _triangulations(tuple(range(1, n + 1)))]
    return sorted(sets)


@lru_cache(maxsize=None)
def _zn(n: int) -> PantsGraphFragment:
    return fragment_from_vertices(n, (pants_from_chords(n, cs) for cs in zn_chord_sets(n)))


def build_Zn(n: int) -> PantsGraphFragment:
    """The subgraph spanned by pants decompositions made of chord curves."""
    return _zn(n).copy()


def restriction(g: PantsGraphFragment, alpha: Curve) -> PantsGraphFragment:
    """Induced subgraph on vertices containing ``alpha``."""
    if alpha.n != g.n:
        raise ModelMismatchError("curve lives on a different sphere")
    return g.induced(k for k, p in g.vertices.items() if alpha in p)


# --------------------------------------------------------------------------
# graph utilities

def _triangle_counts(adj: dict) -> dict:
    out = {}
    for v, nb in adj.items():
        t = 0
        for w in nb:
            t += len(nb & adj[w])
        out[v] = t // 2
    return out


def _generic_adj(g) -> dict:
    if isinstance(g, PantsGraphFragment):
        return g.adjacency
    return {k: set(v) for k, v in g.items()}


def graph_isomorphic(g1, g2) -> tuple[bool, dict | None]:
    """Backtracking isomorphism test; returns ``(True, mapping)`` or ``(False, None)``.

    Accepts fragments or plain adjacency dicts.  Candidates are pruned by
    degree and by the number of triangles through each vertex.
    """
    a1, a2 = _generic_adj(g1), _generic_adj(g2)
    if max(len(a1), len(a2)) > MAX_ISO_VERTICES:
        raise UnsupportedError(f"isomorphism test refused above {MAX_ISO_VERTICES} vertices")
    if len(a1) != len(a2):
        return False, None
    if sum(map(len, a1.values())) != sum(map(len, a2.values())):
        return False, None
    t1, t2 = _triangle_counts(a1), _triangle_counts(a2)
    inv1 = {v: (len(a1[v]), t1[v]) for v in a1}
    inv2 = {v: (len(a2[v]), t2[v]) for v in a2}
    if sorted(inv1.values()) != sorted(inv2.values()):
        return False, None
    by_inv: dict = defaultdict(list)
    for v in sorted(a2):
        by_inv[inv2[v]].append(v)

    # order g1 by BFS so each vertex (after a component root) has a mapped neighbour
    order: list = []
    seen: set = set()
    for root in sorted(a1, key=lambda v: (len(by_inv[inv1[v]]), v)):
        if root in seen:
            continue
        seen.add(root)
        q = deque([root])
        while q:
            v = q.popleft()
            order.append(v)
            for w in sorted(a1[v]):
                if w not in seen:
                    seen.add(w)
                    q.append(w)

    mapping: dict = {}
    used: set = set()

    def candidates(v):
        mapped_nb = [mapping[w] for w in a1[v] if w in mapping]
        if mapped_nb:
            pool = a2[mapped_nb[0]]
            return [c for c in sorted(pool) if inv2[c] == inv1[v]]
        return by_inv[inv1[v]]

    def ok(v, c):
        for w in a1[v]:
            if w in mapping and mapping[w] not in a2[c]:
                return False
        mapped_nb = sum(1 for w in a1[v] if w in mapping)
        return mapped_nb == sum(1 for x in a2[c] if x in used)

    def solve(i):
        if i == len(order):
            return True
        v = order[i]
        for c in candidates(v):
            if c in used or not ok(v, c):
                continue
            mapping[v] = c
            used.add(c)
            if solve(i + 1):
                return True
            del mapping[v]
            used.discard(c)
        return False

    limit = sys.getrecursionlimit()
    sys.setrecursionlimit(max(limit, len(order) + 1000))
    try:
        found = solve(0)
    finally:
        sys.setrecursionlimit(limit)
    return (True, dict(mapping)) if found else (False, None)


def is_isomorphism(g1, g2, mapping: dict) -> bool:
    """Check that ``mapping`` is a graph isomorphism from g1 onto g2."""
    a1, a2 = _generic_adj(g1), _generic_adj(g2)
    if len(mapping) != len(a1) or set(mapping) != set(a1) or set(mapping.values()) != set(a2):
        return False
    e1 = {frozenset((mapping[u], mapping[v])) for u in a1 for v in a1[u]}
    e2 = {frozenset((u, v)) for u in a2 for v in a2[u]}
    return e1 == e2


def cycles_of_length(g, k: int) -> list[tuple]:
    """All simple cycles with ``k`` vertices, each listed once.

    A cycle is reported starting at its smallest vertex, in the direction
    whose second vertex is smaller than its last.
    """
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    adj = _generic_adj(g)
    out = []
    for s in sorted(adj):
        path = [s]
        on_path = {s}

        def walk():
            v = path[-1]
            if len(path) == k:
                if s in adj[v] and path[1] < path[-1]:
                    out.append(tuple(path))
                return
            for w in sorted(adj[v]):
                if w > s and w not in on_path:
                    path.append(w)
                    on_path.add(w)
                    walk()
                    path.pop()
                    on_path.discard(w)

        walk()
    return out


def iter_edges_sorted(g: PantsGraphFragment) -> Iterator[Edge]:
    return iter(sorted(g.edges))
