"""Moving vertices and edges of the pants graph into Z_n.

A pants decomposition is recorded by its dual tree: one trivalent node per
pair of pants and one leaf per puncture.  Drawing that tree inside a polygon
with the leaves on the corners produces a chord decomposition with the same
tree, hence a vertex of Z_n in the same mapping-class orbit.

Edges are reduced with Dehn twists about the curve being replaced, then one
half twist about it.
"""
from __future__ import annotations

import random
from collections import Counter
from dataclasses import dataclass, field

from .curves import (
    Curve,
    PantsDecomposition,
    complement,
    curve_from_chord,
    intersection_number,
    pants_from_chords,
)
from .errors import InvariantViolation, NotAdjacentError, PantsGraphError
from .mcg import (
    MappingClassWord,
    apply,
    compose,
    dehn_twist_word,
    half_twist,
    half_twist_interval_word,
    identity,
    invert,
)
from .pants_graph import adjacent, build_Zn
from .surface import ChordId, SphereModel, chain_curves, chords_cross


# --------------------------------------------------------------------------
# dual trees

@dataclass(frozen=True)
class DualTree:
    """Leaves are ``("p", k)`` for puncture k; internal nodes are ``("x", m)`` for piece m.

    ``edges`` maps each unordered node pair to the curve it crosses (``None``
    for leaf edges).
    """

    n: int
    nodes: tuple
    edges: dict = field(hash=False, compare=False)

    def neighbors(self, v) -> list:
        out = []
        for e in self.edges:
            if v in e:
                a, b = tuple(e)
                out.append(b if a == v else a)
        return sorted(out)

    def degree(self, v) -> int:
        return sum(1 for e in self.edges if v in e)

    def leaves(self) -> list:
        return [v for v in self.nodes if v[0] == "p"]

    def internal(self) -> list:
        return [v for v in self.nodes if v[0] == "x"]

    def is_valid(self) -> bool:
        if len(self.nodes) != 2 * self.n - 2 or len(self.edges) != len(self.nodes) - 1:
            return False
        if any(self.degree(v) != 1 for v in self.leaves()):
            return False
        if any(self.degree(v) != 3 for v in self.internal()):
            return False
        seen, todo = {self.nodes[0]}, [self.nodes[0]]
        while todo:
            v = todo.pop()
            for w in self.neighbors(v):
                if w not in seen:
                    seen.add(w)
                    todo.append(w)
        return len(seen) == len(self.nodes)

    def split_profile(self) -> list:
        """Sorted sizes of the smaller leaf side of every internal edge."""
        out = []
        for e, c in self.edges.items():
            if c is None:
                continue
            side = _leaves_beyond(self, *tuple(e))
            out.append(min(len(side), self.n - len(side)))
        return sorted(out)


def _leaves_beyond(t: DualTree, u, v) -> frozenset:
    """Punctures on the ``v`` side of the edge ``u - v``."""
    seen, todo, out = {u, v}, [v], set()
    while todo:
        x = todo.pop()
        if x[0] == "p":
            out.add(x[1])
        for y in t.neighbors(x):
            if y not in seen:
                seen.add(y)
                todo.append(y)
    return frozenset(out)


def dual_tree(p: PantsDecomposition) -> DualTree:
    rep = complement(p)
    nodes = [("p", k) for k in range(1, p.n + 1)] + [("x", m) for m in range(len(rep.pieces))]
    edges: dict = {}
    owner: dict = {}
    for m, piece in enumerate(rep.pieces):
        for k in piece.punctures:
            edges[frozenset((("x", m), ("p", k)))] = None
        for b in piece.boundaries:
            owner.setdefault(b, []).append(m)
    for b, ms in owner.items():
        if len(ms) != 2:
            raise InvariantViolation(f"curve {b} bounds {len(ms)} pieces")
        edges[frozenset((("x", ms[0]), ("x", ms[1])))] = p.curves[b]
    return DualTree(p.n, tuple(nodes), edges)


@dataclass
class VertexNormalization:
    standard: PantsDecomposition
    order: tuple[int, ...]  # order[k-1] = puncture of the input placed at corner k
    curve_map: dict  # input curve -> chord of the standard vertex
    piece_map: dict  # input piece index -> standard piece index

    def to_json(self) -> dict:
        return {
            "standard": self.standard.to_json(),
            "chords": [c.to_json() for c in self.standard.chords()],
            "puncture_order": list(self.order),
            "curve_map": [[list(c.coords), ch.to_json()] for c, ch in sorted(self.curve_map.items())],
            "piece_map": [[a, b] for a, b in sorted(self.piece_map.items())],
        }


def _embed(t: DualTree) -> list[int]:
    """Leaf order from a depth-first walk rooted at puncture 1, children by smallest leaf."""
    root_leaf = ("p", 1)
    (start,) = t.neighbors(root_leaf)
    min_leaf: dict = {}

    def min_below(v, par):
        key = (v, par)
        if key not in min_leaf:
            if v[0] == "p":
                min_leaf[key] = v[1]
            else:
                min_leaf[key] = min(min_below(w, v) for w in t.neighbors(v) if w != par)
        return min_leaf[key]

    order = [1]
    stack = [(start, root_leaf)]
    while stack:
        v, par = stack.pop()
        if v[0] == "p":
            order.append(v[1])
            continue
        kids = sorted((w for w in t.neighbors(v) if w != par), key=lambda w: min_below(w, v))
        stack.extend((w, v) for w in reversed(kids))
    return order


def standard_vertex_from_tree(t: DualTree) -> VertexNormalization:
    if not t.is_valid():
        raise PantsGraphError("malformed dual tree")
    n = t.n
    order = _embed(t)
    if sorted(order) != list(range(1, n + 1)):
        raise InvariantViolation("leaf walk did not visit every puncture once")
    position = {k: i + 1 for i, k in enumerate(order)}
    curve_map = {}
    chords = []
    for e, c in t.edges.items():
        if c is None:
            continue
        u, v = tuple(e)
        side = _leaves_beyond(t, u, v)
        if 1 in side:
            side = _leaves_beyond(t, v, u)
        pos = sorted(position[k] for k in side)
        if pos != list(range(pos[0], pos[-1] + 1)):
            raise InvariantViolation("subtree leaves are not consecutive corners")
        ch = ChordId(pos[0], pos[-1] % n + 1)
        chords.append(ch)
        curve_map[c] = ch
    std = pants_from_chords(n, chords)
    return VertexNormalization(std, tuple(order), curve_map, {})


def _piece_map(p: PantsDecomposition, res: VertexNormalization) -> dict:
    rep_in, rep_out = complement(p), complement(res.standard)
    position = {k: i + 1 for i, k in enumerate(res.order)}
    out_index = {}
    for m, piece in enumerate(rep_out.pieces):
        bounds = frozenset(res.standard.curves[b] for b in piece.boundaries)
        out_index[(frozenset(piece.punctures), bounds)] = m
    chord_curve = {ch: curve_from_chord(p.n, ch) for ch in res.curve_map.values()}
    mapping = {}
    for m, piece in enumerate(rep_in.pieces):
        punct = frozenset(position[k] for k in piece.punctures)
        bounds = frozenset(chord_curve[res.curve_map[p.curves[b]]] for b in piece.boundaries)
        mapping[m] = out_index[(punct, bounds)]
    return mapping


def normalize_vertex(p: PantsDecomposition) -> VertexNormalization:
    """A vertex of Z_n with the same dual tree, plus the piece correspondence."""
    res = standard_vertex_from_tree(dual_tree(p))
    res.piece_map = _piece_map(p, res)
    return res


# --------------------------------------------------------------------------
# edges

def flip_partner(p: PantsDecomposition, u: Curve) -> Curve:
    """The other chord in the 4-holed sphere left when ``u`` is removed from a Z_n vertex."""
    chords = p.chords()
    cu = u.chord()
    if chords is None or cu is None:
        raise PantsGraphError("flip partner needs a vertex made of chord curves")
    rest = [c for c in chords if c != cu]
    n = p.n
    for i in range(1, n + 1):
        for j in range(i + 2, n + 1):
            if i == 1 and j == n:
                continue
            c = ChordId(i, j)
            if c == cu or c in rest:
                continue
            if any(chords_cross(c, r) for r in rest):
                continue
            return curve_from_chord(n, c)
    raise InvariantViolation(f"no flip partner for {cu!r}")


@dataclass
class EdgeNormalization:
    edge: tuple  # two Z_n vertices
    word: MappingClassWord  # carries (p1, p2) onto ``edge``
    twists: int
    half_twist_sign: int | None
    intersections: list  # i(u2, alpha) before each twist and at the end

    def to_json(self) -> dict:
        return {
            "edge": [[c.to_json() for c in v.chords()] for v in self.edge],
            "word": self.word.to_json(),
            "twists": self.twists,
            "half_twist_sign": self.half_twist_sign,
            "intersections": list(self.intersections),
        }


def _is_zn(p: PantsDecomposition) -> bool:
    return p.chords() is not None


def normalize_edge(p1: PantsDecomposition, p2: PantsDecomposition) -> EdgeNormalization:
    """Twist ``p2`` about the replaced curve until the edge lies in Z_n."""
    n = p1.n
    if not adjacent(p1, p2):
        raise NotAdjacentError("the two pants decompositions are not adjacent")
    if not _is_zn(p1):
        raise PantsGraphError("the first vertex must lie in Z_n")
    (u1,) = set(p1.curves) - set(p2.curves)
    (u2,) = set(p2.curves) - set(p1.curves)
    alpha = flip_partner(p1, u1)
    c1 = u1.chord()
    word = identity(n)
    cur = u2
    k = intersection_number(cur, alpha)
    seen = [k]
    limit = k // 2 + 1
    twists = 0
    while k > 2:
        if twists >= limit:
            raise InvariantViolation(f"twist loop did not terminate from i = {seen[0]}")
        best = None
        for sign in (1, -1):
            w = dehn_twist_word(n, c1, sign)
            img = apply(w, cur)
            ki = intersection_number(img, alpha)
            if ki < k and (best is None or ki < best[1]):
                best = (w, ki, img)
        if best is None or best[1] != k - 4:
            got = None if best is None else best[1]
            raise InvariantViolation(f"full twist changed i(u2, alpha) from {k} to {got}, not by -4")
        word = compose(word, best[0])
        cur, k = best[2], best[1]
        seen.append(k)
        twists += 1

    if k == 0:
        if cur != alpha:
            raise InvariantViolation("curve disjoint from alpha in the 4-holed sphere is not alpha")
        edge = (apply(word, p1), apply(word, p2))
        return EdgeNormalization(edge, word, twists, None, seen)

    q1 = apply(word, p1)
    for sign in (1, -1):
        h = half_twist_interval_word(n, c1, sign)
        a = apply(h, q1)
        if not _is_zn(a):
            continue
        target = flip_partner(a, u1)
        if apply(h, cur) == target:
            full = compose(word, h)
            edge = (a, apply(full, p2))
            return EdgeNormalization(edge, full, twists, sign, seen)
    raise InvariantViolation("neither half twist carries the edge into Z_n")


# --------------------------------------------------------------------------
# randomized orbit check

def random_word(n: int, length: int, rng: random.Random) -> MappingClassWord:
    gens = []
    C = chain_curves(n)
    for _ in range(length):
        gens.extend(half_twist(n, rng.choice(C), rng.choice((1, -1))).gens)
    return MappingClassWord(n, tuple(gens))


def flip(p: PantsDecomposition, u: Curve) -> PantsDecomposition:
    other = flip_partner(p, u)
    return PantsDecomposition([c for c in p.curves if c != u] + [other], p.n, check=False)


def random_edge(n: int, rng: random.Random, max_twist: int = 3):
    """An edge (p1, p2) with p1 in Z_n and p2 an arbitrary neighbour across one curve.

    With H a half twist about ``u1``, the neighbours of p1 across ``u1`` are
    T^k(alpha) and T^k(H(alpha0)), where alpha0 is the flip partner of u1 in H^-1(p1).
    """
    zn = build_Zn(n)
    p1 = zn.vertices[rng.choice(sorted(zn.vertices))]
    u1 = rng.choice(p1.curves)
    c1 = u1.chord()
    k = rng.randint(-max_twist, max_twist)
    half = rng.choice((0, 1, -1))
    if half:
        h = half_twist_interval_word(n, c1, half)
        p0 = apply(invert(h), p1)
        base = apply(h, flip(p0, u1))
    else:
        base = flip(p1, u1)
    p2 = apply(MappingClassWord(n, dehn_twist_word(n, c1, 1 if k > 0 else -1).gens * abs(k)), base)
    return p1, p2


@dataclass
class OrbitReport:
    n: int
    seed: int
    trials: int
    max_word_len: int
    vertex_pass: int = 0
    vertex_fail: int = 0
    edge_pass: int = 0
    edge_fail: int = 0
    max_twists: int = 0
    half_twist_signs: Counter = field(default_factory=Counter)
    histogram: Counter = field(default_factory=Counter)
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.vertex_fail == 0 and self.edge_fail == 0

    def to_json(self) -> dict:
        return {
            "check": "orbit_cover",
            "n": self.n,
            "seed": self.seed,
            "trials": self.trials,
            "max_word_len": self.max_word_len,
            "outcome": "pass" if self.ok else "fail",
            "vertex": {"pass": self.vertex_pass, "fail": self.vertex_fail},
            "edge": {"pass": self.edge_pass, "fail": self.edge_fail},
            "max_twist_loop": self.max_twists,
            "half_twist_signs": {str(k): v for k, v in sorted(self.half_twist_signs.items(), key=str)},
            "intersection_histogram": {str(k): v for k, v in sorted(self.histogram.items())},
            "failures": self.failures[:10],
        }


def orbit_cover_check(n: int, trials: int = 100, max_word_len: int = 6, seed: int = 0) -> OrbitReport:
    if n < 5:
        raise PantsGraphError("orbit check needs n >= 5")
    rng = random.Random(seed)
    zn = build_Zn(n)
    keys = sorted(zn.vertices)
    rep = OrbitReport(n, seed, trials, max_word_len)
    for t in range(trials):
        v = zn.vertices[rng.choice(keys)]
        w = random_word(n, rng.randint(0, max_word_len), rng)
        p = apply(w, v)
        try:
            res = normalize_vertex(p)
            good = res.standard.key in zn.vertices and dual_tree(p).is_valid()
        except PantsGraphError as exc:
            good = False
            rep.failures.append({"trial": t, "kind": "vertex", "error": str(exc)})
        if good:
            rep.vertex_pass += 1
        else:
            rep.vertex_fail += 1

        p1, p2 = random_edge(n, rng)
        try:
            er = normalize_edge(p1, p2)
            good = all(x.key in zn.vertices for x in er.edge) and (
                tuple(sorted(x.key for x in er.edge)) in zn.edges
            )
            rep.max_twists = max(rep.max_twists, er.twists)
            rep.half_twist_signs[er.half_twist_sign] += 1
            for x in er.intersections:
                rep.histogram[x] += 1
        except PantsGraphError as exc:
            good = False
            rep.failures.append({"trial": t, "kind": "edge", "error": str(exc)})
        if good:
            rep.edge_pass += 1
        else:
            rep.edge_fail += 1
    return rep
