"""Finite rigid sets X_5, X_n and the half-twist exhaustion sequence."""
from __future__ import annotations

import os
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import combinations

from .curves import (
    Curve,
    Multicurve,
    PantsDecomposition,
    complement,
    curve_from_chord,
    from_sequence,
)
from .errors import BudgetExceededError, UnsupportedError
from .mcg import MappingClassWord, apply, compose, half_twist, identity
from .pants_graph import PantsGraphFragment, build_Zn, fragment_from_vertices
from .surface import ChordId, SphereModel, chain_curves, chords_cross, gamma_family

DEFAULT_BUDGET = 1_000_000


def default_budget() -> int:
    env = os.environ.get("PANTSGRAPH_BUDGET")
    if env:
        value = int(env)
        if value <= 0:
            raise ValueError("PANTSGRAPH_BUDGET must be positive")
        return value
    return DEFAULT_BUDGET


@dataclass
class RigidSetStage:
    index: int
    fragment: PantsGraphFragment
    provenance: dict = field(default_factory=dict, repr=False)  # key -> MappingClassWord

    @property
    def n(self) -> int:
        return self.fragment.n

    def stats(self) -> dict:
        return {"stage": self.index, **self.fragment.stats()}


# --------------------------------------------------------------------------
# relabeling a 5-punctured piece into S_{0,n}

def relabel_curve(c: Curve, sides: tuple[int, ...], n: int) -> Curve:
    """Carry a curve on S_{0,m} into S_{0,n}, sending side t to ``sides[t-1]``.

    ``sides`` must be increasing: they are the corners of a region of a chord
    dissection, and the doubled region is the subsurface receiving the curve.
    """
    if len(sides) != c.n:
        raise ValueError("need one target side per source side")
    return from_sequence(n, tuple(sides[s - 1] for s in c.sequence))


def relabel_pants(p: PantsDecomposition, sides: tuple[int, ...], n: int, extra: tuple[Curve, ...]) -> PantsDecomposition:
    curves = [relabel_curve(c, sides, n) for c in p.curves] + list(extra)
    return PantsDecomposition(curves, n, check=False)


def _regions(n: int, chords: tuple[ChordId, ...]) -> list[tuple[int, ...]]:
    """Regions of the dissection of the dual n-gon (corners are sides)."""
    regions = [tuple(range(1, n + 1))]
    for c in chords:
        for r in regions:
            if c.i in r and c.j in r:
                a, b = sorted((r.index(c.i), r.index(c.j)))
                regions.remove(r)
                regions.append(r[a:b + 1])
                regions.append(r[b:] + r[:a + 1])
                break
    return [tuple(sorted(r)) for r in regions]


@dataclass(frozen=True)
class WPiece:
    """A deficiency-2 chord multicurve whose complement has one S_(0,5) piece."""

    n: int
    chords: tuple[ChordId, ...]
    sides: tuple[int, ...]  # the five sides bounding the piece, increasing

    @property
    def multicurve(self) -> Multicurve:
        return Multicurve([curve_from_chord(self.n, c) for c in self.chords], self.n, check=False)

    def h(self, c: Curve) -> Curve:
        return relabel_curve(c, self.sides, self.n)

    def h_pants(self, p: PantsDecomposition) -> PantsDecomposition:
        return relabel_pants(p, self.sides, self.n, self.multicurve.curves)

    def to_json(self) -> dict:
        return {"chords": [c.to_json() for c in self.chords], "sides": list(self.sides)}


def chain_inner_side(n: int, alpha: ChordId) -> int:
    """The side lying strictly inside a chain curve."""
    if alpha not in chain_curves(n):
        raise UnsupportedError(f"{alpha!r} is not a chain curve")
    if alpha.j - alpha.i == 2:
        return alpha.i + 1
    return n if alpha.i == 1 else 1


def chain_piece_sides(n: int, alpha: ChordId) -> tuple[int, ...]:
    """Sides bounding the S_(0,n-1) piece cut off by a chain curve, increasing."""
    inner = chain_inner_side(n, alpha)
    return tuple(s for s in range(1, n + 1) if s != inner)


def chain_embedding(n: int, alpha: ChordId):
    """The map v -> h(v) + {alpha} from vertices on S_(0,n-1) into S_(0,n)."""
    sides = chain_piece_sides(n, alpha)
    extra = (curve_from_chord(n, alpha),)
    return lambda p: relabel_pants(p, sides, n, extra)


def enumerate_W(n: int) -> list[WPiece]:
    if n < 6:
        raise UnsupportedError("W pieces exist only for n >= 6")
    gam = gamma_family(n)
    out = []
    for ws in combinations(gam, n - 5):
        if any(chords_cross(a, b) for a, b in combinations(ws, 2)):
            continue
        regions = _regions(n, ws)
        big = [r for r in regions if len(r) > 3]
        if len(big) != 1 or len(big[0]) != 5:
            continue
        mc = Multicurve([curve_from_chord(n, c) for c in ws], n, check=False)
        pieces = complement(mc).nontrivial_pieces
        if len(pieces) != 1 or pieces[0].k != 5:
            continue
        out.append(WPiece(n, tuple(ws), big[0]))
    return out


# --------------------------------------------------------------------------
# X_5 and X_n

@lru_cache(maxsize=None)
def _x5() -> tuple[PantsGraphFragment, dict]:
    z = build_Zn(5)
    prov = {k: identity(5) for k in z.vertices}
    verts = list(z.vertices.values())
    for c in gamma_family(5):
        for sign in (1, -1):
            w = half_twist(5, c, sign)
            for p in z.vertices.values():
                q = apply(w, p)
                if q.key not in prov:
                    prov[q.key] = w
                    verts.append(q)
    return fragment_from_vertices(5, verts), prov


def build_X5() -> PantsGraphFragment:
    """Z_5 together with its images under the half twists about the five chain curves."""
    return _x5()[0].copy()


def x5_provenance() -> dict:
    return dict(_x5()[1])


def induced_x5(w: WPiece) -> PantsGraphFragment:
    """The copy of X_5 sitting in the S_(0,5) piece cut out by ``w``."""
    x5 = _x5()[0]
    return fragment_from_vertices(w.n, (w.h_pants(p) for p in x5.vertices.values()))


@lru_cache(maxsize=None)
def _xn(n: int) -> PantsGraphFragment:
    verts: dict = dict(build_Zn(n).vertices)
    x5 = _x5()[0]
    for w in enumerate_W(n):
        for p in x5.vertices.values():
            q = w.h_pants(p)
            verts.setdefault(q.key, q)
    return fragment_from_vertices(n, verts.values())


def build_Xn(n: int) -> PantsGraphFragment:
    if n < 6:
        raise UnsupportedError("build_Xn needs n >= 6; use build_X5 for n = 5")
    return _xn(n).copy()


def build_X(n: int) -> PantsGraphFragment:
    """X_5 for n = 5, X_n for n >= 6."""
    return build_X5() if n == 5 else build_Xn(n)


# --------------------------------------------------------------------------
# exhaustion

def generator_words(n: int, C=None) -> list[MappingClassWord]:
    C = chain_curves(n) if C is None else list(C)
    return [half_twist(n, c, s) for c in C for s in (1, -1)]


def initial_stage(n: int) -> RigidSetStage:
    frag = build_X(n)
    if n == 5:
        prov = x5_provenance()
    else:
        prov = {k: identity(n) for k in frag.vertices}
    return RigidSetStage(1, frag, prov)


def exhaust_step(stage: RigidSetStage, C=None, budget: int | None = None) -> RigidSetStage:
    """Adjoin all half-twist images of the current vertices and recompute edges."""
    n = stage.n
    gens = generator_words(n, C)
    budget = default_budget() if budget is None else budget
    projected = len(stage.fragment) * (1 + len(gens))
    if projected > budget:
        raise BudgetExceededError(projected, budget)
    verts = dict(stage.fragment.vertices)
    prov = dict(stage.provenance)
    for key in sorted(stage.fragment.vertices):
        p = stage.fragment.vertices[key]
        base = prov.get(key, identity(n))
        for w in gens:
            q = apply(w, p)
            if q.key not in verts:
                verts[q.key] = q
                prov[q.key] = compose(base, w)
    return RigidSetStage(stage.index + 1, fragment_from_vertices(n, verts.values()), prov)


def projected_size(start: int, gens: int, steps: int) -> int:
    return start * (1 + gens) ** steps


def exhaustion_sequence(n: int, steps: int, budget: int | None = None, C=None) -> list[RigidSetStage]:
    """X_1 = X_5 or X_n, followed by ``steps`` exhaustion steps.

    The worst-case size ``|X_1| (1 + 2|C|)^steps`` is checked against the
    budget before any work is done.
    """
    if n < 5:
        raise UnsupportedError("use the Farey model for n = 4")
    if steps < 0:
        raise ValueError("steps must be nonnegative")
    budget = default_budget() if budget is None else budget
    if budget <= 0:
        raise ValueError("budget must be positive")
    gens = generator_words(n, C)
    start = initial_stage(n)
    projected = projected_size(len(start.fragment), len(gens), steps)
    if projected > budget:
        raise BudgetExceededError(projected, budget)
    stages = [start]
    for _ in range(steps):
        stages.append(exhaust_step(stages[-1], C, budget))
    return stages
