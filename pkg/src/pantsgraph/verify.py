"""Machine checks of the finite structural claims about Z_n, X_5 and X_n."""
from __future__ import annotations

import time
from dataclasses import dataclass, field

from .curves import PantsDecomposition, curve_from_chord
from .farey import farey_adjacent, farey_exhaustion, slope
from .mcg import apply, half_twist, involution_e_word
from .normalization import flip, orbit_cover_check
from .pants_graph import (
    PantsGraphFragment,
    adjacent,
    build_Zn,
    cycles_of_length,
    fragment_from_vertices,
    graph_isomorphic,
    intersection,
    is_isomorphism,
    restriction,
)
from .rigid_sets import build_X, build_X5, build_Xn, chain_embedding, exhaustion_sequence, generator_words
from .surface import ChordId, chain_curves

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class VerificationReport:
    check: str
    params: dict
    outcome: str
    witness: dict = field(default_factory=dict)
    runtime: float = 0.0

    @property
    def ok(self) -> bool:
        return self.outcome != FAIL

    def to_json(self, with_runtime: bool = False) -> dict:
        d = {"check": self.check, "params": self.params, "outcome": self.outcome, "witness": self.witness}
        if with_runtime:
            d["runtime_s"] = round(self.runtime, 3)
        return d


def _timed(fn):
    def wrapper(*args, **kwargs):
        t0 = time.perf_counter()
        rep = fn(*args, **kwargs)
        rep.runtime = time.perf_counter() - t0
        return rep

    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


def _chords(p: PantsDecomposition):
    cs = p.chords()
    return None if cs is None else [c.to_json() for c in cs]


def _image(frag: PantsGraphFragment, w) -> PantsGraphFragment:
    return fragment_from_vertices(frag.n, (apply(w, p) for p in frag.vertices.values()))


# --------------------------------------------------------------------------

def pentagon_pattern(g: PantsGraphFragment) -> tuple[bool, dict]:
    """Is ``g`` one 5-cycle whose consecutive vertices share exactly one curve, all shared curves distinct?"""
    info = {"vertices": len(g), "edges": len(g.edges)}
    if len(g) != 5 or len(g.edges) != 5 or any(g.degree(k) != 2 for k in g.vertices) or not g.is_connected():
        return False, info
    (cyc,) = cycles_of_length(g, 5)
    shared = []
    for a, b in zip(cyc, cyc[1:] + cyc[:1]):
        common = set(g.vertices[a].curves) & set(g.vertices[b].curves)
        if len(common) != 1:
            return False, info
        shared.append(common.pop())
    info["cycle"] = [_chords(g.vertices[k]) or list(k) for k in cyc]
    return len(set(shared)) == 5, info


@_timed
def verify_z5_pentagon(z5: PantsGraphFragment | None = None) -> VerificationReport:
    z5 = build_Zn(5) if z5 is None else z5
    ok, info = pentagon_pattern(z5)
    return VerificationReport("z5_pentagon", {"n": 5}, PASS if ok else FAIL, info)


def attached_triangles(x: PantsGraphFragment, base: PantsGraphFragment) -> list[tuple]:
    """Triangles of ``x`` that contain an edge of ``base``."""
    return [t for t in cycles_of_length(x, 3)
            if any((a, b) in base.edges or (b, a) in base.edges for a, b in ((t[0], t[1]), (t[1], t[2]), (t[0], t[2])))]


@_timed
def verify_x5_shape() -> VerificationReport:
    z5, x5 = build_Zn(5), build_X5()
    tri_all = cycles_of_length(x5, 3)
    tri = attached_triangles(x5, z5)
    per_edge = {e: [t for t in tri if e[0] in t and e[1] in t] for e in sorted(z5.edges)}
    apex = {e: sorted(k for t in ts for k in t if k not in z5.vertices) for e, ts in per_edge.items()}
    e = involution_e_word(5)
    fixes_z5 = all(apply(e, p) == p for p in z5.vertices.values())
    swaps = all(
        len(a) == 2 and apply(e, x5.vertices[a[0]]).key == a[1] and apply(e, x5.vertices[a[1]]).key == a[0]
        for a in apex.values()
    )
    preserves = all(apply(e, p).key in x5.vertices for p in x5.vertices.values())
    one_outside = all(sum(k not in z5.vertices for k in t) == 1 for t in tri)
    checks = {
        "contains_z5": z5.is_subgraph_of(x5),
        "attached_triangles_10": len(tri) == 10,
        "two_per_z5_edge": all(len(ts) == 2 for ts in per_edge.values()),
        "one_vertex_outside_z5": one_outside,
        "e_fixes_z5": fixes_z5,
        "e_swaps_triangle_pairs": swaps,
        "e_preserves_x5": preserves,
    }
    witness = {
        "checks": checks,
        "vertices": len(x5),
        "edges": len(x5.edges),
        "attached_triangles": len(tri),
        "all_triangles": len(tri_all),
    }
    return VerificationReport("x5_shape", {"n": 5}, PASS if all(checks.values()) else FAIL, witness)


@_timed
def verify_overlap_n5(alpha: ChordId, sign: int) -> VerificationReport:
    """X_5 and its half-twist image should meet in two pentagons sharing an edge plus four triangles."""
    z5, x5 = build_Zn(5), build_X5()
    w = half_twist(5, alpha, sign)
    ov = intersection(x5, _image(x5, w))
    tz5 = _image(z5, w)
    pent = cycles_of_length(ov, 5)
    tri = cycles_of_length(ov, 3)
    shared = z5.edges & tz5.edges
    a = curve_from_chord(5, alpha)
    expected_shared = {tuple(sorted(k for k, p in z5.vertices.items() if a in p))}
    checks = {
        "z5_in_overlap": z5.is_subgraph_of(ov),
        "image_z5_in_overlap": tz5.is_subgraph_of(ov),
        "exactly_two_pentagons": len(pent) == 2,
        "share_one_edge": len(shared) == 1,
        "shared_edge_contains_alpha": shared == expected_shared,
        "exactly_four_triangles": len(tri) == 4,
        "vertex_count_matches": len(ov) == 8 + 4,
    }
    witness = {
        "checks": checks,
        "overlap_vertices": len(ov),
        "overlap_edges": len(ov.edges),
        "pentagons": len(pent),
        "triangles": len(tri),
        "expected": {"pentagons": 2, "triangles": 4, "vertices": 12},
    }
    params = {"n": 5, "alpha": alpha.to_json(), "sign": sign}
    return VerificationReport("overlap_n5", params, PASS if all(checks.values()) else FAIL, witness)


@_timed
def verify_chain_restriction(n: int, alpha: ChordId) -> VerificationReport:
    """Vertices of X_n containing a chain curve form a copy of X_{n-1}, via the relabeling map."""
    params = {"n": n, "alpha": alpha.to_json()}
    if n < 6:
        return VerificationReport("chain_restriction", params, SKIPPED, {"reason": "needs n >= 6"})
    xn, smaller = build_Xn(n), build_X(n - 1)
    r = restriction(xn, curve_from_chord(n, alpha))
    h = chain_embedding(n, alpha)
    mapping = {k: h(p).key for k, p in smaller.vertices.items()}
    named = is_isomorphism(smaller, r, mapping)
    z_ok = all(h(p).chords() is not None for p in build_Zn(n - 1).vertices.values())
    witness = {
        "restriction": r.stats(),
        "smaller": smaller.stats(),
        "named_map_is_isomorphism": named,
        "z_maps_into_z": z_ok,
    }
    if not named:
        iso, _ = graph_isomorphic(smaller, r)
        witness["isomorphic_by_search"] = iso
    return VerificationReport("chain_restriction", params, PASS if named and z_ok else FAIL, witness)


@_timed
def verify_overlap_contains(n: int, alpha: ChordId, sign: int) -> VerificationReport:
    """The overlap X_n and T(X_n) contains the alpha-restriction, and strictly."""
    params = {"n": n, "alpha": alpha.to_json(), "sign": sign}
    if n < 6:
        return VerificationReport("overlap_contains", params, SKIPPED, {"reason": "needs n >= 6"})
    xn = build_Xn(n)
    w = half_twist(n, alpha, sign)
    ov = intersection(xn, _image(xn, w))
    a = curve_from_chord(n, alpha)
    r = restriction(xn, a)
    contains = r.is_subgraph_of(ov)
    found = None
    for key in sorted(build_Zn(n).vertices):
        p = xn.vertices[key]
        if a not in p:
            continue
        q = apply(w, flip(p, a))
        if q.key in ov.vertices and adjacent(q, p) and a not in q and q.key not in r.vertices:
            found = {"P": _chords(p), "P_flipped": _chords(flip(p, a)), "image": [list(c.coords) for c in q.curves]}
            break
    witness = {
        "restriction": r.stats(),
        "overlap": ov.stats(),
        "restriction_in_overlap": contains,
        "proper_witness": found,
    }
    ok = contains and found is not None and len(ov) > len(r)
    return VerificationReport("overlap_contains", params, PASS if ok else FAIL, witness)


@_timed
def verify_exhaustion_coverage(n: int = 5, depth: int = 2) -> VerificationReport:
    """Every word of length <= depth in the chain half twists carries X_1 into X_{depth+1}."""
    stages = exhaustion_sequence(n, depth)
    last = stages[-1].fragment
    gens = generator_words(n)
    frontier = set(stages[0].fragment.vertices)
    verts = dict(stages[0].fragment.vertices)
    missing = []
    for _ in range(depth):
        nxt = set()
        for key in sorted(frontier):
            for g in gens:
                q = apply(g, verts[key])
                if q.key not in verts:
                    verts[q.key] = q
                    nxt.add(q.key)
                if q.key not in last.vertices:
                    missing.append(list(q.key))
        frontier = nxt
    sizes = [len(s.fragment) for s in stages]
    strict = all(a < b for a, b in zip(sizes, sizes[1:]))
    mono = all(s.fragment.is_subgraph_of(t.fragment) for s, t in zip(stages, stages[1:]))
    witness = {"stage_sizes": sizes, "strict": strict, "monotone": mono, "missing": missing[:5]}
    ok = not missing and strict and mono
    return VerificationReport("exhaustion_coverage", {"n": n, "depth": depth}, PASS if ok else FAIL, witness)


@_timed
def verify_farey(bound: int = 5, steps: int = 6) -> VerificationReport:
    stages = farey_exhaustion(steps=steps)
    sizes = [len(g.vertices) for g in stages]
    strict = all(a.is_subgraph_of(b) and len(a.vertices) < len(b.vertices) for a, b in zip(stages, stages[1:]))
    wanted = {slope(p, q) for p in range(-bound, bound + 1) for q in range(0, bound + 1) if (p, q) != (0, 0)}
    missing = sorted(wanted - stages[-1].vertices)
    ok = strict and not missing
    witness = {"stage_sizes": sizes, "strict": strict, "missing": [s.to_json() for s in missing[:5]]}
    return VerificationReport("farey_exhaustion", {"bound": bound, "steps": steps}, PASS if ok else FAIL, witness)


@_timed
def verify_orbit(n: int, trials: int, max_word_len: int, seed: int) -> VerificationReport:
    rep = orbit_cover_check(n, trials, max_word_len, seed)
    data = rep.to_json()
    params = {k: data.pop(k) for k in ("n", "seed", "trials", "max_word_len")}
    data.pop("check")
    outcome = data.pop("outcome")
    return VerificationReport("orbit_cover", params, outcome, data)


def verify_all(n: int, seed: int = 0, trials: int = 100, max_word_len: int = 6) -> list[VerificationReport]:
    reports: list[VerificationReport] = []
    if n == 4:
        reports.append(verify_farey())
        return reports
    if n == 5:
        reports.append(verify_z5_pentagon())
        reports.append(verify_x5_shape())
        for c in chain_curves(5):
            for s in (1, -1):
                reports.append(verify_overlap_n5(c, s))
        reports.append(verify_exhaustion_coverage(5, 2))
    else:
        for c in chain_curves(n):
            reports.append(verify_chain_restriction(n, c))
        for c in chain_curves(n):
            for s in (1, -1):
                reports.append(verify_overlap_contains(n, c, s))
    reports.append(verify_orbit(n, trials, max_word_len, seed))
    return reports
