"""Mapping classes of S_{0,n} as words in half twists, acting on curves.

The fundamental group is read off cutting sequences: with the basepoint in the
front polygon, the loop ``x_k`` leaves through side ``k`` and comes back
through side ``k+1``, so it encircles puncture ``k`` and
``x_1 x_2 ... x_n = 1``.  The half twist exchanging punctures ``p`` and
``p+1`` acts by the Artin automorphism

    x_p -> x_p x_{p+1} x_p^-1,   x_{p+1} -> x_p

(sign +1) and its inverse (sign -1).  Rotation shifts side labels; the
involution ``e`` swaps the front and back polygons.

Words act left to right: the first generator is applied first.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, TypeVar, Union

from .curves import Curve, Letter, Multicurve, PantsDecomposition, coords_from_sequence, reduce_cyclic
from .errors import InvalidChordError, ModelMismatchError, UnsupportedError
from .surface import ChordId, SphereModel, chain_curves, chord_from_json

HALF_TWIST_CHAIN = "half_twist_chain"
FULL_TWIST_INTERVAL = "full_twist_interval"
HALF_TWIST_INTERVAL = "half_twist_interval"
ROTATION = "rotation"
INVOLUTION_E = "involution_e"
KINDS = (HALF_TWIST_CHAIN, FULL_TWIST_INTERVAL, HALF_TWIST_INTERVAL, ROTATION, INVOLUTION_E)

# primitive moves: ("sigma", p, sign), ("rot", sign), ("e",)
Prim = tuple


# --------------------------------------------------------------------------
# free group plumbing

def x_word(n: int, seq: tuple[int, ...]) -> list[Letter]:
    """The front-based loop of a cutting sequence, as a word in the x_k."""
    out: list[Letter] = []
    for t in range(0, len(seq), 2):
        a, b = seq[t], seq[t + 1]
        k = a
        while k != b:
            out.append((k, 1))
            k = k % n + 1
    return out


def s_letters(n: int, word: Iterable[Letter]) -> list[Letter]:
    out: list[Letter] = []
    for k, e in word:
        k1 = k % n + 1
        if e == 1:
            out.append((k, 1))
            out.append((k1, -1))
        else:
            out.append((k1, 1))
            out.append((k, -1))
    return out


def apply_automorphism(n: int, seq: tuple[int, ...], images: dict[int, list[Letter]]) -> tuple[int, ...]:
    """Image cutting sequence under the automorphism ``x_k -> images[k]``."""
    word: list[Letter] = []
    for k, e in x_word(n, seq):
        img = images.get(k)
        if img is None:
            word.append((k, e))
        elif e == 1:
            word.extend(img)
        else:
            word.extend((m, -f) for m, f in reversed(img))
    return reduce_cyclic(s_letters(n, word))


def sigma_images(n: int, p: int, sign: int) -> dict[int, list[Letter]]:
    q = p % n + 1
    if sign == 1:
        return {p: [(p, 1), (q, 1), (p, -1)], q: [(p, 1)]}
    return {p: [(q, 1)], q: [(q, -1), (p, 1), (q, 1)]}


def _apply_prim_seq(n: int, prim: Prim, seq: tuple[int, ...]) -> tuple[int, ...]:
    kind = prim[0]
    if kind == "sigma":
        return apply_automorphism(n, seq, sigma_images(n, prim[1], prim[2]))
    if kind == "rot":
        shift = prim[1]
        return tuple((s - 1 + shift) % n + 1 for s in seq)
    if kind == "e":
        return seq[1:] + seq[:1]
    raise ValueError(f"unknown primitive {prim!r}")


@lru_cache(maxsize=1 << 20)
def apply_primitive(prim: Prim, c: Curve) -> Curve:
    seq = _apply_prim_seq(c.n, prim, c.sequence)
    return Curve(c.n, coords_from_sequence(c.n, seq), seq)


def _invert_prim(prim: Prim) -> Prim:
    if prim[0] == "sigma":
        return ("sigma", prim[1], -prim[2])
    if prim[0] == "rot":
        return ("rot", -prim[1])
    return prim


# --------------------------------------------------------------------------
# generators and words

def _garside(interval: tuple[int, ...], sign: int) -> list[Prim]:
    """Half twist on consecutive punctures: the Garside element of that braid group."""
    k = len(interval)
    word: list[Prim] = []
    for m in range(k - 1, 0, -1):
        word.extend(("sigma", interval[t], 1) for t in range(m))
    if sign == -1:
        word = [_invert_prim(p) for p in reversed(word)]
    return word


@dataclass(frozen=True)
class Generator:
    kind: str
    chord: ChordId | None = None
    sign: int = 1

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if self.kind in (ROTATION, INVOLUTION_E):
            if self.chord is not None:
                raise ValueError(f"{self.kind} takes no chord")
        elif self.chord is None:
            raise ValueError(f"{self.kind} needs a chord")

    def validate(self, model: SphereModel) -> None:
        if self.chord is None:
            return
        model.check_chord(self.chord)
        if self.kind == HALF_TWIST_CHAIN and self.chord not in chain_curves(model.n):
            raise InvalidChordError(f"{self.chord!r} is not a chain curve")

    def expand(self, n: int) -> list[Prim]:
        if self.kind == ROTATION:
            return [("rot", self.sign)]
        if self.kind == INVOLUTION_E:
            return [("e",)]
        interval = SphereModel(n).enclosed(self.chord)
        if self.kind == HALF_TWIST_CHAIN:
            return [("sigma", interval[0], self.sign)]
        if self.kind == HALF_TWIST_INTERVAL:
            return _garside(interval, self.sign)
        return _garside(interval, self.sign) * 2

    def inverse(self) -> "Generator":
        if self.kind == INVOLUTION_E:
            return self
        return Generator(self.kind, self.chord, -self.sign)

    def to_json(self) -> dict:
        d = {"gen": self.kind, "sign": self.sign}
        if self.chord is not None:
            d["chord"] = self.chord.to_json()
        return d

    @classmethod
    def from_json(cls, d: dict) -> "Generator":
        ch = d.get("chord")
        return cls(d["gen"], None if ch is None else chord_from_json(ch), int(d.get("sign", 1)))

    def __repr__(self):
        s = "+" if self.sign == 1 else "-"
        if self.chord is None:
            return f"{self.kind}{s}" if self.kind == ROTATION else self.kind
        return f"{self.kind}{s}{self.chord!r}"


@dataclass(frozen=True)
class MappingClassWord:
    """A finite sequence of generators on S_{0,n}; the empty word is the identity."""

    n: int
    gens: tuple[Generator, ...] = ()

    def __post_init__(self):
        model = SphereModel(self.n)
        object.__setattr__(self, "gens", tuple(self.gens))
        for g in self.gens:
            g.validate(model)

    def __len__(self):
        return len(self.gens)

    def primitives(self) -> list[Prim]:
        out: list[Prim] = []
        for g in self.gens:
            out.extend(g.expand(self.n))
        return out

    def to_json(self) -> list:
        return [g.to_json() for g in self.gens]

    @classmethod
    def from_json(cls, n: int, data) -> "MappingClassWord":
        return cls(n, tuple(Generator.from_json(d) for d in data))


def identity(n: int) -> MappingClassWord:
    return MappingClassWord(n, ())


def half_twist(n: int, c: ChordId, sign: int = 1) -> MappingClassWord:
    """Chain half twist T_c^{sign/2}."""
    return MappingClassWord(n, (Generator(HALF_TWIST_CHAIN, c, sign),))


def dehn_twist_word(n: int, c: ChordId, sign: int = 1) -> MappingClassWord:
    """Full twist about a(i,j), i.e. the squared Garside word on the enclosed punctures."""
    SphereModel(n).check_chord(c)
    return MappingClassWord(n, (Generator(FULL_TWIST_INTERVAL, c, sign),))


def half_twist_interval_word(n: int, c: ChordId, sign: int = 1) -> MappingClassWord:
    SphereModel(n).check_chord(c)
    return MappingClassWord(n, (Generator(HALF_TWIST_INTERVAL, c, sign),))


def rotation_word(n: int, sign: int = 1) -> MappingClassWord:
    return MappingClassWord(n, (Generator(ROTATION, None, sign),))


def involution_e_word(n: int = 5) -> MappingClassWord:
    """The reflection swapping the two polygons; only needed on S_{0,5}."""
    if n != 5:
        raise UnsupportedError("the involution e is only provided for n = 5")
    return MappingClassWord(5, (Generator(INVOLUTION_E),))


def compose(w1: MappingClassWord, w2: MappingClassWord) -> MappingClassWord:
    """``w1`` followed by ``w2``."""
    if w1.n != w2.n:
        raise ModelMismatchError("words live on different spheres")
    return MappingClassWord(w1.n, w1.gens + w2.gens)


def invert(w: MappingClassWord) -> MappingClassWord:
    return MappingClassWord(w.n, tuple(g.inverse() for g in reversed(w.gens)))


# --------------------------------------------------------------------------
# action

T = TypeVar("T", Curve, Multicurve, PantsDecomposition)


def apply_prims(prims: Iterable[Prim], c: Curve) -> Curve:
    for p in prims:
        c = apply_primitive(p, c)
    return c


def apply(w: MappingClassWord, obj: Union[Curve, Multicurve, PantsDecomposition]):
    """Image of a curve, multicurve or pants decomposition under ``w``."""
    if obj.n != w.n:
        raise ModelMismatchError(f"word on S_(0,{w.n}) applied to object on S_(0,{obj.n})")
    prims = w.primitives()
    if isinstance(obj, Curve):
        return apply_prims(prims, obj)
    images = [apply_prims(prims, c) for c in obj.curves]
    return type(obj)(images, obj.n, check=False)
