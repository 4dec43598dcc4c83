"""Pants graphs of punctured spheres: curves, half twists, rigid sets and exhaustions."""
from __future__ import annotations

from .curves import (
    Curve,
    Multicurve,
    PantsDecomposition,
    canonicalize,
    complement,
    curve_from_chord,
    deficiency,
    intersection_number,
)
from .errors import (
    BudgetExceededError,
    InessentialCurveError,
    InvalidChordError,
    InvalidSurfaceError,
    ModelMismatchError,
    MulticurveError,
    NotACurveError,
    PantsGraphError,
    UnsupportedError,
)
from .mcg import (
    Generator,
    MappingClassWord,
    apply,
    compose,
    dehn_twist_word,
    half_twist,
    half_twist_interval_word,
    involution_e_word,
    invert,
)
from .pants_graph import PantsGraphFragment, adjacent, build_Zn, cycles_of_length, graph_isomorphic, restriction
from .rigid_sets import RigidSetStage, WPiece, build_X5, build_Xn, enumerate_W, exhaust_step, exhaustion_sequence, induced_x5
from .surface import ChordId, SphereModel, chain_curves, chord, gamma_family

__version__ = "0.1.0"
