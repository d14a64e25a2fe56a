"""The two-object index category behind reflexive graphs.

Objects are V (vertices) and E (edges).  The generators are the two
endpoint inclusions ``s, t: V -> E``, the loop assignment ``r: E -> V`` and
the direction swap ``sigma: E -> E``, subject to

    r s = r t = id_V      sigma^2 = id_E
    sigma s = t           sigma t = s
    r sigma = r

which leaves exactly eight morphisms.  They are stored as a closed
enumeration with a precomputed composition table; the table was derived
once by exhaustive word rewriting from the presentation (the test suite
re-derives it the same way).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .graphs import POINT, SEGMENT, Graph, GraphMap

__all__ = [
    "GGObject",
    "GGMorphism",
    "ID_V",
    "S",
    "T",
    "R",
    "ID_E",
    "SIGMA",
    "SR",
    "TR",
    "ALL_MORPHISMS",
    "EDGE_ENDOS",
    "gg_homset",
    "gg_compose",
    "yoneda_graph",
    "yoneda_action",
]


class GGObject(enum.Enum):
    V = "V"
    E = "E"


@dataclass(frozen=True)
class GGMorphism:
    name: str
    source: GGObject
    target: GGObject

    def __repr__(self) -> str:
        return self.name


ID_V = GGMorphism("id_V", GGObject.V, GGObject.V)
S = GGMorphism("s", GGObject.V, GGObject.E)
T = GGMorphism("t", GGObject.V, GGObject.E)
R = GGMorphism("r", GGObject.E, GGObject.V)
ID_E = GGMorphism("id_E", GGObject.E, GGObject.E)
SIGMA = GGMorphism("sigma", GGObject.E, GGObject.E)
SR = GGMorphism("sr", GGObject.E, GGObject.E)
TR = GGMorphism("tr", GGObject.E, GGObject.E)

ALL_MORPHISMS = (ID_V, S, T, R, ID_E, SIGMA, SR, TR)
EDGE_ENDOS = (ID_E, SIGMA, SR, TR)

_HOMSETS: dict[tuple[GGObject, GGObject], tuple[GGMorphism, ...]] = {
    (GGObject.V, GGObject.V): (ID_V,),
    (GGObject.V, GGObject.E): (S, T),
    (GGObject.E, GGObject.V): (R,),
    (GGObject.E, GGObject.E): EDGE_ENDOS,
}

# g after f, keyed by name; only composable pairs appear.
_COMPOSE: dict[tuple[str, str], GGMorphism] = {
    ("id_V", "id_V"): ID_V,
    ("s", "id_V"): S,
    ("t", "id_V"): T,
    ("id_V", "r"): R,
    ("r", "s"): ID_V,
    ("r", "t"): ID_V,
    ("id_E", "s"): S,
    ("sigma", "s"): T,
    ("sr", "s"): S,
    ("tr", "s"): T,
    ("id_E", "t"): T,
    ("sigma", "t"): S,
    ("sr", "t"): S,
    ("tr", "t"): T,
    ("s", "r"): SR,
    ("t", "r"): TR,
    ("r", "id_E"): R,
    ("r", "sigma"): R,
    ("r", "sr"): R,
    ("r", "tr"): R,
    ("id_E", "id_E"): ID_E,
    ("id_E", "sigma"): SIGMA,
    ("id_E", "sr"): SR,
    ("id_E", "tr"): TR,
    ("sigma", "id_E"): SIGMA,
    ("sigma", "sigma"): ID_E,
    ("sigma", "sr"): TR,
    ("sigma", "tr"): SR,
    ("sr", "id_E"): SR,
    ("sr", "sigma"): SR,
    ("sr", "sr"): SR,
    ("sr", "tr"): SR,
    ("tr", "id_E"): TR,
    ("tr", "sigma"): TR,
    ("tr", "sr"): TR,
    ("tr", "tr"): TR,
}


def gg_homset(a: GGObject, b: GGObject) -> tuple[GGMorphism, ...]:
    """Complete hom-set in a fixed order."""
    return _HOMSETS[(a, b)]


def gg_compose(g: GGMorphism, f: GGMorphism) -> GGMorphism:
    """Normal form of ``g`` after ``f``."""
    if f.target != g.source:
        raise ValueError(f"cannot compose {g} after {f}")
    return _COMPOSE[(g.name, f.name)]


def yoneda_graph(obj: GGObject) -> Graph:
    """V realizes as the one-vertex graph, E as the one-edge graph."""
    return POINT if obj is GGObject.V else SEGMENT


_YONEDA_MAPPINGS: dict[str, tuple[int, ...]] = {
    "id_V": (0,),
    "s": (0,),
    "t": (1,),
    "r": (0, 0),
    "id_E": (0, 1),
    "sigma": (1, 0),
    "sr": (0, 0),
    "tr": (1, 1),
}


def yoneda_action(h: GGMorphism) -> GraphMap:
    """Realize a morphism as a map between the one-vertex and one-edge graphs.

    Post-composition with ``h``: the swap flips the segment, ``sr``/``tr``
    collapse it onto an endpoint, ``s``/``t`` are the endpoint inclusions.
    """
    return GraphMap(yoneda_graph(h.source), yoneda_graph(h.target), _YONEDA_MAPPINGS[h.name])
