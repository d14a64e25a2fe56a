"""Binary graph products and the two internal homs.

All six products share the vertex set ``V(X) x V(Y)`` in row-major index
order (``(v, v') -> v*|V(Y)| + v'``); they differ only in the edge rule.
In every rule ``~`` means "distinct and adjacent" on stored edges; pairs
with an equal coordinate contribute only through explicit equality clauses,
which is how the implicit loops enter.

Only the box and categorical products carry internal homs here; ``curry``
and ``uncurry`` realize the adjunction bijection concretely.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph, GraphMap, enumerate_maps

__all__ = [
    "ProductKind",
    "HomKind",
    "HomGraph",
    "product",
    "product_map",
    "internal_hom",
    "curry",
    "uncurry",
]


class ProductKind(enum.Enum):
    BOX = "box"
    CATEGORICAL = "categorical"
    TENSOR = "tensor"
    LEXICOGRAPHIC = "lex"
    CONORMAL = "conormal"
    MODULAR = "modular"

    @property
    def label(self) -> str:
        return _LABELS[self]


_LABELS = {
    ProductKind.BOX: "Box",
    ProductKind.CATEGORICAL: "Categorical",
    ProductKind.TENSOR: "Tensor",
    ProductKind.LEXICOGRAPHIC: "Lexicographical",
    ProductKind.CONORMAL: "Conormal",
    ProductKind.MODULAR: "Modular",
}


def _edge_rule(kind: ProductKind, eq1: bool, adj1: bool, eq2: bool, adj2: bool) -> bool:
    if kind is ProductKind.BOX:
        return (adj1 and eq2) or (eq1 and adj2)
    if kind is ProductKind.CATEGORICAL:
        return (eq1 or adj1) and (eq2 or adj2)
    if kind is ProductKind.TENSOR:
        return adj1 and adj2
    if kind is ProductKind.LEXICOGRAPHIC:
        return adj1 or (eq1 and adj2)
    if kind is ProductKind.CONORMAL:
        return adj1 or adj2
    if kind is ProductKind.MODULAR:
        non1 = not eq1 and not adj1
        non2 = not eq2 and not adj2
        return (adj1 and adj2) or (non1 and non2)
    raise ValueError(kind)


def product(kind: ProductKind, x: Graph, y: Graph) -> Graph:
    """Product graph on ``V(X) x V(Y)`` in row-major order."""
    key = (kind, x, y)
    cached = _PRODUCT_CACHE.get(key)
    if cached is not None:
        return cached
    result = _product(kind, x, y)
    if len(_PRODUCT_CACHE) > 8192:
        _PRODUCT_CACHE.clear()
    _PRODUCT_CACHE[key] = result
    return result


_PRODUCT_CACHE: dict[tuple[ProductKind, Graph, Graph], Graph] = {}


def _product(kind: ProductKind, x: Graph, y: Graph) -> Graph:
    ny = y.n
    edges = set()
    for v in range(x.n):
        for w in range(v, x.n):
            eq1 = v == w
            adj1 = x.adjacent(v, w)
            for vp in range(ny):
                base = v * ny + vp
                for wp in range(vp + 1 if eq1 else 0, ny):
                    eq2 = vp == wp
                    if _edge_rule(kind, eq1, adj1, eq2, y.adjacent(vp, wp)):
                        edges.add((base, w * ny + wp))
    return Graph(x.n * ny, frozenset(edges))


def product_map(kind: ProductKind, f: GraphMap, g: GraphMap) -> GraphMap:
    """Functorial action ``(v, v') -> (f(v), g(v'))``.

    Raises ValueError when the kind is not functorial on the given maps
    (possible for the tensor and modular rules).
    """
    src = product(kind, f.source, g.source)
    dst = product(kind, f.target, g.target)
    ny_src, ny_dst = g.source.n, g.target.n
    mapping = tuple(
        f.mapping[i // ny_src] * ny_dst + g.mapping[i % ny_src] for i in range(src.n)
    )
    return GraphMap(src, dst, mapping)


class HomKind(enum.Enum):
    BOX = "box"
    CATEGORICAL = "categorical"

    @property
    def product_kind(self) -> ProductKind:
        return ProductKind.BOX if self is HomKind.BOX else ProductKind.CATEGORICAL


@dataclass(frozen=True)
class HomGraph:
    """Internal hom: a graph whose vertices are the maps ``x -> y``.

    ``maps[i]`` is the map sitting at vertex ``i`` (enumeration order).
    """

    graph: Graph
    maps: tuple[GraphMap, ...]

    @cached_property
    def _index(self) -> dict[tuple[int, ...], int]:
        return {m.mapping: i for i, m in enumerate(self.maps)}

    def index_of(self, mapping: tuple[int, ...]) -> int:
        return self._index[mapping]


def internal_hom(kind: HomKind, x: Graph, y: Graph) -> HomGraph:
    """Hom graph for the box or categorical product.

    Box rule: distinct maps are adjacent when they are pointwise
    equal-or-adjacent.  Categorical rule: distinct maps ``f, g`` are
    adjacent when ``f(v)`` is equal-or-adjacent to ``g(w)`` for every pair
    ``(v, w)`` with ``v = w`` or ``v ~ w`` (the implicit loops count).
    """
    key = (kind, x, y)
    cached = _HOM_CACHE.get(key)
    if cached is not None:
        return cached
    maps = tuple(enumerate_maps(x, y))
    k = len(maps)
    edges = set()
    if kind is HomKind.BOX:
        for i in range(k):
            fi = maps[i].mapping
            for j in range(i + 1, k):
                fj = maps[j].mapping
                if all(a == b or y.adjacent(a, b) for a, b in zip(fi, fj)):
                    edges.add((i, j))
    else:
        closed_pairs = [(v, v) for v in range(x.n)]
        for u, v in x.edges:
            closed_pairs.append((u, v))
            closed_pairs.append((v, u))
        for i in range(k):
            fi = maps[i].mapping
            for j in range(i + 1, k):
                fj = maps[j].mapping
                if all(
                    fi[v] == fj[w] or y.adjacent(fi[v], fj[w]) for v, w in closed_pairs
                ):
                    edges.add((i, j))
    result = HomGraph(Graph(k, frozenset(edges)), maps)
    if len(_HOM_CACHE) > 1024:
        _HOM_CACHE.clear()
    _HOM_CACHE[key] = result
    return result


_HOM_CACHE: dict[tuple[HomKind, Graph, Graph], HomGraph] = {}


def curry(kind: HomKind, x: Graph, y: Graph, h: GraphMap) -> GraphMap:
    """Transpose ``h: x (x) y -> z`` to ``x -> hom(y, z)``."""
    if h.source != product(kind.product_kind, x, y):
        raise ValueError("map source is not the product of the given factors")
    hom = internal_hom(kind, y, h.target)
    index = hom._index
    hm = h.mapping
    ny = y.n
    mapping = []
    for xv in range(x.n):
        slice_map = hm[xv * ny : (xv + 1) * ny]
        try:
            mapping.append(index[slice_map])
        except KeyError:
            raise ValueError(f"slice at vertex {xv} is not a graph map") from None
    return GraphMap(x, hom.graph, tuple(mapping))


def uncurry(kind: HomKind, x: Graph, y: Graph, z: Graph, g: GraphMap) -> GraphMap:
    """Transpose ``g: x -> hom(y, z)`` back to ``x (x) y -> z``."""
    hom = internal_hom(kind, y, z)
    if g.target != hom.graph:
        raise ValueError("map target is not the internal hom of the given factors")
    rows = [m.mapping for m in hom.maps]
    flat: list[int] = []
    for xv in range(x.n):
        flat.extend(rows[g.mapping[xv]])
    return GraphMap(product(kind.product_kind, x, y), z, tuple(flat))
