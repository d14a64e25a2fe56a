"""Comma categories, colimits by union-find, and products via left Kan extension.

A candidate product is given by a :class:`FunctorSeed`: the graph assigned to
the edge-pair object, the four point labels, and the six generator actions.
A pair of graphs ``(X, Y)`` then determines a diagram — one seed copy per
pair of maps ``segment -> X``, ``segment -> Y`` — and the candidate product
of ``X`` and ``Y`` is its colimit: disjoint-union the copies, identify every
vertex with its image under every arrow action, keep an edge between classes
whenever some representatives are adjacent, and drop the loops created when
adjacent vertices merge.

The full comma category additionally carries vertex-shaped cells; those are
pinned to the one-vertex and one-edge graphs, so a fully labelled seed needs
no extra data for the full-diagram run.  Comparing the two colimits is the
finality cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping, Sequence

from .gg import GGMorphism, GGObject, gg_homset, yoneda_action, yoneda_graph
from .graphs import (
    POINT,
    SEGMENT,
    Graph,
    GraphMap,
    UnionFind,
    are_isomorphic,
    compose,
    enumerate_maps,
    is_graph_map,
)

__all__ = [
    "GENERATOR_KEYS",
    "LABEL_KEYS",
    "FunctorSeed",
    "seed_violations",
    "CommaNode",
    "CommaArrow",
    "CommaDiagram",
    "edge_comma_category",
    "full_comma_category",
    "ColimitResult",
    "colimit",
    "lan_colimit",
    "lan_product",
    "lan_class_pairs",
    "lan_canonical",
    "check_finality",
]

#: Action keys: generator pairs acting on the edge-pair graph, left/right coordinate.
GENERATOR_KEYS = ("sigma_l", "sigma_r", "sr_l", "sr_r", "tr_l", "tr_r")

#: Point-label keys in row-major order.
LABEL_KEYS = (("s", "s"), ("s", "t"), ("t", "s"), ("t", "t"))

# sigma acts on {s, t} by swapping; sr and tr are constant.
_SWAP = {"s": "t", "t": "s"}


@dataclass(frozen=True, eq=False)
class FunctorSeed:
    """Candidate-product data: the edge-pair graph, labels, generator actions.

    ``labels`` is total on the four keys but may repeat values (merged
    labels) and may miss vertices (unlabelled vertices).  ``actions`` holds
    one endo vertex-function per generator pair.
    """

    gee: Graph
    labels: Mapping[tuple[str, str], int]
    actions: Mapping[str, tuple[int, ...]]
    description: str = ""

    @classmethod
    def from_labels(
        cls, gee: Graph, labels: Mapping[tuple[str, str], int], description: str = ""
    ) -> "FunctorSeed":
        """Derive the generator actions from injective, total labels."""
        values = [labels[key] for key in LABEL_KEYS]
        if len(set(values)) != 4 or set(values) != set(range(gee.n)):
            raise ValueError("label-derived actions need injective labels onto all vertices")
        position = {labels[key]: key for key in LABEL_KEYS}
        actions = {}
        for key, act in (
            ("sigma_l", lambda a, b: (_SWAP[a], b)),
            ("sigma_r", lambda a, b: (a, _SWAP[b])),
            ("sr_l", lambda a, b: ("s", b)),
            ("sr_r", lambda a, b: (a, "s")),
            ("tr_l", lambda a, b: ("t", b)),
            ("tr_r", lambda a, b: (a, "t")),
        ):
            actions[key] = tuple(labels[act(*position[v])] for v in range(gee.n))
        return cls(gee, dict(labels), actions, description)

    def key(self) -> tuple:
        """Hashable identity for deduplication."""
        return (
            self.gee.n,
            tuple(sorted(self.gee.edges)),
            tuple(sorted(self.labels.items())),
            tuple(sorted(self.actions.items())),
        )

    def labelled_vertices(self) -> set[int]:
        return set(self.labels.values())

    def action(self, key: str) -> tuple[int, ...]:
        return tuple(self.actions[key])


def _action_table(seed: FunctorSeed, side: str) -> dict[str, tuple[int, ...]]:
    identity = tuple(range(seed.gee.n))
    return {
        "id_E": identity,
        "sigma": seed.action(f"sigma_{side}"),
        "sr": seed.action(f"sr_{side}"),
        "tr": seed.action(f"tr_{side}"),
    }


def _compose_functions(g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    return tuple(g[v] for v in f)


# Composition in the endomorphism monoid {id_E, sigma, sr, tr}: g after f.
_ENDO_COMPOSE = {
    ("sigma", "sigma"): "id_E",
    ("sigma", "sr"): "tr",
    ("sigma", "tr"): "sr",
    ("sr", "sigma"): "sr",
    ("sr", "sr"): "sr",
    ("sr", "tr"): "sr",
    ("tr", "sigma"): "tr",
    ("tr", "sr"): "tr",
    ("tr", "tr"): "tr",
}


def seed_violations(seed: FunctorSeed) -> list[str]:
    """Names of every violated seed invariant; empty means the seed is valid.

    Checks: well-formed labels and actions, each action a graph map, the
    relations of the edge-endomorphism monoid in each coordinate, the two
    coordinates commuting, label equivariance, and the adjacency forced on
    labels by the vertex-edge cells being graph maps.
    """
    out: list[str] = []
    gee = seed.gee
    n = gee.n
    if set(seed.labels) != set(LABEL_KEYS):
        return [f"labels must be total on {LABEL_KEYS}"]
    for key, v in seed.labels.items():
        if not 0 <= v < n:
            return [f"label {key} out of range: {v}"]
    if set(seed.actions) != set(GENERATOR_KEYS):
        return [f"actions must be total on {GENERATOR_KEYS}"]
    for key in GENERATOR_KEYS:
        act = seed.actions[key]
        if len(act) != n or any(not 0 <= v < n for v in act):
            return [f"action {key} is not an endo vertex-function"]

    for key in GENERATOR_KEYS:
        if not is_graph_map(gee, gee, seed.actions[key]):
            out.append(f"action {key} is not a graph map")

    for side in ("l", "r"):
        table = _action_table(seed, side)
        for (gname, fname), res in _ENDO_COMPOSE.items():
            got = _compose_functions(table[gname], table[fname])
            if got != table[res]:
                out.append(f"relation {gname}*{fname}={res} fails in coordinate {side}")

    left = _action_table(seed, "l")
    right = _action_table(seed, "r")
    for lname in ("sigma", "sr", "tr"):
        for rname in ("sigma", "sr", "tr"):
            lr = _compose_functions(left[lname], right[rname])
            rl = _compose_functions(right[rname], left[lname])
            if lr != rl:
                out.append(f"coordinate actions {lname}_l and {rname}_r do not commute")

    for (a, b), v in seed.labels.items():
        checks = (
            ("sigma_l", (_SWAP[a], b)),
            ("sigma_r", (a, _SWAP[b])),
            ("sr_l", ("s", b)),
            ("sr_r", (a, "s")),
            ("tr_l", ("t", b)),
            ("tr_r", (a, "t")),
        )
        for key, target in checks:
            if seed.actions[key][v] != seed.labels[target]:
                out.append(f"label equivariance fails: {key} on label {(a, b)}")

    for a in ("s", "t"):
        u, v = seed.labels[(a, "s")], seed.labels[(a, "t")]
        if u != v and not gee.adjacent(u, v):
            out.append(f"labels ({a},s) and ({a},t) are neither equal nor adjacent")
        u, v = seed.labels[("s", a)], seed.labels[("t", a)]
        if u != v and not gee.adjacent(u, v):
            out.append(f"labels (s,{a}) and (t,{a}) are neither equal nor adjacent")
    return out


# ---------------------------------------------------------------------------
# Comma categories
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CommaNode:
    """A cell of ``(X, Y)``: a shape pair and a map out of each realization."""

    shape: tuple[GGObject, GGObject]
    left: GraphMap
    right: GraphMap


@dataclass(frozen=True)
class CommaArrow:
    """Arrow ``src -> dst`` labelled by an index-category morphism pair.

    The triangle condition: ``dst.left`` after the realization of ``left``
    equals ``src.left``, and the same on the right coordinate.
    """

    src: int
    dst: int
    left: GGMorphism
    right: GGMorphism


@dataclass(frozen=True)
class CommaDiagram:
    x: Graph
    y: Graph
    nodes: tuple[CommaNode, ...]
    arrows: tuple[CommaArrow, ...]


_EDGE_SHAPE = (GGObject.E, GGObject.E)
_ALL_SHAPES = (
    (GGObject.V, GGObject.V),
    (GGObject.V, GGObject.E),
    (GGObject.E, GGObject.V),
    (GGObject.E, GGObject.E),
)


def _build_comma(x: Graph, y: Graph, shapes: Sequence[tuple[GGObject, GGObject]]) -> CommaDiagram:
    nodes: list[CommaNode] = []
    index: dict[tuple, int] = {}
    for shape in shapes:
        for f in enumerate_maps(yoneda_graph(shape[0]), x):
            for fp in enumerate_maps(yoneda_graph(shape[1]), y):
                index[(shape, f.mapping, fp.mapping)] = len(nodes)
                nodes.append(CommaNode(shape, f, fp))
    arrows: list[CommaArrow] = []
    for dst, node in enumerate(nodes):
        b, bp = node.shape
        for shape in shapes:
            a, ap = shape
            for h in gg_homset(a, b):
                f = compose(node.left, yoneda_action(h))
                for hp in gg_homset(ap, bp):
                    fp = compose(node.right, yoneda_action(hp))
                    src = index[(shape, f.mapping, fp.mapping)]
                    arrows.append(CommaArrow(src, dst, h, hp))
    return CommaDiagram(x, y, tuple(nodes), tuple(arrows))


def edge_comma_category(x: Graph, y: Graph) -> CommaDiagram:
    """Cells of ``(X, Y)`` built from edge pairs only (the final subcategory)."""
    return _build_comma(x, y, (_EDGE_SHAPE,))


def full_comma_category(x: Graph, y: Graph) -> CommaDiagram:
    """Cells of ``(X, Y)`` over all four shape pairs."""
    return _build_comma(x, y, _ALL_SHAPES)


# ---------------------------------------------------------------------------
# Colimits
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ColimitResult:
    """Union-find quotient of a graph diagram.

    ``classes`` lists global vertex ids per class (class order: smallest
    contained global id); ``offsets[i]`` is the global id of vertex 0 of
    node ``i``; ``cocone[i]`` maps node ``i`` into the quotient.
    """

    quotient: Graph
    classes: tuple[tuple[int, ...], ...]
    offsets: tuple[int, ...]
    cocone: tuple[GraphMap, ...]

    def class_of(self, node: int, vertex: int) -> int:
        return self.cocone[node].mapping[vertex]


def colimit(
    diagram: CommaDiagram,
    node_graphs: Sequence[Graph],
    arrow_actions: Sequence[GraphMap],
) -> ColimitResult:
    """Colimit of the diagram sending node ``i`` to ``node_graphs[i]``.

    ``arrow_actions`` runs parallel to ``diagram.arrows``; every action must
    be a graph map between the indicated node graphs.
    """
    if len(node_graphs) != len(diagram.nodes):
        raise ValueError("one graph per node required")
    if len(arrow_actions) != len(diagram.arrows):
        raise ValueError("one action per arrow required")
    offsets = []
    total = 0
    for g in node_graphs:
        offsets.append(total)
        total += g.n
    for arrow, action in zip(diagram.arrows, arrow_actions):
        if not (0 <= arrow.src < len(node_graphs) and 0 <= arrow.dst < len(node_graphs)):
            raise ValueError("dangling arrow endpoint")
        if action.source != node_graphs[arrow.src] or action.target != node_graphs[arrow.dst]:
            raise ValueError("arrow action does not match its node graphs")

    uf = UnionFind(total)
    for arrow, action in zip(diagram.arrows, arrow_actions):
        src_off, dst_off = offsets[arrow.src], offsets[arrow.dst]
        for v, w in enumerate(action.mapping):
            uf.union(src_off + v, dst_off + w)

    groups = uf.groups()
    cls = [0] * total
    for idx, members in enumerate(groups):
        for v in members:
            cls[v] = idx
    edges = set()
    for i, g in enumerate(node_graphs):
        off = offsets[i]
        for u, v in g.edges:
            cu, cv = cls[off + u], cls[off + v]
            if cu != cv:
                edges.add((min(cu, cv), max(cu, cv)))
    quotient = Graph(len(groups), frozenset(edges))
    cocone = tuple(
        GraphMap(g, quotient, tuple(cls[offsets[i] : offsets[i] + g.n]))
        for i, g in enumerate(node_graphs)
    )
    return ColimitResult(
        quotient,
        tuple(tuple(members) for members in groups),
        tuple(offsets),
        cocone,
    )


# ---------------------------------------------------------------------------
# The functor determined by a seed, and its Kan-extension products
# ---------------------------------------------------------------------------


def functor_shape_graph(seed: FunctorSeed, shape: tuple[GGObject, GGObject]) -> Graph:
    """Graph assigned to a shape pair: point, segment, or the seed graph."""
    a, b = shape
    if a is GGObject.V and b is GGObject.V:
        return POINT
    if a is GGObject.V or b is GGObject.V:
        return SEGMENT
    return seed.gee


def _label_positions(seed: FunctorSeed) -> dict[int, tuple[str, str]]:
    if len(set(seed.labels.values())) != 4 or set(seed.labels.values()) != set(
        range(seed.gee.n)
    ):
        raise ValueError("this construction needs injective labels onto all vertices")
    return {v: key for key, v in seed.labels.items()}

_COORD_INDEX = {"s": 0, "t": 1}


def _left_component(seed: FunctorSeed, h: GGMorphism, other: GGObject) -> GraphMap:
    """Action on the first coordinate, the second held at ``other``."""
    src = functor_shape_graph(seed, (h.source, other))
    dst = functor_shape_graph(seed, (h.target, other))
    name = h.name
    if name in ("id_V", "id_E"):
        mapping: tuple[int, ...] = tuple(range(src.n))
    elif other is GGObject.V:
        mapping = {"s": (0,), "t": (1,), "r": (0, 0), "sigma": (1, 0), "sr": (0, 0), "tr": (1, 1)}[name]
    elif name in ("s", "t"):
        mapping = (seed.labels[(name, "s")], seed.labels[(name, "t")])
    elif name == "r":
        pos = _label_positions(seed)
        mapping = tuple(_COORD_INDEX[pos[v][1]] for v in range(src.n))
    else:
        mapping = seed.action(f"{name}_l")
    return GraphMap(src, dst, mapping)


def _right_component(seed: FunctorSeed, h: GGMorphism, other: GGObject) -> GraphMap:
    """Action on the second coordinate, the first held at ``other``."""
    src = functor_shape_graph(seed, (other, h.source))
    dst = functor_shape_graph(seed, (other, h.target))
    name = h.name
    if name in ("id_V", "id_E"):
        mapping: tuple[int, ...] = tuple(range(src.n))
    elif other is GGObject.V:
        mapping = {"s": (0,), "t": (1,), "r": (0, 0), "sigma": (1, 0), "sr": (0, 0), "tr": (1, 1)}[name]
    elif name in ("s", "t"):
        mapping = (seed.labels[("s", name)], seed.labels[("t", name)])
    elif name == "r":
        pos = _label_positions(seed)
        mapping = tuple(_COORD_INDEX[pos[v][0]] for v in range(src.n))
    else:
        mapping = seed.action(f"{name}_r")
    return GraphMap(src, dst, mapping)


def functor_arrow_action(
    seed: FunctorSeed,
    shape: tuple[GGObject, GGObject],
    h: GGMorphism,
    hp: GGMorphism,
) -> GraphMap:
    """The map assigned to ``(h, hp)`` out of the given source shape."""
    if (h.source, hp.source) != shape:
        raise ValueError("morphism pair does not start at the given shape")
    first = _left_component(seed, h, hp.source)
    second = _right_component(seed, hp, h.target)
    return compose(second, first)


def _diagram_data(
    seed: FunctorSeed, diagram: CommaDiagram
) -> tuple[list[Graph], list[GraphMap]]:
    node_graphs = [functor_shape_graph(seed, node.shape) for node in diagram.nodes]
    action_cache: dict[tuple, GraphMap] = {}
    actions = []
    for arrow in diagram.arrows:
        key = (diagram.nodes[arrow.src].shape, arrow.left.name, arrow.right.name)
        act = action_cache.get(key)
        if act is None:
            act = functor_arrow_action(
                seed, diagram.nodes[arrow.src].shape, arrow.left, arrow.right
            )
            action_cache[key] = act
        actions.append(act)
    return node_graphs, actions


def lan_colimit(
    seed: FunctorSeed, x: Graph, y: Graph, validate: bool = True
) -> tuple[CommaDiagram, ColimitResult]:
    """Edge-subcategory diagram for ``(x, y)`` and its colimit."""
    if validate:
        problems = seed_violations(seed)
        if problems:
            raise ValueError(f"invalid seed: {problems[0]}")
    diagram = edge_comma_category(x, y)
    node_graphs, actions = _diagram_data(seed, diagram)
    return diagram, colimit(diagram, node_graphs, actions)


def lan_product(seed: FunctorSeed, x: Graph, y: Graph) -> Graph:
    """The candidate product of ``x`` and ``y`` determined by the seed."""
    return lan_colimit(seed, x, y)[1].quotient


def lan_class_pairs(
    seed: FunctorSeed, diagram: CommaDiagram, colim: ColimitResult
) -> list[tuple[int, int] | None]:
    """Per-class vertex pair read off the labelled representatives.

    Entry ``k`` is ``(v, v')`` when every labelled vertex in class ``k``
    points at that pair of factor vertices, None when the class has no
    labelled member or the labelled members disagree.
    """
    pairs: list[set[tuple[int, int]]] = [set() for _ in colim.classes]
    for i, node in enumerate(diagram.nodes):
        if node.shape != _EDGE_SHAPE:
            continue
        for (a, b), v in seed.labels.items():
            cls = colim.class_of(i, v)
            pairs[cls].add((node.left.mapping[_COORD_INDEX[a]], node.right.mapping[_COORD_INDEX[b]]))
    return [next(iter(p)) if len(p) == 1 else None for p in pairs]


def lan_canonical(seed: FunctorSeed, x: Graph, y: Graph) -> Graph | None:
    """Kan-extension product reindexed to row-major vertex pairs.

    Returns None when the class-to-pair correspondence is not a bijection
    onto ``V(x) x V(y)`` (which happens exactly for degenerate seeds).
    """
    diagram, colim = lan_colimit(seed, x, y)
    pairs = lan_class_pairs(seed, diagram, colim)
    if any(p is None for p in pairs):
        return None
    indices = [p[0] * y.n + p[1] for p in pairs if p is not None]
    if sorted(indices) != list(range(x.n * y.n)):
        return None
    edges = frozenset(
        (min(indices[u], indices[v]), max(indices[u], indices[v]))
        for u, v in colim.quotient.edges
    )
    return Graph(x.n * y.n, edges)


def check_finality(seed: FunctorSeed, x: Graph, y: Graph) -> bool:
    """Compare the edge-subcategory colimit with the full-comma colimit.

    The full run pins the vertex-shaped cells to the point and segment
    graphs, so it needs injective, total labels.
    """
    problems = seed_violations(seed)
    if problems:
        raise ValueError(f"invalid seed: {problems[0]}")
    _label_positions(seed)
    edge_quotient = lan_colimit(seed, x, y, validate=False)[1].quotient
    full = full_comma_category(x, y)
    node_graphs, actions = _diagram_data(seed, full)
    full_quotient = colimit(full, node_graphs, actions).quotient
    return are_isomorphic(edge_quotient, full_quotient) is not None
