"""Finite reflexive graphs and their maps.

Vertices are dense integer indices ``0..n-1``.  Edges are unordered pairs of
distinct vertices; the mandatory loop at every vertex is never stored.  It
shows up only in the map condition (an edge may collapse onto a vertex) and
in the edge rules of the products built on top of this module.

Everything here is immutable and safe to share between threads.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphMap",
    "Bijection",
    "Pushout",
    "UnionFind",
    "make_graph",
    "path_graph",
    "cycle_graph",
    "complete_graph",
    "standard_graph",
    "empty_graph",
    "POINT",
    "SEGMENT",
    "identity_map",
    "constant_map",
    "compose",
    "is_graph_map",
    "enumerate_maps",
    "disjoint_union",
    "pushout",
    "are_isomorphic",
    "graph_universe",
    "graph_representatives",
]


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` tuples with ``u < v``; loops are implicit
    and never stored.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @cached_property
    def adjacency(self) -> tuple[int, ...]:
        """Neighbour bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    def adjacent(self, u: int, v: int) -> bool:
        """True when ``u`` and ``v`` are distinct and joined by a stored edge."""
        return u != v and (self.adjacency[u] >> v) & 1 == 1

    def neighbors(self, v: int) -> Iterator[int]:
        mask = self.adjacency[v]
        while mask:
            low = mask & -mask
            yield low.bit_length() - 1
            mask ^= low

    def degree(self, v: int) -> int:
        return bin(self.adjacency[v]).count("1")

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def __hash__(self) -> int:
        # graphs key several hot caches; hash once
        h = self.__dict__.get("_hash")
        if h is None:
            h = self.__dict__["_hash"] = hash((self.n, self.edges))
        return h

    def __repr__(self) -> str:
        return f"Graph({self.n}, {sorted(self.edges)})"


def make_graph(n: int, edges: Iterable[Sequence[int]]) -> Graph:
    """Build a normalized graph, rejecting loops and out-of-range endpoints."""
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    normalized = set()
    for pair in edges:
        u, v = pair
        if u == v:
            raise ValueError(f"explicit loop on vertex {u}: loops are implicit")
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge endpoint out of range for {n} vertices: {pair}")
        normalized.add((u, v) if u < v else (v, u))
    return Graph(n, frozenset(normalized))


def empty_graph() -> Graph:
    return Graph(0, frozenset())


def path_graph(length: int) -> Graph:
    """Path with ``length`` edges on ``length + 1`` vertices."""
    if length < 0:
        raise ValueError("path length must be non-negative")
    return make_graph(length + 1, [(i, i + 1) for i in range(length)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete graph needs at least 1 vertex")
    return make_graph(n, itertools.combinations(range(n), 2))


def standard_graph(kind: str, n: int) -> Graph:
    """Dispatch on ``kind`` in {path, cycle, complete}."""
    if kind == "path":
        return path_graph(n)
    if kind == "cycle":
        return cycle_graph(n)
    if kind == "complete":
        return complete_graph(n)
    raise ValueError(f"unknown standard graph kind: {kind!r}")


#: The one-vertex graph and the one-edge graph (vertex 0 plays "s", 1 plays "t").
POINT = make_graph(1, [])
SEGMENT = make_graph(2, [(0, 1)])


def is_graph_map(source: Graph, target: Graph, mapping: Sequence[int]) -> bool:
    """Check the reflexive homomorphism condition.

    Every stored edge must land on an edge of the target or collapse to a
    single vertex (the implicit loop).  Raises on malformed ``mapping``.
    """
    if len(mapping) != source.n:
        raise ValueError(f"mapping has {len(mapping)} entries for {source.n} vertices")
    for w in mapping:
        if not 0 <= w < target.n:
            raise ValueError(f"mapping value {w} out of range for {target.n} vertices")
    adjacency = target.adjacency
    for u, v in source.edges:
        fu, fv = mapping[u], mapping[v]
        if fu != fv and not adjacency[fu] >> fv & 1:
            return False
    return True


@dataclass(frozen=True)
class GraphMap:
    """Vertex function between graphs satisfying the reflexive map condition."""

    source: Graph
    target: Graph
    mapping: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_graph_map(self.source, self.target, self.mapping):
            raise ValueError(f"not a graph map: {self.mapping}")

    def __call__(self, v: int) -> int:
        return self.mapping[v]

    def __repr__(self) -> str:
        return f"GraphMap({self.mapping})"


def _unchecked_map(source: Graph, target: Graph, mapping: tuple[int, ...]) -> GraphMap:
    # for callers whose construction already guarantees the map condition
    m = object.__new__(GraphMap)
    object.__setattr__(m, "source", source)
    object.__setattr__(m, "target", target)
    object.__setattr__(m, "mapping", mapping)
    return m


def identity_map(g: Graph) -> GraphMap:
    return GraphMap(g, g, tuple(range(g.n)))


def constant_map(source: Graph, target: Graph, v: int) -> GraphMap:
    return GraphMap(source, target, (v,) * source.n)


def compose(g: GraphMap, f: GraphMap) -> GraphMap:
    """The composite ``g`` after ``f``."""
    if f.target != g.source:
        raise ValueError("maps are not composable")
    return GraphMap(f.source, g.target, tuple(g.mapping[w] for w in f.mapping))


def enumerate_maps(x: Graph, y: Graph) -> list[GraphMap]:
    """All graph maps ``x -> y`` in lexicographic order of the vertex function."""
    return list(_enumerate_maps_cached(x, y))


def _enumerate_maps_cached(x: Graph, y: Graph) -> tuple[GraphMap, ...]:
    cached = _MAP_CACHE.get((x, y))
    if cached is not None:
        return cached
    result = tuple(_enumerate_maps(x, y))
    if len(_MAP_CACHE) > 4096:
        _MAP_CACHE.clear()
    _MAP_CACHE[(x, y)] = result
    return result


_MAP_CACHE: dict[tuple[Graph, Graph], tuple[GraphMap, ...]] = {}


def _enumerate_maps(x: Graph, y: Graph) -> list[GraphMap]:
    if x.n == 0:
        return [GraphMap(x, y, ())]
    if y.n == 0:
        return []
    # equal-or-adjacent bitmask per target vertex
    compat = tuple((1 << w) | y.adjacency[w] for w in range(y.n))
    earlier: list[list[int]] = [[] for _ in range(x.n)]
    for u, v in x.edges:
        earlier[v].append(u)
    full = (1 << y.n) - 1
    out: list[GraphMap] = []
    assign = [0] * x.n
    last = x.n - 1

    def extend(v: int) -> None:
        allowed = full
        for u in earlier[v]:
            allowed &= compat[assign[u]]
        while allowed:
            low = allowed & -allowed
            allowed ^= low
            assign[v] = low.bit_length() - 1
            if v == last:
                # the masks enforce the map condition on every edge
                out.append(_unchecked_map(x, y, tuple(assign)))
            else:
                extend(v + 1)

    extend(0)
    return out


def disjoint_union(x: Graph, y: Graph) -> tuple[Graph, GraphMap, GraphMap]:
    """Coproduct with its two injections; ``y`` vertices are shifted by ``x.n``."""
    edges = set(x.edges)
    edges.update((u + x.n, v + x.n) for u, v in y.edges)
    total = Graph(x.n + y.n, frozenset(edges))
    left = GraphMap(x, total, tuple(range(x.n)))
    right = GraphMap(y, total, tuple(range(x.n, x.n + y.n)))
    return total, left, right


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression."""

    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def union(self, a: int, b: int) -> int:
        ra, rb = self.find(a), self.find(b)
        if ra == rb:
            return ra
        if rb < ra:
            ra, rb = rb, ra
        self.parent[rb] = ra
        return ra

    def groups(self) -> list[list[int]]:
        """Classes as sorted lists, ordered by smallest member."""
        buckets: dict[int, list[int]] = {}
        for v in range(len(self.parent)):
            buckets.setdefault(self.find(v), []).append(v)
        return [buckets[root] for root in sorted(buckets)]


@dataclass(frozen=True)
class Pushout:
    """Pushout cospan: quotient of the disjoint union gluing ``f(a) ~ g(a)``."""

    graph: Graph
    left: GraphMap
    right: GraphMap


def pushout(f: GraphMap, g: GraphMap) -> Pushout:
    """Pushout of ``X <-f- A -g-> Y``.

    Identification may create loops and parallel edges; both are collapsed so
    the result is again a simple reflexive graph.
    """
    if f.source != g.source:
        raise ValueError("pushout legs must share their source")
    x, y, a = f.target, g.target, f.source
    uf = UnionFind(x.n + y.n)
    for v in range(a.n):
        uf.union(f(v), x.n + g(v))
    groups = uf.groups()
    cls = [0] * (x.n + y.n)
    for idx, members in enumerate(groups):
        for v in members:
            cls[v] = idx
    edges = set()
    for u, v in x.edges:
        if cls[u] != cls[v]:
            edges.add((min(cls[u], cls[v]), max(cls[u], cls[v])))
    for u, v in y.edges:
        cu, cv = cls[x.n + u], cls[x.n + v]
        if cu != cv:
            edges.add((min(cu, cv), max(cu, cv)))
    quotient = Graph(len(groups), frozenset(edges))
    left = GraphMap(x, quotient, tuple(cls[: x.n]))
    right = GraphMap(y, quotient, tuple(cls[x.n :]))
    return Pushout(quotient, left, right)


@dataclass(frozen=True)
class Bijection:
    """Isomorphism witness: mutually inverse graph maps."""

    forward: GraphMap
    backward: GraphMap


def _refined_colors(g: Graph) -> tuple[int, ...]:
    """Iterated neighbour-degree refinement (stable colouring)."""
    neigh = [tuple(g.neighbors(v)) for v in range(g.n)]
    colors: list[int] = [g.degree(v) for v in range(g.n)]
    for _ in range(g.n + 1):
        sigs = [
            (colors[v], tuple(sorted(colors[u] for u in neigh[v]))) for v in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(sigs)))}
        new = [palette[sig] for sig in sigs]
        if new == colors:
            break
        colors = new
    return tuple(colors)


def are_isomorphic(x: Graph, y: Graph) -> Bijection | None:
    """Search for an isomorphism; returns a checkable witness or None.

    Colour refinement prunes the permutation search; intended for graphs of a
    few dozen vertices.
    """
    if x.n != y.n or len(x.edges) != len(y.edges):
        return None
    cx, cy = _refined_colors(x), _refined_colors(y)
    if sorted(cx) != sorted(cy):
        return None
    by_color: dict[int, list[int]] = {}
    for w in range(y.n):
        by_color.setdefault(cy[w], []).append(w)
    order = sorted(range(x.n), key=lambda v: (len(by_color[cx[v]]), cx[v], v))
    assign = [-1] * x.n
    used = [False] * y.n

    def backtrack(i: int) -> bool:
        if i == x.n:
            return True
        v = order[i]
        for w in by_color[cx[v]]:
            if used[w]:
                continue
            ok = True
            for j in range(i):
                u = order[j]
                if x.adjacent(u, v) != y.adjacent(assign[u], w):
                    ok = False
                    break
            if ok:
                assign[v] = w
                used[w] = True
                if backtrack(i + 1):
                    return True
                assign[v] = -1
                used[w] = False
        return False

    if not backtrack(0):
        return None
    inverse = [0] * y.n
    for v, w in enumerate(assign):
        inverse[w] = v
    forward = GraphMap(x, y, tuple(assign))
    backward = GraphMap(y, x, tuple(inverse))
    return Bijection(forward, backward)


def graph_universe(max_n: int, include_empty: bool = True) -> list[Graph]:
    """Every labelled graph on at most ``max_n`` vertices (all edge subsets)."""
    out: list[Graph] = [empty_graph()] if include_empty else []
    for n in range(1, max_n + 1):
        slots = list(itertools.combinations(range(n), 2))
        for mask in range(1 << len(slots)):
            chosen = [slots[i] for i in range(len(slots)) if mask >> i & 1]
            out.append(make_graph(n, chosen))
    return out


def graph_representatives(max_n: int, include_empty: bool = False) -> list[Graph]:
    """One representative per isomorphism class, up to ``max_n`` vertices."""
    reps: list[Graph] = []
    for g in graph_universe(max_n, include_empty=include_empty):
        if not any(r.n == g.n and are_isomorphic(r, g) for r in reps):
            reps.append(g)
    return reps
