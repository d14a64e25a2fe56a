"""Falsifiable checks for the monoidal, symmetric, and closed properties.

Every check returns a :class:`CheckReport`; a fail verdict always carries a
witness with enough data to re-run the single offending instance.  A pass
verdict only means "no counterexample on the supplied instances" — these
are falsifiers, not provers — but the human-readable table prints Yes/No.

Structure maps are canonical index bijections (rebracketing, swap, block
sums), so the checks test whether those bijections are graph isomorphisms;
iso search is a fallback for products without a canonical indexing.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .graphs import (
    POINT,
    Graph,
    GraphMap,
    are_isomorphic,
    disjoint_union,
    empty_graph,
    enumerate_maps,
    graph_universe,
    pushout,
)
from .kan import FunctorSeed, lan_class_pairs, lan_colimit
from .products import HomKind, ProductKind, internal_hom, product

__all__ = [
    "CheckReport",
    "ProductUnderTest",
    "check_unit",
    "check_associativity",
    "check_symmetry",
    "check_adjunction",
    "check_adjunction_counts",
    "check_cocontinuity",
    "TableRow",
    "TableReport",
    "property_table",
    "TABLE_KIND_ORDER",
]


def graph_blob(g: Graph) -> dict:
    """JSON-able snapshot of a graph, used in witnesses."""
    return {"n": g.n, "edges": sorted(list(e) for e in g.edges)}


@dataclass
class CheckReport:
    name: str
    passed: bool
    witness: dict | None = None
    children: tuple["CheckReport", ...] = ()

    def to_json(self) -> dict:
        out: dict = {"name": self.name, "passed": self.passed}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.children:
            out["children"] = [c.to_json() for c in self.children]
        return out


@dataclass(eq=False)
class ProductUnderTest:
    """A product to check: a built-in kind or a seed evaluated by colimit.

    Seed products are reindexed to row-major vertex pairs through the
    class-representative bijection whenever that bijection exists.
    """

    name: str
    kind: ProductKind | None = None
    seed: FunctorSeed | None = None
    _cache: dict = field(default_factory=dict, repr=False)

    @classmethod
    def from_kind(cls, kind: ProductKind) -> "ProductUnderTest":
        return cls(kind.label, kind=kind)

    @classmethod
    def from_seed(cls, seed: FunctorSeed, name: str | None = None) -> "ProductUnderTest":
        return cls(name or seed.description or "seed", seed=seed)

    def evaluate_full(self, x: Graph, y: Graph) -> tuple[Graph, bool]:
        """Product graph plus a flag: True when row-major indexed."""
        key = (x, y)
        hit = self._cache.get(key)
        if hit is not None:
            return hit
        if self.kind is not None:
            result = (product(self.kind, x, y), True)
        else:
            assert self.seed is not None
            diagram, colim = lan_colimit(self.seed, x, y)
            pairs = lan_class_pairs(self.seed, diagram, colim)
            indices = [p[0] * y.n + p[1] for p in pairs if p is not None]
            if None in pairs or sorted(indices) != list(range(x.n * y.n)):
                result = (colim.quotient, False)
            else:
                edges = frozenset(
                    (min(indices[u], indices[v]), max(indices[u], indices[v]))
                    for u, v in colim.quotient.edges
                )
                result = (Graph(x.n * y.n, edges), True)
        if len(self._cache) > 4096:
            self._cache.clear()
        self._cache[key] = result
        return result

    def evaluate(self, x: Graph, y: Graph) -> Graph:
        return self.evaluate_full(x, y)[0]

    def evaluate_canonical(self, x: Graph, y: Graph) -> Graph | None:
        g, canonical = self.evaluate_full(x, y)
        return g if canonical else None


def _unit_instance_passes(put: ProductUnderTest, computed: Graph, expected: Graph) -> bool:
    # canonical projection first (index sets agree for row-major products
    # with a one-vertex factor), then the general search
    return computed == expected or are_isomorphic(computed, expected) is not None


def check_unit(
    put: ProductUnderTest,
    tests: Sequence[Graph],
    candidates: Sequence[tuple[Graph, str]] | None = None,
) -> CheckReport:
    """Does some candidate act as a two-sided unit on every test graph?"""
    if candidates is None:
        candidates = ((empty_graph(), "empty"), (POINT, "point"))
    children = []
    for cand, cname in candidates:
        witness = None
        for x in tests:
            for side, computed in (
                ("left", put.evaluate(cand, x)),
                ("right", put.evaluate(x, cand)),
            ):
                if not _unit_instance_passes(put, computed, x):
                    witness = {
                        "candidate": cname,
                        "side": side,
                        "test": graph_blob(x),
                        "computed": graph_blob(computed),
                    }
                    break
            if witness:
                break
        children.append(CheckReport(f"unit[{cname}]", witness is None, witness))
    passed = any(c.passed for c in children)
    witness = None if passed else {"candidates": [c.witness for c in children]}
    return CheckReport("unit", passed, witness, tuple(children))


def check_associativity(
    put: ProductUnderTest, triples: Iterable[tuple[Graph, Graph, Graph]]
) -> CheckReport:
    """Is the rebracketing index bijection an isomorphism on every triple?

    On row-major products the rebracketing bijection is the identity on
    indices, so the two bracketings must agree as index graphs.
    """
    for x, y, z in triples:
        xy = put.evaluate_canonical(x, y)
        yz = put.evaluate_canonical(y, z)
        lhs = put.evaluate_canonical(xy, z) if xy is not None else None
        rhs = put.evaluate_canonical(x, yz) if yz is not None else None
        if lhs is None or rhs is None:
            witness = {
                "triple": [graph_blob(g) for g in (x, y, z)],
                "reason": "no canonical pair indexing",
            }
            return CheckReport("associativity", False, witness)
        if lhs != rhs:
            witness = {
                "triple": [graph_blob(g) for g in (x, y, z)],
                "lhs": graph_blob(lhs),
                "rhs": graph_blob(rhs),
            }
            return CheckReport("associativity", False, witness)
    return CheckReport("associativity", True)


def check_symmetry(
    put: ProductUnderTest, pairs: Iterable[tuple[Graph, Graph]]
) -> CheckReport:
    """Is the coordinate swap an isomorphism ``X*Y -> Y*X`` on every pair?"""
    for x, y in pairs:
        xy = put.evaluate_canonical(x, y)
        yx = put.evaluate_canonical(y, x)
        if xy is None or yx is None:
            witness = {
                "pair": [graph_blob(g) for g in (x, y)],
                "reason": "no canonical pair indexing",
            }
            return CheckReport("symmetry", False, witness)
        swap = lambda i: (i % y.n) * x.n + (i // y.n)  # noqa: E731
        swapped = frozenset(
            (min(swap(u), swap(v)), max(swap(u), swap(v))) for u, v in xy.edges
        )
        if swapped != yx.edges:
            witness = {
                "pair": [graph_blob(g) for g in (x, y)],
                "forward": graph_blob(xy),
                "reverse": graph_blob(yx),
            }
            return CheckReport("symmetry", False, witness)
    return CheckReport("symmetry", True)


def check_adjunction(
    kind: HomKind, triples: Iterable[tuple[Graph, Graph, Graph]]
) -> CheckReport:
    """Hom-set counts match and currying round-trips both ways.

    Transposition runs on raw mapping tuples with the per-triple tables
    hoisted; membership in the enumerated hom sets stands in for map
    validity on each side.
    """
    instances = 0
    for x, y, z in triples:
        instances += 1
        witness = _adjunction_instance(kind, x, y, z)
        if witness is not None:
            return CheckReport(f"adjunction[{kind.value}]", False, witness)
    return CheckReport(f"adjunction[{kind.value}]", True, witness={"instances": instances})


def _adjunction_instance(kind: HomKind, x: Graph, y: Graph, z: Graph) -> dict | None:
    blob = {"triple": [graph_blob(g) for g in (x, y, z)]}
    prod = product(kind.product_kind, x, y)
    hom = internal_hom(kind, y, z)
    prod_side = enumerate_maps(prod, z)
    hom_side = enumerate_maps(x, hom.graph)
    if len(prod_side) != len(hom_side):
        return blob | {
            "count_product_side": len(prod_side),
            "count_hom_side": len(hom_side),
        }
    ny = y.n
    index = hom._index
    rows = [m.mapping for m in hom.maps]
    hom_mappings = {m.mapping for m in hom_side}
    prod_mappings = {m.mapping for m in prod_side}

    def curry_tuple(hm: tuple[int, ...]) -> tuple[int, ...] | None:
        out = []
        for xv in range(x.n):
            idx = index.get(hm[xv * ny : (xv + 1) * ny])
            if idx is None:
                return None
            out.append(idx)
        return tuple(out)

    def uncurry_tuple(gm: tuple[int, ...]) -> tuple[int, ...]:
        flat: list[int] = []
        for xv in range(x.n):
            flat.extend(rows[gm[xv]])
        return tuple(flat)

    for h in prod_side:
        c = curry_tuple(h.mapping)
        if c is None or c not in hom_mappings:
            return blob | {"map": list(h.mapping), "reason": "curry leaves the hom set"}
        if uncurry_tuple(c) != h.mapping:
            return blob | {"map": list(h.mapping), "reason": "uncurry(curry(h)) != h"}
    for g in hom_side:
        u = uncurry_tuple(g.mapping)
        if u not in prod_mappings:
            return blob | {"map": list(g.mapping), "reason": "uncurry leaves the hom set"}
        if curry_tuple(u) != g.mapping:
            return blob | {"map": list(g.mapping), "reason": "curry(uncurry(g)) != g"}
    return None


def check_adjunction_counts(
    put: ProductUnderTest, kind: ProductKind, triples: Iterable[tuple[Graph, Graph, Graph]]
) -> CheckReport:
    """Count-only adjunction check for a product matched to a closed kind."""
    hom_kind = HomKind(kind.value)
    for x, y, z in triples:
        prod = put.evaluate(x, y)
        left = len(enumerate_maps(prod, z))
        right = len(enumerate_maps(x, internal_hom(hom_kind, y, z).graph))
        if left != right:
            witness = {
                "triple": [graph_blob(g) for g in (x, y, z)],
                "count_product_side": left,
                "count_hom_side": right,
            }
            return CheckReport("adjunction-count", False, witness)
    return CheckReport("adjunction-count", True)


def _induced_right(put: ProductUnderTest, x: Graph, m: GraphMap) -> GraphMap:
    """Index-wise ``id_x * m`` between canonical products."""
    src = put.evaluate_canonical(x, m.source)
    dst = put.evaluate_canonical(x, m.target)
    if src is None or dst is None:
        raise ValueError("no canonical pair indexing")
    a, b = m.source.n, m.target.n
    return GraphMap(src, dst, tuple((i // a) * b + m.mapping[i % a] for i in range(src.n)))


def _induced_left(put: ProductUnderTest, m: GraphMap, x: Graph) -> GraphMap:
    """Index-wise ``m * id_x`` between canonical products."""
    src = put.evaluate_canonical(m.source, x)
    dst = put.evaluate_canonical(m.target, x)
    if src is None or dst is None:
        raise ValueError("no canonical pair indexing")
    return GraphMap(src, dst, tuple(m.mapping[i // x.n] * x.n + i % x.n for i in range(src.n)))


def check_cocontinuity(
    put: ProductUnderTest, probes: Iterable[tuple[Graph, Graph, Graph]]
) -> CheckReport:
    """Does tensoring preserve coproducts and a pushout, in each variable?

    Probe ``(X, Y, Z)``: split ``X * (Y + Z)`` and ``(Y + Z) * X`` into
    blocks, and push out the wedge of ``Y`` and ``Z`` at their first
    vertices on both sides of the product.
    """
    for x, y, z in probes:
        fail = _cocontinuity_probe(put, x, y, z)
        if fail is not None:
            return CheckReport("cocontinuity", False, fail)
    return CheckReport("cocontinuity", True)


def _cocontinuity_probe(
    put: ProductUnderTest, x: Graph, y: Graph, z: Graph
) -> dict | None:
    blob = {"probe": [graph_blob(g) for g in (x, y, z)]}
    d, _, _ = disjoint_union(y, z)

    whole = put.evaluate_canonical(x, d)
    left_block = put.evaluate_canonical(x, y)
    right_block = put.evaluate_canonical(x, z)
    if whole is None or left_block is None or right_block is None:
        return blob | {"part": "coproduct-right", "reason": "no canonical pair indexing"}
    blocks, _, _ = disjoint_union(left_block, right_block)

    def t_right(i: int) -> int:
        xi, a = divmod(i, d.n)
        return xi * y.n + a if a < y.n else left_block.n + xi * z.n + (a - y.n)

    mapped = frozenset(
        (min(t_right(u), t_right(v)), max(t_right(u), t_right(v))) for u, v in whole.edges
    )
    if whole.n != blocks.n or mapped != blocks.edges:
        return blob | {
            "part": "coproduct-right",
            "lhs": graph_blob(whole),
            "rhs": graph_blob(blocks),
        }

    whole_l = put.evaluate_canonical(d, x)
    left_l = put.evaluate_canonical(y, x)
    right_l = put.evaluate_canonical(z, x)
    if whole_l is None or left_l is None or right_l is None:
        return blob | {"part": "coproduct-left", "reason": "no canonical pair indexing"}
    blocks_l, _, _ = disjoint_union(left_l, right_l)

    def t_left(i: int) -> int:
        a, xi = divmod(i, x.n)
        return a * x.n + xi if a < y.n else left_l.n + (a - y.n) * x.n + xi

    mapped_l = frozenset(
        (min(t_left(u), t_left(v)), max(t_left(u), t_left(v))) for u, v in whole_l.edges
    )
    if whole_l.n != blocks_l.n or mapped_l != blocks_l.edges:
        return blob | {
            "part": "coproduct-left",
            "lhs": graph_blob(whole_l),
            "rhs": graph_blob(blocks_l),
        }

    if y.n == 0 or z.n == 0:
        return None
    f = GraphMap(POINT, y, (0,))
    g = GraphMap(POINT, z, (0,))
    wedge = pushout(f, g)

    try:
        pf = _induced_right(put, x, f)
        pg = _induced_right(put, x, g)
    except ValueError as exc:
        return blob | {"part": "pushout-right", "reason": str(exc)}
    lhs = put.evaluate_canonical(x, wedge.graph)
    po = pushout(pf, pg)
    # canonical mediating vertex map: pushout class -> (x, wedge class)
    mediating = [-1] * po.graph.n
    for i in range(pf.target.n):
        xi, a = divmod(i, y.n)
        mediating[po.left.mapping[i]] = xi * wedge.graph.n + wedge.left.mapping[a]
    for j in range(pg.target.n):
        xi, b = divmod(j, z.n)
        mediating[po.right.mapping[j]] = xi * wedge.graph.n + wedge.right.mapping[b]
    if lhs is None or not _is_edge_bijection(po.graph, lhs, mediating):
        return blob | {
            "part": "pushout-right",
            "lhs": graph_blob(lhs) if lhs is not None else None,
            "rhs": graph_blob(po.graph),
        }

    try:
        qf = _induced_left(put, f, x)
        qg = _induced_left(put, g, x)
    except ValueError as exc:
        return blob | {"part": "pushout-left", "reason": str(exc)}
    lhs_l = put.evaluate_canonical(wedge.graph, x)
    po_l = pushout(qf, qg)
    mediating_l = [-1] * po_l.graph.n
    for i in range(qf.target.n):
        a, xi = divmod(i, x.n)
        mediating_l[po_l.left.mapping[i]] = wedge.left.mapping[a] * x.n + xi
    for j in range(qg.target.n):
        b, xi = divmod(j, x.n)
        mediating_l[po_l.right.mapping[j]] = wedge.right.mapping[b] * x.n + xi
    if lhs_l is None or not _is_edge_bijection(po_l.graph, lhs_l, mediating_l):
        return blob | {
            "part": "pushout-left",
            "lhs": graph_blob(lhs_l) if lhs_l is not None else None,
            "rhs": graph_blob(po_l.graph),
        }
    return None


def _is_edge_bijection(src: Graph, dst: Graph, mapping: Sequence[int]) -> bool:
    """Is ``mapping`` a bijection carrying the edge set of src exactly onto dst's?"""
    if src.n != dst.n or sorted(mapping) != list(range(dst.n)):
        return False
    mapped = frozenset(
        (min(mapping[u], mapping[v]), max(mapping[u], mapping[v])) for u, v in src.edges
    )
    return mapped == dst.edges


TABLE_KIND_ORDER = (
    ProductKind.BOX,
    ProductKind.CATEGORICAL,
    ProductKind.TENSOR,
    ProductKind.LEXICOGRAPHIC,
    ProductKind.CONORMAL,
    ProductKind.MODULAR,
)


@dataclass
class TableRow:
    kind: ProductKind
    monoidal: str
    symmetric: str
    closed: str
    raw: dict[str, CheckReport | None]

    def cells(self) -> tuple[str, str, str, str]:
        return (self.kind.label, self.monoidal, self.symmetric, self.closed)


@dataclass
class TableReport:
    max_n: int
    rows: list[TableRow]

    def to_json(self) -> dict:
        return {
            "max_n": self.max_n,
            "rows": [
                {
                    "name": row.kind.label,
                    "monoidal": row.monoidal,
                    "symmetric": row.symmetric,
                    "closed": row.closed,
                    "raw": {
                        key: (rep.to_json() if rep is not None else None)
                        for key, rep in row.raw.items()
                    },
                }
                for row in self.rows
            ],
        }


def _yes_no(passed: bool) -> str:
    return "Yes" if passed else "No"


def property_table(max_n: int) -> TableReport:
    """Verdict table over every graph with at most ``max_n`` vertices.

    Monoidal needs a working unit candidate plus associativity; Symmetric
    and Closed print N/A for non-monoidal kinds, mirroring how the raw swap
    and cocontinuity outcomes are still recorded in the machine output.
    The adjunction leg of Closed runs on isomorphism-class representatives
    (its verdict is iso-invariant); everything else sweeps all labelled
    graphs in the universe.
    """
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    universe = graph_universe(max_n)
    pairs = [(x, y) for x in universe for y in universe]
    triples = [(x, y, z) for x in universe for y in universe for z in universe]
    from .graphs import graph_representatives

    reps = graph_representatives(max_n, include_empty=True)
    adj_triples = [(x, y, z) for x in reps for y in reps for z in reps]

    rows = []
    for kind in TABLE_KIND_ORDER:
        put = ProductUnderTest.from_kind(kind)
        unit = check_unit(put, universe)
        assoc = check_associativity(put, triples) if unit.passed else None
        monoidal = unit.passed and assoc is not None and assoc.passed
        swap = check_symmetry(put, pairs)
        cocont = check_cocontinuity(put, triples)
        adj: CheckReport | None = None
        if kind in (ProductKind.BOX, ProductKind.CATEGORICAL):
            adj = check_adjunction(HomKind(kind.value), adj_triples)
        closed_raw = cocont.passed and (adj is None or adj.passed)
        rows.append(
            TableRow(
                kind=kind,
                monoidal=_yes_no(monoidal),
                symmetric="N/A" if not monoidal else _yes_no(swap.passed),
                closed="N/A" if not monoidal else _yes_no(closed_raw),
                raw={
                    "unit": unit,
                    "associativity": assoc,
                    "symmetry": swap,
                    "cocontinuity": cocont,
                    "adjunction": adj,
                },
            )
        )
    return TableReport(max_n, rows)
