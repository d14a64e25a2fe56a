import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from boxcat.graphs import (
    POINT,
    SEGMENT,
    Graph,
    GraphMap,
    are_isomorphic,
    complete_graph,
    compose,
    cycle_graph,
    enumerate_maps,
    graph_universe,
    make_graph,
    path_graph,
)
from boxcat.products import (
    HomKind,
    ProductKind,
    curry,
    internal_hom,
    product,
    product_map,
    uncurry,
)


medium_graphs = st.builds(
    lambda n, mask: make_graph(
        n,
        [
            pair
            for i, pair in enumerate(itertools.combinations(range(n), 2))
            if mask >> i & 1
        ],
    ),
    st.integers(min_value=1, max_value=4),
    st.integers(min_value=0, max_value=63),
)


def adjacency_sets(g: Graph) -> dict[int, set[int]]:
    out: dict[int, set[int]] = {v: set() for v in range(g.n)}
    for u, v in g.edges:
        out[u].add(v)
        out[v].add(u)
    return out


def oracle_edges(kind: ProductKind, x: Graph, y: Graph) -> set[tuple[int, int]]:
    """Literal transcription of each edge condition over explicit neighbour sets."""
    nx, ny = adjacency_sets(x), adjacency_sets(y)
    edges = set()
    for (v, vp), (w, wp) in itertools.combinations(
        itertools.product(range(x.n), range(y.n)), 2
    ):
        a1, a2 = w in nx[v], wp in ny[vp]
        e1, e2 = v == w, vp == wp
        if kind is ProductKind.BOX:
            keep = (a1 and e2) or (e1 and a2)
        elif kind is ProductKind.CATEGORICAL:
            keep = (e1 or a1) and (e2 or a2)
        elif kind is ProductKind.TENSOR:
            keep = a1 and a2
        elif kind is ProductKind.LEXICOGRAPHIC:
            keep = a1 or (e1 and a2)
        elif kind is ProductKind.CONORMAL:
            keep = a1 or a2
        else:
            keep = (a1 and a2) or ((not e1 and not a1) and (not e2 and not a2))
        if keep:
            edges.add((v * y.n + vp, w * y.n + wp))
    return edges


class TestProduct:
    def test_box_of_segments_is_square(self):
        got = product(ProductKind.BOX, SEGMENT, SEGMENT)
        assert sorted(got.edges) == [(0, 1), (0, 2), (1, 3), (2, 3)]
        assert are_isomorphic(got, cycle_graph(4)) is not None

    def test_categorical_of_segments_is_complete(self):
        got = product(ProductKind.CATEGORICAL, SEGMENT, SEGMENT)
        assert got == complete_graph(4)

    def test_categorical_point_unit(self):
        for x in graph_universe(3):
            assert product(ProductKind.CATEGORICAL, POINT, x) == x

    def test_tensor_with_point_factor_is_edgeless(self):
        got = product(ProductKind.TENSOR, POINT, SEGMENT)
        assert got.n == 2 and got.num_edges == 0

    def test_lexicographic_cross_edges(self):
        two_points = make_graph(2, [])
        got = product(ProductKind.LEXICOGRAPHIC, SEGMENT, two_points)
        assert sorted(got.edges) == [(0, 2), (0, 3), (1, 2), (1, 3)]

    def test_vertex_counts(self):
        for kind in ProductKind:
            for x in graph_universe(2):
                for y in graph_universe(2):
                    assert product(kind, x, y).n == x.n * y.n

    def test_matches_oracle(self):
        universe = graph_universe(3)
        for kind in ProductKind:
            for x in universe:
                for y in universe:
                    assert product(kind, x, y).edges == frozenset(
                        oracle_edges(kind, x, y)
                    )

    def test_box_edges_within_categorical(self):
        for x in graph_universe(3):
            for y in graph_universe(3):
                box = product(ProductKind.BOX, x, y)
                cat = product(ProductKind.CATEGORICAL, x, y)
                assert box.edges <= cat.edges

    def test_lexicographic_order_matters(self):
        two_points = make_graph(2, [])
        one = product(ProductKind.LEXICOGRAPHIC, SEGMENT, two_points)
        other = product(ProductKind.LEXICOGRAPHIC, two_points, SEGMENT)
        assert are_isomorphic(one, other) is None

    def test_product_map_functorial_for_box(self):
        f = GraphMap(SEGMENT, POINT, (0, 0))
        g = GraphMap(SEGMENT, SEGMENT, (1, 0))
        pm = product_map(ProductKind.BOX, f, g)
        assert pm.source == product(ProductKind.BOX, SEGMENT, SEGMENT)
        assert pm.target == product(ProductKind.BOX, POINT, SEGMENT)

    def test_product_map_tensor_not_functorial(self):
        # collapsing an edge breaks the both-coordinates-step rule
        f = GraphMap(SEGMENT, POINT, (0, 0))
        g = GraphMap(SEGMENT, SEGMENT, (0, 1))
        with pytest.raises(ValueError):
            product_map(ProductKind.TENSOR, g, f)


def hom_oracle_edges(kind: HomKind, x: Graph, y: Graph) -> set[tuple[int, int]]:
    maps = [m.mapping for m in enumerate_maps(x, y)]
    ny = adjacency_sets(y)
    edges = set()
    for i, j in itertools.combinations(range(len(maps)), 2):
        f, g = maps[i], maps[j]
        if kind is HomKind.BOX:
            keep = all(f[v] == g[v] or g[v] in ny[f[v]] for v in range(x.n))
        else:
            keep = all(
                f[v] == g[w] or g[w] in ny[f[v]]
                for v in range(x.n)
                for w in range(x.n)
                if v == w or x.adjacent(v, w)
            )
        if keep:
            edges.add((i, j))
    return edges


class TestInternalHom:
    def test_box_hom_from_point(self):
        for y in graph_universe(3, include_empty=False):
            hom = internal_hom(HomKind.BOX, POINT, y)
            assert are_isomorphic(hom.graph, y) is not None

    def test_box_hom_of_segments(self):
        hom = internal_hom(HomKind.BOX, SEGMENT, SEGMENT)
        assert hom.graph == complete_graph(4)

    def test_categorical_hom_of_segments_golden(self):
        # frozen from the brute-force predicate evaluation below
        hom = internal_hom(HomKind.CATEGORICAL, SEGMENT, SEGMENT)
        assert hom.graph == complete_graph(4)

    def test_matches_oracle(self):
        universe = graph_universe(2) + [path_graph(2), complete_graph(3)]
        for kind in HomKind:
            for x in universe:
                for y in universe:
                    hom = internal_hom(kind, x, y)
                    assert hom.graph.edges == frozenset(hom_oracle_edges(kind, x, y))

    def test_vertices_are_map_enumeration(self):
        hom = internal_hom(HomKind.BOX, SEGMENT, path_graph(2))
        assert [m.mapping for m in hom.maps] == [
            m.mapping for m in enumerate_maps(SEGMENT, path_graph(2))
        ]


class TestAdjunctionCounts:
    def test_box_segment_triple_is_sixteen(self):
        prod = product(ProductKind.BOX, SEGMENT, SEGMENT)
        assert len(enumerate_maps(prod, SEGMENT)) == 16
        hom = internal_hom(HomKind.BOX, SEGMENT, SEGMENT)
        assert len(enumerate_maps(SEGMENT, hom.graph)) == 16

    def test_categorical_discriminating_count(self):
        # the loop-inclusive hom rule is what makes these agree (31 = 31);
        # quantifying over proper edges only would add hom-graph edges
        prod = product(ProductKind.CATEGORICAL, SEGMENT, SEGMENT)
        left = len(enumerate_maps(prod, path_graph(2)))
        hom = internal_hom(HomKind.CATEGORICAL, SEGMENT, path_graph(2))
        right = len(enumerate_maps(SEGMENT, hom.graph))
        assert left == right == 31

    def test_categorical_point_triples(self):
        for y in graph_universe(2):
            for z in graph_universe(2):
                prod = product(ProductKind.CATEGORICAL, POINT, y)
                hom = internal_hom(HomKind.CATEGORICAL, y, z)
                assert len(enumerate_maps(prod, z)) == len(
                    enumerate_maps(POINT, hom.graph)
                )


class TestCurrying:
    def test_point_first_factor(self):
        h = GraphMap(product(ProductKind.BOX, POINT, SEGMENT), SEGMENT, (0, 1))
        g = curry(HomKind.BOX, POINT, SEGMENT, h)
        hom = internal_hom(HomKind.BOX, SEGMENT, SEGMENT)
        assert hom.maps[g.mapping[0]].mapping == (0, 1)

    def test_constant_at_identity_uncurries_to_projection(self):
        hom = internal_hom(HomKind.BOX, SEGMENT, SEGMENT)
        ident = hom.index_of((0, 1))
        g = GraphMap(SEGMENT, hom.graph, (ident, ident))
        h = uncurry(HomKind.BOX, SEGMENT, SEGMENT, SEGMENT, g)
        assert h.mapping == (0, 1, 0, 1)  # second-coordinate projection

    def test_round_trip_exhaustive_small(self):
        universe = graph_universe(2)
        for kind in HomKind:
            for x in universe:
                for y in universe:
                    for z in universe:
                        prod = product(kind.product_kind, x, y)
                        hom = internal_hom(kind, y, z)
                        for h in enumerate_maps(prod, z):
                            back = uncurry(kind, x, y, z, curry(kind, x, y, h))
                            assert back == h
                        for g in enumerate_maps(x, hom.graph):
                            back = curry(kind, x, y, uncurry(kind, x, y, z, g))
                            assert back == g

    def test_bijection_counts_three_vertices(self):
        p2, k3 = path_graph(2), complete_graph(3)
        for kind in HomKind:
            for x, y, z in [(p2, SEGMENT, k3), (k3, p2, SEGMENT), (SEGMENT, k3, p2)]:
                prod = product(kind.product_kind, x, y)
                hom = internal_hom(kind, y, z)
                assert len(enumerate_maps(prod, z)) == len(enumerate_maps(x, hom.graph))

    def test_curry_rejects_wrong_source(self):
        h = GraphMap(SEGMENT, SEGMENT, (0, 1))
        with pytest.raises(ValueError):
            curry(HomKind.BOX, SEGMENT, SEGMENT, h)

    @given(
        st.sampled_from(list(HomKind)),
        medium_graphs,
        medium_graphs,
        medium_graphs,
        st.data(),
    )
    @settings(max_examples=30, deadline=None)
    def test_round_trip_sampled_medium(self, kind, x, y, z, data):
        prod = product(kind.product_kind, x, y)
        hom = internal_hom(kind, y, z)
        forward = enumerate_maps(prod, z)
        if forward:
            h = data.draw(st.sampled_from(forward))
            assert uncurry(kind, x, y, z, curry(kind, x, y, h)) == h
        backward = enumerate_maps(x, hom.graph)
        if backward:
            g = data.draw(st.sampled_from(backward))
            assert curry(kind, x, y, uncurry(kind, x, y, z, g)) == g

    def test_naturality_under_postcomposition(self):
        # curry(k . h) equals pointwise postcomposition of curry(h) by k
        x = y = SEGMENT
        z, zp = path_graph(2), SEGMENT
        k = GraphMap(z, zp, (0, 1, 0))
        prod = product(ProductKind.BOX, x, y)
        hom_z = internal_hom(HomKind.BOX, y, z)
        hom_zp = internal_hom(HomKind.BOX, y, zp)
        for h in enumerate_maps(prod, z):
            lhs = curry(HomKind.BOX, x, y, compose(k, h))
            g = curry(HomKind.BOX, x, y, h)
            post = tuple(
                hom_zp.index_of(compose(k, hom_z.maps[i]).mapping)
                for i in range(hom_z.graph.n)
            )
            assert lhs.mapping == tuple(post[i] for i in g.mapping)
