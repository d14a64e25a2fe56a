import pytest

from boxcat.checks import (
    ProductUnderTest,
    check_adjunction,
    check_associativity,
    check_cocontinuity,
    check_symmetry,
    check_unit,
    property_table,
)
from boxcat.classify import enumerate_labelled_seeds
from boxcat.graphs import (
    POINT,
    SEGMENT,
    are_isomorphic,
    graph_universe,
    make_graph,
    path_graph,
)
from boxcat.products import HomKind, ProductKind

BASIS = [POINT, SEGMENT, path_graph(2)]
PAIRS = [(x, y) for x in BASIS for y in BASIS]
TRIPLES = [(x, y, z) for x in BASIS for y in BASIS for z in BASIS]


def put(kind: ProductKind) -> ProductUnderTest:
    return ProductUnderTest.from_kind(kind)


def witness_graph(blob: dict) -> "Graph":
    from boxcat.graphs import Graph

    return make_graph(blob["n"], blob["edges"])


class TestUnit:
    def test_box_passes(self):
        report = check_unit(put(ProductKind.BOX), graph_universe(3))
        assert report.passed

    def test_tensor_fails_with_edgeless_witness(self):
        report = check_unit(put(ProductKind.TENSOR), [SEGMENT])
        assert not report.passed
        point_child = next(c for c in report.children if c.name == "unit[point]")
        computed = witness_graph(point_child.witness["computed"])
        assert computed.num_edges == 0 and computed.n == 2

    def test_modular_fails(self):
        report = check_unit(put(ProductKind.MODULAR), [SEGMENT])
        assert not report.passed

    def test_witness_revalidates(self):
        report = check_unit(put(ProductKind.TENSOR), graph_universe(3))
        child = next(c for c in report.children if not c.passed)
        test = witness_graph(child.witness["test"])
        computed = witness_graph(child.witness["computed"])
        assert are_isomorphic(computed, test) is None


class TestAssociativity:
    def test_box_passes(self):
        assert check_associativity(put(ProductKind.BOX), TRIPLES).passed

    def test_lexicographic_passes(self):
        assert check_associativity(put(ProductKind.LEXICOGRAPHIC), TRIPLES).passed

    def test_tensor_vacuous_with_point(self):
        report = check_associativity(
            put(ProductKind.TENSOR), [(POINT, SEGMENT, SEGMENT)]
        )
        assert report.passed

    def test_rebracketing_by_kind(self):
        # the modular rule is the only one that fails rebracketing here: a
        # point factor kills all edges on one side but not the other
        for kind in ProductKind:
            report = check_associativity(put(kind), TRIPLES)
            assert report.passed == (kind is not ProductKind.MODULAR)

    def test_modular_witness_revalidates(self):
        report = check_associativity(put(ProductKind.MODULAR), TRIPLES)
        lhs = witness_graph(report.witness["lhs"])
        rhs = witness_graph(report.witness["rhs"])
        assert lhs != rhs


class TestSymmetry:
    def test_box_passes(self):
        assert check_symmetry(put(ProductKind.BOX), PAIRS).passed

    def test_conormal_passes(self):
        assert check_symmetry(put(ProductKind.CONORMAL), PAIRS).passed

    def test_lexicographic_fails_with_witness(self):
        two_points = make_graph(2, [])
        report = check_symmetry(put(ProductKind.LEXICOGRAPHIC), [(SEGMENT, two_points)])
        assert not report.passed
        fwd = witness_graph(report.witness["forward"])
        rev = witness_graph(report.witness["reverse"])
        assert are_isomorphic(fwd, rev) is None
        assert fwd.num_edges == 4 and rev.num_edges == 2


class TestAdjunction:
    def test_box_segment_triple(self):
        report = check_adjunction(HomKind.BOX, [(SEGMENT, SEGMENT, SEGMENT)])
        assert report.passed

    def test_categorical_point_triples(self):
        triples = [(POINT, y, z) for y in BASIS for z in BASIS]
        assert check_adjunction(HomKind.CATEGORICAL, triples).passed

    def test_small_sweep_both_kinds(self):
        universe = graph_universe(2)
        triples = [(x, y, z) for x in universe for y in universe for z in universe]
        for kind in HomKind:
            assert check_adjunction(kind, triples).passed


class TestCocontinuity:
    def test_conormal_fails_connectedness(self):
        report = check_cocontinuity(
            put(ProductKind.CONORMAL), [(SEGMENT, POINT, POINT)]
        )
        assert not report.passed
        lhs = witness_graph(report.witness["lhs"])
        rhs = witness_graph(report.witness["rhs"])
        assert are_isomorphic(lhs, rhs) is None

    def test_lexicographic_fails_right_variable(self):
        report = check_cocontinuity(
            put(ProductKind.LEXICOGRAPHIC), [(SEGMENT, POINT, POINT)]
        )
        assert not report.passed
        assert report.witness["part"] == "coproduct-right"

    def test_box_passes_small(self):
        assert check_cocontinuity(put(ProductKind.BOX), TRIPLES).passed

    def test_categorical_passes_small(self):
        assert check_cocontinuity(put(ProductKind.CATEGORICAL), TRIPLES).passed


class TestSeedProducts:
    def test_survivors_pass_everything_small(self):
        for index, kind in ((0b110011, ProductKind.BOX), (63, ProductKind.CATEGORICAL)):
            seed_put = ProductUnderTest.from_seed(enumerate_labelled_seeds()[index])
            assert check_unit(seed_put, BASIS).passed
            assert check_associativity(seed_put, TRIPLES).passed
            assert check_symmetry(seed_put, PAIRS).passed
            assert check_cocontinuity(seed_put, TRIPLES).passed
            for x in BASIS:
                for y in BASIS:
                    assert seed_put.evaluate(x, y) == put(kind).evaluate(x, y)


class TestPropertyTable:
    def test_rejects_tiny_bound(self):
        with pytest.raises(ValueError):
            property_table(1)

    def test_verdicts_at_two(self):
        report = property_table(2)
        cells = {row.kind.label: (row.monoidal, row.symmetric, row.closed) for row in report.rows}
        assert cells == {
            "Box": ("Yes", "Yes", "Yes"),
            "Categorical": ("Yes", "Yes", "Yes"),
            "Tensor": ("No", "N/A", "N/A"),
            "Lexicographical": ("Yes", "No", "No"),
            "Conormal": ("Yes", "Yes", "No"),
            "Modular": ("No", "N/A", "N/A"),
        }

    def test_raw_outcomes_recorded_for_non_monoidal(self):
        report = property_table(2)
        tensor = next(row for row in report.rows if row.kind is ProductKind.TENSOR)
        assert tensor.raw["symmetry"] is not None
        assert tensor.raw["cocontinuity"] is not None
        assert tensor.raw["unit"].witness is not None

    def test_failures_monotone_from_two_to_three(self, table3):
        report2 = property_table(2)
        cells2 = {r.kind: (r.monoidal, r.symmetric, r.closed) for r in report2.rows}
        cells3 = {r.kind: (r.monoidal, r.symmetric, r.closed) for r in table3.rows}
        for kind, verdicts in cells2.items():
            for a, b in zip(verdicts, cells3[kind]):
                if a in ("No", "N/A"):
                    assert b in ("No", "N/A")


@pytest.fixture(scope="session")
def table3():
    return property_table(3)
