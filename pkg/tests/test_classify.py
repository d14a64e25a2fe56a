import pytest

from boxcat.classify import (
    classify_seeds,
    default_test_graphs,
    enumerate_labelled_seeds,
    enumerate_merged_label_seeds,
    inv_sigma_seed,
    validate_seed_functoriality,
)
from boxcat.graphs import POINT, SEGMENT, are_isomorphic, path_graph
from boxcat.kan import FunctorSeed, lan_product, seed_violations


class TestLabelledEnumeration:
    def test_sixty_four_candidates(self):
        assert len(enumerate_labelled_seeds()) == 64

    def test_square_member_edges(self):
        # edges exactly between label pairs agreeing in one coordinate
        seed = enumerate_labelled_seeds()[0b110011]
        assert sorted(seed.gee.edges) == [(0, 1), (0, 2), (1, 3), (2, 3)]

    def test_complete_member(self):
        seed = enumerate_labelled_seeds()[63]
        assert seed.gee.num_edges == 6

    def test_ordering_by_bitmask(self):
        seeds = enumerate_labelled_seeds()
        assert seeds[0].gee.num_edges == 0
        assert [s.description for s in seeds[:3]] == [
            "labelled-00",
            "labelled-01",
            "labelled-02",
        ]

    def test_exactly_two_functorial(self):
        good = [
            s for s in enumerate_labelled_seeds() if validate_seed_functoriality(s).passed
        ]
        assert [s.description for s in good] == ["labelled-51", "labelled-63"]

    def test_single_diagonal_supergraphs_fail_on_swap_action(self):
        # the square plus one diagonal: the swap action is not a graph map
        seeds = enumerate_labelled_seeds()
        for mask in (0b110111, 0b111011):
            verdict = validate_seed_functoriality(seeds[mask])
            assert not verdict.passed
            assert any("not a graph map" in reason for reason in verdict.reasons)


class TestMergedEnumeration:
    def test_contains_two_vertex_row_seed(self):
        merged = enumerate_merged_label_seeds()
        two_vertex = [
            s
            for s in merged
            if s.gee.n == 2
            and s.labels[("s", "s")] == s.labels[("s", "t")]
            and s.labels[("t", "s")] == s.labels[("t", "t")]
        ]
        assert any(s.gee.num_edges == 1 for s in two_vertex)

    def test_contains_total_collapse(self):
        merged = enumerate_merged_label_seeds()
        assert any(s.gee.n == 1 for s in merged)

    def test_all_functorial(self):
        for seed in enumerate_merged_label_seeds():
            assert seed_violations(seed) == []

    def test_merge_pattern_not_closed_under_swap_rejected(self):
        # (s,s)=(s,t) without (t,s)=(t,t) violates equivariance
        labels = {("s", "s"): 0, ("s", "t"): 0, ("t", "s"): 1, ("t", "t"): 2}
        actions = {
            "sigma_l": (1, 0, 2),
            "sigma_r": (0, 2, 1),
            "sr_l": (0, 0, 0),
            "sr_r": (0, 1, 1),
            "tr_l": (1, 1, 1),
            "tr_r": (0, 2, 2),
        }
        seed = FunctorSeed(path_graph(2), labels, actions)
        problems = seed_violations(seed)
        assert problems

    def test_no_enumerated_seed_keeps_unlabelled_fixed(self):
        # the swap/collapse-closed candidates are excluded by construction
        for seed in enumerate_merged_label_seeds():
            labelled = seed.labelled_vertices()
            unlabelled = [v for v in range(seed.gee.n) if v not in labelled]
            collapses_left = all(seed.actions["sr_l"][v] in labelled for v in unlabelled)
            collapses_right = all(seed.actions["sr_r"][v] in labelled for v in unlabelled)
            assert collapses_left or collapses_right

    def test_every_merged_seed_loses_a_unit_instance_to_the_point(self):
        for seed in enumerate_merged_label_seeds():
            left = lan_product(seed, POINT, SEGMENT)
            right = lan_product(seed, SEGMENT, POINT)
            assert left == POINT or right == POINT


@pytest.fixture(scope="module")
def small_classification():
    seeds = enumerate_labelled_seeds() + [inv_sigma_seed()]
    return classify_seeds(seeds, default_test_graphs())


class TestClassification:
    def test_survivors_certified(self, small_classification):
        survivors = {(r.description, r.certified_as) for r in small_classification.survivors}
        assert survivors == {("labelled-51", "box"), ("labelled-63", "categorical")}

    def test_non_functorial_records_have_reasons(self, small_classification):
        for record in small_classification.records:
            if not record.functorial.passed:
                assert record.functorial.reasons

    def test_inv_sigma_fails_unit_with_witness(self, small_classification):
        record = next(
            r for r in small_classification.records if r.description.startswith("inv-sigma")
        )
        assert record.functorial.passed
        assert not record.checks["unit"].passed
        assert not record.survivor

    def test_requires_standard_test_graphs(self):
        with pytest.raises(ValueError):
            classify_seeds(enumerate_labelled_seeds()[:1], [POINT, SEGMENT])

    def test_rejects_empty_test_set(self):
        with pytest.raises(ValueError, match="empty test set"):
            classify_seeds(enumerate_labelled_seeds()[:1], [])

    def test_verdicts_independent_of_test_order(self):
        seeds = enumerate_labelled_seeds()[48:]  # includes both survivors
        tests = default_test_graphs()
        forward = classify_seeds(seeds, tests)
        backward = classify_seeds(seeds, list(reversed(tests)))
        assert [r.survivor for r in forward.records] == [
            r.survivor for r in backward.records
        ]
        assert [r.certified_as for r in forward.records] == [
            r.certified_as for r in backward.records
        ]


class TestInvSigma:
    def test_unit_holds_at_segment_but_not_at_path(self):
        seed = inv_sigma_seed()
        assert are_isomorphic(lan_product(seed, POINT, SEGMENT), SEGMENT) is not None
        p3 = path_graph(3)
        assert are_isomorphic(lan_product(seed, POINT, p3), p3) is None

    def test_unlabelled_vertex_is_swap_and_collapse_closed(self):
        seed = inv_sigma_seed()
        unlabelled = [v for v in range(seed.gee.n) if v not in seed.labelled_vertices()]
        assert unlabelled
        for v in unlabelled:
            for key in ("sigma_l", "sigma_r", "sr_l", "sr_r"):
                assert seed.actions[key][v] in unlabelled
