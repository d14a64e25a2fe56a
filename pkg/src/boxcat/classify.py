"""Candidate-seed enumeration and the classification sweep.

The fully labelled candidates are the 64 edge subsets on the four labelled
vertices; static validation alone cuts them down to the 4-cycle and the
complete graph.  Degenerate candidates merge labels in one of the three
patterns closed under the swap actions; each of them loses the unit law
dynamically.  Candidates with a swap/collapse-closed set of unlabelled
vertices are accepted from seed files but not enumerated here — one
hand-built specimen ships with the package and is falsified on the
four-vertex path.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .graphs import POINT, SEGMENT, Graph, make_graph, path_graph
from .kan import LABEL_KEYS, FunctorSeed, seed_violations
from .products import ProductKind
from . import checks

__all__ = [
    "FunctorialityVerdict",
    "SeedRecord",
    "ClassificationReport",
    "enumerate_labelled_seeds",
    "validate_seed_functoriality",
    "enumerate_merged_label_seeds",
    "inv_sigma_seed",
    "default_test_graphs",
    "classify_seeds",
]

_EDGE_SLOTS = tuple(itertools.combinations(range(4), 2))


def enumerate_labelled_seeds() -> list[FunctorSeed]:
    """All 64 candidates on the four labelled vertices, by edge bitmask.

    Vertex ``i`` carries the ``i``-th label in row-major order; actions are
    label-determined.  No validity filtering happens here.
    """
    labels = {key: i for i, key in enumerate(LABEL_KEYS)}
    out = []
    for mask in range(64):
        edges = [_EDGE_SLOTS[i] for i in range(6) if mask >> i & 1]
        gee = make_graph(4, edges)
        out.append(FunctorSeed.from_labels(gee, labels, description=f"labelled-{mask:02d}"))
    return out


@dataclass(frozen=True)
class FunctorialityVerdict:
    passed: bool
    reasons: tuple[str, ...]


def validate_seed_functoriality(seed: FunctorSeed) -> FunctorialityVerdict:
    """Static functor check: every seed invariant, with named reasons."""
    problems = seed_violations(seed)
    return FunctorialityVerdict(not problems, tuple(problems))


_MERGE_PATTERNS = {
    # label of (a, b) depends on the first coordinate only
    "row": {("s", "s"): 0, ("s", "t"): 0, ("t", "s"): 1, ("t", "t"): 1},
    # label of (a, b) depends on the second coordinate only
    "col": {("s", "s"): 0, ("s", "t"): 1, ("t", "s"): 0, ("t", "t"): 1},
    # total collapse
    "point": {key: 0 for key in LABEL_KEYS},
}


def _merged_action_base(pattern: str, labelled: int) -> dict[str, list[int]]:
    """Generator actions on the labelled part, forced by equivariance."""
    labels = _MERGE_PATTERNS[pattern]
    base: dict[str, list[int]] = {}
    for key, move in (
        ("sigma_l", lambda a, b: ({"s": "t", "t": "s"}[a], b)),
        ("sigma_r", lambda a, b: (a, {"s": "t", "t": "s"}[b])),
        ("sr_l", lambda a, b: ("s", b)),
        ("sr_r", lambda a, b: (a, "s")),
        ("tr_l", lambda a, b: ("t", b)),
        ("tr_r", lambda a, b: (a, "t")),
    ):
        values = [0] * labelled
        for (a, b), v in labels.items():
            values[v] = labels[move(a, b)]
        base[key] = values
    return base


def enumerate_merged_label_seeds(max_vertices: int = 3) -> list[FunctorSeed]:
    """Functorial seeds whose label function merges in one of the three patterns.

    Unlabelled vertices (up to ``max_vertices`` total) range over every
    consistent generator action and edge set, except that the collapse
    action of the merged coordinate must send every unlabelled vertex to a
    labelled one — candidates violating that are the user-supplied
    swap-closed family, excluded from built-in enumeration.
    """
    out: list[FunctorSeed] = []
    seen: set[tuple] = set()
    for pattern in ("row", "col", "point"):
        labels = _MERGE_PATTERNS[pattern]
        labelled = len(set(labels.values()))
        for n in range(labelled, max_vertices + 1):
            extra = list(range(labelled, n))
            base = _merged_action_base(pattern, labelled)
            free_keys = ("sigma_l", "sr_l", "sigma_r", "sr_r")
            choices = itertools.product(range(n), repeat=len(extra) * len(free_keys))
            for combo in choices:
                actions: dict[str, tuple[int, ...]] = {}
                values = iter(combo)
                for key in free_keys:
                    column = list(base[key]) + [next(values) for _ in extra]
                    actions[key] = tuple(column)
                # tr = sigma after sr in each coordinate
                for side in ("l", "r"):
                    sig, sr = actions[f"sigma_{side}"], actions[f"sr_{side}"]
                    actions[f"tr_{side}"] = tuple(sig[v] for v in sr)
                if not _collapses_unlabelled(pattern, actions, labelled, n):
                    continue
                slots = list(itertools.combinations(range(n), 2))
                for mask in range(1 << len(slots)):
                    edges = [slots[i] for i in range(len(slots)) if mask >> i & 1]
                    seed = FunctorSeed(
                        make_graph(n, edges),
                        dict(labels),
                        dict(actions),
                        description=f"merged-{pattern}-n{n}-e{mask:02d}-a{combo}",
                    )
                    if seed_violations(seed):
                        continue
                    key = seed.key()
                    if key not in seen:
                        seen.add(key)
                        out.append(seed)
    return out


def _collapses_unlabelled(
    pattern: str, actions: dict[str, tuple[int, ...]], labelled: int, n: int
) -> bool:
    unlabelled = range(labelled, n)
    left = all(actions["sr_l"][v] < labelled for v in unlabelled)
    right = all(actions["sr_r"][v] < labelled for v in unlabelled)
    if pattern == "row":
        return left
    if pattern == "col":
        return right
    return left or right


def inv_sigma_seed() -> FunctorSeed:
    """Hand-built degenerate seed with a swap/collapse-closed unlabelled vertex.

    The triangle on {0, 1, u}: labels merge in the row pattern, the
    first-coordinate collapse fixes u, and the extra vertex is adjacent to
    both labelled ones.  Its product with the one-edge graph still looks
    unital; the four-vertex path exposes the failure.
    """
    gee = make_graph(3, [(0, 1), (0, 2), (1, 2)])
    labels = dict(_MERGE_PATTERNS["row"])
    actions = {
        "sigma_l": (1, 0, 2),
        "sigma_r": (0, 1, 2),
        "sr_l": (0, 0, 2),
        "sr_r": (0, 1, 2),
        "tr_l": (1, 1, 2),
        "tr_r": (0, 1, 2),
    }
    return FunctorSeed(gee, labels, actions, description="inv-sigma-triangle")


def default_test_graphs() -> list[Graph]:
    """Every graph on at most 3 vertices plus the four-vertex path."""
    from .graphs import graph_universe

    return graph_universe(3) + [path_graph(3)]


#: Structural checks for surviving seeds run over this fixed small basis.
_STRUCTURAL_BASIS = (POINT, SEGMENT, path_graph(2))


@dataclass
class SeedRecord:
    seed: FunctorSeed
    description: str
    functorial: FunctorialityVerdict
    checks: dict[str, checks.CheckReport] = field(default_factory=dict)
    survivor: bool = False
    certified_as: str | None = None


@dataclass
class ClassificationReport:
    records: list[SeedRecord]
    survivors: list[SeedRecord]


def _certify(seed: FunctorSeed, tests: list[Graph]) -> str | None:
    """Match the seed product against box/categorical on every test pair.

    Uses the class-representative bijection: the reindexed colimit must
    equal the direct product as an index graph.
    """
    from .kan import lan_canonical
    from .products import product

    for kind in (ProductKind.BOX, ProductKind.CATEGORICAL):
        if all(
            lan_canonical(seed, x, y) == product(kind, x, y)
            for x in tests
            for y in tests
        ):
            return kind.value
    return None


def classify_seeds(seeds: list[FunctorSeed], test_graphs: list[Graph]) -> ClassificationReport:
    """Run every candidate through functoriality and the monoidal checks.

    Checks run in falsification order (functoriality, then the unit law,
    then the structural checks over a fixed small basis); a candidate that
    fails an early check is not pushed through the expensive later ones.
    Survivors are certified against box or categorical.
    """
    if not test_graphs:
        raise ValueError("empty test set")
    for required in (POINT, SEGMENT, path_graph(3)):
        if required not in test_graphs:
            raise ValueError("test graphs must include the point, the segment, and the 4-path")

    records = []
    for seed in seeds:
        record = SeedRecord(seed, seed.description, validate_seed_functoriality(seed))
        records.append(record)
        if not record.functorial.passed:
            continue
        put = checks.ProductUnderTest.from_seed(seed)
        unit = checks.check_unit(put, tests=test_graphs)
        record.checks["unit"] = unit
        if not unit.passed:
            continue
        triples = [
            (x, y, z)
            for x in _STRUCTURAL_BASIS
            for y in _STRUCTURAL_BASIS
            for z in _STRUCTURAL_BASIS
        ]
        pairs = [(x, y) for x in _STRUCTURAL_BASIS for y in _STRUCTURAL_BASIS]
        record.checks["associativity"] = checks.check_associativity(put, triples)
        record.checks["symmetry"] = checks.check_symmetry(put, pairs)
        record.checks["cocontinuity"] = checks.check_cocontinuity(put, triples)
        certified = _certify(seed, test_graphs)
        record.certified_as = certified
        if certified is None:
            record.checks["adjunction-count"] = checks.CheckReport(
                "adjunction-count",
                False,
                witness={"reason": "product matches neither closed kind"},
            )
        else:
            record.checks["adjunction-count"] = checks.check_adjunction_counts(
                put, ProductKind(certified), triples
            )
        record.survivor = all(r.passed for r in record.checks.values())
    survivors = [r for r in records if r.survivor]
    return ClassificationReport(records, survivors)
