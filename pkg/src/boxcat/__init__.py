"""Products, internal homs, Kan-extension colimits, and monoidal-structure
checks for finite reflexive graphs."""

from .graphs import (
    Bijection,
    Graph,
    GraphMap,
    Pushout,
    are_isomorphic,
    compose,
    disjoint_union,
    enumerate_maps,
    graph_universe,
    identity_map,
    is_graph_map,
    make_graph,
    path_graph,
    pushout,
    standard_graph,
)
from .gg import GGMorphism, GGObject, gg_compose, gg_homset, yoneda_action
from .products import HomKind, ProductKind, curry, internal_hom, product, uncurry
from .kan import (
    ColimitResult,
    CommaDiagram,
    FunctorSeed,
    check_finality,
    colimit,
    edge_comma_category,
    full_comma_category,
    lan_product,
)
from .checks import CheckReport, ProductUnderTest, property_table
from .classify import (
    classify_seeds,
    enumerate_labelled_seeds,
    enumerate_merged_label_seeds,
    inv_sigma_seed,
    validate_seed_functoriality,
)

__version__ = "0.1.0"
