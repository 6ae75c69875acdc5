"""Circulant and abelian Cayley graph stability toolkit."""

from ._core import (  # noqa: F401
    AbelianGroup,
    Graph,
    InputError,
    SizeLimitError,
    abelian_groups_of_order,
    are_isomorphic,
    automorphism_group,
    boolean_square,
    c2_holds_for_b,
    cartesian_product,
    cartesian_skeleton,
    cayley_graph,
    check_conditions,
    circulant,
    classify,
    classify_one,
    compatible_cayley_search,
    compatible_matrix_search,
    complete,
    complete_bipartite,
    cycle,
    direct_product,
    disjoint_union,
    dispensable_edges,
    double_cover,
    double_cover_as_circulant,
    edgeless,
    enumerate_connection_sets,
    enumerate_connection_sets_cyclic,
    format_set,
    group_order,
    is_arc_transitive,
    is_bipartite,
    is_connected,
    is_edge_transitive,
    is_normal_cayley,
    is_stable,
    is_vertex_determining,
    lexicographic_product,
    minus_product_identity_check,
    parse_group,
    parse_set,
    run_survey,
    sufficient_arc_transitivity,
    tf_witness,
    thm3_certificate,
    to_dot,
    verify_tf_pair,
)

__version__ = "0.1.0"
