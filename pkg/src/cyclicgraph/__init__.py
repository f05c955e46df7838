"""Finite semigroups, their cyclic graphs, and closed-form graph invariants."""

from .cyclic import (
    Classification,
    adjacent,
    build_cyclic_graph,
    classify,
    dominance_equals_idempotents,
    isolated_characterization,
    isolated_vertices,
)
from .graph import (
    SimpleGraph,
    connected_components,
    max_clique,
    max_independent_set,
    maximal_cliques,
    min_dominating_set,
)
from .green import GreenClasses, green_classes, h_class_is_group, is_completely_regular
from .invariants import (
    InvariantReport,
    clique_number_formula,
    clique_number_monogenic,
    independence_bounds,
    independence_number_monogenic,
    invariant_report,
    mu_k,
    nu,
)
from .semigroup import (
    ElementProfile,
    FiniteSemigroup,
    MonogenicParams,
    ReesSpec,
    closure,
    cyclic_group,
    direct_product,
    element_profile,
    exponent,
    from_table,
    idempotents,
    is_band,
    left_zero_band,
    monogenic,
    pi_set,
    power,
    product,
    rees_matrix,
    s_f_partition,
)
