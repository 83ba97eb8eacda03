"""Local dimension of finite posets: exact solvers, constructions and certificate checkers."""

from .constructions import (
    block_trace_cover,
    bogart_extension,
    boolean_lb_report,
    height2_local_realizer,
    ldim_bound_via_split,
    minmax_pair,
    one_chain_removal,
    product_realizer,
    removable_pair_height2,
    removable_quadruple,
    special_pair,
    staircase_cover,
    two_chain_removal,
    young_cover,
)
from .diffgraph import (
    BipartiteGraph,
    CoverFamily,
    DifferenceGraph,
    Member,
    count_partitions,
    critical_pair_graph,
    enumerate_difference_graphs,
    from_partition,
    ple_to_difference_graph,
    poset_from_bipartite,
    random_bipartite,
    to_partition,
    transpose,
    verify_cover,
)
from .errors import LocalDimError
from .poset import (
    ElementMap,
    Poset,
    antichain,
    boolean_lattice,
    build_poset,
    chain,
    generate,
    layers,
    parse_poset,
    product,
    split,
    standard_example,
)
from .realizer import LocalRealizer, Ple, verify_local_realizer, verify_realizer, mu_stats
from .solvers import SolveBudget, exact_cover_number, exact_dim, exact_ldim

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "CoverFamily",
    "DifferenceGraph",
    "ElementMap",
    "LocalDimError",
    "LocalRealizer",
    "Member",
    "Ple",
    "Poset",
    "SolveBudget",
    "antichain",
    "block_trace_cover",
    "bogart_extension",
    "boolean_lattice",
    "boolean_lb_report",
    "build_poset",
    "chain",
    "count_partitions",
    "critical_pair_graph",
    "enumerate_difference_graphs",
    "exact_cover_number",
    "exact_dim",
    "exact_ldim",
    "from_partition",
    "generate",
    "height2_local_realizer",
    "layers",
    "ldim_bound_via_split",
    "minmax_pair",
    "mu_stats",
    "one_chain_removal",
    "parse_poset",
    "ple_to_difference_graph",
    "poset_from_bipartite",
    "product",
    "product_realizer",
    "random_bipartite",
    "removable_pair_height2",
    "removable_quadruple",
    "special_pair",
    "split",
    "staircase_cover",
    "standard_example",
    "to_partition",
    "transpose",
    "two_chain_removal",
    "verify_cover",
    "verify_local_realizer",
    "verify_realizer",
    "young_cover",
]
