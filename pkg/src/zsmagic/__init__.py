"""Zero-sum partitions of finite Abelian groups and their applications:
triple bijections, group and integer Kotzig arrays, group distance magic
labelings of graph blow-ups, and exhaustive-search oracles for all of
them at small scale."""

from .errors import (
    ArityError,
    DivisibilityError,
    GroupSpecError,
    ImpossibilityError,
    NonexistenceError,
    ParameterError,
    ZsmagicError,
)
from .graphs import (
    OBSTRUCTION_ODD_DEGREES_ORDER_2_MOD_4,
    OBSTRUCTION_ODD_REGULAR_ONE_INVOLUTION,
    Graph,
    Labeling,
    Verdict,
    bipartite_blowup_exists,
    blowup_even_label,
    blowup_label,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    empty_graph,
    eulerian_bipartite_label,
    graph_from_text,
    graph_to_text,
    labeling_from_text,
    labeling_to_text,
    lex_product,
    obstruction_check,
    path_graph,
    verify_labeling,
)
from .groups import (
    CosetDecomposition,
    GroupSpec,
    InvolutionSet,
    abelian_groups_up_to,
    abelian_isomorphism_classes,
    canonical_factors,
    format_element,
    in_class_g,
    involution_count,
    involutions,
    is_isomorphic,
    parse_element,
    parse_group_spec,
    prime_power_refinement,
    quotient,
    subgroup_closure,
    sum_all,
    sum_all_literal,
    two_part_split,
    two_torsion_rank,
)
from .kotzig import (
    GroupKotzigArray,
    IntKotzigArray,
    array_from_text,
    array_to_text,
    build_group_kotzig,
    build_group_kotzig_2,
    build_group_kotzig_3,
    build_int_kotzig,
    verify_kotzig,
)
from .oracle import (
    SearchReport,
    conjecture_scan,
    report_from_text,
    report_to_text,
    scan_conjecture,
    search_kotzig,
    search_labeling,
    search_triple_bijection,
    search_zsp,
    verify_sized_partition,
)
from .zsp import (
    TripleBijection,
    ZeroSumPartition,
    base_tables,
    bijection_from_text,
    bijection_to_text,
    involution_quadruples,
    partition_from_text,
    partition_to_text,
    triple_bijection,
    triple_bijection_by_search,
    verify_triple_bijection,
    verify_zsp,
    zsp,
    zsp_even,
    zsp_odd,
)

__version__ = "0.1.0"
