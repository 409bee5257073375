"""critlab: exact chromatic-criticality toolkit for small graphs."""

from .graphs import (
    Graph,
    GraphSizeError,
    common_neighbourhood,
    complete_graph,
    cycle_graph,
    delete_edges,
    delete_vertices,
    empty_graph,
    every_edge_in_triangle,
    from_edges,
    induced_subgraph,
    is_complete,
    is_connected,
    join,
    path_graph,
    triangles,
)
from .formats import Graph6Error, parse_edge_list, parse_graph6, to_graph6
from .coloring import (
    Coloring,
    ColorPartition,
    ColorStatus,
    chromatic_number,
    colorability_status,
    colors_used,
    enumerate_color_partitions,
    equivalent,
    is_k_colorable,
    is_uniquely_k_colorable,
    partition_of,
    rainbow_vertices,
    recolor_class_away,
    validate_coloring,
)
from .criticality import (
    CheckOutcome,
    CriticalityReport,
    Witness,
    check_no_k_minus_1_clique,
    criticality_report,
    is_double_critical,
    is_edge_plus_vertex_critical,
    is_indep_edge_pair_critical,
    is_triangle_critical,
    is_vertex_critical,
    verify_triangle_lemma,
)
from .replay import (
    Chain,
    Diagnosis,
    Verdict,
    build_chain,
    find_max_l_triangle,
    replay_proof,
    verify_certificate,
)
from .enumeration import (
    SearchReport,
    generate_connected,
    generate_graphs,
    ingest_graph6,
    verify_double_critical,
    verify_triangle_conjecture,
)

__version__ = "0.1.0"
