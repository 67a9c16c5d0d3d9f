"""Star b-colorings: exact values, certificates and star degrees for small graphs.

The usual entry points are :func:`exact_sb` (with a certificate),
:func:`class_eliminable` and :func:`is_minimal` for a given coloring, and
:func:`star_degree_bruteforce` / :func:`m_s_degree` for the upper bound.
"""

from .blocking import (
    BlockReport,
    ColorStatus,
    EliminationResult,
    MinimalityReport,
    P4System,
    available_colors,
    blocked_colors,
    class_eliminable,
    is_b_vertex,
    is_minimal,
    is_star_b_vertex,
    is_star_b_vertex_by_system,
    is_strong_star_b_vertex,
    minimality_report,
    p4_system,
)
from .coloring import (
    Coloring,
    ColoringError,
    ImproperColoringError,
    NotStarColoringError,
    P4Witness,
    as_coloring,
    canonical_form,
    find_bicolored_p4,
    is_proper,
    is_star_coloring,
    trivial_coloring,
)
from .errors import BudgetExhausted, OracleTooLarge, PreconditionError, SearchStats, StarbError
from .exact import (
    ChainReport,
    SbCertificate,
    clique_number,
    exact_b_chromatic,
    exact_chromatic,
    exact_sb,
    exact_star_chromatic,
    find_minimal_star_coloring,
    naive_sb,
    sb_join,
    verify_chain,
)
from .families import (
    FamilyResult,
    gen_tree_delta_squared,
    gen_tree_gap,
    sb_cycle,
    sb_family,
    sb_path,
    witness_cycle_coloring,
    witness_path_coloring,
)
from .graph import Graph, GraphError, complete, complete_bipartite, cycle, empty, join, path, read_graph, star
from .recoloring import chain_to_trivial, star_recoloring_algorithm, star_recoloring_step
from .star_degree import (
    decompose,
    delta_squared_bound,
    m_degree,
    m_s_degree,
    star_degree_bruteforce,
    star_degree_girth7,
    star_degree_matching,
    star_degrees,
)

__version__ = "0.1.0"
