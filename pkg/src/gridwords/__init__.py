"""gridwords: word-representability of triangular grid graphs.

A library and CLI that builds triangular grid graphs and their cell
subdivisions, constructs smart semi-transitive orientations, decides
word-representability, and cross-validates the decision rule against
exhaustive orientation search and induced-obstruction matching.
"""

from .graphs import Graph, edge, induced_subgraph, make_graph
from .grid import (
    BOUNDARY,
    BOUNDARY_TYPES,
    INTERIOR,
    CellRef,
    Down,
    GridCoord,
    TriGridGraph,
    Up,
    boundary_type,
    build_grid_graph,
    cartesian,
    classify_cell,
    classify_edge,
    property_set,
    three_coloring,
)
from .orientations import (
    OrientedGraph,
    SearchOutcome,
    ShortcutWitness,
    all_orientations,
    find_cycle,
    find_semi_transitive_orientation,
    find_shortcut,
    is_acyclic,
    is_semi_transitive,
    orient,
    orient_by_coloring,
    reverse_all,
)
from .smart import (
    IllegalTemplateError,
    InteriorSubdividedError,
    arc_class,
    default_choice,
    grid_arc_direction,
    licensed_templates,
    smart_orient,
    sweep_smart_orientations,
    template_for,
)
from .subdivision import (
    CrossValidationReport,
    MatchOutcome,
    SubdividedGraph,
    apex_label,
    cross_validate,
    find_induced_pattern,
    has_interior_subdivision,
    is_word_representable,
    max_subdivision,
    minimal_obstruction,
    subdivide,
    tri_cartesian,
    tri_coords,
)
from .words import (
    AlphabetMismatch,
    WordSearchOutcome,
    alternates,
    cyclic_shift,
    find_k_uniform_representant,
    format_word,
    graph_from_word,
    parse_word,
    represents,
    reverse,
    uniformity,
)
from .families import NamedGraph, gen_an, gen_named, gen_sg, gen_tn

__version__ = "0.1.0"
