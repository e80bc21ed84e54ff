"""pgkit: exact clique, colouring and perfectness analysis of small graphs."""

from .analysis import (
    PerfectnessReport,
    chromatic_number,
    clique_number,
    colors_used,
    is_clique,
    is_nice,
    is_perfect,
    is_proper_coloring,
    is_stable,
    stability_number,
)
from .berge import find_odd_antihole, find_odd_hole, is_berge
from .construct import expand, fresh_vertex, repeat_vertex
from .graph import Graph, build, complement, has_edge, induced_subgraph, neighbors
from .iso import IsoMap, find_isomorphism, is_iso_using, map_graph
from .ordset import OrdSet
from .lovasz import check_replication_lemma, extend_coloring, exists_max_clique_with

__version__ = "0.1.0"
