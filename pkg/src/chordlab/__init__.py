"""Exact combinatorics of rooted chord diagrams.

Core object: `ChordDiagram`, a perfect matching of {1..2n} with chords
ordered by source.  The submodules group the rest: `structure` (terminal
chords, connectivity, intersection orders), `patterns` (crossing/nesting
classes), `bijections` (the terminal-flip map and its relatives),
`triangulation` (diagrams as rooted triangulations), `series` (weighted
generating-series solutions), `enumeration` (exhaustive counts),
`checks` (the registry behind `chordlab verify`).
"""

from .bijections import alpha, beta, chi, psi, theta, zeta
from .checks import check_ids, run_check, run_many
from .diagram import ChordDiagram, concat_all
from .enumeration import all_diagrams, count_class
from .patterns import in_class
from .series import diagram_series, solve_tree_like
from .structure import (
    is_k_connected,
    is_k_terminal,
    is_one_terminal,
    t1,
    terminal_profile,
    vertex_connectivity,
)

__all__ = [
    "ChordDiagram",
    "concat_all",
    "all_diagrams",
    "count_class",
    "in_class",
    "t1",
    "terminal_profile",
    "is_one_terminal",
    "is_k_terminal",
    "is_k_connected",
    "vertex_connectivity",
    "psi",
    "chi",
    "alpha",
    "beta",
    "theta",
    "zeta",
    "solve_tree_like",
    "diagram_series",
    "check_ids",
    "run_check",
    "run_many",
]
__version__ = "0.1.0"
