"""Exact combinatorics of lattice paths with vertical steps."""
from .steps import D, S, U, V, Step, StepSet, companion_L, make_family
from .paths import Path, classify, decompose, format_path, parse_path, recompose
from .count import count_free_rec, count_primary, count_primary1
from .bijection import map_f, map_g, weighted_count

__version__ = "0.1.0"

__all__ = [
    "D", "Path", "S", "Step", "StepSet", "U", "V", "classify", "companion_L",
    "count_free_rec", "count_primary", "count_primary1", "decompose",
    "format_path", "make_family", "map_f", "map_g", "parse_path", "recompose",
    "weighted_count",
]
