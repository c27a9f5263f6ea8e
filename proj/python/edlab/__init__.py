"""Exact solver and verification harness for the explorer-director game."""

from ._core import (
    Graph,
    bipanpositionable,
    cf_certificates,
    doubling_set,
    game_bounds,
    hypercube_bounds,
    hypercube_known_table,
    is_closed,
    is_path_closed,
    isometric_cycle_set,
    min_closed,
    predict_cf,
    predict_cycle_fd,
    solve,
    verify_paper,
    __version__,
)

__all__ = [
    "Graph",
    "bipanpositionable",
    "cf_certificates",
    "doubling_set",
    "game_bounds",
    "hypercube_bounds",
    "hypercube_known_table",
    "is_closed",
    "is_path_closed",
    "isometric_cycle_set",
    "min_closed",
    "predict_cf",
    "predict_cycle_fd",
    "solve",
    "verify_paper",
    "__version__",
]
