"""Parametric positive solutions of signed polynomial systems."""

from ._core import (
    SubtropError,
    System,
    __version__,
    build_cnf,
    decide,
    evaluate_system_at,
    evaluate_t,
    exhaustive_decide,
    explain,
    grid_search,
    parse_system,
    print_system,
    symbolic_t,
    uniform_bound,
    verify_witness,
)

__all__ = [
    "SubtropError",
    "System",
    "__version__",
    "build_cnf",
    "decide",
    "evaluate_system_at",
    "evaluate_t",
    "exhaustive_decide",
    "explain",
    "grid_search",
    "parse_system",
    "print_system",
    "symbolic_t",
    "uniform_bound",
    "verify_witness",
]
