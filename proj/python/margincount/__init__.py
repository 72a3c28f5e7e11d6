"""Exact counting and uniform sampling of matrices with fixed row/column sums."""

try:
    from ._margincount import (
        InfeasibleMarginsError,
        count,
        ehrhart_polynomial,
        gale_ryser_feasible,
        h_value,
        sample,
    )
except ImportError:  # extension on sys.path rather than inside the package
    from _margincount import (
        InfeasibleMarginsError,
        count,
        ehrhart_polynomial,
        gale_ryser_feasible,
        h_value,
        sample,
    )

__all__ = [
    "InfeasibleMarginsError",
    "count",
    "ehrhart_polynomial",
    "gale_ryser_feasible",
    "h_value",
    "sample",
]
