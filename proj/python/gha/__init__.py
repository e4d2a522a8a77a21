"""Graphical house allocation."""

from ._core import (
    GhaError,
    concentration_check,
    delta_complete_binary,
    elegance,
    envy,
    generate,
    inorder_allocation,
    layout_allocation,
    runs,
    sample_gnp_half,
    solve_exact,
    trickle_down,
)

__all__ = [
    "GhaError",
    "concentration_check",
    "delta_complete_binary",
    "elegance",
    "envy",
    "generate",
    "inorder_allocation",
    "layout_allocation",
    "runs",
    "sample_gnp_half",
    "solve_exact",
    "trickle_down",
]
