"""Python access to the calderon BEM library."""

from ._core import (
    apply_fault,
    assemble_laplace,
    assemble_maxwell,
    classify,
    consecutive_rates,
    cube_mesh,
    fit_rate,
    meshwidth,
    run,
    solution_names,
    sphere_mesh,
)

__all__ = [
    "apply_fault",
    "assemble_laplace",
    "assemble_maxwell",
    "classify",
    "consecutive_rates",
    "cube_mesh",
    "fit_rate",
    "meshwidth",
    "run",
    "solution_names",
    "sphere_mesh",
]
