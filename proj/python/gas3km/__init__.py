"""GAS3 / GAS3KM real-coded genetic algorithms and benchmark functions."""

from ._core import (
    RunConfig,
    RunResult,
    evaluate,
    kmeans_objective,
    list_functions,
    recombine,
    run,
    run_grid,
    skewed_init,
)

__all__ = [
    "RunConfig",
    "RunResult",
    "evaluate",
    "kmeans_objective",
    "list_functions",
    "recombine",
    "run",
    "run_grid",
    "skewed_init",
]
