"""Lucky 13 decision engine."""

from ._core import (
    Game,
    InvalidInput,
    StateConflict,
    advise,
    binomial_pmf,
    darroch_mode,
    exact_pmf,
    poisson_binomial_pmf,
    population,
    replay,
    simulate,
    strategy_table,
)

__all__ = [
    "Game",
    "InvalidInput",
    "StateConflict",
    "advise",
    "binomial_pmf",
    "darroch_mode",
    "exact_pmf",
    "poisson_binomial_pmf",
    "population",
    "replay",
    "simulate",
    "strategy_table",
]
