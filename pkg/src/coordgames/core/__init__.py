from coordgames.core.equilibria import (
    best_responses,
    find_profitable_deviation,
    is_k_equilibrium,
    is_nash,
    is_profitable_deviation,
    is_strong,
    profitable_deviations,
)
from coordgames.core.game import (
    Colouring,
    DeviationStep,
    Game,
    GameBuilder,
    payoff,
    payoffs,
    social_welfare,
)

__all__ = [
    "Colouring",
    "DeviationStep",
    "Game",
    "GameBuilder",
    "best_responses",
    "find_profitable_deviation",
    "is_k_equilibrium",
    "is_nash",
    "is_profitable_deviation",
    "is_strong",
    "payoff",
    "payoffs",
    "profitable_deviations",
    "social_welfare",
]
