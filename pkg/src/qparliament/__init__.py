"""Two-party quantum parliament: vote states, counting circuit, outcome engines and the bill game."""
from .config import AngleMode, ParliamentConfig, SamplingPolicy
from .errors import CircuitBudgetError, ValidationError
from .freewill import AngleMeasure, VoterClass
from .parliament import (
    MarginDistribution,
    SimulationResult,
    circuit_verify,
    exact_margin_distribution,
    monte_carlo,
    p_pass,
    poisson_binomial,
)

__all__ = [
    "AngleMeasure",
    "AngleMode",
    "CircuitBudgetError",
    "MarginDistribution",
    "ParliamentConfig",
    "SamplingPolicy",
    "SimulationResult",
    "ValidationError",
    "VoterClass",
    "circuit_verify",
    "exact_margin_distribution",
    "monte_carlo",
    "p_pass",
    "poisson_binomial",
]
