"""Two-party stage game over whether a bill passes.

Alice (row player) wants the bill to pass, Bob (column player) wants it
stopped. Each either keeps the party's free will radius (tolerant) or
abolishes it for this vote at political cost ``c`` (autocratic). A success
is worth ``r`` to either player.
"""
from __future__ import annotations

import enum
import itertools
import math
import warnings
from dataclasses import dataclass

import numpy as np

from .config import ParliamentConfig
from .errors import ValidationError
from .freewill import AngleMeasure
from .parliament import exact_margin_distribution

TIE_TOL = 1e-12


class Strategy(enum.IntEnum):
    TOLERANT = 0
    AUTOCRATIC = 1

    @property
    def short(self) -> str:
        return "T" if self is Strategy.TOLERANT else "A"


T, A = Strategy.TOLERANT, Strategy.AUTOCRATIC


@dataclass(frozen=True)
class StrategyProfile:
    alice: Strategy
    bob: Strategy

    def __str__(self):
        return f"({self.alice.short},{self.bob.short})"

    @classmethod
    def parse(cls, text: str) -> StrategyProfile:
        letters = "".join(text.strip("() ").replace(",", " ").split())
        lookup = {"T": T, "A": A}
        if len(letters) != 2 or any(ch not in lookup for ch in letters):
            raise ValidationError(f"cannot parse strategy profile {text!r}")
        return cls(lookup[letters[0]], lookup[letters[1]])


PROFILES = [StrategyProfile(a, b) for a, b in itertools.product(Strategy, Strategy)]


@dataclass(frozen=True)
class GameParams:
    p: float
    epsilon: float
    reward: float
    cost: float

    def __post_init__(self):
        if not (0.0 <= self.p <= 1.0):
            raise ValidationError(f"p={self.p!r} outside [0, 1]")
        if not (0.0 <= self.epsilon < 1.0):
            raise ValidationError(f"epsilon={self.epsilon!r} outside [0, 1)")
        if not (0.0 < self.cost < self.reward):
            raise ValidationError(f"need 0 < cost < reward, got cost={self.cost!r}, reward={self.reward!r}")

    @property
    def threshold_cost(self) -> float:
        return self.epsilon * self.reward


@dataclass(frozen=True)
class PayoffMatrix:
    """``alice[i, j]`` and ``bob[i, j]`` for Alice playing i and Bob playing j."""

    alice: np.ndarray
    bob: np.ndarray

    def __post_init__(self):
        for name in ("alice", "bob"):
            m = np.asarray(getattr(self, name), dtype=float)
            if m.shape != (2, 2) or not np.all(np.isfinite(m)):
                raise ValidationError(f"{name} payoffs must be a finite 2x2 array")
            object.__setattr__(self, name, m)

    def __getitem__(self, profile: StrategyProfile) -> tuple[float, float]:
        i, j = int(profile.alice), int(profile.bob)
        return float(self.alice[i, j]), float(self.bob[i, j])

    def as_pairs(self) -> list[list[list[float]]]:
        return [[[float(self.alice[i, j]), float(self.bob[i, j])] for j in range(2)] for i in range(2)]


def success_probability(params: GameParams, profile: StrategyProfile) -> float:
    """Probability that the bill passes (Alice's success) under ``profile``."""
    if profile.alice == profile.bob:
        return params.p
    if profile.alice is A:
        return min(params.p + params.epsilon, 1.0)
    return max(params.p - params.epsilon, 0.0)


def bob_success_probability(params: GameParams, profile: StrategyProfile) -> float:
    """Probability that the bill fails; the complement of :func:`success_probability`.

    Computed from ``1 - p`` directly so that both players' payoffs are built
    with the same rounding.
    """
    q = 1.0 - params.p
    if profile.alice == profile.bob:
        return q
    if profile.bob is A:
        return min(q + params.epsilon, 1.0)
    return max(q - params.epsilon, 0.0)


def payoff_matrix(params: GameParams) -> PayoffMatrix:
    alice = np.zeros((2, 2))
    bob = np.zeros((2, 2))
    for prof in PROFILES:
        i, j = int(prof.alice), int(prof.bob)
        alice[i, j] = success_probability(params, prof) * params.reward
        bob[i, j] = bob_success_probability(params, prof) * params.reward
        if prof.alice is A:
            alice[i, j] -= params.cost
        if prof.bob is A:
            bob[i, j] -= params.cost
    return PayoffMatrix(alice, bob)


def _ge(x: float, y: float) -> bool:
    return x >= y - TIE_TOL * max(1.0, abs(x), abs(y))


def pure_equilibria(matrix: PayoffMatrix) -> list[StrategyProfile]:
    """Profiles from which no player gains by deviating alone; ties count."""
    out = []
    for prof in PROFILES:
        i, j = int(prof.alice), int(prof.bob)
        if _ge(matrix.alice[i, j], matrix.alice[1 - i, j]) and _ge(matrix.bob[i, j], matrix.bob[i, 1 - j]):
            out.append(prof)
    return out


@dataclass(frozen=True)
class MixedEquilibrium:
    """Probabilities of playing tolerant; ``None`` means any mix keeps the opponent indifferent."""

    alice: float | None
    bob: float | None

    @property
    def degenerate(self) -> bool:
        return self.alice is None or self.bob is None


def _indifference_mix(option0: tuple[float, float], option1: tuple[float, float]):
    """Weight x on the mixer's first strategy that leaves the opponent indifferent.

    ``optionK`` holds the opponent's payoffs for its strategy K against the
    mixer's first and second strategies.  Returns x in (0, 1), ``None`` when
    every x works, or ``False`` when no interior x does.
    """
    a0, b0 = option0
    a1, b1 = option1
    # x*a0 + (1-x)*b0 == x*a1 + (1-x)*b1
    slope = (a0 - b0) - (a1 - b1)
    offset = b0 - b1
    scale = max(1.0, abs(a0), abs(b0), abs(a1), abs(b1))
    if abs(slope) <= TIE_TOL * scale:
        return None if abs(offset) <= TIE_TOL * scale else False
    x = -offset / slope
    return x if 0.0 < x < 1.0 else False


def mixed_equilibrium(matrix: PayoffMatrix) -> MixedEquilibrium | None:
    """Fully mixed equilibrium from the two indifference conditions.

    ``None`` when there is no interior solution, in particular whenever a
    player has a strictly dominant strategy.
    """
    x = _indifference_mix(
        (matrix.bob[0, 0], matrix.bob[1, 0]), (matrix.bob[0, 1], matrix.bob[1, 1])
    )
    y = _indifference_mix(
        (matrix.alice[0, 0], matrix.alice[0, 1]), (matrix.alice[1, 0], matrix.alice[1, 1])
    )
    if x is False or y is False:
        return None
    return MixedEquilibrium(x, y)


@dataclass(frozen=True)
class ParamEstimate:
    p: float
    epsilon: float
    epsilon_alice: float
    epsilon_bob: float
    degenerate: bool


def estimate_params(config: ParliamentConfig,
                    measure: AngleMeasure = AngleMeasure.THETA_UNIFORM,
                    engine=None) -> ParamEstimate:
    """Pass probability and autocracy increments of a tolerant parliament.

    Playing autocratic sets the party's own radius to 0.  Alice's increment is
    the rise in the pass probability when she does so, Bob's the rise in the
    fail probability when he does; ``epsilon`` is their mean.  ``engine`` maps
    a config to a pass probability and defaults to the exact engine.
    """
    if engine is None:
        def engine(cfg):
            return exact_margin_distribution(cfg, measure).p_pass()
    p = engine(config)
    eps_alice = engine(config.replace(r_a=0.0)) - p
    eps_bob = p - engine(config.replace(r_b=0.0))
    eps = (eps_alice + eps_bob) / 2
    degenerate = abs(eps_alice) <= TIE_TOL and abs(eps_bob) <= TIE_TOL
    if degenerate:
        warnings.warn(
            "autocracy changes nothing in this parliament; the game reduces to comparing costs",
            stacklevel=2,
        )
        eps = 0.0
    else:
        eps = min(max(eps, 0.0), math.nextafter(1.0, 0.0))
    return ParamEstimate(p=p, epsilon=eps, epsilon_alice=eps_alice, epsilon_bob=eps_bob,
                         degenerate=degenerate)


def game_report(params: GameParams) -> dict:
    matrix = payoff_matrix(params)
    mixed = mixed_equilibrium(matrix)
    return {
        "params": {"p": params.p, "epsilon": params.epsilon, "r": params.reward, "c": params.cost},
        "matrix": matrix.as_pairs(),
        "pure_equilibria": [str(prof) for prof in pure_equilibria(matrix)],
        "mixed": None if mixed is None else {"alice_tolerant": mixed.alice, "bob_tolerant": mixed.bob},
        "threshold_c": params.threshold_cost,
    }
