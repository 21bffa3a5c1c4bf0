"""Free-will-radius constraints, vote sampling and per-class yes probabilities.

Party A's line is |yes> = |0>, party B's is |no> = |1>. A vote lies within
radius r of its party line when its trace distance to the line is <= r:

    party A:  sin(theta/2) <= r_A   <=>  theta in [0, 2 asin r_A]
    party B:  cos(theta/2) <= r_B   <=>  theta in [2 acos r_B, pi]
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .errors import ValidationError
from .qstate import PureState

TWO_PI = 2 * math.pi


class Kind(enum.Enum):
    PARTY_A = "A"
    PARTY_B = "B"
    INDEPENDENT = "I"


class AngleMeasure(enum.Enum):
    """Law of the elevation angle inside the allowed interval."""

    THETA_UNIFORM = "theta-uniform"
    CAP_UNIFORM = "cap-uniform"


@dataclass(frozen=True)
class VoterClass:
    kind: Kind
    radius: float | None = None

    def __post_init__(self):
        if self.kind is Kind.INDEPENDENT:
            if self.radius is not None:
                raise ValidationError("independent voters have no free will radius")
            return
        if self.radius is None or not (0.0 <= self.radius <= 1.0):
            raise ValidationError(f"free will radius {self.radius!r} outside [0, 1]")

    @classmethod
    def party_a(cls, radius: float) -> VoterClass:
        return cls(Kind.PARTY_A, float(radius))

    @classmethod
    def party_b(cls, radius: float) -> VoterClass:
        return cls(Kind.PARTY_B, float(radius))

    @classmethod
    def independent(cls) -> VoterClass:
        return cls(Kind.INDEPENDENT)


@dataclass(frozen=True)
class ThetaInterval:
    lo: float
    hi: float

    def __post_init__(self):
        if not (0.0 <= self.lo <= self.hi <= math.pi):
            raise ValidationError(f"invalid theta interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> float:
        return self.hi - self.lo


def allowed_interval(cls: VoterClass) -> ThetaInterval:
    # Bounds are nudged inward by at most a few ulps so that every angle in the
    # interval satisfies the trace-distance constraint in floating point too.
    if cls.kind is Kind.PARTY_A:
        hi = min(2 * math.asin(cls.radius), math.pi)
        while math.sin(hi / 2) > cls.radius:
            hi = math.nextafter(hi, 0.0)
        return ThetaInterval(0.0, hi)
    if cls.kind is Kind.PARTY_B:
        lo = 2 * math.acos(cls.radius)
        while math.sin((math.pi - lo) / 2) > cls.radius:
            lo = math.nextafter(lo, math.pi)
        return ThetaInterval(lo, math.pi)
    return ThetaInterval(0.0, math.pi)


def sample_thetas(cls: VoterClass, measure: AngleMeasure, rng: np.random.Generator,
                  size=None) -> np.ndarray:
    """Vectorised elevation-angle draws for ``cls``; always inside its interval."""
    iv = allowed_interval(cls)
    u = rng.random(size)
    if measure is AngleMeasure.THETA_UNIFORM:
        theta = iv.lo + iv.width * u
    elif measure is AngleMeasure.CAP_UNIFORM:
        c_hi, c_lo = math.cos(iv.lo), math.cos(iv.hi)
        theta = np.arccos(np.clip(c_lo + (c_hi - c_lo) * u, -1.0, 1.0))
    else:
        raise ValidationError(f"unknown angle measure {measure!r}")
    return np.clip(theta, iv.lo, iv.hi)


def sample_phis(rng: np.random.Generator, size=None) -> np.ndarray:
    # rng.random() < 1 but the product can round up to exactly 2 pi
    phi = TWO_PI * rng.random(size)
    return np.where(phi >= TWO_PI, 0.0, phi)


def sample_vote(cls: VoterClass, measure: AngleMeasure, rng: np.random.Generator) -> PureState:
    theta = float(sample_thetas(cls, measure, rng))
    phi = float(sample_phis(rng))
    return PureState(theta, phi)


def yes_probability(state: PureState) -> float:
    return (1 + math.cos(state.theta)) / 2


def yes_probability_theta(theta):
    """Born probability of |yes> as a function of elevation only (array friendly)."""
    # same as cos^2(theta/2) but exactly 0 at theta = pi
    return (1 + np.cos(np.asarray(theta))) / 2


def marginal_yes_probability(cls: VoterClass,
                             measure: AngleMeasure = AngleMeasure.THETA_UNIFORM) -> float:
    """Expected yes probability of a vote drawn by :func:`sample_thetas`.

    With cos(theta/2)^2 = (1 + cos theta)/2 this is 1/2 + E[cos theta]/2.
    Uniform theta on [lo, hi] gives E[cos theta] = cos(mid) * sin(h)/h with
    mid the centre and h the half-width, which is continuous at h = 0.
    """
    iv = allowed_interval(cls)
    if measure is AngleMeasure.THETA_UNIFORM:
        mid, h = (iv.lo + iv.hi) / 2, iv.width / 2
        sinc = 1.0 if h == 0 else math.sin(h) / h
        p = 0.5 + 0.5 * math.cos(mid) * sinc
    elif measure is AngleMeasure.CAP_UNIFORM:
        p = 0.5 + (math.cos(iv.lo) + math.cos(iv.hi)) / 4
    else:
        raise ValidationError(f"unknown angle measure {measure!r}")
    return min(1.0, max(0.0, p))
