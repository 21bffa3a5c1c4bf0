from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .errors import ValidationError
from .freewill import AngleMeasure, VoterClass


@dataclass(frozen=True)
class ParliamentConfig:
    """Seat counts of the two parties and the independents, plus party radii."""

    n_a: int
    n_b: int
    n_i: int = 0
    r_a: float = 0.0
    r_b: float = 0.0

    def __post_init__(self):
        for name in ("n_a", "n_b", "n_i"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 0:
                raise ValidationError(f"{name} must be a non-negative integer, got {value!r}")
        if self.n_total < 1:
            raise ValidationError("a parliament needs at least one seat")
        for name in ("r_a", "r_b"):
            value = getattr(self, name)
            if not (0.0 <= value <= 1.0):
                raise ValidationError(f"{name}={value!r} outside [0, 1]")

    @property
    def n_total(self) -> int:
        return self.n_a + self.n_b + self.n_i

    def voter_classes(self) -> list[VoterClass]:
        """One class per seat: party A seats first, then party B, then independents."""
        return (
            [VoterClass.party_a(self.r_a)] * self.n_a
            + [VoterClass.party_b(self.r_b)] * self.n_b
            + [VoterClass.independent()] * self.n_i
        )

    def groups(self) -> list[tuple[VoterClass, int]]:
        return [
            (VoterClass.party_a(self.r_a), self.n_a),
            (VoterClass.party_b(self.r_b), self.n_b),
            (VoterClass.independent(), self.n_i),
        ]

    def replace(self, **changes) -> ParliamentConfig:
        values = dict(n_a=self.n_a, n_b=self.n_b, n_i=self.n_i, r_a=self.r_a, r_b=self.r_b)
        values.update(changes)
        return ParliamentConfig(**values)


class AngleMode(enum.Enum):
    PER_SHOT = "per-shot"
    FIXED = "fixed"


@dataclass(frozen=True)
class SamplingPolicy:
    angle_mode: AngleMode = AngleMode.PER_SHOT
    measure: AngleMeasure = AngleMeasure.THETA_UNIFORM
    seed: int = field(default=0)

    def __post_init__(self):
        if not isinstance(self.angle_mode, AngleMode):
            raise ValidationError(f"unknown angle mode {self.angle_mode!r}")
        if not isinstance(self.measure, AngleMeasure):
            raise ValidationError(f"unknown angle measure {self.measure!r}")
        if not 0 <= self.seed < 2**64:
            raise ValidationError(f"seed must fit in 64 unsigned bits, got {self.seed}")
