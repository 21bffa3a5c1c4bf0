"""Exact, Monte Carlo and circuit engines for the margin distribution.

The margin of a round is yes votes minus no votes, 2k - N for k yes votes;
the bill passes when the margin is strictly positive, so a tie fails.
"""
from __future__ import annotations

import math
from collections.abc import Iterable, Mapping
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from .circuit import build_parliament_circuit
from .config import AngleMode, ParliamentConfig, SamplingPolicy
from .errors import ValidationError
from .freewill import (
    AngleMeasure,
    marginal_yes_probability,
    sample_phis,
    sample_thetas,
    yes_probability_theta,
)

PMF_ATOL = 1e-9
CHUNK_SHOTS = 1 << 16
MAX_CIRCUIT_VOTERS = 8
TV_THRESHOLD = 0.01


@dataclass(frozen=True)
class MarginDistribution:
    pmf: Mapping[int, float]
    n_voters: int

    def __post_init__(self):
        if self.n_voters < 1:
            raise ValidationError("n_voters must be >= 1")
        total = 0.0
        for m, p in self.pmf.items():
            if p < 0 or not math.isfinite(p):
                raise ValidationError(f"probability {p!r} for margin {m} is invalid")
            if abs(m) > self.n_voters or (m - self.n_voters) % 2:
                raise ValidationError(f"margin {m} impossible with {self.n_voters} voters")
            total += p
        if abs(total - 1) > PMF_ATOL:
            raise ValidationError(f"margin probabilities sum to {total!r}")
        object.__setattr__(self, "pmf", dict(sorted(self.pmf.items())))

    @classmethod
    def from_counts(cls, count_pmf: Iterable[float], drop_zeros: bool = True) -> MarginDistribution:
        """Build from a pmf over yes counts 0..N."""
        count_pmf = list(count_pmf)
        n = len(count_pmf) - 1
        pmf = {2 * k - n: float(p) for k, p in enumerate(count_pmf) if p > 0 or not drop_zeros}
        return cls(pmf, n)

    def p_pass(self) -> float:
        return p_pass(self)

    def mode(self) -> int:
        return max(self.pmf, key=lambda m: (self.pmf[m], -abs(m)))

    def as_array(self) -> np.ndarray:
        """Probabilities over margins -N, -N+2, ..., N."""
        return np.array([self.pmf.get(2 * k - self.n_voters, 0.0) for k in range(self.n_voters + 1)])


@dataclass(frozen=True)
class SimulationResult:
    histogram: dict[int, int]
    shots: int
    p_pass: float
    standard_error: float
    seed: int
    engine: str = "mc"

    def distribution(self, n_voters: int) -> MarginDistribution:
        return MarginDistribution({m: c / self.shots for m, c in self.histogram.items()}, n_voters)


def p_pass(dist: MarginDistribution) -> float:
    # summing many masses can round just past 1
    return min(float(sum(p for m, p in dist.pmf.items() if m > 0)), 1.0)


def poisson_binomial(probs) -> np.ndarray:
    """Law of the number of successes among independent Bernoulli trials."""
    probs = np.asarray(probs, dtype=float).ravel()
    if np.any(~np.isfinite(probs)) or np.any((probs < 0) | (probs > 1)):
        raise ValidationError(f"success probabilities must lie in [0, 1]: {probs}")
    pmf = np.zeros(len(probs) + 1)
    pmf[0] = 1.0
    for n, q in enumerate(probs, start=1):
        # in-place convolution with [1 - q, q], high index first
        pmf[1 : n + 1] = pmf[1 : n + 1] * (1 - q) + pmf[:n] * q
        pmf[0] *= 1 - q
    return pmf


def voter_yes_probabilities(config: ParliamentConfig,
                            measure: AngleMeasure = AngleMeasure.THETA_UNIFORM) -> list[float]:
    probs = []
    for cls, count in config.groups():
        if count:
            probs += [marginal_yes_probability(cls, measure)] * count
    return probs


def exact_margin_distribution(config: ParliamentConfig,
                              measure: AngleMeasure = AngleMeasure.THETA_UNIFORM) -> MarginDistribution:
    """Product law of independent voters with angles redrawn every round."""
    return MarginDistribution.from_counts(poisson_binomial(voter_yes_probabilities(config, measure)))


def standard_error(p: float, shots: int) -> float:
    return math.sqrt(p * (1 - p) / shots)


def _chunk_sizes(shots: int) -> list[int]:
    full, rest = divmod(shots, CHUNK_SHOTS)
    return [CHUNK_SHOTS] * full + ([rest] if rest else [])


def draw_fixed_angles(config: ParliamentConfig, measure: AngleMeasure,
                      rng: np.random.Generator) -> list[tuple[float, float, float]]:
    """One (theta, phi, lambda) triple per seat, respecting each seat's constraint."""
    angles = []
    for cls in config.voter_classes():
        theta = float(sample_thetas(cls, measure, rng))
        phi = float(sample_phis(rng))
        lam = float(sample_phis(rng))
        angles.append((theta, phi, lam))
    return angles


def _per_shot_counts(config: ParliamentConfig, measure: AngleMeasure,
                     rng: np.random.Generator, size: int) -> np.ndarray:
    # the azimuth never enters the yes probability, so only elevations are drawn
    yes = np.zeros(size, dtype=np.int64)
    for cls, count in config.groups():
        if not count:
            continue
        theta = sample_thetas(cls, measure, rng, size=(size, count))
        yes += (rng.random((size, count)) < yes_probability_theta(theta)).sum(axis=1)
    return yes


def _fixed_counts(probs: np.ndarray, rng: np.random.Generator, size: int) -> np.ndarray:
    return (rng.random((size, len(probs))) < probs).sum(axis=1)


def monte_carlo(config: ParliamentConfig, policy: SamplingPolicy, shots: int,
                threads: int = 1) -> SimulationResult:
    """Sample ``shots`` voting rounds.

    Shots are split into fixed-size chunks, each with its own child stream of
    the policy seed, so the result does not depend on ``threads``.
    """
    if shots < 1:
        raise ValidationError("shots must be >= 1")
    sizes = _chunk_sizes(shots)
    root = np.random.SeedSequence(policy.seed)
    angle_seed, *chunk_seeds = root.spawn(len(sizes) + 1)

    if policy.angle_mode is AngleMode.FIXED:
        angles = draw_fixed_angles(config, policy.measure, np.random.default_rng(angle_seed))
        probs = yes_probability_theta([a[0] for a in angles])

        def work(args):
            seed, size = args
            return _fixed_counts(probs, np.random.default_rng(seed), size)
    else:
        def work(args):
            seed, size = args
            return _per_shot_counts(config, policy.measure, np.random.default_rng(seed), size)

    jobs = list(zip(chunk_seeds, sizes))
    if threads > 1 and len(jobs) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(work, jobs))
    else:
        chunks = [work(job) for job in jobs]

    n = config.n_total
    tally = np.bincount(np.concatenate(chunks), minlength=n + 1)
    histogram = {2 * k - n: int(c) for k, c in enumerate(tally) if c}
    passed = sum(c for m, c in histogram.items() if m > 0)
    p = passed / shots
    return SimulationResult(histogram, shots, p, standard_error(p, shots), policy.seed, "mc")


@dataclass(frozen=True)
class CircuitReport:
    """Circuit readout against the product law for the same fixed angles."""

    n_voters: int
    n_qubits: int
    angles: list[tuple[float, float, float]]
    histogram: dict[int, int]
    shots: int
    exact: MarginDistribution
    statevector: MarginDistribution
    tv_distance: float
    amplitude_error: float
    threshold: float = TV_THRESHOLD
    seed: int = 0

    @property
    def passed(self) -> bool:
        return self.tv_distance < self.threshold

    def result(self) -> SimulationResult:
        passed = sum(c for m, c in self.histogram.items() if m > 0)
        p = passed / self.shots
        return SimulationResult(self.histogram, self.shots, p, standard_error(p, self.shots),
                                self.seed, "circuit")


def total_variation(p: np.ndarray, q: np.ndarray) -> float:
    return 0.5 * float(np.abs(np.asarray(p) - np.asarray(q)).sum())


def circuit_verify(config: ParliamentConfig, policy: SamplingPolicy, shots: int,
                   max_voters: int = MAX_CIRCUIT_VOTERS) -> CircuitReport:
    """Run the counting circuit with angles drawn once and compare it with the product law."""
    n = config.n_total
    if n > max_voters:
        raise ValidationError(
            f"{n} voters is beyond the statevector budget ({max_voters}); "
            "use the exact or Monte Carlo engine instead"
        )
    if shots < 1:
        raise ValidationError("shots must be >= 1")
    angle_seed, shot_seed = np.random.SeedSequence(policy.seed).spawn(2)
    angles = draw_fixed_angles(config, policy.measure, np.random.default_rng(angle_seed))
    circ = build_parliament_circuit(config, angles)

    state_counts = circ.count_distribution()
    exact_counts = poisson_binomial(yes_probability_theta([a[0] for a in angles]))
    counts = circ.sample_counts(shots, np.random.default_rng(shot_seed))

    empirical = np.zeros(n + 1)
    for k, c in counts.items():
        empirical[k] = c / shots
    histogram = {2 * k - n: c for k, c in sorted(counts.items())}
    return CircuitReport(
        n_voters=n,
        n_qubits=circ.n_qubits,
        angles=angles,
        histogram=histogram,
        shots=shots,
        exact=MarginDistribution.from_counts(exact_counts),
        statevector=MarginDistribution.from_counts(np.clip(state_counts, 0, None) / state_counts.sum(), drop_zeros=False),
        tv_distance=total_variation(empirical, exact_counts),
        amplitude_error=float(np.abs(state_counts - exact_counts).max()),
        seed=policy.seed,
    )
