"""End-to-end acceptance checks, one test per criterion.

Each test prints a single ``criterion N: PASS|FAIL ...`` line, and the same
lines are repeated in the terminal summary.
"""
import itertools
import math
import time

import numpy as np
import pytest

from conftest import ACCEPTANCE_LINES
from qparliament.circuit import (
    StateVector, build_parliament_circuit, draper_adder_gates, inverse_qft, qft, run, zy_decompose,
)
from qparliament.circuit.gates import u_matrix
from qparliament.config import AngleMode, ParliamentConfig, SamplingPolicy
from qparliament.game import GameParams, StrategyProfile, payoff_matrix, pure_equilibria
from qparliament.parliament import (
    circuit_verify, exact_margin_distribution, monte_carlo, poisson_binomial, standard_error,
)


def report(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}"
    print(line)
    ACCEPTANCE_LINES.append(line)
    assert ok, line


def p_exact(n_a, n_b, n_i, r_a, r_b=None):
    r_b = r_a if r_b is None else r_b
    return exact_margin_distribution(ParliamentConfig(n_a, n_b, n_i, r_a, r_b)).p_pass()


def test_criterion_1_classical_certainty():
    start = time.perf_counter()
    cfg = ParliamentConfig(8, 6, 0)
    exact = exact_margin_distribution(cfg)
    mc = monte_carlo(cfg, SamplingPolicy(seed=1), 10_000)
    small = circuit_verify(ParliamentConfig(4, 3, 0), SamplingPolicy(seed=1), 10_000)
    elapsed = time.perf_counter() - start
    ok = (
        exact.pmf == {2: 1.0} and exact.p_pass() == 1.0
        and mc.histogram == {2: 10_000} and mc.p_pass == 1.0
        and small.histogram == {1: 10_000} and small.exact.pmf == {1: 1.0}
        and elapsed < 1.0
    )
    report(1, ok, f"8+6 exact {exact.pmf}, mc {mc.histogram}, circuit 4+3 {small.histogram}, {elapsed:.2f}s")


def test_criterion_2_deadlock():
    start = time.perf_counter()
    cfg = ParliamentConfig(7, 7, 0)
    p = exact_margin_distribution(cfg).p_pass()
    mc = monte_carlo(cfg, SamplingPolicy(seed=2), 10_000).p_pass
    elapsed = time.perf_counter() - start
    report(2, p == 0.0 and mc == 0.0 and elapsed < 1.0, f"7+7 p={p} mc={mc}, {elapsed:.2f}s")


def test_criterion_3_independents_break_deadlock():
    cfg = ParliamentConfig(6, 6, 2)
    p = exact_margin_distribution(cfg).p_pass()
    shots = 1_000_000
    mc = monte_carlo(cfg, SamplingPolicy(seed=3), shots, threads=4).p_pass
    sigma = standard_error(0.25, shots)
    ok = p == 0.25 and abs(mc - 0.25) < 3 * sigma
    report(3, ok, f"6+6+2 exact={p} mc={mc:.5f} (3 sigma = {3 * sigma:.5f})")


def test_criterion_4_independent_margin_spectrum():
    dist = exact_margin_distribution(ParliamentConfig(8, 4, 2))
    ok = dist.pmf == {2: 0.25, 4: 0.5, 6: 0.25} and dist.mode() == 4
    report(4, ok, f"8+4+2 pmf={dist.pmf} mode={dist.mode()}")


def test_criterion_5_monotone_sweep():
    start = time.perf_counter()
    grid = [0.0, 0.1, 0.3, 0.5, 0.7, 1.0]
    ps = [p_exact(8, 6, 0, r) for r in grid]
    elapsed = time.perf_counter() - start
    decreasing = all(x > y for x, y in zip(ps, ps[1:]))
    ok = decreasing and 0.55 <= ps[3] <= 0.75 and ps[-1] < 0.5 and elapsed < 5.0
    report(5, ok, "8+6 " + ", ".join(f"p({r})={p:.4f}" for r, p in zip(grid, ps)) + f", {elapsed:.2f}s")


def test_criterion_6_asymmetric_radii():
    stricter_a = [(0.15, 0.30), (0.25, 0.50), (0.35, 0.70), (0.50, 1.00)]
    looser_a = [(0.70, 0.35), (1.00, 0.50)]
    ps = [p_exact(8, 6, 0, a, b) for a, b in stricter_a]
    qs = [p_exact(8, 6, 0, a, b) for a, b in looser_a]
    ok = min(ps) >= 0.80 and sum(p >= 0.85 for p in ps) >= 3 and max(qs) < 0.5
    report(6, ok, f"8+6 stricter A {[round(p, 4) for p in ps]}, looser A {[round(q, 4) for q in qs]}")


def test_criterion_7_independents_under_quantum_radii():
    a = p_exact(6, 6, 2, 0.2)
    b = p_exact(6, 6, 2, 0.5)
    c = p_exact(7, 7, 0, 0.5)
    ok = 0.20 <= a <= 0.35 and 0.25 <= b <= 0.40 and 0.20 <= c <= 0.40
    report(7, ok, f"6+6+2 r=0.2 p={a:.4f}, 6+6+2 r=0.5 p={b:.4f}, 7+7 r=0.5 p={c:.4f}")


def test_criterion_8_maximal_radius_equivalence():
    arrays = [exact_margin_distribution(ParliamentConfig(a, b, i, 1.0, 1.0)).as_array()
              for a, b, i in [(8, 6, 0), (8, 4, 2), (7, 7, 0)]]
    worst = max(np.abs(arr - arrays[0]).max() for arr in arrays[1:])
    report(8, worst < 1e-12, f"max pmf difference {worst:.2e}")


@pytest.mark.slow
def test_criterion_9_circuit_fidelity():
    start = time.perf_counter()
    rng = np.random.default_rng(909)
    tvs = []
    for k in range(20):
        n = int(rng.integers(1, 7))
        split = np.sort(rng.integers(0, n + 1, size=2))
        n_a, n_b, n_i = int(split[0]), int(split[1] - split[0]), int(n - split[1])
        r_a, r_b = (round(float(x), 3) for x in rng.uniform(0, 1, 2))
        cfg = ParliamentConfig(n_a, n_b, n_i, r_a, r_b)
        rep = circuit_verify(cfg, SamplingPolicy(AngleMode.FIXED, seed=k), 100_000)
        tvs.append(rep.tv_distance)

    adder_ok = True
    for m in range(1, 5):
        src, dst = list(range(m)), list(range(m, 2 * m))
        gates = draper_adder_gates(src, dst)
        for a, b in itertools.product(range(1 << m), repeat=2):
            out = run(StateVector.basis(2 * m, a | (b << m)), gates)
            adder_ok &= abs(out.amplitudes[a | (((a + b) % (1 << m)) << m)]) ** 2 > 1 - 1e-9

    qft_err = 0.0
    for m in range(1, 8):
        v = rng.normal(size=1 << m) + 1j * rng.normal(size=1 << m)
        sv = StateVector(m, v / np.linalg.norm(v))
        reg = list(range(m))
        qft_err = max(qft_err, np.abs(inverse_qft(qft(sv, reg), reg).amplitudes - sv.amplitudes).max())

    elapsed = time.perf_counter() - start
    ok = max(tvs) < 0.01 and adder_ok and qft_err < 1e-9 and elapsed < 120
    report(9, ok, f"max TV {max(tvs):.4f} over 20 parliaments, adder exhaustive ok={adder_ok}, "
                  f"qft round trip {qft_err:.1e}, {elapsed:.1f}s")


def test_criterion_10_zy_decomposition():
    rng = np.random.default_rng(1010)
    worst = 0.0
    for theta, phi, lam in rng.uniform(0, 2 * math.pi, size=(100, 3)):
        worst = max(worst, np.abs(zy_decompose(theta, phi, lam).matrix() - u_matrix(theta, phi, lam)).max())
    report(10, worst < 1e-10, f"worst entry error {worst:.1e}")


def test_criterion_11_game_thresholds():
    mismatches = 0
    for p, eps, r, frac in itertools.product(
        [0.2, 0.4, 0.5, 0.6, 0.8], [0.0, 0.05, 0.1, 0.2], [1.0, 3.0, 10.0], [0.01, 0.05, 0.1, 0.3, 0.6, 0.95]
    ):
        c = frac * r
        eq = pure_equilibria(payoff_matrix(GameParams(p, eps, r, c)))
        mismatches += (StrategyProfile.parse("(T,T)") in eq) != (c >= eps * r)
        mismatches += (StrategyProfile.parse("(A,A)") in eq) != (c <= eps * r)
    worked = payoff_matrix(GameParams(0.5, 0.2, 10, 1)).as_pairs()
    expected = [[[5.0, 5.0], [3.0, 6.0]], [[6.0, 3.0], [4.0, 4.0]]]
    report(11, mismatches == 0 and worked == expected,
           f"{mismatches} threshold mismatches on 360 grid points, worked matrix {worked}")


def _brute_force(probs):
    out = np.zeros(len(probs) + 1)
    for votes in itertools.product((0, 1), repeat=len(probs)):
        out[sum(votes)] += math.prod(q if v else 1 - q for v, q in zip(votes, probs))
    return out


SCENARIOS = [
    (8, 6, 0, 0.0, 0.0), (7, 7, 0, 0.0, 0.0), (6, 6, 2, 0.0, 0.0), (8, 4, 2, 0.0, 0.0),
    (8, 6, 0, 0.1, 0.1), (8, 6, 0, 0.3, 0.3), (8, 6, 0, 0.5, 0.5), (8, 6, 0, 0.7, 0.7), (8, 6, 0, 1.0, 1.0),
    (8, 6, 0, 0.15, 0.30), (8, 6, 0, 0.25, 0.50), (8, 6, 0, 0.35, 0.70), (8, 6, 0, 0.50, 1.00),
    (8, 6, 0, 0.70, 0.35), (8, 6, 0, 1.00, 0.50),
    (6, 6, 2, 0.2, 0.2), (6, 6, 2, 0.5, 0.5), (7, 7, 0, 0.5, 0.5),
    (8, 4, 2, 1.0, 1.0), (7, 7, 0, 1.0, 1.0),
]


def test_criterion_12_oracle_equivalence():
    rng = np.random.default_rng(1212)
    pb_err = 0.0
    for n in range(1, 13):
        probs = rng.uniform(size=n)
        pb_err = max(pb_err, np.abs(poisson_binomial(probs) - _brute_force(probs)).max())

    shots = 100_000
    worst = 0.0
    for k, (a, b, i, ra, rb) in enumerate(SCENARIOS):
        cfg = ParliamentConfig(a, b, i, ra, rb)
        p = exact_margin_distribution(cfg).p_pass()
        mc = monte_carlo(cfg, SamplingPolicy(seed=1200 + k), shots).p_pass
        sigma = standard_error(p, shots)
        z = 0.0 if mc == p else (math.inf if sigma == 0 else abs(mc - p) / sigma)
        worst = max(worst, z)
    ok = pb_err < 1e-12 and worst < 3
    report(12, ok, f"poisson binomial error {pb_err:.1e} for N<=12, "
                   f"worst MC deviation {worst:.2f} sigma over {len(SCENARIOS)} scenarios")
