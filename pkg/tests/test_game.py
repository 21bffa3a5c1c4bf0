import itertools
import warnings

import numpy as np
import pytest

from qparliament.config import ParliamentConfig
from qparliament.errors import ValidationError
from qparliament.game import (
    PROFILES, GameParams, Strategy, StrategyProfile, estimate_params, game_report,
    mixed_equilibrium, payoff_matrix, pure_equilibria, success_probability,
)
from qparliament.parliament import exact_margin_distribution

T, A = Strategy.TOLERANT, Strategy.AUTOCRATIC


def prof(text):
    return StrategyProfile.parse(text)


def test_profile_text():
    assert str(StrategyProfile(A, T)) == "(A,T)"
    assert prof("(T, A)") == StrategyProfile(T, A)
    with pytest.raises(ValidationError):
        prof("(X,T)")


def test_worked_matrix():
    m = payoff_matrix(GameParams(0.5, 0.2, 10, 1))
    assert m.as_pairs() == [[[5.0, 5.0], [3.0, 6.0]], [[6.0, 3.0], [4.0, 4.0]]]
    assert m[prof("(A,A)")] == (4.0, 4.0)
    assert pure_equilibria(m) == [prof("(A,A)")]
    assert mixed_equilibrium(m) is None


def test_success_probabilities():
    g = GameParams(0.5, 0.2, 10, 1)
    assert [success_probability(g, p) for p in PROFILES] == pytest.approx([0.5, 0.3, 0.7, 0.5])


@pytest.mark.parametrize("kwargs", [
    dict(p=1.2, epsilon=0.1, reward=1, cost=0.5),
    dict(p=0.5, epsilon=1.0, reward=1, cost=0.5),
    dict(p=0.5, epsilon=-0.1, reward=1, cost=0.5),
    dict(p=0.5, epsilon=0.1, reward=1, cost=1.0),
    dict(p=0.5, epsilon=0.1, reward=1, cost=0.0),
])
def test_parameter_validation(kwargs):
    with pytest.raises(ValidationError):
        GameParams(**kwargs)


def test_threshold_grid():
    for p, eps, r, c in itertools.product(
        [0.3, 0.5, 0.7], [0.0, 0.05, 0.1, 0.25], [1.0, 4.0, 10.0], [0.05, 0.2, 0.5, 0.9]
    ):
        c = c * r
        g = GameParams(p, eps, r, c)
        eq = pure_equilibria(payoff_matrix(g))
        assert (prof("(T,T)") in eq) == (c >= eps * r), (p, eps, r, c)
        assert (prof("(A,A)") in eq) == (c <= eps * r), (p, eps, r, c)


def test_threshold_exactly_on_boundary():
    g = GameParams(0.5, 0.1, 10, 1.0)
    assert g.threshold_cost == pytest.approx(1.0)
    assert len(pure_equilibria(payoff_matrix(g))) == 4


def test_zero_increment():
    eq = pure_equilibria(payoff_matrix(GameParams(0.5, 0.0, 10, 1)))
    assert eq == [prof("(T,T)")]


def test_mixed_equilibrium_in_a_coordination_game():
    # not produced by GameParams but exercises the solver on interior mixes
    from qparliament.game import PayoffMatrix
    m = PayoffMatrix(np.array([[2.0, 0.0], [0.0, 1.0]]), np.array([[1.0, 0.0], [0.0, 2.0]]))
    mix = mixed_equilibrium(m)
    assert mix.alice == pytest.approx(2 / 3)
    assert mix.bob == pytest.approx(1 / 3)
    assert set(pure_equilibria(m)) == {prof("(T,T)"), prof("(A,A)")}


def test_boundary_mix_is_degenerate():
    mix = mixed_equilibrium(payoff_matrix(GameParams(0.5, 0.1, 10, 1.0)))
    assert mix is not None and mix.degenerate


def test_report_keys():
    rep = game_report(GameParams(0.5, 0.2, 10, 1))
    assert set(rep) == {"params", "matrix", "pure_equilibria", "mixed", "threshold_c"}
    assert rep["pure_equilibria"] == ["(A,A)"]
    assert rep["threshold_c"] == pytest.approx(2.0)


class TestEstimate:
    def test_balanced_parliament_increments_differ_by_tie_mass(self):
        cfg = ParliamentConfig(7, 7, 0, 0.5, 0.5)
        est = estimate_params(cfg)
        tie_tolerant = exact_margin_distribution(cfg).pmf.get(0, 0.0)
        tie_alice = exact_margin_distribution(cfg.replace(r_a=0.0)).pmf.get(0, 0.0)
        assert est.epsilon_bob - est.epsilon_alice == pytest.approx(tie_alice - tie_tolerant, abs=1e-12)
        assert est.epsilon_alice == pytest.approx(0.1771, abs=1e-4)
        assert est.epsilon_bob == pytest.approx(0.2921, abs=1e-4)

    def test_majority_parliament(self):
        est = estimate_params(ParliamentConfig(8, 6, 0, 0.5, 0.5))
        assert est.p == pytest.approx(0.64984067698059, abs=1e-11)
        assert est.epsilon == pytest.approx((est.epsilon_alice + est.epsilon_bob) / 2)
        assert est.epsilon_alice > 0 and est.epsilon_bob > 0

    def test_classical_parliament_is_degenerate(self):
        with pytest.warns(UserWarning):
            est = estimate_params(ParliamentConfig(8, 6, 0))
        assert est.degenerate and est.epsilon == 0.0

    def test_custom_engine(self):
        with warnings.catch_warnings():
            warnings.simplefilter("error")
            est = estimate_params(ParliamentConfig(8, 6, 0, 0.5, 0.5), engine=lambda c: 0.5 + 0.1 * (c.r_a == 0) - 0.1 * (c.r_b == 0))
        assert est.p == 0.5 and est.epsilon == pytest.approx(0.1)


def test_clamped_success():
    assert success_probability(GameParams(0.95, 0.2, 10, 1), prof("(A,T)")) == 1.0
    assert success_probability(GameParams(0.1, 0.2, 10, 1), prof("(T,A)")) == 0.0


def test_small_increment_keeps_tolerance():
    assert pure_equilibria(payoff_matrix(GameParams(0.5, 0.05, 10, 1))) == [prof("(T,T)")]


def test_zero_increment_autocracy_only_costs():
    m = payoff_matrix(GameParams(0.4, 0.0, 10, 1))
    np.testing.assert_allclose(m.alice[1], m.alice[0] - 1)
    np.testing.assert_allclose(m.bob[:, 1], m.bob[:, 0] - 1)


def test_complementarity():
    from qparliament.game import bob_success_probability
    for g in [GameParams(0.5, 0.2, 10, 1), GameParams(0.95, 0.2, 10, 1), GameParams(0.37, 0.11, 3, 2)]:
        for pr in PROFILES:
            assert success_probability(g, pr) + bob_success_probability(g, pr) == pytest.approx(1, abs=1e-15)


def test_payoffs_monotone_in_cost():
    low = payoff_matrix(GameParams(0.5, 0.2, 10, 1))
    high = payoff_matrix(GameParams(0.5, 0.2, 10, 2))
    assert np.all(high.alice[1] < low.alice[1]) and np.all(high.alice[0] == low.alice[0])
    assert np.all(high.bob[:, 1] < low.bob[:, 1]) and np.all(high.bob[:, 0] == low.bob[:, 0])


def test_random_mixes_satisfy_indifference():
    from qparliament.game import PayoffMatrix
    rng = np.random.default_rng(31)
    found = 0
    for _ in range(500):
        m = PayoffMatrix(rng.normal(size=(2, 2)), rng.normal(size=(2, 2)))
        mix = mixed_equilibrium(m)
        if mix is None:
            continue
        found += 1
        x, y = mix.alice, mix.bob
        assert 0 <= x <= 1 and 0 <= y <= 1
        # Bob indifferent against Alice's mix, Alice indifferent against Bob's
        assert abs(np.array([x, 1 - x]) @ (m.bob[:, 0] - m.bob[:, 1])) < 1e-9
        assert abs((m.alice[0] - m.alice[1]) @ np.array([y, 1 - y])) < 1e-9
    assert found > 50


def test_increments_are_non_negative():
    for cfg in [ParliamentConfig(8, 6, 0, 0.3, 0.6), ParliamentConfig(5, 7, 2, 0.9, 0.2), ParliamentConfig(6, 6, 2, 1.0, 1.0)]:
        est = estimate_params(cfg)
        assert est.epsilon_alice >= 0 and est.epsilon_bob >= 0
