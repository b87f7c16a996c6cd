"""Acceptance gate: one test per criterion (criterion 3 has three parts).

The summary section printed after the run lists PASS/FAIL for each.
"""
import numpy as np
import pytest

from fuzzy_games.fuzzy_core import (
    CutSet,
    TriangularFuzzyNumber as TFN,
    constraint_membership,
    goal_membership,
)
from fuzzy_games.game_solvers import (
    CrispGame,
    FuzzyGoalsSpec,
    FuzzyPayoffSpec,
    IFuzzyGoalsSpec,
    PossSpec,
    build_flp,
    crisp_value,
    find_dominating,
    solve_fuzzy_goals,
    solve_fuzzy_payoffs,
    solve_ifuzzy_goals,
    solve_poss,
)
from fuzzy_games.ifuzzy_core import IFuzzyTolerance, optimistic_pair, pessimistic_pair
from fuzzy_games.lp_engine import check_feasible, solve
from oracles import cfp1_grid, two_by_two, vertex_enumeration
from test_lp_engine import _game_dual, _game_lp, _random_lp

EX11 = np.array([[1, 3, 0], [4, 7, 2], [3, 5, 6]], dtype=float)
EX21 = [[(175, 180, 190), (150, 156, 158)], [(80, 90, 100), (175, 180, 190)]]


def test_criterion_1_fuzzy_goals_example():
    spec = FuzzyGoalsSpec(CrispGame(EX11), v0=5 / 3, w0=1.5, p0=2, q0=3)
    sol = solve_fuzzy_goals(spec)
    assert sol.player1.levels["lambda"] == pytest.approx(1.0, abs=1e-6)
    assert sol.player2.levels["eta"] == pytest.approx(0.3, abs=1e-6)
    assert (sol.player1.strategy @ EX11).min() >= 5 / 3 - 1e-8
    assert (EX11 @ sol.player2.strategy).max() <= 1.5 + 0.7 * 3 + 1e-8
    # the printed vertex is one of the alternate optima (rounded to 4 places)
    assert not check_feasible(build_flp(spec), [0.0271, 0.4233, 0.5496, 1.0], tol=1e-3)


def test_criterion_2_fuzzy_payoffs_example():
    sol = solve_fuzzy_payoffs(FuzzyPayoffSpec(EX21, (0.08, 0.10, 0.11), (0.14, 0.15, 0.17)))
    p1, p2 = sol.players
    assert p1.value == pytest.approx(160.91, abs=0.01)
    assert p2.value == pytest.approx(160.65, abs=0.01)
    assert p1.levels["lambda"] == pytest.approx(0, abs=1e-6)
    assert p2.levels["eta"] == pytest.approx(0, abs=1e-6)
    assert p1.strategy == pytest.approx((0.7725, 0.2275), abs=1e-3)
    assert p2.strategy == pytest.approx((0.2275, 0.7725), abs=1e-3)
    v2x2, _, _ = two_by_two(545, 464, 270, 545)
    assert p1.value == pytest.approx((v2x2 + 0.29) / 3, abs=1e-6)


@pytest.fixture(scope="module")
def poss_example():
    return solve_poss(PossSpec(EX21, CutSet((0, 1))), verify=False)


def test_criterion_3a_poss_strategy(poss_example):
    assert abs(poss_example.strategy[0] - 0.7916) <= 0.01


def test_criterion_3b_poss_nondominated(poss_example):
    assert find_dominating(EX21, CutSet((0, 1)), poss_example.security) is None


def test_criterion_3c_poss_security_vs_printed_spreads(poss_example):
    center, left, right = 161, 6.79, 3.67
    printed = np.array([[center - left, center + right], [center, center]])
    got = poss_example.security.entries
    # lower alpha=0 endpoint: 155.2083 here, 154.21 from the printed spreads
    assert np.all(np.abs(got - printed) <= 0.5), f"security {got.tolist()} vs printed {printed.tolist()}"


def test_criterion_4_oracle_identity():
    rng = np.random.default_rng(20)
    infeasible_seen = feasible_seen = 0
    for _ in range(20):
        A = rng.integers(-9, 10, (3, 3))
        v = crisp_value(A).value
        p0, q0 = rng.uniform(0.2, 4, 2)
        v0, w0 = v + rng.uniform(-4, 4), v + rng.uniform(-4, 4)
        sol = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(A), v0, w0, p0, q0))
        for player, level, gap in (
            (sol.player1, "lambda", (v - v0) / p0),
            (sol.player2, "eta", (w0 - v) / q0),
        ):
            expected = 1 + gap
            if expected < 0:
                assert player.status == "infeasible"
                infeasible_seen += 1
            else:
                assert player.levels[level] == pytest.approx(min(expected, 1.0), abs=1e-6)
                feasible_seen += 1
        assert (sol.player1.status == "infeasible") == (v < v0 - p0)
        assert (sol.player2.status == "infeasible") == (v > w0 + q0)
    assert infeasible_seen and feasible_seen


def test_criterion_5_crisp_embedding():
    rng = np.random.default_rng(5)
    zero = (0.0, 0.0, 0.0)
    for _ in range(10):
        A = rng.integers(-9, 10, tuple(rng.integers(1, 5, 2))).astype(float)
        v = crisp_value(A).value
        embedded = [[TFN.crisp(a) for a in row] for row in A]
        sol = solve_fuzzy_payoffs(FuzzyPayoffSpec(embedded, zero, zero))
        assert sol.player1.value == pytest.approx(v, abs=1e-8)
        assert sol.player2.value == pytest.approx(v, abs=1e-8)
        res = solve_poss(PossSpec(embedded, CutSet((1,))))
        assert res.security.entries[0] == pytest.approx((v, v), abs=1e-8)


def test_criterion_6_ifuzzy_properties():
    grid = cfp1_grid([[4, 2], [3, 6]], 4.0, 1.0, 0.5)
    assert grid == pytest.approx(0.6, abs=1e-9)
    sol = solve_ifuzzy_goals(IFuzzyGoalsSpec(CrispGame([[4, 2], [3, 6]]), 4.0, 4.0, 1.0, 0.5, 1.0, 0.5))
    levels = sol.player1.levels
    assert levels["alpha"] - levels["beta"] == pytest.approx(0.6, abs=1e-6)

    rng = np.random.default_rng(6)
    solved = 0
    for _ in range(20):
        A = rng.integers(-9, 10, (3, 3))
        v = crisp_value(A).value
        p0, s0 = rng.uniform(0.5, 4, 2)
        q0, t0 = p0 * rng.uniform(0.1, 0.9), s0 * rng.uniform(0.1, 0.9)
        U0, V0 = v + rng.uniform(-1, 1) * p0, v + rng.uniform(-1, 1) * s0
        sol = solve_ifuzzy_goals(IFuzzyGoalsSpec(CrispGame(A), U0, V0, p0, q0, s0, t0))
        for player, acc, rej in ((sol.player1, "alpha", "beta"), (sol.player2, "delta", "eta")):
            if not player.optimal:
                continue
            a, r = player.levels[acc], player.levels[rej]
            assert a >= r - 1e-9 and r >= -1e-9 and a + r <= 1 + 1e-9
            solved += 1
    assert solved >= 20


def test_criterion_7_membership_and_pair_properties():
    rng = np.random.default_rng(7)
    n = 10_000
    a = rng.uniform(-10, 10, n)
    p = rng.uniform(0.01, 5, n)
    q = p * rng.uniform(0.01, 0.99, n)
    x = a + rng.uniform(-2, 1.2, n) * (p + q)
    for xi, ai, pi, qi in zip(x, a, p, q):
        pess = pessimistic_pair(xi, ai, IFuzzyTolerance.pessimistic(pi, qi))
        opt = optimistic_pair(xi, ai, IFuzzyTolerance.optimistic(pi, qi))
        for pair in (pess, opt):
            assert pair.membership + pair.non_membership <= 1 + 1e-12
        if xi >= ai - pi + qi:
            assert pess.non_membership == 0
        assert (pess.membership < 1) == (xi < ai)
        if xi <= ai - pi:
            assert opt.membership == 0
        assert (opt.non_membership < 1) == (xi > ai - pi - qi)

    z = np.sort(rng.uniform(-20, 20, (n, 2)), axis=1)
    for (lo, hi), v0, p0 in zip(z, rng.uniform(-10, 10, n), rng.uniform(0.01, 5, n)):
        g = goal_membership(lo, v0, p0), goal_membership(hi, v0, p0)
        c = constraint_membership(lo, v0, p0), constraint_membership(hi, v0, p0)
        assert 0 <= g[0] <= g[1] <= 1
        assert 0 <= c[1] <= c[0] <= 1


def test_criterion_8_engine_self_checks():
    rng = np.random.default_rng(2024)
    for _ in range(300):
        model = _random_lp(rng)
        sol = solve(model)
        status, value = vertex_enumeration(model)
        assert sol.status == status
        if status == "optimal":
            assert sol.objective_value == pytest.approx(value, abs=1e-8)

    rng = np.random.default_rng(11)
    for _ in range(50):
        A = rng.integers(-9, 10, tuple(rng.integers(1, 6, 2)))
        assert solve(_game_lp(A)).objective_value == pytest.approx(solve(_game_dual(A)).objective_value, abs=1e-8)

    from fuzzy_games.lp_engine import LE, ModelBuilder

    b = ModelBuilder("beale")
    x = b.add_vars("x", 4)
    b.add_constraint({x[0]: 0.25, x[1]: -60, x[2]: -1 / 25, x[3]: 9}, LE, 0)
    b.add_constraint({x[0]: 0.5, x[1]: -90, x[2]: -1 / 50, x[3]: 3}, LE, 0)
    b.add_constraint({x[2]: 1}, LE, 1)
    b.add_objective({x[0]: -0.75, x[1]: 150, x[2]: -1 / 50, x[3]: 6}, "min")
    sol = solve(b.build(), max_pivots=1000)
    assert sol.status == "optimal" and sol.objective_value == pytest.approx(-0.05, abs=1e-12)
