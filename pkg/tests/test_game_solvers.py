import numpy as np
import pytest

from fuzzy_games.fuzzy_core import CutSet, TriangularFuzzyNumber as TFN
from fuzzy_games.game_solvers import (
    REASON_P1_FUZZY,
    REASON_P2_FUZZY,
    CrispGame,
    FuzzyGoalsSpec,
    FuzzyPayoffSpec,
    IFuzzyGoalsSpec,
    PossSpec,
    build_cfp1,
    build_cfp2,
    build_fd2,
    build_fld,
    build_flp,
    build_fp1,
    build_ifdc,
    build_ifpc,
    build_mlp,
    crisp_value,
    find_dominating,
    security_matrix,
    solve_crisp,
    solve_fuzzy_goals,
    solve_fuzzy_payoffs,
    solve_ifuzzy_goals,
    solve_poss,
    solve_poss_game,
    solve_poss_player2,
)
from fuzzy_games.lp_engine import check_feasible, solve
from oracles import cfp1_grid, two_by_two

EX11 = [[1, 3, 0], [4, 7, 2], [3, 5, 6]]
EX21 = [[(175, 180, 190), (150, 156, 158)], [(80, 90, 100), (175, 180, 190)]]


def _row(model, name):
    """Constraint ``name`` as ``(coefficients by variable name, rel, rhs)`` oriented as <=."""
    A, rels, b = model.matrix()
    k = next(i for i, c in enumerate(model.constraints) if c.name == name)
    row, rhs = A[k].copy(), float(b[k])
    if rels[k] == ">=":
        row, rhs = -row, -rhs
    return dict(zip(model.names, row)), rels[k], rhs


def _assert_same_halfspace(model, name, coefs, rel, rhs):
    got, got_rel, got_rhs = _row(model, name)
    want = {k: 0.0 for k in got} | coefs
    sign = -1.0 if rel == ">=" else 1.0
    assert (got_rel == "=") == (rel == "=")
    for k in got:
        assert got[k] == pytest.approx(sign * want[k], abs=1e-12), k
    assert got_rhs == pytest.approx(sign * rhs, abs=1e-12)


# -- crisp oracle


@pytest.mark.parametrize(
    "A, value",
    [([[4, 2], [3, 6]], 3.6), (EX11, 3.6), ([[7, 7], [7, 7], [7, 7]], 7.0), ([[5]], 5.0)],
)
def test_crisp_value_examples(A, value):
    v, x, y = crisp_value(A)
    assert v == pytest.approx(value, abs=1e-9)
    assert (x @ np.asarray(A)).min() == pytest.approx(v, abs=1e-9)
    assert (np.asarray(A) @ y).max() == pytest.approx(v, abs=1e-9)


def test_crisp_value_2x2_strategies():
    v, x, y = crisp_value([[4, 2], [3, 6]])
    ref_v, ref_x, ref_y = two_by_two(4, 2, 3, 6)
    assert v == pytest.approx(ref_v)
    assert x == pytest.approx(ref_x) and y == pytest.approx(ref_y)
    assert x == pytest.approx((0.6, 0.4)) and y == pytest.approx((0.8, 0.2))


def test_crisp_game_validation():
    for bad in ([], [[]], [[1, np.nan]], [1, 2]):
        with pytest.raises(ValueError):
            CrispGame(bad)


def test_solve_crisp():
    sol = solve_crisp([[4, 2], [3, 6]])
    assert sol.status == "optimal" and sol.player1.value == pytest.approx(3.6)


# -- fuzzy goals


def ex11():
    return FuzzyGoalsSpec(CrispGame(EX11), v0=5 / 3, w0=1.5, p0=2, q0=3)


def test_flp_fld_rows_match_printed_form():
    _assert_same_halfspace(
        build_flp(ex11()), "goal1", {"lambda": 2, "x1": -1, "x2": -4, "x3": -3}, "<=", 1 / 3
    )
    _assert_same_halfspace(build_fld(ex11()), "goal1", {"eta": 3, "y1": 1, "y2": 3}, "<=", 9 / 2)


def test_flp_shape():
    model = build_flp(ex11())
    assert list(model.names) == ["x1", "x2", "x3", "lambda"]
    assert len(model.constraints) == 3 + 2


def test_example_11():
    sol = solve_fuzzy_goals(ex11())
    assert sol.player1.levels["lambda"] == pytest.approx(1.0, abs=1e-9)
    assert sol.player2.levels["eta"] == pytest.approx(0.3, abs=1e-9)
    assert all(sol.checks.values())
    assert any("fully satisfied" in w for w in sol.warnings)


def test_printed_strategy_is_feasible_at_full_level():
    x = [0.0271, 0.4233, 0.5496]
    assert not check_feasible(build_flp(ex11()), [*x, 1.0], tol=1e-3)


def test_one_by_one_goal_met():
    sol = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame([[2.5]]), 2.5, 2.5, 1, 1))
    assert sol.player1.levels["lambda"] == 1 and sol.player2.levels["eta"] == 1


def test_infeasible_players_are_reported():
    sol = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(EX11), v0=20, w0=-20, p0=1, q0=1))
    assert sol.player1.status == "infeasible" and sol.player1.reason == REASON_P1_FUZZY
    assert sol.player2.status == "infeasible" and sol.player2.reason == REASON_P2_FUZZY
    assert sol.status == "infeasible"
    assert all(sol.checks.values())


def test_goal_spec_validation():
    with pytest.raises(ValueError):
        FuzzyGoalsSpec(CrispGame(EX11), 1, 1, 0, 1)
    with pytest.raises(ValueError):
        FuzzyGoalsSpec(CrispGame(EX11), np.inf, 1, 1, 1)


def test_crisp_reduction():
    rng = np.random.default_rng(3)
    for _ in range(10):
        A = rng.integers(-9, 10, (3, 3))
        v = crisp_value(A).value
        sol = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(A), v, v, 1.0, 1.0))
        assert sol.player1.levels["lambda"] == pytest.approx(1, abs=1e-9)
        assert sol.player2.levels["eta"] == pytest.approx(1, abs=1e-9)
        # shifting the common aspiration away from v(A) breaks one side
        up = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(A), v + 0.25, v + 0.25, 1.0, 1.0))
        assert up.player1.levels["lambda"] < 1 - 1e-6
        down = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(A), v - 0.25, v - 0.25, 1.0, 1.0))
        assert down.player2.levels["eta"] < 1 - 1e-6


# -- fuzzy payoffs


def ex21():
    return FuzzyPayoffSpec(EX21, (0.08, 0.10, 0.11), (0.14, 0.15, 0.17))


def test_fp1_fd2_rows_match_printed_form():
    _assert_same_halfspace(
        build_fp1(ex21()), "goal1", {"x1": 545, "x2": 270, "V": -3, "lambda": -0.29}, ">=", -0.29
    )
    _assert_same_halfspace(
        build_fd2(ex21()), "goal2", {"y1": 270, "y2": 545, "W": -3, "eta": 0.46}, "<=", 0.46
    )


def test_example_21():
    sol = solve_fuzzy_payoffs(ex21())
    v = 171745 / 356
    assert sol.oracle_value * 3 == pytest.approx(v, abs=1e-9)
    assert sol.player1.value == pytest.approx((v + 0.29) / 3, abs=1e-9)
    assert sol.player2.value == pytest.approx((v - 0.46) / 3, abs=1e-9)
    assert sol.player1.strategy == pytest.approx((0.7725, 0.2275), abs=1e-3)
    assert sol.player2.strategy == pytest.approx((0.2275, 0.7725), abs=1e-3)
    assert all(sol.checks.values())


def test_published_strategy_is_nearly_feasible():
    model = build_fp1(ex21())
    assignment = {"x1": 0.7725, "x2": 0.2275, "lambda": 0.0, "V": 160.9066}
    assert not check_feasible(model, assignment, tol=0.02)


def test_triple_sums_and_defuzzified():
    spec = ex21()
    assert spec.triple_sums().tolist() == [[545, 464], [270, 545]]
    assert spec.defuzzified() == pytest.approx(np.array([[545, 464], [270, 545]]) / 3)


# -- POSS


def ex31(**kw):
    return PossSpec(EX21, CutSet((0, 1)), **kw)


def test_mlp_rows_and_objectives():
    model = build_mlp(ex31())
    labels = [o.name for o in model.objectives]
    assert labels == ["v11", "v12", "v21"]
    _assert_same_halfspace(model, "v11.col1", {"x1": 175, "x2": 80, "v11": -1}, ">=", 0)
    _assert_same_halfspace(model, "v12.col2", {"x1": 158, "x2": 190, "v12": -1}, ">=", 0)


def test_example_31():
    x, sec, tfn = solve_poss(ex31())
    assert x[0] == pytest.approx(95 / 120, abs=1e-9)
    assert sec.entries[0, 0] == pytest.approx(155.2083, abs=1e-4)
    assert sec.entries[0, 1] == pytest.approx(164.6667, abs=1e-4)
    assert sec.entries[1] == pytest.approx((161, 161), abs=1e-9)
    assert tfn.spreads() == pytest.approx((161, 5.7917, 3.6667), abs=1e-4)


def test_full_weight_vector_is_summed_per_group():
    res = solve_poss(ex31(weights=(1, 1, 1, 1)))
    assert res.weights == (1, 1, 2)
    with pytest.raises(ValueError):
        solve_poss(ex31(weights=(1, 1)))
    with pytest.raises(ValueError):
        ex31(weights=(1, 0, 1))


def test_poss_weight_insensitivity():
    rng = np.random.default_rng(5)
    for _ in range(5):
        w = tuple(rng.uniform(0.05, 5, 3))
        res = solve_poss(ex31(weights=w), verify=False)
        assert find_dominating(EX21, CutSet((0, 1)), res.security) is None


def test_dominated_strategy_is_detected():
    sec = security_matrix(ex31().payoff, CutSet((0, 1)), np.array([0.0, 1.0]))
    assert find_dominating(ex31().payoff, CutSet((0, 1)), sec) is not None


def test_poss_crisp_2x2():
    payoff = [[TFN.crisp(4), TFN.crisp(2)], [TFN.crisp(3), TFN.crisp(6)]]
    x, sec, tfn = solve_poss(PossSpec(payoff, CutSet((1,))))
    assert x == pytest.approx((0.6, 0.4)) and sec.entries[0] == pytest.approx((3.6, 3.6))
    assert tfn is None


def test_poss_player2_security_is_supremum():
    spec = ex31()
    res = solve_poss_player2(spec)
    y = res.strategy
    for i, alpha in enumerate(spec.cuts.levels):
        for j, pick in enumerate(("lo", "hi")):
            M = np.array([[getattr(_cut(a, alpha), pick) for a in row] for row in spec.payoff])
            assert res.security.entries[i, j] == pytest.approx((M @ y).max(), abs=1e-9)
    assert res.security.is_nested() and res.player == 2


def _cut(a, alpha):
    from fuzzy_games.fuzzy_core import alpha_cut

    return alpha_cut(a, alpha)


def test_poss_game_levels_and_fallback_weights():
    sol = solve_poss_game(PossSpec([[(1, 2, 3), (0, 1, 2), (2, 3, 5)]], CutSet((0, 1)), weights=(1, 2, 3, 4)))
    assert sol.status == "optimal"
    assert set(sol.player1.levels) == {"security11", "security12", "security21", "security22"}
    sol = solve_poss_game(ex31())
    assert sol.player1.details["spreads"] == pytest.approx((161, 5.7917, 3.6667), abs=1e-4)


# -- I-fuzzy goals


def ifz(A=((4, 2), (3, 6)), U0=4.0, V0=4.0):
    return IFuzzyGoalsSpec(CrispGame(A), U0, V0, 1.0, 0.5, 1.0, 0.5)


def test_cfp1_structure():
    model = build_cfp1(ifz(np.ones((3, 5))))
    assert len(model.constraints) == 2 * 5 + 3
    assert list(model.names[-2:]) == ["alpha", "beta"]
    assert len(build_cfp2(ifz(np.ones((3, 5)))).constraints) == 2 * 3 + 3


def test_derived_ifuzzy_instance():
    grid = cfp1_grid([[4, 2], [3, 6]], 4.0, 1.0, 0.5)
    assert grid == pytest.approx(0.6, abs=1e-9)
    sol = solve_ifuzzy_goals(ifz())
    assert sol.player1.levels["alpha"] == pytest.approx(0.6, abs=1e-9)
    assert sol.player1.levels["beta"] == pytest.approx(0.0, abs=1e-9)
    assert all(sol.checks.values())
    assert sol.player1.details["score"] == pytest.approx(0.6, abs=1e-9)


def test_ifuzzy_trivial_cases():
    sol = solve_ifuzzy_goals(ifz([[3.0]], 3.0, 3.0))
    assert (sol.player1.levels["alpha"], sol.player1.levels["beta"]) == pytest.approx((1, 0), abs=1e-12)
    assert (sol.player2.levels["delta"], sol.player2.levels["eta"]) == pytest.approx((1, 0), abs=1e-12)
    low = solve_ifuzzy_goals(ifz(U0=1.0))
    assert low.player1.levels["alpha"] == pytest.approx(1) and low.player1.levels["beta"] == 0


def test_ifuzzy_spec_rejects_optimistic_tolerances():
    with pytest.raises(ValueError):
        IFuzzyGoalsSpec(CrispGame([[1]]), 0, 0, 1, 2, 1, 0.5)
    with pytest.raises(ValueError):
        IFuzzyGoalsSpec(CrispGame([[1]]), 0, 0, 1, 0.5, 1, 1)


def test_ifuzzy_infeasible_when_rejection_wins():
    sol = solve_ifuzzy_goals(ifz(U0=10.0, V0=-10.0))
    assert sol.player1.status == "infeasible" and sol.player2.status == "infeasible"


def test_ifuzzy_level_invariants_random():
    rng = np.random.default_rng(9)
    for _ in range(20):
        A = rng.integers(-9, 10, (3, 3))
        v = crisp_value(A).value
        p, s = rng.uniform(0.5, 4, 2)
        q, t = p * rng.uniform(0.1, 0.9), s * rng.uniform(0.1, 0.9)
        U0, V0 = v + rng.uniform(-1, 1) * p, v + rng.uniform(-1, 1) * s
        sol = solve_ifuzzy_goals(IFuzzyGoalsSpec(CrispGame(A), U0, V0, p, q, s, t))
        for pl, (a, r) in ((sol.player1, ("alpha", "beta")), (sol.player2, ("delta", "eta"))):
            if pl.optimal:
                acc, rej = pl.levels[a], pl.levels[r]
                assert acc >= rej - 1e-9 and rej >= -1e-9 and acc + rej <= 1 + 1e-9


def test_cfp1_is_an_ifpc_specialization():
    A = np.array([[4.0, 2, 7], [3, 6, -1]])
    spec = IFuzzyGoalsSpec(CrispGame(A), 4.0, 4.0, 1.0, 0.5, 1.0, 0.5)
    m, n = A.shape
    general = build_ifpc(np.zeros(m), -spec.U0 * np.ones(n), -A.T, 0.0, [1.0] * (n + 1), [0.5] * (n + 1))
    game = build_cfp1(spec)
    rows = lambda model: {c.name: _row(model, c.name) for c in model.constraints}
    g, c = rows(general), rows(game)
    for j in range(1, n + 1):
        for kind in ("accept", "reject"):
            assert g[f"{kind}{j}"][0] == pytest.approx(c[f"{kind}{j}"][0])
            assert g[f"{kind}{j}"][2] == pytest.approx(c[f"{kind}{j}"][2])
    # the game form adds only the simplex row on top of the general ramps
    extra = set(c) - set(g)
    assert extra == {"simplex"}


def test_ifpc_ifdc_trivial():
    primal = build_ifpc([1], [1], [[1]], 0.5, [1, 1], [0.5, 0.5])
    assert len(primal.constraints) == 2 * 2 + 2
    assert solve(primal).objective_value == pytest.approx(1)
    dual = build_ifdc([1], [1], [[1]], 1.5, [1, 1], [0.5, 0.5])
    assert solve(dual).objective_value == pytest.approx(1)
    with pytest.raises(ValueError):
        build_ifpc([1], [1], [[1]], 0.5, [1, 1], [1, 0.5])
    with pytest.raises(ValueError):
        build_ifdc([1, 2], [1], [[1]], 0.5, [1, 1], [0.5, 0.5])
