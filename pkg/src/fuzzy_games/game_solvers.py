"""Zero-sum matrix games with fuzzy goals, fuzzy payoffs and I-fuzzy goals.

Every game variant is turned into one crisp linear program per player and
solved with :mod:`fuzzy_games.lp_engine`.  The classical minimax value of
the (defuzzified) payoff matrix, computed independently with HiGHS through
:func:`scipy.optimize.linprog`, is used to cross-check each answer.

Row player (player I) maximizes, column player (player II) minimizes.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import NamedTuple, Sequence

import numpy as np
from scipy.optimize import linprog

from .fuzzy_core import CutSet, RankingMatrix, TriangularFuzzyNumber, alpha_cut, defuzzify
from .ifuzzy_core import (
    IFuzzyPair,
    IFuzzyTolerance,
    ifuzzy_decision,
    lesseq_reflection,
    pessimistic_pair,
    score,
)
from .lp_engine import EQ, GE, LE, LpModel, LpSolution, ModelBuilder, scalarize, solve

__all__ = [
    "CrispGame",
    "FuzzyGoalsSpec",
    "FuzzyPayoffSpec",
    "PossSpec",
    "IFuzzyGoalsSpec",
    "PlayerResult",
    "GameSolution",
    "CrispSolution",
    "PossResult",
    "PossDominatedError",
    "crisp_value",
    "solve_crisp",
    "build_flp",
    "build_fld",
    "solve_fuzzy_goals",
    "build_fp1",
    "build_fd2",
    "solve_fuzzy_payoffs",
    "build_mlp",
    "security_matrix",
    "find_dominating",
    "solve_poss",
    "solve_poss_player2",
    "solve_poss_game",
    "build_cfp1",
    "build_cfp2",
    "solve_ifuzzy_goals",
    "build_ifpc",
    "build_ifdc",
]

STRATEGY_TOL = 1e-9
ORACLE_TOL = 1e-6

REASON_P1_FUZZY = "aspiration_exceeds_value_plus_tolerance"
REASON_P2_FUZZY = "aspiration_below_value_minus_tolerance"
REASON_IFUZZY = "rejection_exceeds_acceptance"


# ---------------------------------------------------------------- game specs


@dataclass(frozen=True, eq=False)
class CrispGame:
    payoff: np.ndarray

    def __post_init__(self):
        A = np.array(self.payoff, dtype=float)
        if A.ndim != 2 or A.shape[0] < 1 or A.shape[1] < 1:
            raise ValueError(f"payoff must be a non-empty matrix, got shape {A.shape}")
        if not np.all(np.isfinite(A)):
            raise ValueError("payoff entries must be finite")
        A.setflags(write=False)
        object.__setattr__(self, "payoff", A)

    @property
    def m(self) -> int:
        return self.payoff.shape[0]

    @property
    def n(self) -> int:
        return self.payoff.shape[1]


@dataclass(frozen=True)
class FuzzyGoalsSpec:
    game: CrispGame
    v0: float
    w0: float
    p0: float
    q0: float

    def __post_init__(self):
        if not isinstance(self.game, CrispGame):
            object.__setattr__(self, "game", CrispGame(self.game))
        for name in ("v0", "w0", "p0", "q0"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if not (self.p0 > 0 and self.q0 > 0):
            raise ValueError(f"tolerances must be positive, got p0={self.p0}, q0={self.q0}")


def _fuzzy_matrix(payoff) -> tuple[tuple[TriangularFuzzyNumber, ...], ...]:
    rows = tuple(
        tuple(a if isinstance(a, TriangularFuzzyNumber) else TriangularFuzzyNumber(*a) for a in row)
        for row in payoff
    )
    if not rows or not rows[0] or any(len(r) != len(rows[0]) for r in rows):
        raise ValueError("fuzzy payoff must be a non-empty rectangular matrix")
    return rows


def _fuzzy_bounds(payoff) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    lo = np.array([[a.lower for a in row] for row in payoff])
    mid = np.array([[a.center for a in row] for row in payoff])
    hi = np.array([[a.upper for a in row] for row in payoff])
    return lo, mid, hi


@dataclass(frozen=True)
class FuzzyPayoffSpec:
    payoff: tuple[tuple[TriangularFuzzyNumber, ...], ...]
    p_margin: TriangularFuzzyNumber
    q_margin: TriangularFuzzyNumber

    def __post_init__(self):
        object.__setattr__(self, "payoff", _fuzzy_matrix(self.payoff))
        for name in ("p_margin", "q_margin"):
            value = getattr(self, name)
            if not isinstance(value, TriangularFuzzyNumber):
                object.__setattr__(self, name, TriangularFuzzyNumber(*value))

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.payoff), len(self.payoff[0])

    def triple_sums(self) -> np.ndarray:
        """``3 F(a_ij)``, the sum of each entry's three parameters."""
        return np.array([[a.lower + a.center + a.upper for a in row] for row in self.payoff])

    def defuzzified(self) -> np.ndarray:
        return np.array([[defuzzify(a) for a in row] for row in self.payoff])


@dataclass(frozen=True)
class PossSpec:
    payoff: tuple[tuple[TriangularFuzzyNumber, ...], ...]
    cuts: CutSet = CutSet((0.0, 1.0))
    weights: tuple[float, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "payoff", _fuzzy_matrix(self.payoff))
        if not isinstance(self.cuts, CutSet):
            object.__setattr__(self, "cuts", CutSet(self.cuts))
        if self.weights is not None:
            weights = tuple(float(w) for w in self.weights)
            if not weights or any(not (w > 0 and math.isfinite(w)) for w in weights):
                raise ValueError(f"weights must be positive and finite, got {weights}")
            object.__setattr__(self, "weights", weights)

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.payoff), len(self.payoff[0])


@dataclass(frozen=True)
class IFuzzyGoalsSpec:
    """Pessimistic I-fuzzy goals: player I wants ``x'Ay (IF)>~ U0``, player II ``x'Ay (IF)<~ V0``."""

    game: CrispGame
    U0: float
    V0: float
    p0: float
    q0: float
    s0: float
    t0: float

    def __post_init__(self):
        if not isinstance(self.game, CrispGame):
            object.__setattr__(self, "game", CrispGame(self.game))
        for name in ("U0", "V0", "p0", "q0", "s0", "t0"):
            value = float(getattr(self, name))
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite")
            object.__setattr__(self, name, value)
        if not 0 < self.q0 < self.p0:
            raise ValueError(f"player I needs 0 < q0 < p0, got p0={self.p0}, q0={self.q0}")
        if not 0 < self.t0 < self.s0:
            raise ValueError(f"player II needs 0 < t0 < s0, got s0={self.s0}, t0={self.t0}")

    @property
    def tol1(self) -> IFuzzyTolerance:
        return IFuzzyTolerance.pessimistic(self.p0, self.q0)

    @property
    def tol2(self) -> IFuzzyTolerance:
        return IFuzzyTolerance.pessimistic(self.s0, self.t0)


# ------------------------------------------------------------------ results


@dataclass
class PlayerResult:
    status: str
    strategy: np.ndarray | None = None
    levels: dict[str, float] = field(default_factory=dict)
    value: float | TriangularFuzzyNumber | None = None
    pivots: int = 0
    reason: str | None = None
    model: LpModel | None = None
    details: dict = field(default_factory=dict)

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


@dataclass
class GameSolution:
    variant: str
    player1: PlayerResult
    player2: PlayerResult
    oracle_value: float | None = None
    checks: dict[str, bool] = field(default_factory=dict)
    warnings: list[str] = field(default_factory=list)
    inputs: dict = field(default_factory=dict)

    @property
    def status(self) -> str:
        if self.player1.optimal and self.player2.optimal:
            return "optimal"
        for p in (self.player1, self.player2):
            if not p.optimal:
                return p.status
        return "optimal"

    @property
    def players(self) -> tuple[PlayerResult, PlayerResult]:
        return (self.player1, self.player2)


class CrispSolution(NamedTuple):
    value: float
    row_strategy: np.ndarray
    col_strategy: np.ndarray


def _clean_strategy(values: Sequence[float]) -> np.ndarray:
    p = np.array(values, dtype=float)
    if np.any(p < -STRATEGY_TOL):
        raise ValueError(f"strategy has negative entries: {p}")
    p[p < 0] = 0.0
    if abs(p.sum() - 1.0) > STRATEGY_TOL:
        raise ValueError(f"strategy does not sum to 1: {p} (sum {p.sum()!r})")
    p.setflags(write=False)
    return p


def _clamp01(t: float) -> float:
    return min(max(t, 0.0), 1.0)


# ------------------------------------------------------------- crisp oracle


def crisp_value(game: CrispGame | np.ndarray) -> CrispSolution:
    """Minimax value and optimal strategies of a crisp matrix game.

    Shifts the payoff to be strictly positive, solves the classical pair
    ``min 1'u  s.t. A'u >= 1`` / ``max 1'w  s.t. Aw <= 1`` with HiGHS, then
    undoes the shift.  Deliberately independent of the in-house simplex.
    """
    if not isinstance(game, CrispGame):
        game = CrispGame(game)
    A = game.payoff
    m, n = A.shape
    shift = 1.0 - float(A.min())
    B = A + shift
    row = linprog(np.ones(m), A_ub=-B.T, b_ub=-np.ones(n), bounds=(0, None), method="highs")
    col = linprog(-np.ones(n), A_ub=B, b_ub=np.ones(m), bounds=(0, None), method="highs")
    if row.status != 0 or col.status != 0:
        raise RuntimeError(f"crisp oracle failed: {row.message} / {col.message}")
    value = 1.0 / row.x.sum()
    x = row.x * value
    y = col.x / col.x.sum()
    x, y = np.clip(x, 0, None), np.clip(y, 0, None)
    return CrispSolution(value - shift, x / x.sum(), y / y.sum())


def solve_crisp(game: CrispGame | np.ndarray) -> GameSolution:
    if not isinstance(game, CrispGame):
        game = CrispGame(game)
    v, x, y = crisp_value(game)
    p1 = PlayerResult("optimal", x, value=float((x @ game.payoff).min()))
    p2 = PlayerResult("optimal", y, value=float((game.payoff @ y).max()))
    return GameSolution("crisp", p1, p2, oracle_value=v, inputs={"payoff": game.payoff})


# -------------------------------------------------------------- fuzzy goals


def build_flp(spec: FuzzyGoalsSpec) -> LpModel:
    """Player I: ``max lambda  s.t.  A_j'x >= v0 - (1 - lambda) p0`` for every column."""
    A = spec.game.payoff
    b = ModelBuilder("FLP")
    x = b.add_vars("x", spec.game.m)
    lam = b.add_var("lambda")
    for j in range(spec.game.n):
        terms = {xi: -A[i, j] for i, xi in enumerate(x)}
        terms[lam] = spec.p0
        b.add_constraint(terms, LE, spec.p0 - spec.v0, f"goal{j + 1}")
    b.add_constraint({xi: 1.0 for xi in x}, EQ, 1.0, "simplex")
    b.add_constraint({lam: 1.0}, LE, 1.0, "level")
    b.add_objective({lam: 1.0}, "max", "lambda")
    return b.build()


def build_fld(spec: FuzzyGoalsSpec) -> LpModel:
    """Player II: ``max eta  s.t.  A_i y <= w0 + (1 - eta) q0`` for every row."""
    A = spec.game.payoff
    b = ModelBuilder("FLD")
    y = b.add_vars("y", spec.game.n)
    eta = b.add_var("eta")
    for i in range(spec.game.m):
        terms = {yj: A[i, j] for j, yj in enumerate(y)}
        terms[eta] = spec.q0
        b.add_constraint(terms, LE, spec.w0 + spec.q0, f"goal{i + 1}")
    b.add_constraint({yj: 1.0 for yj in y}, EQ, 1.0, "simplex")
    b.add_constraint({eta: 1.0}, LE, 1.0, "level")
    b.add_objective({eta: 1.0}, "max", "eta")
    return b.build()


def _player(sol: LpSolution, model: LpModel, k: int, level_names: Sequence[str], reason: str) -> PlayerResult:
    if not sol.optimal:
        return PlayerResult(sol.status, pivots=sol.pivots, reason=reason, model=model)
    return PlayerResult(
        "optimal",
        _clean_strategy(sol.x[:k]),
        {name: float(sol[name]) for name in level_names},
        pivots=sol.pivots,
        model=model,
        details={"lp_x": sol.x},
    )


def solve_fuzzy_goals(spec: FuzzyGoalsSpec) -> GameSolution:
    A = spec.game.payoff
    m, n = A.shape
    flp, fld = build_flp(spec), build_fld(spec)
    p1 = _player(solve(flp), flp, m, ["lambda"], REASON_P1_FUZZY)
    p2 = _player(solve(fld), fld, n, ["eta"], REASON_P2_FUZZY)
    if p1.optimal:
        p1.value = float((p1.strategy @ A).min())
    if p2.optimal:
        p2.value = float((A @ p2.strategy).max())

    v = crisp_value(spec.game).value
    lam_free = 1.0 + (v - spec.v0) / spec.p0
    eta_free = 1.0 + (spec.w0 - v) / spec.q0
    sol = GameSolution(
        "fuzzy-goals",
        p1,
        p2,
        oracle_value=v,
        inputs={"payoff": A, "v0": spec.v0, "w0": spec.w0, "p0": spec.p0, "q0": spec.q0},
    )
    sol.checks["player1.oracle"] = _oracle_agrees(p1, "lambda", lam_free)
    sol.checks["player2.oracle"] = _oracle_agrees(p2, "eta", eta_free)
    for k, p in enumerate(sol.players, start=1):
        if not p.optimal:
            bound = "v0 - p0" if k == 1 else "w0 + q0"
            sol.warnings.append(f"player {k} infeasible: game value {v:.6g} is outside the reach of {bound}")
        elif next(iter(p.levels.values())) >= 1 - 1e-9:
            sol.warnings.append(f"player {k} fully satisfied; other optimal strategies may exist")
    for name, ok in sol.checks.items():
        if not ok:
            sol.warnings.append(f"crisp oracle disagrees on {name}")
    return sol


def _oracle_agrees(player: PlayerResult, level: str, unclamped: float) -> bool:
    if unclamped < 0:
        return not player.optimal
    return player.optimal and bool(abs(player.levels[level] - min(unclamped, 1.0)) <= ORACLE_TOL)


# ------------------------------------------------------------ fuzzy payoffs


def build_fp1(spec: FuzzyPayoffSpec) -> LpModel:
    """Player I on the defuzzified game, written in ``3F`` units.

    ``sum_i 3F(a_ij) x_i >= 3V - (1 - lambda) 3F(p)`` for every column; maximize V.
    """
    S = spec.triple_sums()
    m, n = spec.shape
    margin = sum(spec.p_margin.as_tuple())
    b = ModelBuilder("FP1")
    x = b.add_vars("x", m)
    lam = b.add_var("lambda")
    V = b.add_var("V", -math.inf)
    for j in range(n):
        terms = {xi: S[i, j] for i, xi in enumerate(x)}
        terms[V] = -3.0
        terms[lam] = -margin
        b.add_constraint(terms, GE, -margin, f"goal{j + 1}")
    b.add_constraint({xi: 1.0 for xi in x}, EQ, 1.0, "simplex")
    b.add_constraint({lam: 1.0}, LE, 1.0, "level")
    b.add_objective({V: 1.0}, "max", "V")
    return b.build()


def build_fd2(spec: FuzzyPayoffSpec) -> LpModel:
    """Player II: ``sum_j 3F(a_ij) y_j <= 3W + (1 - eta) 3F(q)`` for every row; minimize W."""
    S = spec.triple_sums()
    m, n = spec.shape
    margin = sum(spec.q_margin.as_tuple())
    b = ModelBuilder("FD2")
    y = b.add_vars("y", n)
    eta = b.add_var("eta")
    W = b.add_var("W", -math.inf)
    for i in range(m):
        terms = {yj: S[i, j] for j, yj in enumerate(y)}
        terms[W] = -3.0
        terms[eta] = margin
        b.add_constraint(terms, LE, margin, f"goal{i + 1}")
    b.add_constraint({yj: 1.0 for yj in y}, EQ, 1.0, "simplex")
    b.add_constraint({eta: 1.0}, LE, 1.0, "level")
    b.add_objective({W: 1.0}, "min", "W")
    return b.build()


def solve_fuzzy_payoffs(spec: FuzzyPayoffSpec) -> GameSolution:
    m, n = spec.shape
    fp1, fd2 = build_fp1(spec), build_fd2(spec)
    s1, s2 = solve(fp1), solve(fd2)
    p1 = _player(s1, fp1, m, ["lambda"], "unbounded_value")
    p2 = _player(s2, fd2, n, ["eta"], "unbounded_value")
    if p1.optimal:
        p1.value = s1["V"]
    if p2.optimal:
        p2.value = s2["W"]

    v = crisp_value(spec.defuzzified()).value
    expected_V = v + max(defuzzify(spec.p_margin), 0.0)
    expected_W = v - max(defuzzify(spec.q_margin), 0.0)
    sol = GameSolution(
        "fuzzy-payoffs",
        p1,
        p2,
        oracle_value=v,
        inputs={"payoff": spec.payoff, "p": spec.p_margin, "q": spec.q_margin},
    )
    sol.checks["player1.oracle"] = p1.optimal and bool(abs(p1.value - expected_V) <= ORACLE_TOL * max(1.0, abs(v)))
    sol.checks["player2.oracle"] = p2.optimal and bool(abs(p2.value - expected_W) <= ORACLE_TOL * max(1.0, abs(v)))
    for name, ok in sol.checks.items():
        if not ok:
            sol.warnings.append(f"crisp oracle disagrees on {name}")
    return sol


# --------------------------------------------------- Pareto-optimal security


class PossDominatedError(RuntimeError):
    """The scalarized optimum was found to be dominated; this signals a solver bug."""


@dataclass(frozen=True)
class _CutObjective:
    label: str
    matrix: np.ndarray
    members: tuple[tuple[int, int], ...]  # (level index, endpoint index), 0-based


def _cut_matrices(payoff, cuts: CutSet) -> list[tuple[int, int, np.ndarray]]:
    payoff = _fuzzy_matrix(payoff)
    out = []
    for i, alpha in enumerate(cuts.levels):
        cut = [[alpha_cut(a, alpha) for a in row] for row in payoff]
        out.append((i, 0, np.array([[c.lo for c in row] for row in cut])))
        out.append((i, 1, np.array([[c.hi for c in row] for row in cut])))
    return out


def _mlp_objectives(spec: PossSpec) -> list[_CutObjective]:
    """One objective per distinct cut-endpoint matrix; identical ones (e.g. at level 1) merge."""
    groups: list[list] = []
    for i, j, M in _cut_matrices(spec.payoff, spec.cuts):
        for g in groups:
            if np.array_equal(g[1], M):
                g[2].append((i, j))
                break
        else:
            groups.append([f"v{i + 1}{j + 1}", M, [(i, j)]])
    return [_CutObjective(label, M, tuple(members)) for label, M, members in groups]


def _resolve_weights(spec: PossSpec, objectives: list[_CutObjective]) -> list[float]:
    if spec.weights is None:
        return [1.0] * len(objectives)
    w = list(spec.weights)
    full = 2 * len(spec.cuts)
    if len(w) == len(objectives):
        return w
    if len(w) == full:
        return [sum(w[2 * i + j] for i, j in obj.members) for obj in objectives]
    raise ValueError(
        f"expected {len(objectives)} weights (one per distinct objective) or {full}, got {len(w)}"
    )


def build_mlp(spec: PossSpec) -> LpModel:
    """Multi-objective LP: maximize each ``v_ij`` with ``x' A^j_{alpha_i} >= v_ij`` column-wise."""
    m, n = spec.shape
    objectives = _mlp_objectives(spec)
    b = ModelBuilder("MLP")
    x = b.add_vars("x", m)
    values = [b.add_var(obj.label, -math.inf) for obj in objectives]
    for obj, v in zip(objectives, values):
        for j in range(n):
            terms = {xi: obj.matrix[i, j] for i, xi in enumerate(x)}
            terms[v] = -1.0
            b.add_constraint(terms, GE, 0.0, f"{obj.label}.col{j + 1}")
    b.add_constraint({xi: 1.0 for xi in x}, EQ, 1.0, "simplex")
    for obj, v in zip(objectives, values):
        b.add_objective({v: 1.0}, "max", obj.label)
    return b.build()


def security_matrix(payoff, cuts: CutSet, strategy: np.ndarray) -> RankingMatrix:
    """Player I's security level: column-wise minimum of each cut endpoint payoff."""
    x = np.asarray(strategy, dtype=float)
    rows = [[0.0, 0.0] for _ in cuts.levels]
    for i, j, M in _cut_matrices(payoff, cuts):
        rows[i][j] = float((x @ M).min())
    return RankingMatrix(np.array(rows), cuts.levels)


def _candidate_strategies(m: int, rng: np.random.Generator, steps: int = 200, samples: int = 10_000) -> np.ndarray:
    if m == 1:
        return np.ones((1, 1))
    if m <= 3:
        pts = [c for c in itertools.product(range(steps + 1), repeat=m - 1) if sum(c) <= steps]
        grid = np.array([(*c, steps - sum(c)) for c in pts], dtype=float)
        return grid / steps
    return rng.dirichlet(np.ones(m), size=samples)


def find_dominating(
    payoff, cuts: CutSet, security: RankingMatrix, seed: int = 0, tol: float = 1e-9
) -> np.ndarray | None:
    """A strategy whose security matrix weakly dominates ``security`` with one strict gain.

    Exhaustive 1/200 grid for up to three pure strategies, otherwise 10,000
    seeded random strategies.  Returns ``None`` when nothing dominates.
    """
    m = len(payoff)
    cuts = cuts if isinstance(cuts, CutSet) else CutSet(cuts)
    X = _candidate_strategies(m, np.random.default_rng(seed))
    target = security.entries
    scale = tol * (1.0 + float(np.abs(target).max()))
    weak = np.ones(len(X), bool)
    strict = np.zeros(len(X), bool)
    for i, j, M in _cut_matrices(payoff, cuts):
        s = (X @ M).min(axis=1)
        weak &= s >= target[i, j] - scale
        strict |= s > target[i, j] + scale
    hits = np.flatnonzero(weak & strict)
    return X[hits[0]] if hits.size else None


@dataclass(frozen=True, eq=False)
class PossResult:
    strategy: np.ndarray
    security: RankingMatrix
    security_tfn: TriangularFuzzyNumber | None
    weights: tuple[float, ...]
    labels: tuple[str, ...]
    solution: LpSolution
    model: LpModel
    player: int = 1

    def __iter__(self):
        return iter((self.strategy, self.security, self.security_tfn))


def solve_poss(spec: PossSpec, *, seed: int = 0, verify: bool = True) -> PossResult:
    """Pareto-optimal security strategy of player I via weighted-sum scalarization."""
    objectives = _mlp_objectives(spec)
    weights = _resolve_weights(spec, objectives)
    model = build_mlp(spec)
    sol = solve(scalarize(model, weights))
    if not sol.optimal:
        raise RuntimeError(f"MLP unexpectedly {sol.status}")
    x = _clean_strategy(sol.x[: spec.shape[0]])
    security = security_matrix(spec.payoff, spec.cuts, x)
    if verify:
        witness = find_dominating(spec.payoff, spec.cuts, security, seed=seed)
        if witness is not None:
            raise PossDominatedError(f"strategy {x} is dominated by {witness}")
    return PossResult(
        x,
        security,
        security.to_fuzzy_number(),
        tuple(weights),
        tuple(o.label for o in objectives),
        sol,
        model,
    )


def _negated_transpose(payoff):
    m, n = len(payoff), len(payoff[0])
    return tuple(tuple(-payoff[i][j] for i in range(m)) for j in range(n))


def solve_poss_player2(spec: PossSpec, *, seed: int = 0, verify: bool = True) -> PossResult:
    """Player II's POSS, found as player I's POSS in the game ``-A'``.

    The returned security matrix is player II's (supremum) security level,
    i.e. the reflected security matrix of the mirrored game.
    """
    mirrored = PossSpec(_negated_transpose(spec.payoff), spec.cuts, spec.weights)
    res = solve_poss(mirrored, seed=seed, verify=verify)
    flipped = RankingMatrix(-res.security.entries[:, ::-1], spec.cuts.levels)
    return PossResult(
        res.strategy,
        flipped,
        flipped.to_fuzzy_number(),
        res.weights,
        res.labels,
        res.solution,
        res.model,
        player=2,
    )


def solve_poss_game(spec: PossSpec, *, seed: int = 0) -> GameSolution:
    """Both players' POSS packaged as a :class:`GameSolution`."""
    first = solve_poss(spec, seed=seed)
    notes = []
    mirrored = PossSpec(_negated_transpose(spec.payoff), spec.cuts, spec.weights)
    try:
        _resolve_weights(mirrored, _mlp_objectives(mirrored))
        second = solve_poss_player2(spec, seed=seed)
    except ValueError:
        second = solve_poss_player2(PossSpec(spec.payoff, spec.cuts), seed=seed)
        notes.append("player 2 uses equal weights: the given weights do not match its objectives")
    players = []
    for res in (first, second):
        levels = {
            f"security{i + 1}{j + 1}": float(res.security.entries[i, j])
            for i in range(len(spec.cuts))
            for j in range(2)
        }
        players.append(
            PlayerResult(
                "optimal",
                res.strategy,
                levels,
                value=res.security_tfn,
                pivots=res.solution.pivots,
                model=res.model,
                details={"poss": res, "lp_x": res.solution.x},
            )
        )
    lo, mid, hi = _fuzzy_bounds(spec.payoff)
    sol = GameSolution(
        "poss",
        *players,
        oracle_value=crisp_value(mid).value,
        inputs={"payoff": spec.payoff, "cuts": spec.cuts.levels, "weights": players[0].details["poss"].weights},
    )
    sol.warnings.extend(notes)
    sol.checks["player1.nondominated"] = True
    sol.checks["player2.nondominated"] = True
    if len(spec.cuts) == 1 or np.array_equal(lo, hi):
        # single cut or crisp matrix: the security level is the crisp value
        v = crisp_value(mid).value
        sol.checks["player1.oracle"] = bool(abs(players[0].levels["security11"] - v) <= ORACLE_TOL)
        sol.checks["player2.oracle"] = bool(abs(players[1].levels["security11"] - v) <= ORACLE_TOL)
    for p in players:
        tfn = p.value
        if tfn is not None:
            c, left, right = tfn.spreads()
            p.details["spreads"] = (c, left, right)
    return sol


# ------------------------------------------------------------ I-fuzzy goals


def build_cfp1(spec: IFuzzyGoalsSpec) -> LpModel:
    """Player I: ``max alpha - beta`` over acceptance and rejection ramps per column."""
    A = spec.game.payoff
    p0, q0, U0 = spec.p0, spec.q0, spec.U0
    b = ModelBuilder("CFP1")
    x = b.add_vars("x", spec.game.m)
    alpha = b.add_var("alpha")
    beta = b.add_var("beta")
    for j in range(spec.game.n):
        terms = {xi: A[i, j] for i, xi in enumerate(x)}
        terms[alpha] = -p0
        b.add_constraint(terms, GE, U0 - p0, f"accept{j + 1}")
    for j in range(spec.game.n):
        terms = {xi: -A[i, j] for i, xi in enumerate(x)}
        terms[beta] = -q0
        b.add_constraint(terms, LE, p0 - U0 - q0, f"reject{j + 1}")
    b.add_constraint({xi: 1.0 for xi in x}, EQ, 1.0, "simplex")
    b.add_constraint({alpha: 1.0, beta: -1.0}, GE, 0.0, "alpha>=beta")
    b.add_constraint({alpha: 1.0, beta: 1.0}, LE, 1.0, "alpha+beta<=1")
    b.add_objective({alpha: 1.0, beta: -1.0}, "max", "alpha-beta")
    return b.build()


def build_cfp2(spec: IFuzzyGoalsSpec) -> LpModel:
    """Player II: ``max delta - eta`` over acceptance and rejection ramps per row."""
    A = spec.game.payoff
    s0, t0, V0 = spec.s0, spec.t0, spec.V0
    b = ModelBuilder("CFP2")
    y = b.add_vars("y", spec.game.n)
    delta = b.add_var("delta")
    eta = b.add_var("eta")
    for i in range(spec.game.m):
        terms = {yj: -A[i, j] for j, yj in enumerate(y)}
        terms[delta] = -s0
        b.add_constraint(terms, GE, -V0 - s0, f"accept{i + 1}")
    for i in range(spec.game.m):
        terms = {yj: A[i, j] for j, yj in enumerate(y)}
        terms[eta] = -t0
        b.add_constraint(terms, LE, V0 + s0 - t0, f"reject{i + 1}")
    b.add_constraint({yj: 1.0 for yj in y}, EQ, 1.0, "simplex")
    b.add_constraint({delta: 1.0, eta: -1.0}, GE, 0.0, "delta>=eta")
    b.add_constraint({delta: 1.0, eta: 1.0}, LE, 1.0, "delta+eta<=1")
    b.add_objective({delta: 1.0, eta: -1.0}, "max", "delta-eta")
    return b.build()


def _level_invariants(acc: float, rej: float, tol: float = 1e-9) -> bool:
    return acc >= rej - tol and rej >= -tol and acc + rej <= 1 + tol


def solve_ifuzzy_goals(spec: IFuzzyGoalsSpec) -> GameSolution:
    A = spec.game.payoff
    m, n = A.shape
    cfp1, cfp2 = build_cfp1(spec), build_cfp2(spec)
    p1 = _player(solve(cfp1), cfp1, m, ["alpha", "beta"], REASON_IFUZZY)
    p2 = _player(solve(cfp2), cfp2, n, ["delta", "eta"], REASON_IFUZZY)
    sol = GameSolution(
        "ifuzzy-goals",
        p1,
        p2,
        oracle_value=crisp_value(spec.game).value,
        inputs={"payoff": A, "U0": spec.U0, "V0": spec.V0, "p0": spec.p0, "q0": spec.q0, "s0": spec.s0, "t0": spec.t0},
    )
    if p1.optimal:
        z = p1.strategy @ A
        p1.value = float(z.min())
        pairs = [pessimistic_pair(zj, spec.U0, spec.tol1) for zj in z]
        _attach_decision(sol, p1, 1, pairs, "alpha", "beta")
    if p2.optimal:
        z = A @ p2.strategy
        p2.value = float(z.max())
        pairs = [lesseq_reflection(zi, spec.V0, spec.tol2) for zi in z]
        _attach_decision(sol, p2, 2, pairs, "delta", "eta")
    for name, ok in sol.checks.items():
        if not ok:
            sol.warnings.append(f"check failed: {name}")
    return sol


def _attach_decision(sol: GameSolution, p: PlayerResult, k: int, pairs: list[IFuzzyPair], acc: str, rej: str):
    decision = ifuzzy_decision(pairs)
    p.details["pairs"] = pairs
    p.details["decision"] = decision
    p.details["score"] = score(decision)
    a, r = p.levels[acc], p.levels[rej]
    sol.checks[f"player{k}.levels"] = _level_invariants(a, r)
    sol.checks[f"player{k}.score"] = bool(abs(score(decision) - (a - r)) <= ORACLE_TOL)


# ------------------------------------------------ general I-fuzzy LP (pessimistic)


def _tolerances(accept: Sequence[float], reject: Sequence[float], size: int, what: str):
    accept = [float(v) for v in accept]
    reject = [float(v) for v in reject]
    if len(accept) != size or len(reject) != size:
        raise ValueError(f"{what}: expected {size} tolerances of each kind")
    for k, (p, q) in enumerate(zip(accept, reject)):
        if not 0 < q < p:
            raise ValueError(f"{what}: tolerance {k} needs 0 < reject < accept, got ({p}, {q})")
    return accept, reject


def build_ifpc(c, b, A, Z0: float, p: Sequence[float], q: Sequence[float]) -> LpModel:
    """Crisp form of ``c'x (IF)>~ Z0, Ax (IF)<~ b, x >= 0`` under the pessimistic reading.

    ``p[0], q[0]`` belong to the objective goal and ``p[i], q[i]`` to row ``i``.
    Maximizes ``alpha - beta``, the minimal acceptance minus the maximal rejection.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    c = np.asarray(c, dtype=float)
    rhs = np.asarray(b, dtype=float)
    m, n = A.shape
    if c.shape != (n,) or rhs.shape != (m,):
        raise ValueError("shape mismatch between c, b and A")
    p, q = _tolerances(p, q, m + 1, "IFPC")
    model = ModelBuilder("IFPC")
    x = model.add_vars("x", n)
    alpha = model.add_var("alpha")
    beta = model.add_var("beta")
    goal = {xk: c[k] for k, xk in enumerate(x)}
    model.add_constraint({**goal, alpha: -p[0]}, GE, Z0 - p[0], "accept0")
    for i in range(m):
        row = {xk: -A[i, k] for k, xk in enumerate(x)}
        model.add_constraint({**row, alpha: -p[i + 1]}, GE, -rhs[i] - p[i + 1], f"accept{i + 1}")
    model.add_constraint({**{xk: -c[k] for k, xk in enumerate(x)}, beta: -q[0]}, LE, p[0] - Z0 - q[0], "reject0")
    for i in range(m):
        row = {xk: A[i, k] for k, xk in enumerate(x)}
        model.add_constraint({**row, beta: -q[i + 1]}, LE, rhs[i] + p[i + 1] - q[i + 1], f"reject{i + 1}")
    model.add_constraint({alpha: 1.0, beta: 1.0}, LE, 1.0, "alpha+beta<=1")
    model.add_constraint({alpha: 1.0, beta: -1.0}, GE, 0.0, "alpha>=beta")
    model.add_objective({alpha: 1.0, beta: -1.0}, "max", "alpha-beta")
    return model.build()


def build_ifdc(c, b, A, W0: float, s: Sequence[float], t: Sequence[float]) -> LpModel:
    """Crisp form of the dual ``b'y (IF)<~ W0, A'y (IF)>~ c, y >= 0`` (pessimistic).

    ``s[0], t[0]`` belong to the objective goal and ``s[j], t[j]`` to column ``j``.
    """
    A = np.atleast_2d(np.asarray(A, dtype=float))
    c = np.asarray(c, dtype=float)
    rhs = np.asarray(b, dtype=float)
    m, n = A.shape
    if c.shape != (n,) or rhs.shape != (m,):
        raise ValueError("shape mismatch between c, b and A")
    s, t = _tolerances(s, t, n + 1, "IFDC")
    model = ModelBuilder("IFDC")
    y = model.add_vars("y", m)
    delta = model.add_var("delta")
    eta = model.add_var("eta")
    goal = {yk: rhs[k] for k, yk in enumerate(y)}
    model.add_constraint({**{yk: -rhs[k] for k, yk in enumerate(y)}, delta: -s[0]}, GE, -W0 - s[0], "accept0")
    for j in range(n):
        col = {yk: A[k, j] for k, yk in enumerate(y)}
        model.add_constraint({**col, delta: -s[j + 1]}, GE, c[j] - s[j + 1], f"accept{j + 1}")
    model.add_constraint({**goal, eta: -t[0]}, LE, W0 + s[0] - t[0], "reject0")
    for j in range(n):
        col = {yk: -A[k, j] for k, yk in enumerate(y)}
        model.add_constraint({**col, eta: -t[j + 1]}, LE, s[j + 1] - c[j] - t[j + 1], f"reject{j + 1}")
    model.add_constraint({delta: 1.0, eta: 1.0}, LE, 1.0, "delta+eta<=1")
    model.add_constraint({delta: 1.0, eta: -1.0}, GE, 0.0, "delta>=eta")
    model.add_objective({delta: 1.0, eta: -1.0}, "max", "delta-eta")
    return model.build()
