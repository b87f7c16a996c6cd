"""Dense linear programs and a two-phase simplex solver using Bland's rule.

Models are small (a dozen variables or so), so a dense tableau is used and
correctness under degeneracy is preferred over speed.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

import numpy as np

__all__ = [
    "LE",
    "EQ",
    "GE",
    "Variable",
    "Constraint",
    "Objective",
    "LpModel",
    "LpSolution",
    "ModelBuilder",
    "Violation",
    "solve",
    "scalarize",
    "constraint_residuals",
    "check_feasible",
]

LE, EQ, GE = "<=", "=", ">="
RELATIONS = (LE, EQ, GE)
SENSES = ("max", "min")

FEAS_TOL = 1e-9
OPT_TOL = 1e-9


@dataclass(frozen=True)
class Variable:
    name: str
    lower: float = 0.0
    upper: float = math.inf

    @property
    def is_free(self) -> bool:
        return self.lower == -math.inf and self.upper == math.inf


@dataclass(frozen=True)
class Constraint:
    coefficients: tuple[float, ...]
    relation: str
    rhs: float
    name: str = ""


@dataclass(frozen=True)
class Objective:
    coefficients: tuple[float, ...]
    sense: str = "max"
    name: str = ""


@dataclass(frozen=True)
class LpModel:
    """Immutable LP: variables with bounds, linear rows and one or more objectives.

    ``components`` keeps the original objectives of a scalarized model so
    that solutions can still report each of them.
    """

    variables: tuple[Variable, ...]
    constraints: tuple[Constraint, ...]
    objectives: tuple[Objective, ...]
    name: str = ""
    components: tuple[Objective, ...] = ()

    def __post_init__(self):
        n = len(self.variables)
        if n == 0:
            raise ValueError("a model needs at least one variable")
        if not self.objectives:
            raise ValueError("a model needs at least one objective")
        names = [v.name for v in self.variables]
        if len(set(names)) != n:
            raise ValueError("variable names must be unique")
        for v in self.variables:
            if math.isnan(v.lower) or math.isnan(v.upper) or v.lower > v.upper:
                raise ValueError(f"bad bounds on {v.name}: [{v.lower}, {v.upper}]")
            if v.lower == math.inf or v.upper == -math.inf:
                raise ValueError(f"bad bounds on {v.name}: [{v.lower}, {v.upper}]")
        for row in (*self.constraints, *self.objectives, *self.components):
            if len(row.coefficients) != n:
                raise ValueError(f"row {row.name!r} has {len(row.coefficients)} entries, expected {n}")
            if not all(math.isfinite(c) for c in row.coefficients):
                raise ValueError(f"row {row.name!r} has non-finite coefficients")
        for con in self.constraints:
            if con.relation not in RELATIONS:
                raise ValueError(f"unknown relation {con.relation!r}")
            if not math.isfinite(con.rhs):
                raise ValueError(f"constraint {con.name!r} has a non-finite right-hand side")
        for obj in (*self.objectives, *self.components):
            if obj.sense not in SENSES:
                raise ValueError(f"unknown objective sense {obj.sense!r}")

    @property
    def names(self) -> list[str]:
        return [v.name for v in self.variables]

    def index(self, name: str) -> int:
        return self.names.index(name)

    def matrix(self) -> tuple[np.ndarray, list[str], np.ndarray]:
        """Constraint matrix, relations and right-hand sides."""
        n = len(self.variables)
        A = np.array([c.coefficients for c in self.constraints], dtype=float).reshape(-1, n)
        b = np.array([c.rhs for c in self.constraints], dtype=float)
        return A, [c.relation for c in self.constraints], b


class ModelBuilder:
    """Incremental construction of an :class:`LpModel` using variable indices."""

    def __init__(self, name: str = ""):
        self.name = name
        self._vars: list[Variable] = []
        self._cons: list[tuple[dict[int, float], str, float, str]] = []
        self._objs: list[tuple[dict[int, float], str, str]] = []

    def add_var(self, name: str, lower: float = 0.0, upper: float = math.inf) -> int:
        self._vars.append(Variable(name, float(lower), float(upper)))
        return len(self._vars) - 1

    def add_vars(self, prefix: str, count: int, lower: float = 0.0, upper: float = math.inf) -> list[int]:
        return [self.add_var(f"{prefix}{k + 1}", lower, upper) for k in range(count)]

    def add_constraint(self, terms: Mapping[int, float], relation: str, rhs: float, name: str = "") -> None:
        self._cons.append((dict(terms), relation, float(rhs), name))

    def add_objective(self, terms: Mapping[int, float], sense: str = "max", name: str = "") -> None:
        self._objs.append((dict(terms), sense, name))

    def _row(self, terms: Mapping[int, float]) -> tuple[float, ...]:
        row = [0.0] * len(self._vars)
        for k, coef in terms.items():
            row[k] += float(coef)
        return tuple(row)

    def build(self) -> LpModel:
        return LpModel(
            variables=tuple(self._vars),
            constraints=tuple(Constraint(self._row(t), rel, rhs, nm) for t, rel, rhs, nm in self._cons),
            objectives=tuple(Objective(self._row(t), sense, nm) for t, sense, nm in self._objs),
            name=self.name,
        )


@dataclass(frozen=True, eq=False)
class LpSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    x: np.ndarray | None
    objective_value: float | None
    per_objective: tuple[float, ...]
    pivots: int
    names: tuple[str, ...] = field(default=())

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"

    @property
    def values(self) -> dict[str, float]:
        if self.x is None:
            return {}
        return dict(zip(self.names, map(float, self.x)))

    def __getitem__(self, name: str) -> float:
        if self.x is None:
            raise KeyError(f"no assignment ({self.status})")
        return float(self.x[self.names.index(name)])


@dataclass(frozen=True)
class Violation:
    kind: str  # "constraint" | "lower" | "upper"
    index: int
    name: str
    amount: float  # positive by how much the row or bound is violated


def _standard_form(model: LpModel):
    """Rewrite as ``min c.z  s.t.  A z = b, z >= 0, b >= 0`` with ``x = offset + T z``.

    Returns the tableau pieces plus the number of structural (non-slack,
    non-artificial) columns and the basis seeded from slacks where possible.
    """
    n = len(model.variables)
    cols: list[tuple[int, float]] = []  # (original variable, sign)
    offset = np.zeros(n)
    extra_rows: list[tuple[int, float]] = []  # (std column, upper bound) rows
    for j, var in enumerate(model.variables):
        if math.isfinite(var.lower):
            offset[j] = var.lower
            cols.append((j, 1.0))
            if math.isfinite(var.upper):
                extra_rows.append((len(cols) - 1, var.upper - var.lower))
        elif math.isfinite(var.upper):
            offset[j] = var.upper
            cols.append((j, -1.0))
        else:
            cols.append((j, 1.0))
            cols.append((j, -1.0))
    k = len(cols)
    T = np.zeros((n, k))
    for c, (j, sign) in enumerate(cols):
        T[j, c] = sign

    A0, rels, b0 = model.matrix()
    A = A0 @ T
    b = b0 - A0 @ offset
    rels = list(rels)
    for c, ub in extra_rows:
        row = np.zeros(k)
        row[c] = 1.0
        A = np.vstack([A, row])
        b = np.append(b, ub)
        rels.append(LE)

    rows = len(rels)
    n_slack = sum(r != EQ for r in rels)
    S = np.zeros((rows, n_slack))
    slack_of_row = [-1] * rows
    s = 0
    for i, rel in enumerate(rels):
        if rel == LE:
            S[i, s] = 1.0
        elif rel == GE:
            S[i, s] = -1.0
        if rel != EQ:
            slack_of_row[i] = k + s
            s += 1
    M = np.hstack([A, S]) if rows else np.zeros((0, k))
    flip = b < 0
    M[flip] *= -1
    b = np.where(flip, -b, b)
    return M, b, T, offset, k, slack_of_row


def _pivot(tab: np.ndarray, r: int, c: int) -> None:
    tab[r] /= tab[r, c]
    factors = tab[:, c].copy()
    factors[r] = 0.0
    tab -= np.outer(factors, tab[r])
    tab[:, c] = 0.0
    tab[r, c] = 1.0


def _bland(tab, basis, cost, active, opt_tol, pivot_tol, budget):
    """Minimize ``cost`` over the current tableau; returns (status, pivots)."""
    pivots = 0
    while True:
        reduced = cost - cost[basis] @ tab[:, :-1]
        entering = np.flatnonzero(active & (reduced < -opt_tol))
        if entering.size == 0:
            return "optimal", pivots
        c = int(entering[0])
        col = tab[:, c]
        rows = np.flatnonzero(col > pivot_tol)
        if rows.size == 0:
            return "unbounded", pivots
        ratios = tab[rows, -1] / col[rows]
        best = ratios.min()
        ties = rows[ratios <= best + 1e-12 * (1.0 + abs(best))]
        r = int(min(ties, key=lambda i: basis[i]))
        _pivot(tab, r, c)
        basis[r] = c
        pivots += 1
        if pivots > budget:
            raise RuntimeError("simplex pivot budget exhausted")


def solve(
    model: LpModel,
    *,
    feas_tol: float = FEAS_TOL,
    opt_tol: float = OPT_TOL,
    max_pivots: int = 100_000,
) -> LpSolution:
    """Solve a single-objective model with the two-phase simplex method.

    Identical models give bit-identical results: no randomness, and ties in
    the entering/leaving choice are broken by lowest column index.
    """
    if len(model.objectives) != 1:
        raise ValueError(
            f"model {model.name!r} has {len(model.objectives)} objectives; scalarize() it first"
        )
    names = tuple(model.names)
    M, b, T, offset, k, slack_of_row = _standard_form(model)
    rows, width = M.shape
    pivot_tol = feas_tol

    basis = []
    art_cols = []
    for i in range(rows):
        s = slack_of_row[i]
        if s >= 0 and M[i, s] == 1.0:
            basis.append(s)
        else:
            art_cols.append(i)
            basis.append(width + len(art_cols) - 1)
    n_art = len(art_cols)
    art = np.zeros((rows, n_art))
    for a, i in enumerate(art_cols):
        art[i, a] = 1.0
    tab = np.hstack([M, art, b.reshape(-1, 1)])
    basis = np.array(basis, dtype=int)
    total = width + n_art
    pivots = 0

    if n_art:
        cost1 = np.zeros(total)
        cost1[width:] = 1.0
        _, p = _bland(tab, basis, cost1, np.ones(total, bool), opt_tol, pivot_tol, max_pivots)
        pivots += p
        infeasibility = float(cost1[basis] @ tab[:, -1])
        if infeasibility > feas_tol * max(1.0, float(np.abs(b).max(initial=0.0))):
            return LpSolution("infeasible", None, None, (), pivots, names)
        keep = np.ones(rows, bool)
        for r in range(rows):
            if basis[r] < width:
                continue
            candidates = np.flatnonzero(np.abs(tab[r, :width]) > pivot_tol)
            if candidates.size:
                _pivot(tab, r, int(candidates[0]))
                basis[r] = int(candidates[0])
                pivots += 1
            else:
                keep[r] = False  # redundant equality
        tab = tab[keep]
        basis = basis[keep]
        tab = np.delete(tab, np.s_[width:total], axis=1)

    obj = np.array(model.objectives[0].coefficients)
    sign = -1.0 if model.objectives[0].sense == "max" else 1.0
    cost = np.zeros(width)
    cost[:k] = sign * (obj @ T)
    status, p = _bland(tab, basis, cost, np.ones(width, bool), opt_tol, pivot_tol, max_pivots)
    pivots += p
    if status == "unbounded":
        return LpSolution("unbounded", None, None, (), pivots, names)

    z = np.zeros(width)
    z[basis] = tab[:, -1]
    x = offset + T @ z[:k]
    x.setflags(write=False)
    objective_value = float(obj @ x)
    parts = model.components or model.objectives
    per_objective = tuple(float(np.dot(o.coefficients, x)) for o in parts)
    return LpSolution("optimal", x, objective_value, per_objective, pivots, names)


def scalarize(model: LpModel, weights: Sequence[float]) -> LpModel:
    """Collapse a vector objective into one weighted sum.

    Positive weights make every optimum of the result Pareto-optimal for the
    original objectives.
    """
    weights = [float(w) for w in weights]
    objs = model.objectives
    if len(weights) != len(objs):
        raise ValueError(f"{len(weights)} weights given for {len(objs)} objectives")
    if any(not (w > 0 and math.isfinite(w)) for w in weights):
        raise ValueError(f"weights must be positive and finite, got {weights}")
    senses = {o.sense for o in objs}
    if len(senses) != 1:
        raise ValueError("cannot scalarize objectives with mixed senses")
    combined = np.zeros(len(model.variables))
    for w, o in zip(weights, objs):
        combined += w * np.asarray(o.coefficients)
    label = " + ".join(f"{w:g}*{o.name or i}" for i, (w, o) in enumerate(zip(weights, objs)))
    return LpModel(
        variables=model.variables,
        constraints=model.constraints,
        objectives=(Objective(tuple(combined), senses.pop(), label),),
        name=model.name,
        components=model.components or objs,
    )


def _as_vector(model: LpModel, assignment) -> np.ndarray:
    if isinstance(assignment, Mapping):
        missing = [v.name for v in model.variables if v.name not in assignment]
        if missing:
            raise KeyError(f"assignment misses {missing}")
        return np.array([float(assignment[v.name]) for v in model.variables])
    x = np.asarray(assignment, dtype=float)
    if x.shape != (len(model.variables),):
        raise ValueError(f"assignment has shape {x.shape}, expected ({len(model.variables)},)")
    return x


def constraint_residuals(model: LpModel, assignment) -> np.ndarray:
    """Signed violation per constraint row (positive means violated)."""
    x = _as_vector(model, assignment)
    A, rels, b = model.matrix()
    lhs = A @ x
    out = np.empty(len(rels))
    for i, rel in enumerate(rels):
        if rel == LE:
            out[i] = lhs[i] - b[i]
        elif rel == GE:
            out[i] = b[i] - lhs[i]
        else:
            out[i] = lhs[i] - b[i]
    return out


def check_feasible(model: LpModel, assignment, tol: float = FEAS_TOL) -> list[Violation]:
    """Every violated row or bound; an empty list means feasible within ``tol``."""
    x = _as_vector(model, assignment)
    report = []
    for i, (con, r) in enumerate(zip(model.constraints, constraint_residuals(model, x))):
        amount = abs(r) if con.relation == EQ else r
        if amount > tol:
            report.append(Violation("constraint", i, con.name, float(r)))
    for j, var in enumerate(model.variables):
        if var.lower - x[j] > tol:
            report.append(Violation("lower", j, var.name, float(var.lower - x[j])))
        if x[j] - var.upper > tol:
            report.append(Violation("upper", j, var.name, float(x[j] - var.upper)))
    return report
