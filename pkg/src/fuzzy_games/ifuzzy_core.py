"""I-fuzzy (intuitionistic fuzzy) statements ``x (IF)>~ a``.

Each statement carries a degree of acceptance ``mu`` and a separate degree
of rejection ``nu`` with ``mu + nu <= 1``.  Two encodings are supported:

* pessimistic: rejection vanishes before acceptance is complete, so there is
  a band ``[a - p + q, a]`` where ``nu == 0`` but ``mu < 1``;
* optimistic: acceptance vanishes before rejection is complete, so there is
  a band ``[a - p - q, a - p]`` where ``mu == 0`` but ``nu < 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable

import numpy as np

__all__ = [
    "Scenario",
    "IFuzzyPair",
    "IFuzzyTolerance",
    "pessimistic_pair",
    "optimistic_pair",
    "lesseq_reflection",
    "score",
    "ifuzzy_union",
    "ifuzzy_intersection",
    "ifuzzy_decision",
]

# floating-point dust allowed around the feasible region before rejecting
CLAMP_TOL = 1e-12


class Scenario(str, Enum):
    PESSIMISTIC = "pessimistic"
    OPTIMISTIC = "optimistic"


@dataclass(frozen=True)
class IFuzzyPair:
    """``(membership, non_membership)`` with both in [0, 1] and a sum at most 1."""

    membership: float
    non_membership: float

    def __post_init__(self):
        mu, nu = float(self.membership), float(self.non_membership)
        if not (np.isfinite(mu) and np.isfinite(nu)):
            raise ValueError(f"non-finite I-fuzzy pair ({mu}, {nu})")
        if mu < -CLAMP_TOL or mu > 1 + CLAMP_TOL or nu < -CLAMP_TOL or nu > 1 + CLAMP_TOL:
            raise ValueError(f"I-fuzzy degrees must lie in [0, 1], got ({mu}, {nu})")
        mu, nu = min(max(mu, 0.0), 1.0), min(max(nu, 0.0), 1.0)
        excess = mu + nu - 1.0
        if excess > CLAMP_TOL:
            raise ValueError(f"membership + non-membership exceeds 1: ({mu}, {nu})")
        if excess > 0:
            nu = 1.0 - mu
        object.__setattr__(self, "membership", mu)
        object.__setattr__(self, "non_membership", nu)

    @property
    def hesitation(self) -> float:
        return 1.0 - self.membership - self.non_membership

    def __iter__(self):
        return iter((self.membership, self.non_membership))


@dataclass(frozen=True)
class IFuzzyTolerance:
    """Acceptance tolerance ``accept`` (p) and rejection tolerance ``reject`` (q)."""

    accept: float
    reject: float
    scenario: Scenario = Scenario.PESSIMISTIC
    degenerate: bool = False

    def __post_init__(self):
        p, q = float(self.accept), float(self.reject)
        object.__setattr__(self, "accept", p)
        object.__setattr__(self, "reject", q)
        object.__setattr__(self, "scenario", Scenario(self.scenario))
        if not (np.isfinite(p) and np.isfinite(q)):
            raise ValueError("tolerances must be finite")
        if self.degenerate:
            if self.scenario is not Scenario.PESSIMISTIC or not (p > 0 and q == p):
                raise ValueError("a degenerate tolerance is pessimistic with reject == accept > 0")
        elif self.scenario is Scenario.PESSIMISTIC:
            if not 0 < q < p:
                raise ValueError(f"pessimistic tolerances need 0 < reject < accept, got p={p}, q={q}")
        elif not (p > 0 and q > 0):
            raise ValueError(f"optimistic tolerances must be positive, got p={p}, q={q}")

    @classmethod
    def pessimistic(cls, accept: float, reject: float) -> "IFuzzyTolerance":
        return cls(accept, reject, Scenario.PESSIMISTIC)

    @classmethod
    def optimistic(cls, accept: float, reject: float) -> "IFuzzyTolerance":
        return cls(accept, reject, Scenario.OPTIMISTIC)

    @classmethod
    def degenerate_fuzzy(cls, accept: float) -> "IFuzzyTolerance":
        """Pessimistic shape with ``reject == accept``: collapses to an ordinary fuzzy set."""
        return cls(accept, accept, Scenario.PESSIMISTIC, degenerate=True)


def _ramp(t: float) -> float:
    return float(np.clip(t, 0.0, 1.0))


def pessimistic_pair(x: float, a: float, tol: IFuzzyTolerance) -> IFuzzyPair:
    if tol.scenario is not Scenario.PESSIMISTIC:
        raise ValueError("pessimistic_pair needs a pessimistic tolerance")
    p, q = tol.accept, tol.reject
    mu = _ramp(1.0 - (a - x) / p)
    nu = _ramp(1.0 - (x - a + p) / q)
    return IFuzzyPair(mu, nu)


def optimistic_pair(x: float, a: float, tol: IFuzzyTolerance) -> IFuzzyPair:
    if tol.scenario is not Scenario.OPTIMISTIC:
        raise ValueError("optimistic_pair needs an optimistic tolerance")
    p, q = tol.accept, tol.reject
    mu = _ramp(1.0 - (a - x) / p)
    nu = _ramp(1.0 - (x - a + p + q) / (p + q))
    return IFuzzyPair(mu, nu)


def lesseq_reflection(x: float, a: float, tol: IFuzzyTolerance) -> IFuzzyPair:
    """Evaluate ``x (IF)<~ a`` as ``-x (IF)>~ -a`` under the tolerance's scenario."""
    if tol.scenario is Scenario.PESSIMISTIC:
        return pessimistic_pair(-x, -a, tol)
    return optimistic_pair(-x, -a, tol)


def score(pair: IFuzzyPair) -> float:
    return pair.membership - pair.non_membership


def ifuzzy_union(a: IFuzzyPair, b: IFuzzyPair) -> IFuzzyPair:
    return IFuzzyPair(max(a.membership, b.membership), min(a.non_membership, b.non_membership))


def ifuzzy_intersection(a: IFuzzyPair, b: IFuzzyPair) -> IFuzzyPair:
    return IFuzzyPair(min(a.membership, b.membership), max(a.non_membership, b.non_membership))


def ifuzzy_decision(goals: Iterable[IFuzzyPair], constraints: Iterable[IFuzzyPair] = ()) -> IFuzzyPair:
    """Intersection of every goal and constraint: (min membership, max non-membership)."""
    pairs = [*goals, *constraints]
    if not pairs:
        raise ValueError("an I-fuzzy decision needs at least one goal or constraint")
    return IFuzzyPair(min(p.membership for p in pairs), max(p.non_membership for p in pairs))
