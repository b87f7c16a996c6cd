# %% [markdown]
# # Pareto-optimal security strategies
#
# Instead of collapsing fuzzy payoffs to one number we keep their alpha-cuts.
# For each cut level and each endpoint a strategy guarantees some worst-case
# payoff; a good strategy is one whose vector of guarantees cannot be improved
# everywhere at once.  A positively weighted sum of the guarantees, maximized
# by linear programming, finds such a strategy.

# %%
import numpy as np

from fuzzy_games import CutSet, PossSpec, solve_poss, solve_poss_player2
from fuzzy_games.game_solvers import find_dominating

payoff = [
    [(175, 180, 190), (150, 156, 158)],
    [(80, 90, 100), (175, 180, 190)],
]
spec = PossSpec(payoff, CutSet((0, 1)))
x, security, level = solve_poss(spec)
print("x* =", x.round(4))
print("security matrix (rows: alpha = 0, 1):")
print(security.entries.round(4))
print("as a triangular number:", level, " spreads:", np.round(level.spreads(), 4))

# %% [markdown]
# Different weights may pick different strategies, yet every one of them
# survives the brute-force dominance check over a fine grid of strategies.

# %%
rng = np.random.default_rng(0)
for _ in range(3):
    w = tuple(float(v) for v in rng.uniform(0.1, 3, 3).round(2))
    res = solve_poss(PossSpec(payoff, CutSet((0, 1)), weights=w))
    dominated = find_dominating(payoff, spec.cuts, res.security) is not None
    print(w, res.strategy.round(4), "dominated" if dominated else "non-dominated")

# %% [markdown]
# Player II's guarantees are upper bounds on what it pays.

# %%
res = solve_poss_player2(spec)
print("y* =", res.strategy.round(4))
print(res.security.entries.round(4))
