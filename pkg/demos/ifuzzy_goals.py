# %% [markdown]
# # Intuitionistic fuzzy goals
#
# Here each payoff carries two grades: how acceptable it is and, separately,
# how firmly it is rejected.  Under the pessimistic reading rejection fades
# out before acceptance is complete.  Player I maximizes the smallest
# acceptance minus the largest rejection over all columns.

# %%
import numpy as np

from fuzzy_games import CrispGame, IFuzzyGoalsSpec, IFuzzyTolerance, solve_ifuzzy_goals
from fuzzy_games.ifuzzy_core import pessimistic_pair

tol = IFuzzyTolerance.pessimistic(1.0, 0.5)
for z in np.linspace(2.5, 4.5, 9):
    mu, nu = pessimistic_pair(z, 4.0, tol)
    print(f"payoff {z:4.2f}: accept {mu:.3f}  reject {nu:.3f}")

# %%
spec = IFuzzyGoalsSpec(CrispGame([[4, 2], [3, 6]]), U0=4, V0=4, p0=1, q0=0.5, s0=1, t0=0.5)
sol = solve_ifuzzy_goals(spec)
p1 = sol.player1
print("alpha* =", round(p1.levels["alpha"], 4), " beta* =", round(p1.levels["beta"], 4))
print("x* =", p1.strategy.round(4), " decision pair:", p1.details["decision"], " score:", round(p1.details["score"], 4))

# %% [markdown]
# With game value 3.6 and aspiration 4 the acceptance ramp of width 1
# gives 0.6, while the rejection ramp has already reached zero.
