# %% [markdown]
# # Fuzzy goals
#
# Each player has a payoff aspiration and a tolerance.  Player I is fully
# satisfied once the guaranteed payoff reaches `v0` and not at all below
# `v0 - p0`; player II mirrors this with `w0` and `q0`.  Each side becomes a
# small linear program that maximizes its satisfaction level.

# %%
import numpy as np

from fuzzy_games import CrispGame, FuzzyGoalsSpec, crisp_value, solve_fuzzy_goals

A = np.array([[1, 3, 0], [4, 7, 2], [3, 5, 6]])
spec = FuzzyGoalsSpec(CrispGame(A), v0=5 / 3, w0=3 / 2, p0=2, q0=3)
sol = solve_fuzzy_goals(spec)

print("lambda* =", round(sol.player1.levels["lambda"], 4), " x* =", sol.player1.strategy.round(4))
print("eta*    =", round(sol.player2.levels["eta"], 4), " y* =", sol.player2.strategy.round(4))

# %% [markdown]
# Both levels follow from the ordinary game value: the satisfaction is a
# clamped linear function of how far `v(A)` sits from the aspiration.

# %%
v = crisp_value(A).value
print("v(A) =", v)
print("1 + (v - v0)/p0 =", 1 + (v - spec.v0) / spec.p0, "(clamped to 1)")
print("1 + (w0 - v)/q0 =", 1 + (spec.w0 - v) / spec.q0)
print("oracle checks:", sol.checks)

# %% [markdown]
# Aspire too high and the program has no feasible point at all.

# %%
greedy = solve_fuzzy_goals(FuzzyGoalsSpec(CrispGame(A), v0=20, w0=3 / 2, p0=2, q0=3))
print(greedy.player1.status, greedy.player1.reason)
