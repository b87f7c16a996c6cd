# %% [markdown]
# # Fuzzy payoffs
#
# Payoffs are triangular fuzzy numbers `(lower, center, upper)`.  Replacing
# every number by its mean turns the game into an ordinary linear program.
# The solver writes the constraints in units of three means (plain sums of
# the triples) so the coefficients stay integral.

# %%
from fuzzy_games import FuzzyPayoffSpec, solve_fuzzy_payoffs
from fuzzy_games.report import render_report

payoff = [
    [(175, 180, 190), (150, 156, 158)],
    [(80, 90, 100), (175, 180, 190)],
]
spec = FuzzyPayoffSpec(payoff, p_margin=(0.08, 0.10, 0.11), q_margin=(0.14, 0.15, 0.17))
print(spec.triple_sums())

# %%
sol = solve_fuzzy_payoffs(spec)
print(render_report(sol))

# %% [markdown]
# The value found for player I is the crisp value of the mean matrix plus
# the mean of the margin.  Player II's is the crisp value minus its margin.

# %%
print(sol.oracle_value + (0.08 + 0.10 + 0.11) / 3, sol.player1.value)
print(sol.oracle_value - (0.14 + 0.15 + 0.17) / 3, sol.player2.value)
