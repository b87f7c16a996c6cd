# %% [markdown]
# # The simplex engine
#
# All game programs run on a small dense two-phase simplex with Bland's
# anti-cycling rule.  Models are built with named variables and rows.

# %%
import math

from fuzzy_games.lp_engine import EQ, GE, LE, ModelBuilder, check_feasible, solve

A = [[4, 2], [3, 6]]
b = ModelBuilder("minimax")
x = b.add_vars("x", 2)
v = b.add_var("v", lower=-math.inf)
for j in range(2):
    b.add_constraint({x[0]: A[0][j], x[1]: A[1][j], v: -1}, GE, 0, f"col{j + 1}")
b.add_constraint({x[0]: 1, x[1]: 1}, EQ, 1, "simplex")
b.add_objective({v: 1}, "max")
model = b.build()

sol = solve(model)
print(sol.status, sol.values, "pivots:", sol.pivots)

# %% [markdown]
# Beale's degenerate example cycles forever under the textbook pivot rule.
# Bland's rule gets through it.

# %%
b = ModelBuilder("beale")
y = b.add_vars("x", 4)
b.add_constraint({y[0]: 0.25, y[1]: -60, y[2]: -1 / 25, y[3]: 9}, LE, 0)
b.add_constraint({y[0]: 0.5, y[1]: -90, y[2]: -1 / 50, y[3]: 3}, LE, 0)
b.add_constraint({y[2]: 1}, LE, 1)
b.add_objective({y[0]: -0.75, y[1]: 150, y[2]: -1 / 50, y[3]: 6}, "min")
beale = solve(b.build())
print(beale.status, beale.objective_value, "pivots:", beale.pivots)

# %% [markdown]
# `check_feasible` lists every violated row of an arbitrary assignment.

# %%
for violation in check_feasible(model, {"x1": 0.7, "x2": 0.4, "v": 4.0}):
    print(violation)
