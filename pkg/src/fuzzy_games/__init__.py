"""Two-person zero-sum matrix games with fuzzy goals, fuzzy payoffs and I-fuzzy goals."""
from .fuzzy_core import (
    CutSet,
    Interval,
    RankingMatrix,
    TriangularFuzzyNumber,
    alpha_cut,
    constraint_membership,
    defuzzify,
    goal_membership,
    ranking_matrix,
    standard_order_leq,
)
from .game_solvers import (
    CrispGame,
    FuzzyGoalsSpec,
    FuzzyPayoffSpec,
    GameSolution,
    IFuzzyGoalsSpec,
    PossSpec,
    crisp_value,
    solve_fuzzy_goals,
    solve_fuzzy_payoffs,
    solve_ifuzzy_goals,
    solve_poss,
    solve_poss_player2,
)
from .gamefile import GameFile, GameFileError, format_game_file, parse_game_file
from .ifuzzy_core import IFuzzyPair, IFuzzyTolerance, score
from .lp_engine import LpModel, LpSolution, ModelBuilder, check_feasible, scalarize, solve
from .report import render_report

__version__ = "0.1.0"
