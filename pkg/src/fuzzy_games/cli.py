"""Command-line interface: ``fuzzgame solve|oracle|check``.

Exit codes: 0 success, 1 infeasible/unbounded game or failed check,
2 usage or input error.
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import game_solvers as gs
from .gamefile import GameFile, GameFileError, parse_game_file
from .lp_engine import constraint_residuals, solve
from .report import FORMATS, parse_report, render_report, strategy_from_field

__all__ = ["main", "solve_game_file", "check_report"]

EXIT_OK, EXIT_INFEASIBLE, EXIT_INPUT = 0, 1, 2


def solve_game_file(game: GameFile, weights=None, seed: int = 0) -> gs.GameSolution:
    spec = game.to_spec(weights)
    if game.variant == "crisp":
        return gs.solve_crisp(spec)
    if game.variant == "fuzzy-goals":
        return gs.solve_fuzzy_goals(spec)
    if game.variant == "fuzzy-payoffs":
        return gs.solve_fuzzy_payoffs(spec)
    if game.variant == "poss":
        return gs.solve_poss_game(spec, seed=seed)
    return gs.solve_ifuzzy_goals(spec)


def _assignment(model, strategy, fields, prefix):
    k = len(strategy)
    values = {}
    for idx, var in enumerate(model.variables):
        if idx < k:
            values[var.name] = strategy[idx]
        elif f"{prefix}.{var.name}" in fields:
            values[var.name] = float(fields[f"{prefix}.{var.name}"])
        elif var.name in ("V", "W"):
            values[var.name] = float(fields[f"{prefix}.value"])
        else:
            raise KeyError(f"{prefix}.{var.name}")
    return values


def check_report(game: GameFile, report_text: str, seed: int = 0) -> list[str]:
    """Problems found when re-verifying a report against its game; empty means valid.

    Reported numbers are rounded, so every comparison allows half a unit in
    the last printed digit, propagated through the row coefficients.
    """
    fields = parse_report(report_text)
    problems = []
    try:
        precision = int(fields.get("precision", "4"))
    except ValueError:
        return [f"bad precision field {fields.get('precision')!r}"]
    half = 0.5 * 10.0 ** -precision
    if fields.get("variant") != game.variant:
        return [f"report is for variant {fields.get('variant')!r}, game file is {game.variant!r}"]
    weights = None
    if "weights" in fields:
        weights = [float(w) for w in fields["weights"].split(",")]
    fresh = solve_game_file(game, weights, seed)

    for k, player in enumerate(fresh.players, start=1):
        prefix = f"player{k}"
        status = fields.get(f"{prefix}.status")
        if status != player.status:
            problems.append(f"{prefix}: reported status {status!r}, re-solve gives {player.status!r}")
            continue
        if not player.optimal:
            continue
        try:
            x = strategy_from_field(fields[f"{prefix}.strategy"])
        except (KeyError, ValueError) as exc:
            problems.append(f"{prefix}: unreadable strategy ({exc})")
            continue
        if len(x) != len(player.strategy):
            problems.append(f"{prefix}: strategy has {len(x)} entries, expected {len(player.strategy)}")
            continue
        if np.any(x < 0) or abs(x.sum() - 1.0) > len(x) * half + 1e-9:
            problems.append(f"{prefix}: strategy {x} is not a probability vector")

        if game.variant == "crisp":
            A = game.crisp_matrix()
            guaranteed = (x @ A).min() if k == 1 else (A @ x).max()
            if abs(guaranteed - fresh.oracle_value) > half * np.abs(A).sum() + 1e-9:
                problems.append(f"{prefix}: strategy guarantees {guaranteed}, game value is {fresh.oracle_value}")
            continue
        if game.variant == "poss":
            res = player.details["poss"]
            spec = game.to_spec(weights)
            payoff = spec.payoff if k == 1 else gs._negated_transpose(spec.payoff)
            sec = gs.security_matrix(payoff, spec.cuts, x).entries
            if k == 2:
                sec = -sec[:, ::-1]
            scale = half * max(float(np.abs(res.security.entries).max()), 1.0) * len(x)
            for (i, j), value in np.ndenumerate(sec):
                reported = float(fields.get(f"{prefix}.security{i + 1}{j + 1}", "nan"))
                if not abs(reported - value) <= scale + half:
                    problems.append(f"{prefix}: security{i + 1}{j + 1} reported {reported}, strategy gives {value}")
            if not np.allclose(sec, res.security.entries, atol=scale + half):
                problems.append(f"{prefix}: security level differs from the re-solved optimum")
            continue

        model = player.model
        try:
            values = _assignment(model, x, fields, prefix)
        except (KeyError, ValueError) as exc:
            problems.append(f"{prefix}: missing or unreadable field {exc}")
            continue
        residuals = constraint_residuals(model, values)
        A, _, _ = model.matrix()
        slack = 1e-9 + half * np.abs(A).sum(axis=1)
        for con, r, s in zip(model.constraints, residuals, slack):
            amount = abs(r) if con.relation == "=" else r
            if amount > s:
                problems.append(f"{prefix}: constraint {con.name} violated by {r:.3g}")
        objective = model.objectives[0]
        reported = float(np.dot(objective.coefficients, [values[n] for n in model.names]))
        best = float(np.dot(objective.coefficients, solve(model).x))
        if abs(reported - best) > 2 * half + 1e-9:
            problems.append(f"{prefix}: objective {reported} differs from optimum {best}")
    return problems


def _parse_weights(text: str) -> list[float]:
    try:
        weights = [float(w) for w in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"weights must be comma-separated numbers, got {text!r}") from None
    if any(not w > 0 for w in weights):
        raise argparse.ArgumentTypeError("weights must be positive")
    return weights


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--weights", type=_parse_weights, help="POSS scalarization weights w1,w2,...")
    common.add_argument("--precision", type=int, default=4, help="decimals in reports (default 4)")
    common.add_argument("--format", choices=FORMATS, default="text", help="report format")
    common.add_argument("--seed", type=int, default=0, help="seed for sampled dominance checks")

    parser = argparse.ArgumentParser(prog="fuzzgame", description="Solve fuzzy two-person zero-sum matrix games.")
    sub = parser.add_subparsers(dest="command", required=True)
    p = sub.add_parser("solve", parents=[common], help="solve a game file")
    p.add_argument("file")
    p = sub.add_parser("oracle", parents=[common], help="crisp minimax value of the (defuzzified) payoff")
    p.add_argument("file")
    p = sub.add_parser("check", parents=[common], help="re-verify a report produced by solve")
    p.add_argument("file")
    p.add_argument("report")
    return parser


def _load(path: str) -> GameFile:
    return parse_game_file(Path(path).read_bytes())


def main(argv=None) -> int:
    parser = _parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    if args.precision < 0 or args.precision > 15:
        print("fuzzgame: --precision must be between 0 and 15", file=sys.stderr)
        return EXIT_INPUT

    try:
        game = _load(args.file)
        if args.command == "oracle":
            v, x, y = gs.crisp_value(game.crisp_matrix())
            fmt = lambda z: f"{z:.{args.precision}f}"
            if args.format == "machine":
                print(f"oracle.value={fmt(v)}")
                print(f"player1.strategy={','.join(map(fmt, x))}")
                print(f"player2.strategy={','.join(map(fmt, y))}")
            else:
                print(f"value = {fmt(v)}")
                print(f"Player I strategy = ({', '.join(map(fmt, x))})")
                print(f"Player II strategy = ({', '.join(map(fmt, y))})")
            return EXIT_OK
        if args.command == "check":
            report = Path(args.report).read_text(encoding="utf-8")
            problems = check_report(game, report, seed=args.seed)
            for msg in problems:
                print(msg)
            print("report OK" if not problems else f"{len(problems)} problem(s)")
            return EXIT_OK if not problems else EXIT_INFEASIBLE
        solution = solve_game_file(game, args.weights, args.seed)
    except GameFileError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (OSError, UnicodeDecodeError, ValueError) as exc:
        print(f"fuzzgame: {exc}", file=sys.stderr)
        return EXIT_INPUT

    sys.stdout.write(render_report(solution, args.format, args.precision))
    return EXIT_OK if solution.status == "optimal" else EXIT_INFEASIBLE


if __name__ == "__main__":
    sys.exit(main())
