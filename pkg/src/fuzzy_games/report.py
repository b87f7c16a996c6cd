"""Rendering solved games as text or ``key=value`` reports, and reading them back."""
from __future__ import annotations

import re

import numpy as np

from .fuzzy_core import TriangularFuzzyNumber
from .game_solvers import GameSolution, PlayerResult
from .lp_engine import check_feasible

__all__ = ["report_fields", "render_report", "parse_report", "FORMATS"]

FORMATS = ("text", "machine")
DEFAULT_PRECISION = 4

_SYMBOLS = {
    "lambda": "λ*",
    "eta": "η*",
    "alpha": "α*",
    "beta": "β*",
    "delta": "δ*",
}
_VALUE_LABELS = {
    ("fuzzy-payoffs", 1): "V",
    ("fuzzy-payoffs", 2): "W",
    ("poss", 1): "security level",
    ("poss", 2): "security level",
}
_HEADINGS = {"player1": "Player I", "player2": "Player II"}


def _num(x: float, precision: int) -> str:
    s = f"{float(x):.{precision}f}"
    if re.fullmatch(r"-0\.?0*", s):
        s = s[1:]
    return s


def _vec(values, precision: int) -> str:
    return ",".join(_num(v, precision) for v in values)


def _player_fields(sol: GameSolution, k: int, p: PlayerResult, precision: int, rounded: list):
    prefix = f"player{k}"
    yield f"{prefix}.status", p.status
    if not p.optimal:
        yield f"{prefix}.reason", p.reason or p.status
        return
    yield f"{prefix}.strategy", _vec(p.strategy, precision)
    for name, level in p.levels.items():
        yield f"{prefix}.{name}", _num(level, precision)
        rounded.append((f"{prefix}.{name}", level))
    if isinstance(p.value, TriangularFuzzyNumber):
        yield f"{prefix}.value", _vec(p.value.as_tuple(), precision)
        yield f"{prefix}.spreads", _vec(p.value.spreads(), precision)
    elif p.value is not None:
        yield f"{prefix}.value", _num(p.value, precision)
        rounded.append((f"{prefix}.value", p.value))
    if "decision" in p.details:
        yield f"{prefix}.decision", _vec(tuple(p.details["decision"]), precision)
        yield f"{prefix}.score", _num(p.details["score"], precision)


def report_fields(sol: GameSolution, precision: int = DEFAULT_PRECISION) -> list[tuple[str, str]]:
    """Ordered ``(key, value)`` pairs shared by both report formats."""
    if precision < 0:
        raise ValueError("precision must be non-negative")
    rounded: list[tuple[str, float]] = []
    fields = [("variant", sol.variant), ("status", sol.status), ("precision", str(precision))]
    weights = sol.inputs.get("weights")
    if weights is not None:
        fields.append(("weights", ",".join(repr(float(w)) for w in weights)))
    for k, p in enumerate(sol.players, start=1):
        fields += list(_player_fields(sol, k, p, precision, rounded))
    if sol.oracle_value is not None:
        fields.append(("oracle.value", _num(sol.oracle_value, precision)))
    checks = dict(sol.checks)
    warnings = list(sol.warnings)
    for k, p in enumerate(sol.players, start=1):
        # re-verify the LP point behind every reported strategy
        if p.optimal and p.model is not None and "lp_x" in p.details:
            violations = check_feasible(p.model, p.details["lp_x"], tol=1e-7)
            checks[f"player{k}.feasible"] = not violations
            warnings += [f"player{k} violates {v.kind} {v.name or v.index} by {v.amount:.3g}" for v in violations]
    for name, ok in checks.items():
        fields.append((f"checks.{name}", "ok" if ok else "FAILED"))

    for key, value in rounded:
        shown = _num(value, precision)
        fine = _num(value, 6)
        if abs(float(shown) - float(fine)) > 0.0:
            warnings.append(f"{key} = {fine} is shown rounded to {precision} decimals as {shown}")
    fields += [(f"warnings.{i}", w) for i, w in enumerate(warnings, start=1)]
    return fields


def render_report(sol: GameSolution, format: str = "text", precision: int = DEFAULT_PRECISION) -> str:
    fields = report_fields(sol, precision)
    if format == "machine":
        return "".join(f"{k}={v}\n" for k, v in fields)
    if format != "text":
        raise ValueError(f"unknown report format {format!r}")

    out = []
    section = None
    for key, value in fields:
        head, _, name = key.partition(".")
        if head in _HEADINGS:
            if section != head:
                out.append(_HEADINGS[head])
                section = head
            k = int(head[-1])
            if name == "status" and value != "optimal":
                reason = dict(fields).get(f"{head}.reason", value)
                out.append(f"  status={value} player={k} reason={reason}")
            elif name == "status" or name == "reason":
                continue
            elif name == "strategy":
                out.append(f"  strategy = ({value.replace(',', ', ')})")
            elif name == "value":
                label = _VALUE_LABELS.get((sol.variant, k), "value")
                shown = f"({value.replace(',', ', ')})" if "," in value else value
                out.append(f"  {label} = {shown}")
            else:
                label = _SYMBOLS.get(name, name)
                shown = f"({value.replace(',', ', ')})" if "," in value else value
                out.append(f"  {label} = {shown}")
            continue
        section = None
        if key == "variant":
            out.append(f"game: {value}")
        elif key == "oracle.value":
            out.append(f"crisp oracle value = {value}")
        elif head == "warnings":
            if name == "1":
                out.append("warnings:")
            out.append(f"  {name}. {value}")
        else:
            out.append(f"{key}: {value}")
    return "\n".join(out) + "\n"


def parse_report(text: str) -> dict[str, str]:
    """Read either report format back into its ``key -> value`` mapping."""
    lines = [ln.rstrip("\r") for ln in text.split("\n") if ln.strip()]
    if lines and all(re.fullmatch(r"[A-Za-z0-9_.]+=.*", ln) for ln in lines):
        return dict(ln.split("=", 1) for ln in lines)

    fields: dict[str, str] = {}
    labels = {v: k for k, v in _SYMBOLS.items()}
    section = None
    for ln in lines:
        if ln in _HEADINGS.values():
            section = next(k for k, v in _HEADINGS.items() if v == ln)
            fields[f"{section}.status"] = "optimal"
            continue
        if ln.startswith("  ") and section:
            body = ln.strip()
            if body.startswith("status="):
                parts = dict(item.split("=", 1) for item in body.split())
                fields[f"{section}.status"] = parts["status"]
                fields[f"{section}.reason"] = parts.get("reason", "")
                continue
            label, _, value = body.partition(" = ")
            value = value.strip("()").replace(", ", ",")
            if label == "strategy":
                key = "strategy"
            elif label in labels:
                key = labels[label]
            elif label in ("value", "V", "W", "security level"):
                key = "value"
            else:
                key = label
            fields[f"{section}.{key}"] = value
            continue
        section = None
        if ln.startswith("game: "):
            fields["variant"] = ln[len("game: ") :]
        elif ln.startswith("crisp oracle value = "):
            fields["oracle.value"] = ln.rsplit(" ", 1)[1]
        elif ln == "warnings:":
            section = None
        elif re.match(r"  \d+\. ", ln):
            num, _, msg = ln.strip().partition(". ")
            fields[f"warnings.{num}"] = msg
        elif ": " in ln:
            k, _, v = ln.partition(": ")
            fields[k] = v
    return fields


def strategy_from_field(value: str) -> np.ndarray:
    return np.array([float(v) for v in value.split(",")])
