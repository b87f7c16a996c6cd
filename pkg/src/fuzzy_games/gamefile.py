"""Plain-text game description files.

A file is a list of ``key value`` lines with ``#`` comments.  The payoff
matrix follows a bare ``payoff`` line, one matrix row per line; fuzzy
entries are written as parenthesized triples::

    # fuzzy payoffs, two strategies each
    variant fuzzy-payoffs
    m 2
    n 2
    payoff
    (175, 180, 190) (150, 156, 158)
    (80, 90, 100)   (175, 180, 190)
    p (0.08, 0.10, 0.11)
    q (0.14, 0.15, 0.17)

Numbers may be decimals or fractions such as ``5/3``.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .fuzzy_core import CutSet, TriangularFuzzyNumber
from .game_solvers import CrispGame, FuzzyGoalsSpec, FuzzyPayoffSpec, IFuzzyGoalsSpec, PossSpec

__all__ = ["GameFile", "GameFileError", "parse_game_file", "format_game_file", "VARIANTS"]

SCALAR, TRIPLE, LIST = "scalar", "triple", "list"

# variant -> (fuzzy payoff?, {key: (kind, required)})
VARIANTS: dict[str, tuple[bool, dict[str, tuple[str, bool]]]] = {
    "crisp": (False, {}),
    "fuzzy-goals": (False, {k: (SCALAR, True) for k in ("v0", "w0", "p0", "q0")}),
    "fuzzy-payoffs": (True, {"p": (TRIPLE, True), "q": (TRIPLE, True)}),
    "poss": (True, {"cuts": (LIST, True), "weights": (LIST, False)}),
    "ifuzzy-goals": (False, {k: (SCALAR, True) for k in ("U0", "V0", "p0", "q0", "s0", "t0")}),
}
HEADER_KEYS = ("variant", "m", "n")
MAX_DIM = 10_000

_DECIMAL = re.compile(r"[+-]?(?:\d+(?:\.\d*)?|\.\d+)(?:[eE][+-]?\d{1,3})?")
_FRACTION = re.compile(r"([+-]?\d{1,30})/(\d{1,30})")


class GameFileError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.message, self.line, self.column = message, line, column
        where = f"line {line}, col {column}: " if line else ""
        super().__init__(where + message)


@dataclass(eq=False)
class GameFile:
    variant: str
    m: int
    n: int
    payoff: list[list]  # floats, or TriangularFuzzyNumber for fuzzy variants
    params: dict = field(default_factory=dict)

    def __eq__(self, other) -> bool:
        if not isinstance(other, GameFile):
            return NotImplemented
        return (self.variant, self.m, self.n, self.payoff, self.params) == (
            other.variant,
            other.m,
            other.n,
            other.payoff,
            other.params,
        )

    @property
    def fuzzy(self) -> bool:
        return VARIANTS[self.variant][0]

    def crisp_matrix(self) -> np.ndarray:
        """Crisp payoff, or the defuzzified (mean) matrix for fuzzy variants."""
        if self.fuzzy:
            return np.array([[sum(a.as_tuple()) / 3.0 for a in row] for row in self.payoff])
        return np.array(self.payoff, dtype=float)

    def to_spec(self, weights=None):
        """Solver spec for this file; ``weights`` overrides the file's POSS weights."""
        p = self.params
        if self.variant == "crisp":
            return CrispGame(self.payoff)
        if self.variant == "fuzzy-goals":
            return FuzzyGoalsSpec(CrispGame(self.payoff), p["v0"], p["w0"], p["p0"], p["q0"])
        if self.variant == "fuzzy-payoffs":
            return FuzzyPayoffSpec(self.payoff, p["p"], p["q"])
        if self.variant == "poss":
            w = weights if weights is not None else p.get("weights")
            return PossSpec(self.payoff, CutSet(p["cuts"]), None if w is None else tuple(w))
        return IFuzzyGoalsSpec(CrispGame(self.payoff), p["U0"], p["V0"], p["p0"], p["q0"], p["s0"], p["t0"])


def _number(token: str, line: int, col: int) -> float:
    if len(token) > 64:
        raise GameFileError(f"number too long: {token[:20]}...", line, col)
    if _DECIMAL.fullmatch(token):
        value = float(token)
    elif m := _FRACTION.fullmatch(token):
        den = int(m.group(2))
        if den == 0:
            raise GameFileError(f"division by zero in {token!r}", line, col)
        value = float(Fraction(int(m.group(1)), den))
    else:
        raise GameFileError(f"not a number: {token!r}", line, col)
    if not math.isfinite(value):
        raise GameFileError(f"number out of range: {token!r}", line, col)
    return value


def _triple(body: str, line: int, col: int) -> TriangularFuzzyNumber:
    parts = body.split(",")
    if len(parts) != 3:
        raise GameFileError(f"a fuzzy triple needs 3 numbers, got {len(parts)}", line, col)
    values = [_number(p.strip(), line, col) for p in parts]
    if values[0] > values[1]:
        raise GameFileError(f"invalid fuzzy triple: lower > center ({values[0]:g} > {values[1]:g})", line, col)
    if values[1] > values[2]:
        raise GameFileError(f"invalid fuzzy triple: center > upper ({values[1]:g} > {values[2]:g})", line, col)
    return TriangularFuzzyNumber(*values)


def _tokens(text: str, line: int, offset: int):
    """Yield ``(value, column)`` for numbers and parenthesized triples on one line."""
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace() or ch == ",":
            pos += 1
            continue
        col = offset + pos + 1
        if ch == "(":
            end = text.find(")", pos)
            if end < 0:
                raise GameFileError("unclosed '('", line, col)
            yield _triple(text[pos + 1 : end], line, col), col
            pos = end + 1
        elif ch == ")":
            raise GameFileError("unexpected ')'", line, col)
        else:
            end = pos
            while end < len(text) and not (text[end].isspace() or text[end] in "(),"):
                end += 1
            yield _number(text[pos:end], line, col), col
            pos = end


def _is_row(text: str) -> bool:
    return bool(text) and (text[0] in "(+-." or text[0].isdigit())


def parse_game_file(text: str | bytes) -> GameFile:
    """Parse a game description; every problem raises :class:`GameFileError`."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise GameFileError(f"not valid UTF-8: {exc.reason} at byte {exc.start}") from None
    if text.startswith("﻿"):
        text = text[1:]

    entries: dict[str, tuple[str, int, int]] = {}  # key -> (raw value, line, value column)
    rows: list[tuple[list, int]] = []
    payoff_line = 0
    in_payoff = False
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.rstrip("\r").split("#", 1)[0]
        stripped = line.strip()
        if not stripped:
            continue
        indent = len(line) - len(line.lstrip())
        if in_payoff and _is_row(stripped):
            rows.append(([v for v, _ in _tokens(stripped, lineno, indent)], lineno))
            continue
        in_payoff = False
        key, *tail = stripped.split(None, 1)
        rest = tail[0] if tail else ""
        if not re.fullmatch(r"[A-Za-z][A-Za-z0-9_-]*", key):
            raise GameFileError(f"expected a key, got {key[:20]!r}", lineno, indent + 1)
        if key in entries or (key == "payoff" and payoff_line):
            raise GameFileError(f"duplicate key {key!r}", lineno, indent + 1)
        if key == "payoff":
            if rest.strip():
                raise GameFileError("payoff rows start on the line after 'payoff'", lineno, indent + 1)
            payoff_line, in_payoff = lineno, True
            continue
        value_col = line.index(rest, indent + len(key)) + 1 if rest else 0
        if not rest.strip():
            raise GameFileError(f"key {key!r} has no value", lineno, indent + 1)
        entries[key] = (rest.strip(), lineno, value_col)

    for key in HEADER_KEYS:
        if key not in entries:
            raise GameFileError(f"missing key {key!r}")
    variant, vline, vcol = entries["variant"]
    if variant not in VARIANTS:
        raise GameFileError(f"unknown variant {variant!r} (expected one of {', '.join(VARIANTS)})", vline, vcol)
    fuzzy, schema = VARIANTS[variant]

    dims = {}
    for key in ("m", "n"):
        raw, line, col = entries[key]
        if not re.fullmatch(r"\d{1,6}", raw) or not 1 <= int(raw) <= MAX_DIM:
            raise GameFileError(f"{key} must be a positive integer, got {raw[:20]!r}", line, col)
        dims[key] = int(raw)
    m, n = dims["m"], dims["n"]

    if not payoff_line:
        raise GameFileError("missing key 'payoff'")
    if len(rows) != m:
        line = rows[m][1] if len(rows) > m else payoff_line
        raise GameFileError(f"payoff has {len(rows)} rows, expected m = {m}", line, 1)
    payoff = []
    for values, line in rows:
        if len(values) != n:
            raise GameFileError(f"payoff row has {len(values)} entries, expected n = {n}", line, 1)
        row = []
        for v in values:
            if fuzzy:
                row.append(v if isinstance(v, TriangularFuzzyNumber) else TriangularFuzzyNumber.crisp(v))
            elif isinstance(v, TriangularFuzzyNumber):
                raise GameFileError(f"variant {variant} takes crisp payoffs, found a fuzzy triple", line, 1)
            else:
                row.append(v)
        payoff.append(row)

    params = {}
    for key, (raw, line, col) in entries.items():
        if key in HEADER_KEYS:
            continue
        if key not in schema:
            raise GameFileError(f"unknown key {key!r} for variant {variant}", line, 1)
        kind, _ = schema[key]
        values = [v for v, _ in _tokens(raw, line, col - 1)]
        if kind == TRIPLE:
            if len(values) != 1 or not isinstance(values[0], TriangularFuzzyNumber):
                raise GameFileError(f"{key} must be one fuzzy triple", line, col)
            params[key] = values[0]
        elif any(isinstance(v, TriangularFuzzyNumber) for v in values):
            raise GameFileError(f"{key} takes plain numbers", line, col)
        elif kind == SCALAR:
            if len(values) != 1:
                raise GameFileError(f"{key} takes exactly one number", line, col)
            params[key] = values[0]
        else:
            params[key] = values
    for key, (_, required) in schema.items():
        if required and key not in params:
            raise GameFileError(f"missing key {key!r} for variant {variant}")

    game = GameFile(variant, m, n, payoff, params)
    try:
        game.to_spec()
    except ValueError as exc:
        bad = _blame(str(exc), entries)
        raise GameFileError(str(exc), *bad) from None
    return game


def _blame(message: str, entries) -> tuple[int, int]:
    for key, (_, line, col) in entries.items():
        if re.search(rf"\b{re.escape(key)}\b", message):
            return line, col
    for key in ("cuts", "weights"):
        if key in entries and ("cut" in message or "weight" in message):
            return entries[key][1:]
    return 0, 0


def _fmt(x: float) -> str:
    if float(x).is_integer() and abs(x) < 1e15:
        return str(int(x))
    return repr(float(x))


def _fmt_entry(a) -> str:
    if isinstance(a, TriangularFuzzyNumber):
        return "(" + ", ".join(_fmt(v) for v in a.as_tuple()) + ")"
    return _fmt(a)


def format_game_file(game: GameFile) -> str:
    """Render a :class:`GameFile` back to text that parses to an equal object."""
    out = [f"variant {game.variant}", f"m {game.m}", f"n {game.n}", "payoff"]
    out += [" ".join(_fmt_entry(a) for a in row) for row in game.payoff]
    for key, value in game.params.items():
        if isinstance(value, list):
            out.append(f"{key} " + " ".join(_fmt(v) for v in value))
        else:
            out.append(f"{key} {_fmt_entry(value)}")
    return "\n".join(out) + "\n"
