"""Plain-text game and decomposition files, profile strings, JSON reports."""

import json
from fractions import Fraction

from .errors import GameFormatError
from .games import BimatrixGame, MixedProfile
from .linalg import RankFactorization, as_fraction

SCHEMA_VERSION = 1


def _content_lines(text):
    """Nonempty, non-comment lines; '#' starts a comment."""
    out = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append(line)
    return out


def _parse_fraction(token, where):
    try:
        return Fraction(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise GameFormatError(f"{where}: bad entry {token!r}") from exc


def _parse_row(line, count, where):
    tokens = line.split()
    if len(tokens) != count:
        raise GameFormatError(
            f"{where}: expected {count} entries, found {len(tokens)}"
        )
    return [_parse_fraction(t, where) for t in tokens]


def parse_game_text(text):
    """Parse a game file: header 'm n', then m rows of a, then m rows of b."""
    lines = _content_lines(text)
    if not lines:
        raise GameFormatError("empty game file")
    header = lines[0].split()
    if len(header) != 2:
        raise GameFormatError("header must be two integers: m n")
    try:
        m, n = int(header[0]), int(header[1])
    except ValueError as exc:
        raise GameFormatError("header must be two integers: m n") from exc
    if m < 1 or n < 1:
        raise GameFormatError("dimensions must be positive")
    if len(lines) != 1 + 2 * m:
        raise GameFormatError(
            f"expected {2 * m} payoff rows after the header, found {len(lines) - 1}"
        )
    a = [_parse_row(lines[1 + i], n, f"a row {i + 1}") for i in range(m)]
    b = [_parse_row(lines[1 + m + i], n, f"b row {i + 1}") for i in range(m)]
    return BimatrixGame(a, b)


def format_game_text(game):
    lines = [f"{game.m} {game.n}"]
    for mat in (game.a, game.b):
        for i in range(game.m):
            lines.append(" ".join(str(mat[i, j]) for j in range(game.n)))
    return "\n".join(lines) + "\n"


def load_game(path):
    with open(path, encoding="utf-8") as fh:
        return parse_game_text(fh.read())


def save_game(path, game):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_game_text(game))


def parse_decomposition_text(text):
    """Parse a decomposition file: header 'k m n', then per pair a u row
    (m entries) and a v row (n entries)."""
    lines = _content_lines(text)
    if not lines:
        raise GameFormatError("empty decomposition file")
    header = lines[0].split()
    if len(header) != 3:
        raise GameFormatError("header must be three integers: k m n")
    try:
        k, m, n = (int(t) for t in header)
    except ValueError as exc:
        raise GameFormatError("header must be three integers: k m n") from exc
    if k < 0 or m < 1 or n < 1:
        raise GameFormatError("need k >= 0 and positive dimensions")
    if len(lines) != 1 + 2 * k:
        raise GameFormatError(
            f"expected {2 * k} vector rows after the header, found {len(lines) - 1}"
        )
    pairs = []
    for t in range(k):
        u = _parse_row(lines[1 + 2 * t], m, f"u vector {t + 1}")
        v = _parse_row(lines[2 + 2 * t], n, f"v vector {t + 1}")
        pairs.append((tuple(u), tuple(v)))
    nonneg = all(e >= 0 for u, v in pairs for e in (*u, *v))
    return RankFactorization(shape=(m, n), pairs=tuple(pairs), nonnegative=nonneg)


def format_decomposition_text(fact):
    m, n = fact.shape
    lines = [f"{len(fact.pairs)} {m} {n}"]
    for u, v in fact.pairs:
        lines.append(" ".join(str(e) for e in u))
        lines.append(" ".join(str(e) for e in v))
    return "\n".join(lines) + "\n"


def load_decomposition(path):
    with open(path, encoding="utf-8") as fh:
        return parse_decomposition_text(fh.read())


def save_decomposition(path, fact):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_decomposition_text(fact))


def parse_profile_text(text):
    """Parse 'x1,..,xm;y1,..,yn' into a MixedProfile.

    Syntax errors raise GameFormatError; semantic problems (negative weight,
    sum not 1) surface as ValueError from MixedProfile itself.
    """
    parts = text.split(";")
    if len(parts) != 2:
        raise GameFormatError("profile must be 'x1,..,xm;y1,..,yn'")
    vecs = []
    for part in parts:
        tokens = [t.strip() for t in part.split(",")]
        if not all(tokens):
            raise GameFormatError("profile has an empty entry")
        vecs.append(tuple(_parse_fraction(t, "profile") for t in tokens))
    return MixedProfile(vecs[0], vecs[1])


def format_profile_text(profile):
    return (
        ",".join(str(e) for e in profile.x)
        + ";"
        + ",".join(str(e) for e in profile.y)
    )


def _encode(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_encode(v) for v in value]
    if isinstance(value, dict):
        return {key: _encode(v) for key, v in value.items()}
    if isinstance(value, (int, str, bool)) or value is None:
        return value
    raise TypeError(f"cannot encode {type(value).__name__} into a report")


def encode_report(report):
    """EquilibriumReport -> plain dict with exact fraction strings."""
    return {
        "x": [str(e) for e in report.profile.x],
        "y": [str(e) for e in report.profile.y],
        "loss": str(report.loss),
        "payoff1": str(report.payoff1),
        "payoff2": str(report.payoff2),
        "kind": report.kind,
        "parameter": None if report.parameter is None else str(report.parameter),
        "support1": list(report.support1),
        "support2": list(report.support2),
    }


def report_json(command, parameters, results):
    """Assemble the report payload and serialize it as JSON text."""
    payload = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "parameters": _encode(parameters),
        "results": _encode(results),
    }
    return json.dumps(payload, indent=2) + "\n"
