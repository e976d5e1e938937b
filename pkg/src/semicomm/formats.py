"""Text formats: Cayley tables, Rees specs, and input-source resolution."""

from __future__ import annotations

import json
from pathlib import Path

from . import core
from .constructors import ReesSpec, builtin_algebra, group_from_table, rees_matrix
from .errors import FormatError, InputError


def cayley_text(S):
    """``n``, then n rows of ids, then an optional ``# names:`` line."""
    lines = [str(S.order)] + [" ".join(str(v) for v in row) for row in S.rows]
    if S.names:
        lines.append("# names: " + " ".join(S.names))
    return "\n".join(lines) + "\n"


def parse_cayley(text):
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise FormatError("empty Cayley file")
    names = None
    if lines[-1].startswith("# names:"):
        names = lines[-1][len("# names:"):].split()
        lines = lines[:-1]
    try:
        n = int(lines[0])
        rows = [[int(v) for v in ln.split()] for ln in lines[1:]]
    except ValueError as exc:
        raise FormatError(f"bad Cayley file: {exc}") from exc
    if len(rows) != n or any(len(r) != n for r in rows):
        raise FormatError(f"expected {n} rows of {n} entries")
    return core.new_semigroup(n, rows, names=names)


def rees_spec_to_json(spec):
    doc = {
        "group-table": [list(r) for r in spec.group.underlying.rows],
        "i-size": spec.i_size,
        "lambda-size": spec.lambda_size,
        # row lam holds p_{lam, i} for each i
        "sandwich": [list(r) for r in spec.sandwich],
    }
    return json.dumps(doc, indent=1, sort_keys=True) + "\n"


def parse_rees_spec(text):
    try:
        doc = json.loads(text)
        table = doc["group-table"]
        spec = ReesSpec(
            group_from_table(table),
            int(doc["i-size"]),
            int(doc["lambda-size"]),
            tuple(tuple(int(v) for v in row) for row in doc["sandwich"]),
        )
    except (json.JSONDecodeError, KeyError, TypeError) as exc:
        raise FormatError(f"bad Rees spec: {exc!r}") from exc
    return spec


def load_algebra(source):
    """Resolve ``builtin:NAME``, ``rees:PATH`` or a Cayley file path.

    Paths ending in ``.json`` are read as Rees specs.
    """
    if source.startswith("builtin:"):
        return builtin_algebra(source[len("builtin:"):])
    if source.startswith("rees:"):
        return rees_matrix(parse_rees_spec(_read(source[len("rees:"):])))
    if source.startswith("file:"):
        source = source[len("file:"):]
    text = _read(source)
    if source.endswith(".json"):
        return rees_matrix(parse_rees_spec(text))
    return parse_cayley(text)


def _read(path):
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
