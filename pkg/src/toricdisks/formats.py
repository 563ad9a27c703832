"""Polytope file formats.

Plain text::

    # comments start with '#'
    name cp2          (optional)
    dim 2
    1 1
    1 -2
    -2 1

Structured: a JSON object ``{"dim": n, "vertices": [[...], ...], "name": ...}``.
"""

from __future__ import annotations

import json

from .lattice import LatticePolytope, PolytopeError, affine_rank


class ParseError(PolytopeError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)
        self.line = line
        self.column = column


def _tokens(line: str):
    """Yield ``(column, token)`` with 1-based columns."""
    col = 0
    n = len(line)
    while col < n:
        while col < n and line[col].isspace():
            col += 1
        start = col
        while col < n and not line[col].isspace():
            col += 1
        if start < col:
            yield start + 1, line[start:col]


def _parse_int(token: str, line: int, column: int) -> int:
    try:
        return int(token)
    except ValueError:
        raise ParseError(f"non-integer token {token!r}", line, column) from None


def _build(rows: list[tuple], lines: list[int | None], n: int, name: str | None) -> LatticePolytope:
    if len(rows) < n + 1:
        raise ParseError(f"need at least {n + 1} vertices in dimension {n}, got {len(rows)}")
    seen = {}
    for row, ln in zip(rows, lines):
        if row in seen:
            raise ParseError(f"duplicate vertex {row}", ln)
        seen[row] = ln
    if affine_rank(rows) < n:
        raise ParseError("collinear / not full-dimensional vertex set")
    hull = LatticePolytope.hull(rows, name=name)
    extreme = set(hull.vertices)
    for row, ln in zip(rows, lines):
        if row not in extreme:
            raise ParseError(f"redundant (non-extreme) point {row}", ln)
    return hull


def _parse_text(text: str) -> LatticePolytope:
    n = None
    name = None
    rows, lines = [], []
    for ln, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        head = toks[0][1]
        if n is None and head == "name":
            name = line.strip()[len("name"):].strip() or None
            continue
        if n is None:
            if head != "dim" or len(toks) != 2:
                raise ParseError("expected 'dim n' header", ln, toks[0][0])
            n = _parse_int(toks[1][1], ln, toks[1][0])
            if n < 1:
                raise ParseError("dimension must be positive", ln, toks[1][0])
            continue
        row = tuple(_parse_int(t, ln, c) for c, t in toks)
        if len(row) != n:
            raise ParseError(f"dimension mismatch: expected {n} coordinates, got {len(row)}", ln)
        rows.append(row)
        lines.append(ln)
    if n is None:
        raise ParseError("missing 'dim n' header")
    return _build(rows, lines, n, name)


def _parse_structured(text: str) -> LatticePolytope:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or "dim" not in doc or "vertices" not in doc:
        raise ParseError("structured polytope needs 'dim' and 'vertices'")
    n = doc["dim"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("'dim' must be a positive integer")
    rows = []
    for i, v in enumerate(doc["vertices"]):
        if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
            raise ParseError(f"vertex {i} is not a list of integers")
        if len(v) != n:
            raise ParseError(f"dimension mismatch in vertex {i}: expected {n} coordinates, got {len(v)}")
        rows.append(tuple(v))
    return _build(rows, [None] * len(rows), n, doc.get("name"))


def parse_polytope(text: str) -> LatticePolytope:
    """Parse either format; structured input is recognized by a leading ``{``."""
    if text.lstrip().startswith("{"):
        return _parse_structured(text)
    return _parse_text(text)


def read_polytope(path) -> LatticePolytope:
    with open(path, encoding="utf-8") as fh:
        return parse_polytope(fh.read())


def format_polytope(p: LatticePolytope, fmt: str = "text") -> str:
    if fmt == "structured":
        doc = {"dim": p.dim, "vertices": [list(v) for v in p.vertices]}
        if p.name is not None:
            doc["name"] = p.name
        return json.dumps(doc) + "\n"
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    head = [f"name {p.name}"] if p.name else []
    head.append(f"dim {p.dim}")
    return "\n".join(head + [" ".join(map(str, v)) for v in p.vertices]) + "\n"
