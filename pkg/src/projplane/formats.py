"""Readers and writers for the plain-text point, matrix and scene formats.

All formats are whitespace separated, one record per line, ``#`` starts a
comment, and scalars are decimals or ``p/q`` rationals (parsed exactly).

Points::

    A 1 2 1          # label followed by n+1 homogeneous coordinates
    line l 1 0 0     # a line of RP^2 by its dual triple

Matrix::

    1 0 0
    0 1 0
    0 0 1

Scene::

    v 0 0 2          # vertex (0-based index in order of appearance)
    e 0 1            # edge between vertices
    d 0 0 1          # direction whose vanishing point is marked
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import ParseError
from .homogeneous import ProjLine, ProjPoint
from .perspective import Scene
from .scalar import format_scalar, parse_scalar


@dataclass(frozen=True)
class Record:
    label: str
    value: ProjPoint | ProjLine

    @property
    def is_line(self) -> bool:
        return isinstance(self.value, ProjLine)


def _lines(text: str):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def _scalars(tokens, lineno, source, exact=True):
    try:
        values = [parse_scalar(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(str(exc), lineno, source) from None
    return values if exact else [float(v) for v in values]


def parse_points(text: str, source: str | None = None, exact: bool = True) -> list[Record]:
    records = []
    for lineno, tokens in _lines(text):
        if tokens[0] == "line":
            if len(tokens) != 5:
                raise ParseError("expected 'line <label> u1 u2 u3'", lineno, source)
            label, coords, kind = tokens[1], tokens[2:], ProjLine
        else:
            if len(tokens) < 3:
                raise ParseError("expected '<label> x1 ... xn+1' with at least two coordinates", lineno, source)
            label, coords, kind = tokens[0], tokens[1:], ProjPoint
        values = _scalars(coords, lineno, source, exact)
        if all(v == 0 for v in values):
            raise ParseError(f"{label}: all coordinates are zero", lineno, source)
        records.append(Record(label, kind(tuple(values))))
    return records


def format_points(records: Iterable[Record]) -> str:
    out = []
    for r in records:
        coords = " ".join(format_scalar(c) for c in r.value.coords)
        out.append(f"line {r.label} {coords}" if r.is_line else f"{r.label} {coords}")
    return "\n".join(out) + ("\n" if out else "")


def parse_matrix(text: str, source: str | None = None, exact: bool = True) -> list[list]:
    rows = []
    for lineno, tokens in _lines(text):
        row = _scalars(tokens, lineno, source, exact)
        if rows and len(row) != len(rows[0]):
            raise ParseError(f"row has {len(row)} entries, expected {len(rows[0])}", lineno, source)
        rows.append(row)
    if not rows:
        raise ParseError("empty matrix", None, source)
    if len(rows) != len(rows[0]):
        raise ParseError(f"matrix is {len(rows)}x{len(rows[0])}, expected square", None, source)
    return rows


def format_matrix(matrix) -> str:
    return "".join(" ".join(format_scalar(x) for x in row) + "\n" for row in matrix)


def parse_scene(text: str, source: str | None = None, exact: bool = True) -> Scene:
    vertices, edges, labels, directions = [], [], [], []
    for lineno, tokens in _lines(text):
        kind, args = tokens[0], tokens[1:]
        if kind == "v":
            if len(args) not in (3, 4):
                raise ParseError("expected 'v x y z [label]'", lineno, source)
            vertices.append(_scalars(args[:3], lineno, source, exact))
            labels.append(args[3] if len(args) == 4 else str(len(vertices) - 1))
        elif kind == "e":
            if len(args) != 2:
                raise ParseError("expected 'e i j'", lineno, source)
            try:
                i, j = (int(a) for a in args)
            except ValueError:
                raise ParseError(f"edge indices must be integers: {' '.join(args)}", lineno, source) from None
            if i == j:
                raise ParseError(f"edge {i} {j} is a self-loop", lineno, source)
            edges.append((i, j, lineno))
        elif kind == "d":
            if len(args) != 3:
                raise ParseError("expected 'd x y z'", lineno, source)
            d = _scalars(args, lineno, source, exact)
            if all(c == 0 for c in d):
                raise ParseError("direction must be nonzero", lineno, source)
            directions.append(d)
        else:
            raise ParseError(f"unknown record type {kind!r}", lineno, source)
    for i, j, lineno in edges:
        for k in (i, j):
            if not 0 <= k < len(vertices):
                raise ParseError(f"edge refers to missing vertex {k}", lineno, source)
    return Scene(vertices, [(i, j) for i, j, _ in edges], tuple(labels), tuple(directions))


def format_scene(scene: Scene) -> str:
    out = []
    for v, label in zip(scene.vertices, scene.labels or [None] * len(scene.vertices)):
        coords = " ".join(format_scalar(Fraction(c) if isinstance(c, int) else c) for c in v)
        out.append(f"v {coords}" + (f" {label}" if label is not None else ""))
    out.extend(f"e {i} {j}" for i, j in scene.edges)
    out.extend("d " + " ".join(format_scalar(c) for c in d) for d in scene.directions)
    return "\n".join(out) + "\n"
