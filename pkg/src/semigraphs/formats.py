"""Plain-text exchange formats.

Edge-list files (.smg)::

    # comment, blank lines allowed
    n 9
    e 1 2 3 4 5
    e 1 6 8

One ``n <count>`` line, then any number of ``e <v1> <v2> ...`` lines with
1-based vertex labels in edge order.  Everything after ``#`` is ignored.

Matrix files (.qmat)::

    9
    0 1 2 3 4 1 0 2 0
    1 0 1 2 3 0 1/2 2 0
    ...

A bare integer size on the first data line, then that many rows.  Entries are
nonnegative integers, the literal fractions ``1/4`` and ``1/2`` (any p/q or
decimal spelling of them is accepted), and nothing else; other values raise
IllegalEntry.  The writer also serializes negative quarter-integers so that
excess matrices can be printed, but such files are not valid parser input.

Malformed structure raises ParseError with a 1-based line number; well-formed
content that violates a domain rule raises the matching domain error.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations

from .core import Semigraph, build_semigraph, canonical_edge
from .errors import (
    AsymmetricInput,
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeTooShort,
    IllegalEntry,
    NonzeroDiagonal,
    ParseError,
    PairInTwoEdges,
    VertexOutOfRange,
)
from .matrix import HALF, QUARTER, SymMatrix


def _data_lines(text: str):
    """Yield (1-based line number, content) with comments and blanks dropped."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def parse_smg(text: str) -> Semigraph:
    n: int | None = None
    edges: list[tuple[int, ...]] = []
    seen: set[tuple[int, ...]] = set()
    pair_owner: dict[tuple[int, int], tuple[int, ...]] = {}
    last_line = 0
    for lineno, line in _data_lines(text):
        last_line = lineno
        tokens = line.split()
        if tokens[0] == "n":
            if n is not None:
                raise ParseError(lineno, "vertex count declared twice")
            if len(tokens) != 2:
                raise ParseError(lineno, "expected exactly: n <count>")
            try:
                n = int(tokens[1])
            except ValueError:
                raise ParseError(
                    lineno, f"vertex count {tokens[1]!r} is not an integer"
                ) from None
            if n < 1:
                raise ParseError(lineno, "vertex count must be at least 1")
        elif tokens[0] == "e":
            if n is None:
                raise ParseError(lineno, "edge listed before the vertex count")
            labels: list[int] = []
            for tok in tokens[1:]:
                try:
                    labels.append(int(tok))
                except ValueError:
                    raise ParseError(
                        lineno, f"vertex label {tok!r} is not an integer"
                    ) from None
            if len(labels) < 2:
                raise EdgeTooShort(tuple(v - 1 for v in labels), lineno)
            for label in labels:
                if label < 1:
                    raise ParseError(lineno, "vertex labels are 1-based")
                if label > n:
                    raise VertexOutOfRange(label - 1, n, lineno)
            edge = canonical_edge(v - 1 for v in labels)
            if len(set(edge)) != len(edge):
                repeated = next(v for v in edge if edge.count(v) > 1)
                raise DuplicateVertexInEdge(edge, repeated, lineno)
            if edge in seen:
                raise DuplicateEdge(edge, lineno)
            for a, b in combinations(edge, 2):
                pair = (a, b) if a < b else (b, a)
                if pair in pair_owner:
                    raise PairInTwoEdges(pair, pair_owner[pair], edge, lineno)
                pair_owner[pair] = edge
            seen.add(edge)
            edges.append(edge)
        else:
            raise ParseError(lineno, f"unknown directive {tokens[0]!r}")
    if n is None:
        raise ParseError(last_line + 1, "missing 'n <count>' line")
    return build_semigraph(n, edges)


def emit_smg(g: Semigraph) -> str:
    lines = [f"n {g.n}"]
    for edge in g.edges:
        lines.append("e " + " ".join(str(v + 1) for v in edge))
    return "\n".join(lines) + "\n"


def _entry_token(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _parse_entry(token: str, lineno: int, i: int, j: int) -> Fraction:
    try:
        value = Fraction(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(
            lineno, f"entry {token!r} is not a number"
        ) from None
    if value == 0 or value == QUARTER or value == HALF:
        return value
    if value.denominator == 1 and value >= 1:
        return value
    raise IllegalEntry(i, j, value, lineno)


def parse_qmat(text: str) -> SymMatrix:
    lines = list(_data_lines(text))
    if not lines:
        raise ParseError(1, "empty matrix file")
    header_lineno, header = lines[0]
    tokens = header.split()
    if len(tokens) != 1:
        raise ParseError(header_lineno, "first line must be the matrix size alone")
    try:
        n = int(tokens[0])
    except ValueError:
        raise ParseError(
            header_lineno, f"matrix size {tokens[0]!r} is not an integer"
        ) from None
    if n < 1:
        raise ParseError(header_lineno, "matrix size must be at least 1")
    if len(lines) < n + 1:
        raise ParseError(
            lines[-1][0], f"expected {n} matrix rows, found {len(lines) - 1}"
        )
    if len(lines) > n + 1:
        raise ParseError(lines[n + 1][0], "unexpected content after the matrix")
    rows: list[list[Fraction]] = []
    row_lines: list[int] = []
    for i, (lineno, line) in enumerate(lines[1:]):
        tokens = line.split()
        if len(tokens) != n:
            raise ParseError(
                lineno, f"row {i + 1} has {len(tokens)} entries, expected {n}"
            )
        rows.append(
            [_parse_entry(tok, lineno, i, j) for j, tok in enumerate(tokens)]
        )
        row_lines.append(lineno)
    for i in range(n):
        if rows[i][i] != 0:
            raise NonzeroDiagonal(i, rows[i][i], row_lines[i])
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise AsymmetricInput(
                    i, j, rows[i][j], rows[j][i], row_lines[j]
                )
    return SymMatrix(rows)


def emit_qmat(matrix: SymMatrix) -> str:
    lines = [str(matrix.n)]
    for row in matrix.rows:
        lines.append(" ".join(_entry_token(x) for x in row))
    return "\n".join(lines) + "\n"
