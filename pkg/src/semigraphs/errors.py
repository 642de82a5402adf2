"""Exception types shared across the package.

Everything raised on purpose derives from :class:`SemigraphError`, so callers
(the CLI in particular) can distinguish domain rejections from programming
errors.  Each class keeps its payload as attributes in addition to the
formatted message.
"""

from __future__ import annotations


class SemigraphError(Exception):
    """Base class for all domain errors raised by this package."""


class EdgeTooShort(SemigraphError):
    def __init__(self, edge: tuple[int, ...], line: int | None = None):
        self.edge = edge
        self.line = line
        super().__init__(_at_line(f"edge {edge!r} has fewer than two vertices", line))


class DuplicateVertexInEdge(SemigraphError):
    def __init__(self, edge: tuple[int, ...], vertex: int, line: int | None = None):
        self.edge = edge
        self.vertex = vertex
        self.line = line
        super().__init__(_at_line(f"vertex {vertex} repeats inside edge {edge!r}", line))


class VertexOutOfRange(SemigraphError):
    def __init__(self, vertex: int, n: int, line: int | None = None):
        self.vertex = vertex
        self.n = n
        self.line = line
        super().__init__(
            _at_line(f"vertex {vertex} outside the declared range 0..{n - 1}", line)
        )


class PairInTwoEdges(SemigraphError):
    def __init__(
        self,
        pair: tuple[int, int],
        first: tuple[int, ...],
        second: tuple[int, ...],
        line: int | None = None,
    ):
        self.pair = pair
        self.first = first
        self.second = second
        self.line = line
        super().__init__(
            _at_line(
                f"vertex pair {pair!r} appears in two edges: {first!r} and {second!r}",
                line,
            )
        )


class DuplicateEdge(SemigraphError):
    def __init__(self, edge: tuple[int, ...], line: int | None = None):
        self.edge = edge
        self.line = line
        super().__init__(_at_line(f"edge {edge!r} listed twice", line))


class EmptyEdgeSet(SemigraphError):
    def __init__(self, message: str = "operation requires at least one edge"):
        super().__init__(message)


class EdgeNotInGraph(SemigraphError):
    def __init__(self, edge: tuple[int, ...]):
        self.edge = edge
        super().__init__(f"edge {edge!r} is not part of this semigraph")


class IndexOutOfRange(SemigraphError):
    def __init__(self, message: str):
        super().__init__(message)


class IllegalEntry(SemigraphError):
    def __init__(self, i: int, j: int, value, line: int | None = None):
        self.i = i
        self.j = j
        self.value = value
        self.line = line
        super().__init__(
            _at_line(f"entry ({i}, {j}) has illegal value {value}", line)
        )


class AsymmetricInput(SemigraphError):
    def __init__(self, i: int, j: int, value_ij, value_ji, line: int | None = None):
        self.i = i
        self.j = j
        self.value_ij = value_ij
        self.value_ji = value_ji
        self.line = line
        super().__init__(
            _at_line(
                f"entries ({i}, {j}) = {value_ij} and ({j}, {i}) = {value_ji} differ",
                line,
            )
        )


class NonzeroDiagonal(SemigraphError):
    def __init__(self, i: int, value, line: int | None = None):
        self.i = i
        self.value = value
        self.line = line
        super().__init__(_at_line(f"diagonal entry ({i}, {i}) = {value} is not zero", line))


class NoConvergence(SemigraphError):
    def __init__(self, rotations: int, cap: int):
        self.rotations = rotations
        self.cap = cap
        super().__init__(
            f"rotation eigensolver exceeded its budget of {cap} rotations"
        )


class InvalidFamily(SemigraphError):
    def __init__(self, value):
        self.value = value
        super().__init__(f"unknown star family {value!r}; expected 'I' or 'II'")


class ParseError(SemigraphError):
    """Malformed file content (as opposed to well-formed but invalid data)."""

    def __init__(self, line: int, message: str):
        self.line = line
        super().__init__(f"line {line}: {message}")


def _at_line(message: str, line: int | None) -> str:
    return message if line is None else f"line {line}: {message}"
