"""Exact quarter-rational matrices for semigraphs.

The adjacency matrix entry for two vertices is the path distance between them
inside their unique common edge, except at the two terminal consecutive pairs
of an edge, which drop to 1/2 when the end vertex there is middle-end, and
except for size-2 edges whose both ends are middle-end, which get 1/4.  All
arithmetic is exact over :class:`fractions.Fraction`; floating point only
appears when a caller asks for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .core import EdgeCounts, Semigraph, VertexClass
from .errors import (
    AsymmetricInput,
    IllegalEntry,
    IndexOutOfRange,
    NonzeroDiagonal,
    VertexOutOfRange,
)

QUARTER = Fraction(1, 4)
HALF = Fraction(1, 2)
ONE = Fraction(1)
ZERO = Fraction(0)

Entry = int | Fraction


def is_quarter_unit(value: Fraction) -> bool:
    """True when the value is an integer multiple of 1/4."""
    return (4 * value).denominator == 1


class SymMatrix:
    """A symmetric matrix with zero diagonal over quarter-unit rationals.

    Construction validates shape, symmetry (AsymmetricInput), the diagonal
    (NonzeroDiagonal), and that every entry is a multiple of 1/4
    (IllegalEntry).  Instances are immutable.
    """

    __slots__ = ("n", "_rows")

    def __init__(self, rows: Sequence[Sequence[Entry]]):
        converted: list[tuple[Fraction, ...]] = []
        n = len(rows)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
            frac_row = tuple(Fraction(x) for x in row)
            for j, x in enumerate(frac_row):
                if not is_quarter_unit(x):
                    raise IllegalEntry(i, j, x)
            converted.append(frac_row)
        for i in range(n):
            if converted[i][i] != 0:
                raise NonzeroDiagonal(i, converted[i][i])
        for i in range(n):
            for j in range(i + 1, n):
                if converted[i][j] != converted[j][i]:
                    raise AsymmetricInput(i, j, converted[i][j], converted[j][i])
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "_rows", tuple(converted))

    def __setattr__(self, name, value):
        raise AttributeError("SymMatrix is immutable")

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def entry(self, i: int, j: int) -> Fraction:
        return self._rows[i][j]

    def __getitem__(self, key: tuple[int, int]) -> Fraction:
        i, j = key
        return self._rows[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, SymMatrix):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"SymMatrix(n={self.n})"

    def __add__(self, other: "SymMatrix") -> "SymMatrix":
        self._check_shape(other)
        return SymMatrix(
            [
                [a + b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def __sub__(self, other: "SymMatrix") -> "SymMatrix":
        self._check_shape(other)
        return SymMatrix(
            [
                [a - b for a, b in zip(ra, rb)]
                for ra, rb in zip(self._rows, other._rows)
            ]
        )

    def _check_shape(self, other: "SymMatrix") -> None:
        if self.n != other.n:
            raise ValueError(f"size mismatch: {self.n} vs {other.n}")

    def submatrix(self, indices: Sequence[int]) -> "SymMatrix":
        """Principal submatrix in the given index order."""
        seen = set()
        for idx in indices:
            if not 0 <= idx < self.n:
                raise IndexOutOfRange(f"index {idx} outside 0..{self.n - 1}")
            if idx in seen:
                raise IndexOutOfRange(f"index {idx} repeats")
            seen.add(idx)
        return SymMatrix(
            [[self._rows[i][j] for j in indices] for i in indices]
        )

    def row_sum(self, i: int) -> Fraction:
        return sum(self._rows[i], ZERO)

    def total_sum(self) -> Fraction:
        return sum((sum(row, ZERO) for row in self._rows), ZERO)

    def trace_square(self) -> Fraction:
        """Sum of squared entries, i.e. the trace of the matrix squared."""
        return sum((sum((x * x for x in row), ZERO) for row in self._rows), ZERO)

    def to_floats(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self._rows]


def adjacency(g: Semigraph) -> SymMatrix:
    """The quarter-rational adjacency matrix of a semigraph."""
    rows = [[ZERO] * g.n for _ in range(g.n)]
    classes = g.vertex_classes
    for edge in g.edges:
        r = len(edge)
        if r == 2:
            u, v = edge
            middles = sum(
                1 for w in edge if classes[w] is VertexClass.MIDDLE_END
            )
            value = (ONE, HALF, QUARTER)[middles]
            rows[u][v] = rows[v][u] = value
            continue
        for i in range(r):
            for j in range(i + 1, r):
                u, v = edge[i], edge[j]
                value = Fraction(j - i)
                if i == 0 and j == 1 and classes[edge[0]] is VertexClass.MIDDLE_END:
                    value = HALF
                if (
                    i == r - 2
                    and j == r - 1
                    and classes[edge[r - 1]] is VertexClass.MIDDLE_END
                ):
                    value = HALF
                rows[u][v] = rows[v][u] = value
    return SymMatrix(rows)


def skeleton_adjacency(g: Semigraph) -> SymMatrix:
    """0/1 matrix of consecutively adjacent vertex pairs."""
    rows = [[ZERO] * g.n for _ in range(g.n)]
    for a, b in g.consecutive_pairs():
        rows[a][b] = rows[b][a] = ONE
    return SymMatrix(rows)


def excess(g: Semigraph) -> SymMatrix:
    """Adjacency minus skeleton adjacency."""
    return adjacency(g) - skeleton_adjacency(g)


@dataclass(frozen=True)
class DegreeSplit:
    """A vertex degree split into its skeleton and excess contributions."""

    total: Fraction
    skeleton_part: Fraction
    excess_part: Fraction


def degree(g: Semigraph, v: int) -> DegreeSplit:
    if not 0 <= v < g.n:
        raise VertexOutOfRange(v, g.n)
    total = adjacency(g).row_sum(v)
    skel = skeleton_adjacency(g).row_sum(v)
    return DegreeSplit(total=total, skeleton_part=skel, excess_part=total - skel)


@dataclass(frozen=True)
class IdentityReport:
    """Degree-sum and squared-trace totals, three ways each.

    ``*_direct`` sums the adjacency matrix itself.  ``*_closed_form`` is the
    classical closed form in edge sizes and edge-class counts, which
    discounts only one of each symmetric entry pair at half corners and so
    overshoots.  ``*_corrected`` repairs those constants; it always equals
    the direct value.
    """

    degree_sum_direct: Fraction
    degree_sum_closed_form: Fraction
    degree_sum_corrected: Fraction
    trace_sq_direct: Fraction
    trace_sq_closed_form: Fraction
    trace_sq_corrected: Fraction
    edge_sizes: tuple[int, ...]
    counts: EdgeCounts


def sum_identities(g: Semigraph) -> IdentityReport:
    a = adjacency(g)
    counts = g.edge_counts()
    sizes = tuple(len(e) for e in g.edges)
    m2 = counts.quarter
    m3 = counts.half_one_partial
    m4 = counts.half_two_partial
    deg_base = sum((Fraction(r * (r * r - 1), 3) for r in sizes), ZERO)
    tr_base = sum((Fraction(r * r * (r * r - 1), 6) for r in sizes), ZERO)
    return IdentityReport(
        degree_sum_direct=a.total_sum(),
        degree_sum_closed_form=deg_base
        - Fraction(3, 2) * m2
        - Fraction(1, 2) * m3
        - m4,
        degree_sum_corrected=deg_base - Fraction(3, 2) * m2 - m3 - 2 * m4,
        trace_sq_direct=a.trace_square(),
        trace_sq_closed_form=tr_base
        - Fraction(15, 8) * m2
        - Fraction(3, 4) * m3
        - Fraction(1, 2) * m4,
        trace_sq_corrected=tr_base
        - Fraction(15, 8) * m2
        - Fraction(3, 2) * m3
        - 3 * m4,
        edge_sizes=sizes,
        counts=counts,
    )


def edge_submatrix(matrix: SymMatrix, indices: Sequence[int]) -> SymMatrix:
    """Principal submatrix picked out by ``indices``, in that order."""
    return matrix.submatrix(indices)
