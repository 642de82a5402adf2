"""Semigraph data model: validated construction, vertex and edge taxonomy,
connectivity, skeletons, and generators.

A semigraph on vertex set {0, ..., n-1} is a collection of edges, each an
ordered tuple of at least two distinct vertices, such that any two edges share
at most one vertex.  An edge is identified with its reversal; the constructor
stores the lexicographically smaller of the two orientations.  Everything here
is immutable and all operations are pure functions, so values can be shared
across threads without locking.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .errors import (
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeNotInGraph,
    EdgeTooShort,
    EmptyEdgeSet,
    PairInTwoEdges,
    VertexOutOfRange,
)

Edge = tuple[int, ...]
"""An edge in canonical orientation (the lexicographic min of tuple/reversal)."""


class VertexClass(Enum):
    """How a vertex sits inside its incident edges."""

    PURE_END = "pure-end"
    PURE_MIDDLE = "pure-middle"
    MIDDLE_END = "middle-end"
    ISOLATED = "isolated"


class EdgeClass(Enum):
    """Edge taxonomy induced by the classes of its two end vertices."""

    FULL = "full"
    QUARTER = "quarter"
    HALF_ONE_PARTIAL = "half-one-partial"
    HALF_TWO_PARTIAL = "half-two-partial"


@dataclass(frozen=True)
class EdgeCounts:
    """Number of edges of each class: (m1, m2, m3, m4) in as_tuple() order."""

    full: int
    quarter: int
    half_one_partial: int
    half_two_partial: int

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.full, self.quarter, self.half_one_partial, self.half_two_partial)

    @property
    def total(self) -> int:
        return self.full + self.quarter + self.half_one_partial + self.half_two_partial


def canonical_edge(vertices: Sequence[int]) -> Edge:
    """Return the canonical orientation of a vertex sequence.

    The canonical orientation is whichever of the sequence and its reversal is
    lexicographically smaller.  No validation happens here.
    """
    forward = tuple(vertices)
    backward = forward[::-1]
    return forward if forward <= backward else backward


@dataclass(frozen=True)
class Semigraph:
    """An immutable semigraph.

    Build instances through :func:`build_semigraph`, which validates the edge
    set and canonicalizes orientations; the dataclass itself stores plain data.
    """

    n: int
    edges: tuple[Edge, ...]

    @cached_property
    def _incident(self) -> tuple[tuple[int, ...], ...]:
        """Edge indices incident to each vertex."""
        table: list[list[int]] = [[] for _ in range(self.n)]
        for idx, edge in enumerate(self.edges):
            for v in edge:
                table[v].append(idx)
        return tuple(tuple(row) for row in table)

    @cached_property
    def vertex_classes(self) -> tuple[VertexClass, ...]:
        return tuple(self._classify(v) for v in range(self.n))

    def _classify(self, v: int) -> VertexClass:
        incident = self._incident[v]
        if not incident:
            return VertexClass.ISOLATED
        is_end = [self.edges[i][0] == v or self.edges[i][-1] == v for i in incident]
        if all(is_end):
            return VertexClass.PURE_END
        if not any(is_end):
            return VertexClass.PURE_MIDDLE
        return VertexClass.MIDDLE_END

    def classify_vertex(self, v: int) -> VertexClass:
        if not 0 <= v < self.n:
            raise VertexOutOfRange(v, self.n)
        return self.vertex_classes[v]

    def classify_edge(self, edge: Sequence[int]) -> EdgeClass:
        e = canonical_edge(edge)
        if e not in self._edge_set:
            raise EdgeNotInGraph(e)
        ends_middle = sum(
            1
            for u in (e[0], e[-1])
            if self.vertex_classes[u] is VertexClass.MIDDLE_END
        )
        if ends_middle == 0:
            return EdgeClass.FULL
        if ends_middle == 1:
            return EdgeClass.HALF_ONE_PARTIAL
        return EdgeClass.QUARTER if len(e) == 2 else EdgeClass.HALF_TWO_PARTIAL

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def edge_counts(self) -> EdgeCounts:
        tally = {cls: 0 for cls in EdgeClass}
        for e in self.edges:
            tally[self.classify_edge(e)] += 1
        return EdgeCounts(
            full=tally[EdgeClass.FULL],
            quarter=tally[EdgeClass.QUARTER],
            half_one_partial=tally[EdgeClass.HALF_ONE_PARTIAL],
            half_two_partial=tally[EdgeClass.HALF_TWO_PARTIAL],
        )

    def is_connected(self) -> bool:
        """True when every vertex is reachable through chains of edges.

        Two vertices in a common edge are connected, so this is plain
        union-find over the vertex sets of the edges.
        """
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for edge in self.edges:
            root = find(edge[0])
            for v in edge[1:]:
                parent[find(v)] = root
        return len({find(v) for v in range(self.n)}) == 1

    def consecutive_pairs(self) -> tuple[tuple[int, int], ...]:
        """All consecutively adjacent vertex pairs, each sorted, in edge order.

        No pair can repeat because two edges never share more than one vertex.
        """
        pairs = []
        for edge in self.edges:
            for a, b in zip(edge, edge[1:]):
                pairs.append((a, b) if a < b else (b, a))
        return tuple(pairs)

    def skeleton(self) -> Semigraph:
        """The graph on the same vertices whose edges are the consecutive pairs."""
        return build_semigraph(self.n, self.consecutive_pairs())

    def rank(self) -> int:
        """Size of the largest edge."""
        if not self.edges:
            raise EmptyEdgeSet("rank is undefined for an empty edge set")
        return max(len(e) for e in self.edges)


def build_semigraph(n: int, edges: Iterable[Sequence[int]]) -> Semigraph:
    """Validate and canonicalize an edge list into a :class:`Semigraph`.

    Raises EdgeTooShort, VertexOutOfRange, DuplicateVertexInEdge,
    DuplicateEdge, or PairInTwoEdges as appropriate.  Vertices not covered by
    any edge are allowed and classify as isolated.
    """
    if n < 1:
        raise ValueError(f"vertex count must be at least 1, got {n}")
    canon: list[Edge] = []
    seen: set[Edge] = set()
    pair_owner: dict[tuple[int, int], Edge] = {}
    for seq in edges:
        raw = tuple(seq)
        if len(raw) < 2:
            raise EdgeTooShort(raw)
        for v in raw:
            if not 0 <= v < n:
                raise VertexOutOfRange(v, n)
        e = canonical_edge(raw)
        distinct = set(e)
        if len(distinct) != len(e):
            repeated = next(v for v in e if e.count(v) > 1)
            raise DuplicateVertexInEdge(e, repeated)
        if e in seen:
            raise DuplicateEdge(e)
        for a, b in combinations(e, 2):
            pair = (a, b) if a < b else (b, a)
            if pair in pair_owner:
                raise PairInTwoEdges(pair, pair_owner[pair], e)
            pair_owner[pair] = e
        seen.add(e)
        canon.append(e)
    return Semigraph(n=n, edges=tuple(sorted(canon)))


def star_type1(n: int) -> Semigraph:
    """A three-vertex edge plus ``n`` pendant two-vertex edges at its middle.

    Vertex 0 is the hub (the middle of the size-3 edge); vertices 1 and 2 are
    its ends; vertices 3..n+2 are the pendant tips.  For n >= 1 the hub is a
    middle-end vertex and every pendant edge carries a half corner.
    """
    if n < 0:
        raise ValueError(f"pendant count must be non-negative, got {n}")
    edges: list[tuple[int, ...]] = [(1, 0, 2)]
    edges.extend((0, j) for j in range(3, n + 3))
    return build_semigraph(n + 3, edges)


def star_type2(n: int) -> Semigraph:
    """``n`` size-3 edges sharing their middle vertex.

    Vertex 0 is the shared middle; edge k runs (2k-1, 0, 2k).  All ends are
    pendant, so every edge is full and vertex 0 is a pure middle.
    """
    if n < 1:
        raise ValueError(f"edge count must be at least 1, got {n}")
    edges = [(2 * k - 1, 0, 2 * k) for k in range(1, n + 1)]
    return build_semigraph(2 * n + 1, edges)


def random_semigraph(
    n: int, target_edges: int, max_edge_size: int, seed: int
) -> Semigraph:
    """Draw a random semigraph from a seeded stream by rejection sampling.

    Candidate edges are ordered samples of 2..max_edge_size distinct vertices;
    a candidate is rejected when any of its vertex pairs already lies in an
    accepted edge.  The attempt budget is 50 per requested edge plus 50, so
    the result may have fewer than ``target_edges`` edges.  The same seed
    always yields the same semigraph.
    """
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    if max_edge_size < 2:
        raise ValueError(f"max edge size must be at least 2, got {max_edge_size}")
    if target_edges < 0:
        raise ValueError(f"target edge count must be non-negative, got {target_edges}")
    rng = random.Random(seed)
    top = min(max_edge_size, n)
    used_pairs: set[tuple[int, int]] = set()
    edges: list[Edge] = []
    budget = 50 * max(target_edges, 1) + 50
    for _ in range(budget):
        if len(edges) >= target_edges:
            break
        size = rng.randint(2, top)
        seq = tuple(rng.sample(range(n), size))
        pairs = [
            (a, b) if a < b else (b, a) for a, b in combinations(seq, 2)
        ]
        if any(p in used_pairs for p in pairs):
            continue
        used_pairs.update(pairs)
        edges.append(canonical_edge(seq))
    return build_semigraph(n, edges)
