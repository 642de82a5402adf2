"""Decide whether a quarter-unit matrix is a semigraph adjacency matrix and
rebuild the semigraph from it.

The reconstruction enumerates every band-consistent vertex run: starting from
a consecutively adjacent pair, a run may grow only onto a vertex whose
distances to all previously placed vertices match its position exactly, with
the two terminal pairs allowed to carry weight 1/2 instead of 1.  Each true
edge shows up once from either of its ends and is deduplicated by canonical
orientation.  A backtracking exact-cover search then picks runs so that every
nonzero entry is explained by exactly one of them, while propagating what the
corner weights assert about the endpoints: a 1/2 corner demands an end vertex
that is interior to some other chosen edge, a weight-1 corner demands one that
is interior to none, and a 1/4 pair demands both.  A cover that satisfies all
of that reproduces the input matrix bit for bit; if none exists the search
reports why, with a witness a caller can check against the entries directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Sequence

from .core import Semigraph, VertexClass, build_semigraph, canonical_edge
from .errors import AsymmetricInput, IllegalEntry, NonzeroDiagonal
from .matrix import HALF, ONE, QUARTER, SymMatrix, adjacency, is_quarter_unit

MatrixLike = SymMatrix | Sequence[Sequence[int | float | Fraction]]


class RejectionReason(Enum):
    ILLEGAL_ENTRY = "illegal-entry"
    ASYMMETRIC_INPUT = "asymmetric-input"
    NONZERO_DIAGONAL = "nonzero-diagonal"
    BROKEN_DISTANCE_RUN = "broken-distance-run"
    OVERLAPPING_EDGES = "overlapping-edges"
    COVERAGE_GAP = "coverage-gap"
    ENDPOINT_CLASS_MISMATCH = "endpoint-class-mismatch"


@dataclass(frozen=True)
class Accepted:
    """Successful reconstruction: the semigraph and its vertex classes."""

    semigraph: Semigraph
    classes: tuple[VertexClass, ...]


@dataclass(frozen=True)
class Rejected:
    """Failed reconstruction, with a reason and a checkable witness.

    Witness shapes by reason (all indices 0-based):
      illegal-entry            (i, j, value)
      asymmetric-input         (i, j, value_ij, value_ji)
      nonzero-diagonal         (i, value)
      broken-distance-run      (i, j, value)
      coverage-gap             (i, j, value) or (i,) for an all-zero row
      overlapping-edges        (pair, run_a, run_b) both runs claim the pair
      endpoint-class-mismatch  vertex or pair tuple; see detail
    """

    reason: RejectionReason
    witness: tuple
    detail: str


RecognitionOutcome = Accepted | Rejected


def _validated_rows(matrix: MatrixLike) -> tuple[tuple[Fraction, ...], ...]:
    """Normalize to Fraction rows; raise on structural problems.

    The entry alphabet is {0, 1/4, 1/2} plus positive integers.  Values such
    as 3/4 or -1/2 raise IllegalEntry; distances too long for the matrix are
    left to run tracing, which reports them as broken distance runs.
    """
    if isinstance(matrix, SymMatrix):
        rows = matrix.rows
    else:
        raw = [tuple(Fraction(x) for x in row) for row in matrix]
        n = len(raw)
        if n == 0:
            raise ValueError("matrix must have at least one row")
        for i, row in enumerate(raw):
            if len(row) != n:
                raise ValueError(f"row {i} has {len(row)} entries, expected {n}")
        rows = tuple(raw)
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise AsymmetricInput(i, j, rows[i][j], rows[j][i])
    for i in range(n):
        if rows[i][i] != 0:
            raise NonzeroDiagonal(i, rows[i][i])
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if v == 0 or v == QUARTER or v == HALF:
                continue
            if v.denominator == 1 and v >= 1:
                continue
            raise IllegalEntry(i, j, v)
    return rows


@dataclass(frozen=True)
class _Run:
    """A candidate edge: a band-consistent vertex run plus the endpoint facts
    its corner weights would assert."""

    vertices: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]
    interior: tuple[int, ...]
    need_mid: tuple[int, ...]
    need_pure: tuple[int, ...]
    xor_mid: tuple[int, int] | None


def _pairs_of(path: Sequence[int]) -> tuple[tuple[int, int], ...]:
    return tuple(
        sorted((a, b) if a < b else (b, a) for a, b in combinations(path, 2))
    )


def _make_run(rows, path: tuple[int, ...]) -> _Run:
    if len(path) == 2:
        u, v = path
        value = rows[u][v]
        if value == QUARTER:
            return _Run(path, _pairs_of(path), (), (u, v), (), None)
        if value == HALF:
            return _Run(path, _pairs_of(path), (), (), (), (u, v))
        return _Run(path, _pairs_of(path), (), (), (u, v), None)
    need_mid: list[int] = []
    need_pure: list[int] = []
    (need_mid if rows[path[0]][path[1]] == HALF else need_pure).append(path[0])
    (need_mid if rows[path[-2]][path[-1]] == HALF else need_pure).append(path[-1])
    return _Run(
        vertices=path,
        pairs=_pairs_of(path),
        interior=tuple(path[1:-1]),
        need_mid=tuple(need_mid),
        need_pure=tuple(need_pure),
        xor_mid=None,
    )


def _enumerate_runs(rows, n: int) -> list[_Run]:
    """Every locally valid candidate edge, deduplicated by orientation."""
    neighbors: list[list[int]] = [
        [j for j in range(n) if j != i and rows[i][j] in (ONE, HALF, QUARTER)]
        for i in range(n)
    ]
    found: dict[tuple[int, ...], _Run] = {}

    def record(path: list[int]) -> None:
        key = canonical_edge(path)
        if key not in found:
            found[key] = _make_run(rows, key)

    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] == QUARTER:
                record([i, j])
    for p in range(n):
        for q in neighbors[p]:
            if rows[p][q] not in (ONE, HALF):
                continue
            stack = [[p, q]]
            while stack:
                path = stack.pop()
                record(path)
                last = path[-1]
                # A terminal 1/2 closes the run; only the two ends may carry it.
                if len(path) >= 3 and rows[path[-2]][last] == HALF:
                    continue
                grow = len(path)
                for k in neighbors[last]:
                    if k in path:
                        continue
                    if rows[last][k] not in (ONE, HALF):
                        continue
                    if all(
                        rows[w][k] == grow - idx
                        for idx, w in enumerate(path[:-1])
                    ):
                        stack.append(path + [k])
    return sorted(found.values(), key=lambda r: (len(r.vertices), r.vertices))


class _CoverSearch:
    """Backtracking exact cover of the nonzero pairs by candidate runs."""

    def __init__(self, rows, n: int, items: list[tuple[int, int]], runs):
        self.rows = rows
        self.n = n
        self.items = items
        self.claimants: dict[tuple[int, int], list[_Run]] = {p: [] for p in items}
        for run in runs:
            for pair in run.pairs:
                if pair in self.claimants:
                    self.claimants[pair].append(run)
        self.covered: dict[tuple[int, int], _Run] = {}
        self.interior_count = {v: 0 for v in range(n)}
        self.need_pure_count = {v: 0 for v in range(n)}
        self.need_mid_count = {v: 0 for v in range(n)}
        self.xor_pairs: list[tuple[int, int]] = []
        self.chosen: list[_Run] = []
        self.solution: Semigraph | None = None
        self.failure: tuple[int, str, tuple, str] | None = None

    def _note_failure(self, depth: int, kind: str, witness: tuple, detail: str):
        if self.failure is None or depth > self.failure[0]:
            self.failure = (depth, kind, witness, detail)

    def _blocker(self, run: _Run):
        for pair in run.pairs:
            owner = self.covered.get(pair)
            if owner is not None:
                return ("overlap", pair, owner)
        for v in run.interior:
            if self.need_pure_count[v] > 0:
                return ("class", v, None)
        for v in run.need_pure:
            if self.interior_count[v] > 0:
                return ("class", v, None)
        return None

    def _apply(self, run: _Run) -> None:
        for pair in run.pairs:
            self.covered[pair] = run
        for v in run.interior:
            self.interior_count[v] += 1
        for v in run.need_pure:
            self.need_pure_count[v] += 1
        for v in run.need_mid:
            self.need_mid_count[v] += 1
        if run.xor_mid is not None:
            self.xor_pairs.append(run.xor_mid)
        self.chosen.append(run)

    def _undo(self, run: _Run) -> None:
        for pair in run.pairs:
            del self.covered[pair]
        for v in run.interior:
            self.interior_count[v] -= 1
        for v in run.need_pure:
            self.need_pure_count[v] -= 1
        for v in run.need_mid:
            self.need_mid_count[v] -= 1
        if run.xor_mid is not None:
            self.xor_pairs.pop()
        self.chosen.pop()

    def _finalize(self, depth: int) -> bool:
        for v in range(self.n):
            if self.need_mid_count[v] > 0 and self.interior_count[v] == 0:
                self._note_failure(
                    depth,
                    "class",
                    (v,),
                    f"vertex {v} carries a half or quarter corner but lies "
                    "inside no other edge",
                )
                return False
        for u, v in self.xor_pairs:
            if (self.interior_count[u] > 0) == (self.interior_count[v] > 0):
                self._note_failure(
                    depth,
                    "class",
                    (u, v),
                    f"half-weight pair ({u}, {v}) needs exactly one end "
                    "interior to another edge",
                )
                return False
        g = build_semigraph(self.n, [run.vertices for run in self.chosen])
        if adjacency(g).rows != self.rows:
            # Unreachable given full propagation; kept as a hard backstop so
            # an accepted result is always bit-exact.
            self._note_failure(
                depth, "class", (), "cover does not reproduce the matrix"
            )
            return False
        self.solution = g
        return True

    def run(self) -> bool:
        return self._step(0)

    def _step(self, depth: int) -> bool:
        best_pair = None
        best_viable: list[_Run] | None = None
        for pair in self.items:
            if pair in self.covered:
                continue
            viable: list[_Run] = []
            kills = []
            for run in self.claimants[pair]:
                block = self._blocker(run)
                if block is None:
                    viable.append(run)
                else:
                    kills.append((run, block))
            if not viable:
                overlap = next(
                    (
                        (run, block)
                        for run, block in kills
                        if block[0] == "overlap"
                    ),
                    None,
                )
                if overlap is not None:
                    run, (_, shared, owner) = overlap
                    self._note_failure(
                        depth,
                        "overlap",
                        (shared, run.vertices, owner.vertices),
                        f"pair {shared} is claimed by runs {run.vertices} "
                        f"and {owner.vertices}",
                    )
                else:
                    i, j = pair
                    self._note_failure(
                        depth,
                        "class",
                        (i, j, self.rows[i][j]),
                        f"no endpoint-consistent run explains entry "
                        f"({i}, {j}) = {self.rows[i][j]}",
                    )
                return False
            if best_viable is None or len(viable) < len(best_viable):
                best_pair, best_viable = pair, viable
                if len(viable) == 1:
                    break
        if best_pair is None:
            return self._finalize(depth)
        for run in best_viable:
            self._apply(run)
            if self._step(depth + 1):
                return True
            self._undo(run)
        return False


def reconstruct(
    matrix: MatrixLike, allow_isolated: bool = False
) -> RecognitionOutcome:
    """Rebuild a semigraph whose adjacency matrix equals ``matrix``.

    Returns ``Accepted`` carrying the semigraph (edge orientations canonical)
    and the vertex classes, or ``Rejected`` with a reason and witness.  Rows
    that are entirely zero are rejected unless ``allow_isolated`` is set, in
    which case they become isolated vertices.
    """
    try:
        rows = _validated_rows(matrix)
    except IllegalEntry as exc:
        return Rejected(
            RejectionReason.ILLEGAL_ENTRY, (exc.i, exc.j, exc.value), str(exc)
        )
    except AsymmetricInput as exc:
        return Rejected(
            RejectionReason.ASYMMETRIC_INPUT,
            (exc.i, exc.j, exc.value_ij, exc.value_ji),
            str(exc),
        )
    except NonzeroDiagonal as exc:
        return Rejected(
            RejectionReason.NONZERO_DIAGONAL, (exc.i, exc.value), str(exc)
        )
    n = len(rows)
    if not allow_isolated:
        for i in range(n):
            if all(x == 0 for x in rows[i]):
                return Rejected(
                    RejectionReason.COVERAGE_GAP,
                    (i,),
                    f"row {i} is entirely zero; no edge covers the vertex "
                    "(pass allow_isolated to accept isolated vertices)",
                )
    items = [
        (i, j) for i in range(n) for j in range(i + 1, n) if rows[i][j] != 0
    ]
    runs = _enumerate_runs(rows, n)
    search = _CoverSearch(rows, n, items, runs)
    for pair in items:
        if not search.claimants[pair]:
            i, j = pair
            value = rows[i][j]
            if value not in (ONE, HALF, QUARTER):
                return Rejected(
                    RejectionReason.BROKEN_DISTANCE_RUN,
                    (i, j, value),
                    f"entry ({i}, {j}) = {value} is supported by no "
                    "band-consistent run",
                )
            return Rejected(
                RejectionReason.COVERAGE_GAP,
                (i, j, value),
                f"entry ({i}, {j}) = {value} is claimed by no run",
            )
    if search.run():
        g = search.solution
        assert g is not None
        return Accepted(semigraph=g, classes=g.vertex_classes)
    if search.failure is None:
        first = items[0] if items else (0, 0)
        return Rejected(
            RejectionReason.COVERAGE_GAP,
            first,
            "no consistent edge cover exists",
        )
    _, kind, witness, detail = search.failure
    if kind == "overlap":
        return Rejected(RejectionReason.OVERLAPPING_EDGES, witness, detail)
    return Rejected(RejectionReason.ENDPOINT_CLASS_MISMATCH, witness, detail)


def is_semigraphical(
    matrix: MatrixLike, allow_isolated: bool = False
) -> tuple[bool, RecognitionOutcome]:
    """Whether some semigraph has exactly this adjacency matrix."""
    outcome = reconstruct(matrix, allow_isolated=allow_isolated)
    return isinstance(outcome, Accepted), outcome


def detect_classes(matrix: MatrixLike) -> tuple[VertexClass, ...]:
    """Classify every index of a quarter-unit matrix by vertex role.

    For a matrix that is a semigraph adjacency matrix this recovers the edge
    cover and reads the classes off it, so the answer always agrees with the
    classes of the reconstructed semigraph.  For matrices that are not, a
    single-pass reading of the entry patterns is used instead: a 1/4 or 1/2
    entry in a row marks a middle-end, a row whose every weight-1 neighbor
    continues two steps away marks a pure middle, any other nonzero row a
    pure end.  Structural problems raise IllegalEntry, AsymmetricInput, or
    NonzeroDiagonal.
    """
    rows = _validated_rows(matrix)
    outcome = reconstruct(matrix, allow_isolated=True)
    if isinstance(outcome, Accepted):
        return outcome.classes
    n = len(rows)
    classes: list[VertexClass] = []
    for i in range(n):
        row = rows[i]
        if all(x == 0 for x in row):
            classes.append(VertexClass.ISOLATED)
            continue
        if any(x == QUARTER or x == HALF for x in row):
            classes.append(VertexClass.MIDDLE_END)
            continue
        ones = [j for j in range(n) if row[j] == ONE]
        if ones and all(
            any(rows[k][j] == 2 and rows[k][i] == ONE for k in range(n))
            for j in ones
        ):
            classes.append(VertexClass.PURE_MIDDLE)
            continue
        classes.append(VertexClass.PURE_END)
    return tuple(classes)
