"""Eigenvalues, exact characteristic polynomials, star families, bounds.

Adjacency matrices here are real symmetric with quarter-integer entries, so
the spectrum is real.  Floating-point eigenvalues come from a cyclic Jacobi
iteration; exact characteristic polynomials come from integer arithmetic on
the matrix scaled by 4, which clears every denominator.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

import numpy as np

from .core import Semigraph, star_type1, star_type2
from .errors import InvalidFamily, NoConvergence
from .matrix import SymMatrix, adjacency, skeleton_adjacency, sum_identities

#: Relative off-diagonal norm at which the Jacobi sweep stops.
DEFAULT_TOL = 1e-12
#: Relative width used when grouping nearly equal eigenvalues.
DEFAULT_CLUSTER_TOL = 1e-7
#: How far a bound may be violated before it counts as broken.
BOUND_SLACK = 1e-9


@dataclass(frozen=True)
class Spectrum:
    """Eigenvalues in descending order plus clustering support."""

    values: tuple[float, ...]
    cluster_tolerance: float = DEFAULT_CLUSTER_TOL

    @property
    def lambda1(self) -> float:
        return self.values[0]

    def multiplicities(self) -> tuple[tuple[float, int], ...]:
        """Group eigenvalues closer than the cluster radius.

        The radius scales with the spectral radius so that clustering keeps
        working for matrices whose eigenvalues grow with size.  Each cluster
        is reported as (mean value, count), largest first.
        """
        if not self.values:
            return ()
        radius = self.cluster_tolerance * max(
            1.0, max(abs(v) for v in self.values)
        )
        groups: list[list[float]] = [[self.values[0]]]
        for v in self.values[1:]:
            current = groups[-1]
            if abs(sum(current) / len(current) - v) <= radius:
                current.append(v)
            else:
                groups.append([v])
        return tuple((sum(g) / len(g), len(g)) for g in groups)


def _round_robin_rounds(n: int) -> list[list[tuple[int, int]]]:
    """Partition all index pairs of 0..n-1 into rounds of disjoint pairs.

    Circle scheduling: one seat fixed, the rest rotate, a dummy seat absorbs
    the bye when n is odd.  Every pair appears in exactly one round.
    """
    m = n if n % 2 == 0 else n + 1
    seats = list(range(m))
    rounds: list[list[tuple[int, int]]] = []
    for _ in range(m - 1):
        pairs = []
        for i in range(m // 2):
            p, q = seats[i], seats[m - 1 - i]
            if p < n and q < n:
                pairs.append((p, q) if p < q else (q, p))
        rounds.append(pairs)
        seats = [seats[0], seats[-1]] + seats[1:-1]
    return rounds


def eigenvalues(matrix: SymMatrix, tol: float = DEFAULT_TOL) -> tuple[float, ...]:
    """All eigenvalues, descending, via cyclic Jacobi rotations.

    Each sweep walks a round-robin schedule of pivot pairs; the pairs inside
    one round are disjoint, so their rotations commute and are applied as a
    single orthogonal similarity, which keeps the inner loop in matrix
    arithmetic.  Pivots below a skip threshold are left alone.  Iteration
    stops when the off-diagonal Frobenius norm drops below ``tol`` times the
    full Frobenius norm; rotations are capped at 100 n^2 and exceeding the
    cap raises NoConvergence.
    """
    a = np.array(matrix.to_floats(), dtype=float)
    n = a.shape[0]
    scale = float(np.linalg.norm(a))
    if scale == 0.0 or n == 1:
        return tuple(sorted(np.diag(a).tolist(), reverse=True))
    cap = 100 * n * n
    skip = tol * scale / (4 * n)
    rotations = 0
    rounds = _round_robin_rounds(n)
    while True:
        hollow = a.copy()
        np.fill_diagonal(hollow, 0.0)
        # Summing the off-diagonal entries directly avoids the cancellation
        # that subtracting the diagonal mass from the full norm would hit
        # once the remainder is near tol * scale.
        off = float(np.linalg.norm(hollow))
        if off <= tol * scale:
            break
        for round_pairs in rounds:
            ps = np.array([p for p, _ in round_pairs], dtype=int)
            qs = np.array([q for _, q in round_pairs], dtype=int)
            apq = a[ps, qs]
            active = np.abs(apq) > skip
            count = int(np.count_nonzero(active))
            if count == 0:
                continue
            rotations += count
            if rotations > cap:
                raise NoConvergence(rotations, cap)
            ps, qs, apq = ps[active], qs[active], apq[active]
            theta = (a[qs, qs] - a[ps, ps]) / (2.0 * apq)
            sign = np.where(theta >= 0.0, 1.0, -1.0)
            t = sign / (np.abs(theta) + np.sqrt(theta * theta + 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c
            rot = np.eye(n)
            rot[ps, ps] = c
            rot[qs, qs] = c
            rot[ps, qs] = s
            rot[qs, ps] = -s
            a = rot.T @ a @ rot
            a[ps, qs] = 0.0
            a[qs, ps] = 0.0
    return tuple(sorted(np.diag(a).tolist(), reverse=True))


def spectrum(
    matrix: SymMatrix,
    tol: float = DEFAULT_TOL,
    cluster_tolerance: float = DEFAULT_CLUSTER_TOL,
) -> Spectrum:
    return Spectrum(eigenvalues(matrix, tol=tol), cluster_tolerance)


@dataclass(frozen=True)
class RationalPoly:
    """Polynomial with exact rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        cleaned = [Fraction(c) for c in self.coeffs]
        while len(cleaned) > 1 and cleaned[-1] == 0:
            cleaned.pop()
        object.__setattr__(self, "coeffs", tuple(cleaned))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def evaluate(self, x):
        acc = self.coeffs[-1] if not isinstance(x, float) else float(self.coeffs[-1])
        for c in reversed(self.coeffs[:-1]):
            acc = acc * x + (float(c) if isinstance(x, float) else c)
        return acc

    def __mul__(self, other: "RationalPoly") -> "RationalPoly":
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, ci in enumerate(self.coeffs):
            if ci == 0:
                continue
            for j, cj in enumerate(other.coeffs):
                out[i + j] += ci * cj
        return RationalPoly(tuple(out))


def char_poly(matrix: SymMatrix) -> RationalPoly:
    """Exact characteristic polynomial det(xI - A), monic, ascending coeffs.

    Works on B = 4A, which is an integer matrix for quarter-integer input,
    runs the trace recursion for the coefficients of B in exact integer
    arithmetic, then rescales: the x^j coefficient of A picks up 4^(j-n).
    """
    n = matrix.n
    b = [[int(4 * matrix.entry(i, j)) for j in range(n)] for i in range(n)]
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    coeffs_b = [0] * (n + 1)
    coeffs_b[n] = 1
    for k in range(1, n + 1):
        bm = [
            [sum(b[i][t] * m[t][j] for t in range(n)) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(bm[i][i] for i in range(n))
        if tr % k != 0:
            raise ArithmeticError("trace recursion lost exactness")
        ck = -(tr // k)
        coeffs_b[n - k] = ck
        m = [
            [bm[i][j] + (ck if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
    return RationalPoly(
        tuple(Fraction(coeffs_b[j], 4 ** (n - j)) for j in range(n + 1))
    )


class StarFamily(Enum):
    TYPE_I = "I"
    TYPE_II = "II"

    @classmethod
    def parse(cls, text: str) -> "StarFamily":
        normalized = text.strip().upper()
        for member in cls:
            if member.value == normalized:
                return member
        raise InvalidFamily(text)


def star_semigraph(family: StarFamily, n: int) -> Semigraph:
    if family is StarFamily.TYPE_I:
        return star_type1(n)
    return star_type2(n)


def star1_charpoly(n: int) -> RationalPoly:
    """Closed-form characteristic polynomial for the pendant-star family.

    The hub sits in the middle of one 3-vertex edge and carries n pendant
    2-vertex edges, 3 + n vertices in all.  For n = 0 the polynomial is
    x^3 - 6x - 4; for n >= 1 it factors as
    x^(n-1) (x + 2) (x^3 - 2x^2 - (n + 8)/4 x + n/2).
    """
    if n < 0:
        raise ValueError("pendant count must be nonnegative")
    if n == 0:
        return RationalPoly((Fraction(-4), Fraction(-6), Fraction(0), Fraction(1)))
    shift = RationalPoly((Fraction(0),) * (n - 1) + (Fraction(1),))
    linear = RationalPoly((Fraction(2), Fraction(1)))
    cubic = RationalPoly(
        (Fraction(n, 2), Fraction(-(n + 8), 4), Fraction(-2), Fraction(1))
    )
    return shift * linear * cubic


def star2_charpoly(n: int) -> RationalPoly:
    """Closed-form characteristic polynomial for the full-edge star family.

    The hub is the middle vertex of n disjoint 3-vertex edges, 2n + 1
    vertices in all; the polynomial factors as
    (x + 2) (x^2 - 4)^(n-1) (x^2 - 2x - 2n).
    """
    if n < 1:
        raise ValueError("edge count must be at least 1")
    poly = RationalPoly((Fraction(2), Fraction(1)))
    quad = RationalPoly((Fraction(-4), Fraction(0), Fraction(1)))
    for _ in range(n - 1):
        poly = poly * quad
    return poly * RationalPoly((Fraction(-2 * n), Fraction(-2), Fraction(1)))


def _real_cubic_roots(b: float, c: float, d: float) -> tuple[float, float, float]:
    """Real roots of x^3 + b x^2 + c x + d when all three are real and distinct.

    Depressed-cubic trigonometric form followed by a few Newton steps to
    shake out the trig round-off.
    """
    p = c - b * b / 3.0
    q = 2.0 * b**3 / 27.0 - b * c / 3.0 + d
    disc = -4.0 * p**3 - 27.0 * q * q
    if disc <= 0.0 or p >= 0.0:
        raise ValueError("cubic does not have three distinct real roots")
    m = 2.0 * math.sqrt(-p / 3.0)
    arg = max(-1.0, min(1.0, 3.0 * q / (p * m)))
    phi = math.acos(arg)
    roots = []
    for k in range(3):
        x = m * math.cos(phi / 3.0 - 2.0 * math.pi * k / 3.0) - b / 3.0
        for _ in range(3):
            f = ((x + b) * x + c) * x + d
            fp = (3.0 * x + 2.0 * b) * x + c
            if fp == 0.0:
                break
            x -= f / fp
        roots.append(x)
    return tuple(sorted(roots, reverse=True))


def star_spectrum(family: StarFamily, n: int) -> Spectrum:
    """Exact-form spectrum of a star family member, descending."""
    if family is StarFamily.TYPE_I:
        if n < 1:
            raise ValueError("pendant count must be at least 1")
        cubic_roots = _real_cubic_roots(-2.0, -(n + 8) / 4.0, n / 2.0)
        values = list(cubic_roots) + [0.0] * (n - 1) + [-2.0]
    else:
        if n < 1:
            raise ValueError("edge count must be at least 1")
        top = 1.0 + math.sqrt(2.0 * n + 1.0)
        bottom = 1.0 - math.sqrt(2.0 * n + 1.0)
        values = [top] + [2.0] * (n - 1) + [bottom] + [-2.0] * n
    return Spectrum(tuple(sorted(values, reverse=True)))


@dataclass(frozen=True)
class BoundsReport:
    """The extreme eigenvalue against its three structural bounds.

    ``bound_skeleton`` and ``bound_trace`` cap lambda1 from above;
    ``bound_min_degree`` supports it from below.  The closed-form trace
    variant is informational and not checked, since it overshoots whenever
    partial edges are present.
    """

    lambda1: float
    bound_skeleton: float
    bound_min_degree: float
    bound_trace: float
    bound_trace_closed_form: float
    holds_skeleton: bool
    holds_min_degree: bool
    holds_trace: bool

    @property
    def all_hold(self) -> bool:
        return self.holds_skeleton and self.holds_min_degree and self.holds_trace


def bounds(
    g: Semigraph,
    spec: Spectrum | None = None,
    tol: float = DEFAULT_TOL,
) -> BoundsReport:
    """Check lambda1 against the skeleton, minimum-degree, and trace bounds.

    The bounds are derived for connected semigraphs; a disconnected input
    still produces a report but emits a warning.
    """
    if not g.is_connected():
        warnings.warn(
            "bounds assume a connected semigraph; this one is not connected",
            stacklevel=2,
        )
    a = adjacency(g)
    sk = skeleton_adjacency(g)
    lam = spec.lambda1 if spec is not None else eigenvalues(a, tol=tol)[0]
    r = g.rank()
    n = g.n
    max_skeleton_degree = max(int(sk.row_sum(i)) for i in range(n))
    min_total_degree = min(float(a.row_sum(i)) for i in range(n))
    report = sum_identities(g)
    bound_skeleton = r * (r - 1) / 2.0 * max_skeleton_degree
    bound_trace = math.sqrt(float(report.trace_sq_direct) * (n - 1) / n)
    bound_trace_cf = math.sqrt(
        max(0.0, float(report.trace_sq_closed_form) * (n - 1) / n)
    )
    return BoundsReport(
        lambda1=lam,
        bound_skeleton=bound_skeleton,
        bound_min_degree=min_total_degree,
        bound_trace=bound_trace,
        bound_trace_closed_form=bound_trace_cf,
        holds_skeleton=lam <= bound_skeleton + BOUND_SLACK,
        holds_min_degree=lam >= min_total_degree - BOUND_SLACK,
        holds_trace=lam <= bound_trace + BOUND_SLACK,
    )
