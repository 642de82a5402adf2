"""Command line front end.

Exit codes: 0 on success, 1 when the input is well-formed but rejected by a
domain rule (not a semigraph, a violated bound, an illegal matrix entry),
2 for unusable input (malformed files, bad arguments, missing paths).

Vertex labels in all printed and written output are 1-based, matching the
file formats; library-level diagnostics on stderr may reference file lines.
"""

from __future__ import annotations

import argparse
import sys
import warnings
from fractions import Fraction
from pathlib import Path

from .core import EdgeClass, VertexClass, random_semigraph
from .errors import (
    AsymmetricInput,
    IllegalEntry,
    NonzeroDiagonal,
    ParseError,
    SemigraphError,
)
from .formats import emit_qmat, emit_smg, parse_qmat, parse_smg
from .matrix import adjacency, excess, skeleton_adjacency, sum_identities
from .recognition import Rejected, reconstruct
from .report import write_report
from .spectra import (
    DEFAULT_CLUSTER_TOL,
    DEFAULT_TOL,
    Spectrum,
    StarFamily,
    bounds,
    eigenvalues,
    star_semigraph,
)

_FMT = "{:.10g}"


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _token(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _render_witness(witness: tuple) -> str:
    """Human-readable witness with vertex indices shifted to 1-based."""

    def render(obj) -> str:
        if isinstance(obj, tuple):
            return "(" + ", ".join(render(x) for x in obj) + ")"
        if isinstance(obj, Fraction):
            return _token(obj)
        if isinstance(obj, int):
            return str(obj + 1)
        return str(obj)

    return render(witness)


def _cmd_validate(args) -> int:
    g = parse_smg(_read(args.file))
    print(f"vertices: {g.n}")
    print(f"edges: {len(g.edges)}")
    if g.edges:
        print(f"rank: {g.rank()}")
    print(f"connected: {_yes(g.is_connected())}")
    tally = {cls: 0 for cls in VertexClass}
    for cls in g.vertex_classes:
        tally[cls] += 1
    for cls in VertexClass:
        print(f"{cls.value} vertices: {tally[cls]}")
    if g.edges:
        counts = g.edge_counts()
        for cls, count in zip(EdgeClass, counts.as_tuple()):
            print(f"{cls.value} edges: {count}")
    return 0


def _cmd_matrix(args) -> int:
    g = parse_smg(_read(args.file))
    if args.check_decomposition:
        ok = adjacency(g) == skeleton_adjacency(g) + excess(g)
        print("decomposition: ok" if ok else "decomposition: broken")
        return 0 if ok else 1
    if args.skeleton:
        m = skeleton_adjacency(g)
    elif args.excess:
        m = excess(g)
    else:
        m = adjacency(g)
    sys.stdout.write(emit_qmat(m))
    return 0


def _cmd_spectrum(args) -> int:
    g = parse_smg(_read(args.file))
    values = eigenvalues(adjacency(g), tol=args.tol)
    if args.cluster is not None:
        spec = Spectrum(values, cluster_tolerance=args.cluster)
        for value, count in spec.multiplicities():
            print(f"{_FMT.format(value)} {count}")
    else:
        for value in values:
            print(_FMT.format(value))
    return 0


def _cmd_bounds(args) -> int:
    g = parse_smg(_read(args.file))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        rep = bounds(g, tol=args.tol)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    print(f"lambda1: {_FMT.format(rep.lambda1)}")
    print(
        f"bound skeleton: {_FMT.format(rep.bound_skeleton)} "
        f"(holds: {_yes(rep.holds_skeleton)})"
    )
    print(
        f"bound min-degree: {_FMT.format(rep.bound_min_degree)} "
        f"(holds: {_yes(rep.holds_min_degree)})"
    )
    print(
        f"bound trace: {_FMT.format(rep.bound_trace)} "
        f"(holds: {_yes(rep.holds_trace)})"
    )
    if args.closed_form_trace:
        print(
            f"bound trace closed-form: {_FMT.format(rep.bound_trace_closed_form)}"
        )
    return 0 if rep.all_hold else 1


def _cmd_recognize(args) -> int:
    matrix = parse_qmat(_read(args.file))
    outcome = reconstruct(matrix, allow_isolated=args.allow_isolated)
    if isinstance(outcome, Rejected):
        print(
            f"not semigraphical: {outcome.reason.value}: "
            f"witness {_render_witness(outcome.witness)}",
            file=sys.stderr,
        )
        return 1
    g = outcome.semigraph
    print("semigraphical: yes")
    print(f"vertices: {g.n}")
    print(f"edges: {len(g.edges)}")
    for edge in g.edges:
        print("edge: " + " ".join(str(v + 1) for v in edge))
    print(
        "classes: "
        + " ".join(
            f"{i + 1}:{cls.value}" for i, cls in enumerate(outcome.classes)
        )
    )
    if args.emit:
        Path(args.emit).write_text(emit_smg(g))
        print(f"wrote {args.emit}")
    return 0


def _cmd_star(args) -> int:
    family = StarFamily.parse(args.family)
    g = star_semigraph(family, args.n)
    text = emit_qmat(adjacency(g)) if args.qmat else emit_smg(g)
    if args.emit:
        Path(args.emit).write_text(text)
        print(f"wrote {args.emit}")
    else:
        sys.stdout.write(text)
    return 0


def _cmd_random(args) -> int:
    g = random_semigraph(args.vertices, args.edges, args.max_size, args.seed)
    print(f"# requested {args.edges} edges, achieved {len(g.edges)}")
    sys.stdout.write(emit_smg(g))
    return 0


def _cmd_identities(args) -> int:
    g = parse_smg(_read(args.file))
    ids = sum_identities(g)
    rows = [
        ("degree-sum", ids.degree_sum_direct, ids.degree_sum_closed_form,
         ids.degree_sum_corrected),
        ("trace-square", ids.trace_sq_direct, ids.trace_sq_closed_form,
         ids.trace_sq_corrected),
    ]
    for name, direct, closed, corrected in rows:
        print(f"{name} direct: {_token(direct)}")
        print(f"{name} closed-form: {_token(closed)}")
        print(f"{name} corrected: {_token(corrected)}")
        print(f"{name} delta closed-minus-direct: {_token(closed - direct)}")
    return 0


def _cmd_report(args) -> int:
    g = parse_smg(_read(args.file))
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        paths = write_report(g, args.out, tol=args.tol)
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    for path in paths:
        print(str(path))
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="semigraph",
        description="Model semigraphs, their quarter-rational adjacency "
        "matrices, and their spectra.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check an edge-list file, summarize it")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.set_defaults(handler=_cmd_validate)

    p = sub.add_parser("matrix", help="print an adjacency-family matrix")
    p.add_argument("file", help="edge-list file, or - for stdin")
    group = p.add_mutually_exclusive_group()
    group.add_argument(
        "--skeleton", action="store_true", help="0/1 consecutive-pair matrix"
    )
    group.add_argument(
        "--excess", action="store_true", help="adjacency minus skeleton"
    )
    group.add_argument(
        "--check-decomposition",
        action="store_true",
        help="verify adjacency = skeleton + excess and print the result",
    )
    p.set_defaults(handler=_cmd_matrix)

    p = sub.add_parser("spectrum", help="print all eigenvalues, descending")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument(
        "--tol", type=float, default=DEFAULT_TOL,
        help="relative off-diagonal tolerance (default %(default)g)",
    )
    p.add_argument(
        "--cluster", type=float, metavar="TOL", default=None,
        help="group near-equal eigenvalues and print 'value count' lines",
    )
    p.set_defaults(handler=_cmd_spectrum)

    p = sub.add_parser("bounds", help="check lambda1 against its bounds")
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.add_argument(
        "--closed-form-trace", action="store_true",
        help="also print the closed-form trace bound (informational)",
    )
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser(
        "recognize", help="decide whether a matrix file is semigraphical"
    )
    p.add_argument("file", help="matrix file, or - for stdin")
    p.add_argument("--emit", metavar="PATH", help="write the rebuilt edge list")
    p.add_argument(
        "--allow-isolated", action="store_true",
        help="accept all-zero rows as isolated vertices",
    )
    p.set_defaults(handler=_cmd_recognize)

    p = sub.add_parser("star", help="generate a star-family semigraph")
    p.add_argument("--family", required=True, help="I or II")
    p.add_argument("--n", required=True, type=int, help="family parameter")
    p.add_argument(
        "--qmat", action="store_true",
        help="emit the adjacency matrix instead of the edge list",
    )
    p.add_argument("--emit", metavar="PATH", help="write to a file instead")
    p.set_defaults(handler=_cmd_star)

    p = sub.add_parser("random", help="generate a seeded random semigraph")
    p.add_argument("--vertices", required=True, type=int)
    p.add_argument("--edges", required=True, type=int)
    p.add_argument("--max-size", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(handler=_cmd_random)

    p = sub.add_parser(
        "identities", help="degree-sum and trace-square totals, three ways"
    )
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.set_defaults(handler=_cmd_identities)

    p = sub.add_parser(
        "report", help="write CSVs and figures for an edge-list file"
    )
    p.add_argument("file", help="edge-list file, or - for stdin")
    p.add_argument("--out", required=True, metavar="DIR")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL)
    p.set_defaults(handler=_cmd_report)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else 0
    try:
        return args.handler(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (IllegalEntry, AsymmetricInput, NonzeroDiagonal) as exc:
        print(f"not semigraphical: {exc}", file=sys.stderr)
        return 1
    except SemigraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
