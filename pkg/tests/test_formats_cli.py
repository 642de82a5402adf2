"""Text formats and the command line: parsing, emission, exit codes, and
byte determinism."""

import io
import shutil
import subprocess
import sys
from fractions import Fraction

import pytest

from semigraphs import (
    AsymmetricInput,
    DuplicateEdge,
    DuplicateVertexInEdge,
    EdgeTooShort,
    IllegalEntry,
    NonzeroDiagonal,
    PairInTwoEdges,
    ParseError,
    VertexOutOfRange,
    adjacency,
    emit_qmat,
    emit_smg,
    excess,
    parse_qmat,
    parse_smg,
    random_semigraph,
    star_type2,
)
from semigraphs.cli import main
from tests.conftest import FIXTURES, fixture_body, fixture_text

F = Fraction


def run_cli(argv, stdin_text=None, monkeypatch=None):
    """Invoke the CLI in process; returns (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    saved = sys.stdout, sys.stderr, sys.stdin
    sys.stdout, sys.stderr = out, err
    if stdin_text is not None:
        sys.stdin = io.StringIO(stdin_text)
    try:
        code = main(argv)
    finally:
        sys.stdout, sys.stderr, sys.stdin = saved
    return code, out.getvalue(), err.getvalue()


class TestSmgFormat:
    def test_fixture_round_trip(self, demo9):
        assert parse_smg(fixture_text("nine-vertex-demo.smg")) == demo9
        assert emit_smg(demo9) == fixture_body("nine-vertex-demo.smg")

    def test_emit_is_canonical_and_stable(self, demo6):
        text = emit_smg(demo6)
        assert parse_smg(text) == demo6
        assert emit_smg(parse_smg(text)) == text
        assert text.endswith("\n")

    def test_comments_and_blanks_ignored(self):
        g = parse_smg("# header\n\n n 3 # trailing\n\ne 1 2\n")
        assert g.n == 3 and g.edges == ((0, 1),)

    def test_reversed_edge_canonicalized(self):
        assert parse_smg("n 2\ne 2 1").edges == ((0, 1),)

    def test_missing_header(self):
        with pytest.raises(ParseError) as exc:
            parse_smg("e 1 2\n")
        assert "before the vertex count" in str(exc.value)
        with pytest.raises(ParseError) as exc:
            parse_smg("# only a comment\n")
        assert "missing" in str(exc.value)

    def test_header_errors(self):
        with pytest.raises(ParseError):
            parse_smg("n 3\nn 4")
        with pytest.raises(ParseError):
            parse_smg("n three")
        with pytest.raises(ParseError):
            parse_smg("n 0")
        with pytest.raises(ParseError):
            parse_smg("n 3 4")

    def test_unknown_directive(self):
        with pytest.raises(ParseError) as exc:
            parse_smg("n 3\nv 1 2")
        assert exc.value.line == 2

    def test_edge_errors_carry_lines(self):
        with pytest.raises(EdgeTooShort) as exc:
            parse_smg("n 3\ne 1")
        assert exc.value.line == 2
        with pytest.raises(ParseError):
            parse_smg("n 3\ne 1 x")
        with pytest.raises(ParseError):
            parse_smg("n 3\ne 0 1")
        with pytest.raises(VertexOutOfRange) as exc:
            parse_smg("n 3\n\ne 1 9")
        assert exc.value.line == 3
        assert exc.value.vertex == 8
        with pytest.raises(DuplicateVertexInEdge):
            parse_smg("n 3\ne 1 2 1")
        with pytest.raises(DuplicateEdge):
            parse_smg("n 3\ne 1 2\ne 2 1")
        with pytest.raises(PairInTwoEdges) as exc:
            parse_smg("n 4\ne 1 2 3\ne 2 3 4")
        assert exc.value.line == 3


class TestQmatFormat:
    def test_fixture_parses_to_golden(self, demo9):
        assert parse_qmat(fixture_text("nine-vertex-demo.qmat")) == adjacency(demo9)

    def test_emit_matches_fixture(self, demo9):
        assert emit_qmat(adjacency(demo9)) == fixture_body("nine-vertex-demo.qmat")

    def test_lossless_round_trip(self, demo6):
        text = emit_qmat(adjacency(demo6))
        assert emit_qmat(parse_qmat(text)) == text

    def test_decimal_spellings_accepted(self):
        m = parse_qmat("2\n0 0.5\n0.5 0\n")
        assert m[0, 1] == F(1, 2)
        m = parse_qmat("2\n0 0.25\n0.25 0\n")
        assert m[0, 1] == F(1, 4)
        m = parse_qmat("2\n0 2/4\n2/4 0\n")
        assert m[0, 1] == F(1, 2)

    def test_emitted_excess_documents_but_does_not_parse(self, demo6):
        text = emit_qmat(excess(demo6))
        assert text == fixture_body("six-vertex-excess.qmat")
        with pytest.raises(IllegalEntry):
            parse_qmat(text)

    def test_structure_errors(self):
        with pytest.raises(ParseError):
            parse_qmat("")
        with pytest.raises(ParseError):
            parse_qmat("2 2\n0 1\n1 0\n")
        with pytest.raises(ParseError):
            parse_qmat("x\n")
        with pytest.raises(ParseError):
            parse_qmat("0\n")
        with pytest.raises(ParseError) as exc:
            parse_qmat("2\n0 1\n")
        assert "expected 2 matrix rows" in str(exc.value)
        with pytest.raises(ParseError):
            parse_qmat("2\n0 1\n1 0\n0 0\n")
        with pytest.raises(ParseError) as exc:
            parse_qmat("2\n0 1 1\n1 0\n")
        assert exc.value.line == 2

    def test_entry_errors(self):
        with pytest.raises(ParseError) as exc:
            parse_qmat("2\n0 x\nx 0\n")
        assert exc.value.line == 2
        with pytest.raises(IllegalEntry) as exc:
            parse_qmat("2\n0 3/4\n3/4 0\n")
        assert exc.value.line == 2
        assert exc.value.value == F(3, 4)
        with pytest.raises(IllegalEntry):
            parse_qmat("2\n0 -1\n-1 0\n")

    def test_domain_errors_carry_lines(self):
        with pytest.raises(NonzeroDiagonal) as exc:
            parse_qmat("2\n1 0\n0 0\n")
        assert exc.value.line == 2
        with pytest.raises(AsymmetricInput) as exc:
            parse_qmat("2\n0 1\n2 0\n")
        assert exc.value.line == 3


class TestCliHappyPaths:
    def test_validate(self):
        code, out, err = run_cli(["validate", str(FIXTURES / "nine-vertex-demo.smg")])
        assert code == 0 and err == ""
        assert out == (
            "vertices: 9\nedges: 5\nrank: 5\nconnected: yes\n"
            "pure-end vertices: 4\npure-middle vertices: 1\n"
            "middle-end vertices: 4\nisolated vertices: 0\n"
            "full edges: 2\nquarter edges: 1\n"
            "half-one-partial edges: 2\nhalf-two-partial edges: 0\n"
        )

    def test_validate_from_stdin(self):
        code, out, _ = run_cli(["validate", "-"], stdin_text="n 2\ne 1 2\n")
        assert code == 0
        assert "vertices: 2" in out

    def test_matrix_variants(self, demo6):
        path = str(FIXTURES / "six-vertex-demo.smg")
        assert run_cli(["matrix", path])[1] == emit_qmat(adjacency(demo6))
        assert run_cli(["matrix", path, "--skeleton"])[1] == fixture_body(
            "six-vertex-skeleton.qmat"
        )
        assert run_cli(["matrix", path, "--excess"])[1] == fixture_body(
            "six-vertex-excess.qmat"
        )
        code, out, _ = run_cli(["matrix", path, "--check-decomposition"])
        assert code == 0 and out == "decomposition: ok\n"

    def test_matrix_flags_exclusive(self):
        code, _, _ = run_cli(
            ["matrix", str(FIXTURES / "six-vertex-demo.smg"), "--skeleton", "--excess"]
        )
        assert code == 2

    def test_spectrum(self):
        code, out, _ = run_cli(["spectrum", str(FIXTURES / "nine-vertex-demo.smg")])
        assert code == 0
        lines = out.splitlines()
        assert len(lines) == 9
        assert lines[0] == "8.790696584"

    def test_spectrum_clustered(self):
        code, out, _ = run_cli(
            ["spectrum", str(FIXTURES / "star-ii-4.smg"), "--cluster", "1e-7"]
        )
        assert code == 0
        assert out == "4 1\n2 3\n-2 5\n"

    def test_spectrum_deterministic(self):
        argv = ["spectrum", str(FIXTURES / "nine-vertex-demo.smg")]
        assert run_cli(argv)[1] == run_cli(argv)[1]

    def test_bounds(self):
        code, out, err = run_cli(
            ["bounds", str(FIXTURES / "nine-vertex-demo.smg"), "--closed-form-trace"]
        )
        assert code == 0 and err == ""
        assert out == (
            "lambda1: 8.790696584\n"
            "bound skeleton: 30 (holds: yes)\n"
            "bound min-degree: 0.5 (holds: yes)\n"
            "bound trace: 10.46156988 (holds: yes)\n"
            "bound trace closed-form: 10.52510227\n"
        )

    def test_bounds_warns_on_disconnected(self):
        code, _, err = run_cli(
            ["bounds", str(FIXTURES / "isolated-vertex-demo.smg")]
        )
        assert code == 0
        assert "not connected" in err

    def test_recognize(self, tmp_path, demo9):
        code, out, err = run_cli(
            ["recognize", str(FIXTURES / "nine-vertex-demo.qmat")]
        )
        assert code == 0 and err == ""
        assert out == (
            "semigraphical: yes\nvertices: 9\nedges: 5\n"
            "edge: 1 2 3 4 5\nedge: 1 6 8\nedge: 2 7 8\nedge: 3 9\nedge: 6 7\n"
            "classes: 1:pure-end 2:middle-end 3:middle-end 4:pure-middle "
            "5:pure-end 6:middle-end 7:middle-end 8:pure-end 9:pure-end\n"
        )
        emit_path = tmp_path / "rebuilt.smg"
        code, out, _ = run_cli(
            [
                "recognize",
                str(FIXTURES / "nine-vertex-demo.qmat"),
                "--emit",
                str(emit_path),
            ]
        )
        assert code == 0
        assert parse_smg(emit_path.read_text()) == demo9

    def test_recognize_allow_isolated(self):
        path = str(FIXTURES / "isolated-vertex-demo.qmat")
        code, _, err = run_cli(["recognize", path])
        assert code == 1
        assert "coverage-gap" in err
        code, out, _ = run_cli(["recognize", path, "--allow-isolated"])
        assert code == 0
        assert "10:isolated" in out

    def test_star(self, tmp_path):
        code, out, _ = run_cli(["star", "--family", "I", "--n", "3"])
        assert code == 0
        assert out == fixture_body("star-i-3.smg")
        code, out, _ = run_cli(["star", "--family", "II", "--n", "4", "--qmat"])
        assert code == 0
        assert out == emit_qmat(adjacency(star_type2(4)))
        target = tmp_path / "star.smg"
        code, out, _ = run_cli(
            ["star", "--family", "II", "--n", "4", "--emit", str(target)]
        )
        assert code == 0 and "wrote" in out
        assert target.read_text() == fixture_body("star-ii-4.smg")

    def test_random(self):
        argv = [
            "random", "--vertices", "10", "--edges", "5",
            "--max-size", "4", "--seed", "42",
        ]
        code, out, _ = run_cli(argv)
        assert code == 0
        assert out == run_cli(argv)[1]
        body = "".join(
            line for line in out.splitlines(keepends=True)
            if not line.startswith("#")
        )
        assert parse_smg(body) == random_semigraph(10, 5, 4, seed=42)
        assert out.startswith("# requested 5 edges, achieved ")

    def test_identities(self):
        code, out, _ = run_cli(
            ["identities", str(FIXTURES / "six-vertex-demo.smg")]
        )
        assert code == 0
        assert out == (
            "degree-sum direct: 47/2\n"
            "degree-sum closed-form: 24\n"
            "degree-sum corrected: 47/2\n"
            "degree-sum delta closed-minus-direct: 1/2\n"
            "trace-square direct: 277/8\n"
            "trace-square closed-form: 283/8\n"
            "trace-square corrected: 277/8\n"
            "trace-square delta closed-minus-direct: 3/4\n"
        )


class TestCliRejections:
    def test_not_semigraphical_witness_rendering(self):
        code, _, err = run_cli(
            ["recognize", str(FIXTURES / "ambiguity-naive.qmat")]
        )
        assert code == 1
        assert err == (
            "not semigraphical: overlapping-edges: "
            "witness ((6, 7), (6, 4, 7), (6, 3, 7))\n"
        )

    def test_broken_run_from_stdin(self):
        code, _, err = run_cli(
            ["recognize", "-"], stdin_text="2\n0 3\n3 0\n"
        )
        assert code == 1
        assert err == (
            "not semigraphical: broken-distance-run: witness (1, 2, 3)\n"
        )

    def test_illegal_entry_is_domain_rejection(self):
        code, _, err = run_cli(
            ["recognize", "-"], stdin_text="2\n0 3/4\n3/4 0\n"
        )
        assert code == 1
        assert err == "not semigraphical: line 2: entry (0, 1) has illegal value 3/4\n"

    def test_validate_pair_conflict(self):
        code, _, err = run_cli(
            ["validate", "-"], stdin_text="n 4\ne 1 2 3\ne 2 3 4\n"
        )
        assert code == 1
        assert "vertex pair" in err

    def test_invalid_family(self):
        code, _, err = run_cli(["star", "--family", "X", "--n", "2"])
        assert code == 1
        assert "unknown star family" in err


class TestCliUsageErrors:
    def test_parse_error_is_usage(self):
        code, _, err = run_cli(["recognize", "-"], stdin_text="2\n0 x\nx 0\n")
        assert code == 2
        assert "is not a number" in err

    def test_missing_file(self, tmp_path):
        code, _, err = run_cli(["validate", str(tmp_path / "absent.smg")])
        assert code == 2

    def test_no_arguments(self):
        assert run_cli([])[0] == 2

    def test_unknown_subcommand(self):
        assert run_cli(["frobnicate"])[0] == 2

    def test_bad_generator_arguments(self):
        code, _, err = run_cli(
            ["random", "--vertices", "1", "--edges", "1"]
        )
        assert code == 2
        assert "at least 2" in err

    def test_bad_star_parameter(self):
        code, _, _ = run_cli(["star", "--family", "I", "--n", "-3"])
        assert code == 2


class TestEntryPoints:
    def test_module_runner(self):
        proc = subprocess.run(
            [sys.executable, "-m", "semigraphs", "validate",
             str(FIXTURES / "six-vertex-demo.smg")],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert "vertices: 6" in proc.stdout

    def test_console_script(self):
        exe = shutil.which("semigraph")
        assert exe is not None, "console script not installed"
        proc = subprocess.run(
            [exe, "star", "--family", "II", "--n", "1"],
            capture_output=True, text=True,
        )
        assert proc.returncode == 0
        assert proc.stdout == "n 3\ne 2 1 3\n"
