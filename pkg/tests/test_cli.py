import io
import json
import xml.etree.ElementTree as ET

import pytest

from tetrotile.commands.cli import main, parse_config, run
from tetrotile.commands.config import EXIT_ABORTED, EXIT_INVALID, EXIT_OK, EXIT_USAGE, Command, OutputFormat


def run_args(argv, stdin_text=""):
    """Run a command with in-memory streams and return (code, stdout, stderr)"""
    stdout, stderr = io.StringIO(), io.StringIO()
    code = run(parse_config(argv), stdin=io.StringIO(stdin_text), stdout=stdout, stderr=stderr)
    return code, stdout.getvalue(), stderr.getvalue()


@pytest.mark.cli
class TestParseConfig:
    """Test argument validation"""

    def test_defaults(self):
        """Test the default format and trace flag of tile"""
        config = parse_config(["tile", "--n", "5"])
        assert config.command is Command.TILE
        assert config.format is OutputFormat.JSON
        assert not config.no_trace

    @pytest.mark.parametrize("argv", [
        ["tile", "--format", "csv", "--n", "4"],
        ["tile"],
        ["tile", "--n", "0"],
        ["tile", "--n", "five"],
        ["solve", "--n", "5"],
        ["solve", "--n", "4", "--budget", "-1"],
        ["solve", "--n", "4", "--budget", "0", "--region", "an"],
        ["count", "--n", "5", "--budget", "1", "--max-nodes", "0"],
        ["sequence", "--bound", "0"],
        ["verify"],
        ["frobnicate"],
    ])
    def test_usage_errors(self, argv, capsys):
        """Test that bad arguments exit with status 2 before any work"""
        assert main(argv) == EXIT_USAGE
        assert capsys.readouterr().err

    def test_limits(self):
        """Test that search flags override configured limits"""
        limits = parse_config(["solve", "--n", "5", "--budget", "1", "--max-nodes", "7"]).limits()
        assert limits.max_nodes == 7


@pytest.mark.cli
class TestTileCommand:
    """Test the tile command"""

    def test_ascii_seventeen(self):
        """Test the 17x17 drawing with its 5 monominoes"""
        code, out, _ = run_args(["tile", "--n", "17", "--format", "ascii"])
        assert code == EXIT_OK
        assert len(out.splitlines()) == 17
        assert out.count(".") == 5

    def test_json_without_trace(self):
        """Test that --no-trace drops the trace"""
        _, out, _ = run_args(["tile", "--n", "6", "--no-trace"])
        data = json.loads(out)
        assert "trace" not in data
        assert len(data["monominoes"]) == 4

    def test_svg(self):
        """Test that SVG output parses as XML"""
        _, out, _ = run_args(["tile", "--n", "7", "--format", "svg"])
        assert ET.fromstring(out).tag.endswith("svg")

    def test_repeatable(self):
        """Test that repeated runs are byte-identical"""
        assert run_args(["tile", "--n", "23"]) == run_args(["tile", "--n", "23"])

    def test_output_file(self, tmp_path):
        """Test writing to --output instead of stdout"""
        path = tmp_path / "t.json"
        code, out, _ = run_args(["tile", "--n", "8", "--output", str(path)])
        assert code == EXIT_OK
        assert out == ""
        assert json.loads(path.read_text(encoding="utf-8"))["region"] == {"kind": "square", "n": 8}

    def test_output_directory_missing(self, tmp_path):
        """Test that an unwritable output path is a usage error"""
        code, _, err = run_args(["tile", "--n", "4", "--output", str(tmp_path / "missing" / "t.json")])
        assert code == EXIT_USAGE
        assert err.startswith("error:")


@pytest.mark.cli
class TestVerifyCommand:
    """Test the verify command"""

    def test_valid_file(self, valid_document):
        """Test a constructed tiling read from disk"""
        code, out, err = run_args(["verify", "--input", str(valid_document)])
        assert code == EXIT_OK
        assert json.loads(out)["valid"] is True
        assert err == ""

    def test_overlap(self, overlapping_document):
        """Test that overlaps give exit 1 and list the cells on stderr"""
        code, out, err = run_args(["verify", "--input", str(overlapping_document)])
        assert code == EXIT_INVALID
        assert json.loads(out)["valid"] is False
        assert "overlapping cells:" in err
        assert "(1, 1)" in err

    def test_malformed_document(self):
        """Test that unparsable input is reported as invalid"""
        code, _, err = run_args(["verify", "--input", "-"], stdin_text="{not json")
        assert code == EXIT_INVALID
        assert "invalid document" in err

    def test_missing_file(self, tmp_path):
        """Test that a missing input file is a usage error"""
        code, _, _ = run_args(["verify", "--input", str(tmp_path / "absent.json")])
        assert code == EXIT_USAGE

    @pytest.mark.integration
    def test_tile_then_verify(self):
        """Test piping every construction up to 100 back through verify"""
        for n in range(1, 101):
            _, document, _ = run_args(["tile", "--n", str(n)])
            code, out, _ = run_args(["verify", "--input", "-"], stdin_text=document)
            assert code == EXIT_OK, n
            assert json.loads(out)["cells_total"] == n * n


@pytest.mark.cli
class TestRenderCommand:
    """Test the render command"""

    def test_ascii(self, valid_document):
        """Test drawing a stored document"""
        code, out, _ = run_args(["render", "--input", str(valid_document)])
        assert code == EXIT_OK
        assert len(out.splitlines()) == 5
        assert out.count(".") == 5

    def test_svg_from_stdin(self):
        """Test drawing a piped document as SVG"""
        _, document, _ = run_args(["tile", "--n", "4"])
        code, out, _ = run_args(["render", "--input", "-", "--format", "svg"], stdin_text=document)
        assert code == EXIT_OK
        assert "<path" in out

    def test_json_normalizes(self):
        """Test that re-emitted JSON matches the canonical form"""
        _, document, _ = run_args(["tile", "--n", "9"])
        _, out, _ = run_args(["render", "--input", "-", "--format", "json"], stdin_text=document)
        assert out == document


@pytest.mark.cli
@pytest.mark.solver
class TestSearchCommands:
    """Test solve, min and count"""

    def test_min_six(self):
        """Test the least monomino count of the 6x6 square"""
        code, out, _ = run_args(["min", "--n", "6"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert (data["n"], data["min_monominoes"], data["max_tetrominoes"]) == (6, 4, 8)

    def test_solve_expect_matches(self):
        """Test that a matching --expect exits 0"""
        code, out, _ = run_args(["solve", "--n", "5", "--budget", "1", "--expect", "infeasible"])
        assert code == EXIT_OK
        assert json.loads(out)["status"] == "infeasible"

    def test_solve_expect_mismatch(self):
        """Test that a mismatching --expect exits 1"""
        code, _, err = run_args(["solve", "--n", "4", "--budget", "0", "--expect", "infeasible"])
        assert code == EXIT_INVALID
        assert "expected infeasible" in err

    def test_solve_found(self):
        """Test the JSON report of a successful search"""
        _, out, _ = run_args(["solve", "--n", "5", "--budget", "1", "--region", "an"])
        data = json.loads(out)
        assert data["status"] == "found"
        assert (data["t_count"], data["mono_count"]) == (5, 1)
        assert data["region"] == "an"

    def test_solve_ascii(self):
        """Test drawing the tiling found"""
        code, out, _ = run_args(["solve", "--n", "4", "--budget", "0", "--format", "ascii"])
        assert code == EXIT_OK
        assert len(out.splitlines()) == 4

    def test_solve_aborted(self):
        """Test that hitting the node limit exits 3 with the abort reason"""
        code, out, err = run_args(["solve", "--n", "6", "--budget", "3", "--max-nodes", "1"])
        assert code == EXIT_ABORTED
        data = json.loads(out)
        assert data["status"] == "aborted"
        assert data["abort_reason"] == "nodes"
        assert "aborted" in err

    def test_min_aborted(self):
        """Test that an aborted minimum search exits 3"""
        code, out, _ = run_args(["min", "--n", "6", "--max-nodes", "1"])
        assert code == EXIT_ABORTED
        assert json.loads(out)["status"] == "aborted"

    def test_aborted_report_goes_to_output_file(self, tmp_path):
        """Test that an aborted search writes its report to --output, not stdout"""
        path = tmp_path / "min.json"
        code, out, err = run_args(["min", "--n", "6", "--max-nodes", "1", "--output", str(path)])
        assert code == EXIT_ABORTED
        assert out == ""
        assert json.loads(path.read_text())["status"] == "aborted"
        assert "aborted" in err

    def test_count(self):
        """Test counting the 4x4 T-tilings"""
        code, out, _ = run_args(["count", "--n", "4", "--budget", "0", "--symmetry"])
        assert code == EXIT_OK
        data = json.loads(out)
        assert (data["raw"], data["orbits"]) == (2, 1)

    def test_count_without_symmetry(self):
        """Test that orbits are omitted unless requested"""
        _, out, _ = run_args(["count", "--n", "2", "--budget", "4"])
        assert "orbits" not in json.loads(out)


@pytest.mark.cli
class TestSequenceCommand:
    """Test the sequence command"""

    def test_csv(self):
        """Test the default table"""
        code, out, _ = run_args(["sequence", "--bound", "4"])
        assert code == EXIT_OK
        assert out.splitlines() == ["n,max_t,min_mono,residue", "1,0,1,1", "2,0,4,2", "3,1,5,3", "4,4,0,0"]

    def test_json(self):
        """Test the JSON form"""
        _, out, _ = run_args(["sequence", "--bound", "10", "--format", "json"])
        rows = json.loads(out)
        assert [row["min_mono"] for row in rows] == [1, 4, 5, 0, 5, 4, 5, 0, 5, 4]

    def test_default_bound(self):
        """Test that the configured bound applies without --bound"""
        _, out, _ = run_args(["sequence"])
        assert len(out.splitlines()) == 101
