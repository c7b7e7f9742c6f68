"""Tests for the command-line interface."""

import json
from pathlib import Path

import pytest
from click.testing import CliRunner

from stable_sections import __version__
from stable_sections.algebra.charclasses import sw_virtual
from stable_sections.algebra.f2linalg import F2Matrix
from stable_sections.cli import main
from stable_sections.config import configure
from stable_sections.thom.interchange import parse_module, render_module, write_module
from stable_sections.thom.module import SteenrodModule, build_thom_module, sphere_module


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()


def _stdout_lines(result) -> list[str]:
    return result.stdout.splitlines()


class TestMain:
    """Tests for the command group."""

    def test_version(self, runner: CliRunner):
        """--version prints the package version."""
        result = runner.invoke(main, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.stdout

    def test_info(self, runner: CliRunner):
        """info shows the configuration."""
        configure(steenrod_degree_cap=48)
        result = runner.invoke(main, ["info"])
        assert result.exit_code == 0
        assert "Steenrod degree cap: 48" in result.stdout
        assert "Ext window: s <= 8, t <= 14" in result.stdout


class TestRangeCommand:
    """Tests for `range`."""

    def test_d7(self, runner: CliRunner):
        """The zero-section case for d = 7."""
        result = runner.invoke(main, ["range", "--n", "2", "--r", "1", "--d", "7", "--zero-section"])
        assert result.exit_code == 0
        lines = _stdout_lines(result)
        assert lines[0] == "N = 3, e = 2"
        assert lines[-1] == "iso in degrees * ≤ 2"

    def test_d6_prints_note(self, runner: CliRunner):
        """Even d reports the conservative bound and says so."""
        result = runner.invoke(main, ["range", "--n", "2", "--d", "6", "--zero-section"])
        assert result.exit_code == 0
        assert "line-bundle bound: * < 5/2" in result.stdout
        assert "note: integer ranges differ by one degree" in result.stdout
        assert _stdout_lines(result)[-1] == "iso in degrees * ≤ 1"

    def test_empty_range(self, runner: CliRunner):
        """d = 1 gives an empty range and still succeeds."""
        result = runner.invoke(main, ["range", "--n", "2", "--d", "1", "--zero-section"])
        assert result.exit_code == 0
        assert _stdout_lines(result)[-1] == "empty range: no degrees"

    def test_inadmissible(self, runner: CliRunner):
        """e < 2 exits 2 with a diagnostic."""
        result = runner.invoke(main, ["range", "--n", "2", "--d", "7", "--codim", "2"])
        assert result.exit_code == 2
        assert "excess codimension" in result.stderr
        assert result.stdout == ""

    def test_missing_level(self, runner: CliRunner):
        """Either --d or --amp is required."""
        result = runner.invoke(main, ["range", "--n", "2", "--zero-section"])
        assert result.exit_code == 2


class TestCharacteristicClassCommands:
    """Tests for `sw` and `chern`."""

    @pytest.mark.parametrize(("d", "expected"), [(8, "1"), (7, "1 + x")])
    def test_sw(self, runner: CliRunner, d: int, expected: str):
        """The class depends on the parity of d."""
        result = runner.invoke(main, ["sw", "--n", "2", "--d", str(d)])
        assert result.exit_code == 0
        assert result.stdout == f"{expected}\n"

    def test_chern_cp1(self, runner: CliRunner):
        """CP^1 also reports the mapping-space model."""
        result = runner.invoke(main, ["chern", "--n", "1", "--d", "3"])
        assert result.exit_code == 0
        assert _stdout_lines(result) == ["1 + 4h", "Γ ≃ map(S², S³)"]

    def test_chern_cp2(self, runner: CliRunner):
        """CP^2 prints only the class."""
        result = runner.invoke(main, ["chern", "--n", "2", "--d", "3"])
        assert result.stdout == "1 + 6h + 12h^2\n"

    def test_invalid(self, runner: CliRunner):
        """d = 0 exits 2."""
        result = runner.invoke(main, ["sw", "--n", "2", "--d", "0"])
        assert result.exit_code == 2


class TestThomCommand:
    """Tests for `thom`."""

    def test_stdout(self, runner: CliRunner):
        """The module document parses back to the built module."""
        result = runner.invoke(main, ["thom", "--n", "2", "--d", "7"])
        assert result.exit_code == 0
        w = sw_virtual(2, 7)
        assert parse_module(result.stdout) == build_thom_module(w.ring, w, 2)

    def test_output_file(self, runner: CliRunner, temp_output_dir: Path):
        """-o writes the document and prints nothing on stdout."""
        path = temp_output_dir / "thom.json"
        result = runner.invoke(main, ["thom", "--n", "2", "--d", "6", "-o", str(path)])
        assert result.exit_code == 0
        assert result.stdout == ""
        assert json.loads(path.read_text())["degree_range"] == [2, 6]


class TestExtCommand:
    """Tests for `ext`."""

    def test_sphere_table(self, runner: CliRunner):
        """The sphere's h0 tower and h2 appear in the table."""
        result = runner.invoke(
            main, ["ext", "--sphere", "--max-s", "3", "--max-t", "6", "--format", "table"]
        )
        assert result.exit_code == 0
        lines = _stdout_lines(result)
        for s in range(4):
            assert f"{s} {s} 1" in lines
        assert "1 4 1" in lines

    def test_module_file(self, runner: CliRunner, temp_output_dir: Path):
        """A module file resolves to an ASCII chart."""
        path = write_module(sphere_module(), temp_output_dir / "sphere.json")
        result = runner.invoke(main, ["ext", str(path), "--max-s", "2", "--max-t", "3"])
        assert result.exit_code == 0
        assert " 0 |  1  .  .  ." in _stdout_lines(result)

    def test_svg_output(self, runner: CliRunner, temp_output_dir: Path):
        """SVG charts can be written to a file."""
        out = temp_output_dir / "chart.svg"
        result = runner.invoke(
            main, ["ext", "--sphere", "--max-s", "2", "--max-t", "4", "--format", "svg", "-o", str(out)]
        )
        assert result.exit_code == 0
        assert out.read_text().startswith("<?xml")

    def test_empty_module(self, runner: CliRunner, temp_output_dir: Path):
        """The zero module gives an empty table."""
        path = write_module(SteenrodModule((0, 0)), temp_output_dir / "zero.json")
        result = runner.invoke(main, ["ext", str(path), "--format", "table"])
        assert result.exit_code == 0
        assert result.stdout == ""

    def test_malformed_file(self, runner: CliRunner, temp_output_dir: Path):
        """Parse failures exit 3."""
        path = temp_output_dir / "broken.json"
        path.write_text("{not json")
        result = runner.invoke(main, ["ext", str(path)])
        assert result.exit_code == 3

    def test_missing_file(self, runner: CliRunner, temp_output_dir: Path):
        """Unreadable files are parse failures."""
        result = runner.invoke(main, ["ext", str(temp_output_dir / "missing.json")])
        assert result.exit_code == 3

    def test_invalid_utf8(self, runner: CliRunner, temp_output_dir: Path):
        """Files that are not UTF-8 are parse failures."""
        path = temp_output_dir / "binary.json"
        path.write_bytes(b'{"degree_range": [0, 0], "basis": {"0": ["\xff\xfe"]}}')
        result = runner.invoke(main, ["ext", str(path)])
        assert result.exit_code == 3
        assert "UTF-8" in result.stderr

    def test_degree_cap(self, runner: CliRunner):
        """Windows beyond the cap exit 2."""
        result = runner.invoke(main, ["ext", "--sphere", "--max-t", "100"])
        assert result.exit_code == 2
        assert "degree cap" in result.stderr

    def test_inconsistent_module(
        self, runner: CliRunner, thom_even: SteenrodModule, temp_output_dir: Path
    ):
        """Modules breaking an Adem relation exit 2."""
        corrupted = thom_even.with_action(2, 2, F2Matrix.from_rows([[1]]))
        path = temp_output_dir / "corrupted.json"
        path.write_text(render_module(corrupted))
        result = runner.invoke(main, ["ext", str(path)])
        assert result.exit_code == 2
        assert "Sq2 Sq2" in result.stderr

    def test_needs_exactly_one_source(self, runner: CliRunner, temp_output_dir: Path):
        """A file and --sphere together, or neither, exit 2."""
        assert runner.invoke(main, ["ext"]).exit_code == 2
        path = write_module(sphere_module(), temp_output_dir / "sphere.json")
        assert runner.invoke(main, ["ext", str(path), "--sphere"]).exit_code == 2


class TestStableBettiCommand:
    """Tests for `stable-betti`."""

    def test_cp2(self, runner: CliRunner):
        """CP^2 through degree 9."""
        result = runner.invoke(main, ["stable-betti", "--cpn", "2", "--max", "9"])
        assert result.exit_code == 0
        assert result.stdout == "1 1 0 1 1 1 1 0 1 1\n"

    def test_by_degree(self, runner: CliRunner):
        """--by-degree prints one line per degree."""
        result = runner.invoke(main, ["stable-betti", "--betti", "1,2,1", "--max", "2", "--by-degree"])
        assert _stdout_lines(result) == ["0: 1", "1: 1", "2: 2"]

    def test_curve(self, runner: CliRunner):
        """Genus input uses (1, 2g, 1)."""
        result = runner.invoke(main, ["stable-betti", "--curve-genus", "1", "--max", "4"])
        assert result.stdout == "1 1 2 3 4\n"

    def test_invalid(self, runner: CliRunner):
        """Conflicting or unreadable input exits 2."""
        assert runner.invoke(main, ["stable-betti", "--cpn", "2", "--curve-genus", "1"]).exit_code == 2
        assert runner.invoke(main, ["stable-betti", "--betti", "1,x"]).exit_code == 2
        assert runner.invoke(main, ["stable-betti", "--betti", "0,1"]).exit_code == 2


class TestE1ZonesCommand:
    """Tests for `e1-zones`."""

    def test_n1(self, runner: CliRunner):
        """N = 1, e = 2 renders the grid with its footer."""
        result = runner.invoke(main, ["e1-zones", "--N", "1", "--e", "2", "--tmax", "8"])
        assert result.exit_code == 0
        assert "N = 1, e = 2; iso in degrees * ≤ 0" in _stdout_lines(result)

    def test_deterministic(self, runner: CliRunner):
        """Two invocations print identical bytes."""
        args = ["e1-zones", "--n", "2", "--amp", "7", "--format", "svg"]
        assert runner.invoke(main, args).stdout == runner.invoke(main, args).stdout

    def test_invalid(self, runner: CliRunner):
        """e < 2 and missing input exit 2."""
        assert runner.invoke(main, ["e1-zones", "--N", "1", "--e", "1"]).exit_code == 2
        assert runner.invoke(main, ["e1-zones"]).exit_code == 2

    def test_negative_n(self, runner: CliRunner):
        """N = -1 prints the no-columns message in both formats."""
        result = runner.invoke(main, ["e1-zones", "--N", "-1"])
        assert result.exit_code == 0
        assert result.stdout == "N < 0: the spectral sequence has no stable columns\n"
        svg = runner.invoke(main, ["e1-zones", "--N", "-1", "--format", "svg"])
        assert svg.exit_code == 0
        assert svg.stdout.startswith("<?xml")
        assert "no stable columns" in svg.stdout


class TestReproH2Command:
    """Tests for `repro-h2`."""

    @pytest.mark.parametrize(("d", "expected"), [(6, "Z/2"), (7, "0")])
    def test_default_window(self, runner: CliRunner, d: int, expected: str):
        """The verdict is the last line of stdout."""
        result = runner.invoke(main, ["repro-h2", "--d", str(d)])
        assert result.exit_code == 0
        assert _stdout_lines(result)[-1] == expected
        assert "stem 3 E2 total over s <= 8" in result.stderr

    @pytest.mark.parametrize("d", range(6, 31))
    def test_parity(self, runner: CliRunner, d: int):
        """Only d mod 2 matters."""
        result = runner.invoke(main, ["repro-h2", "--d", str(d)])
        assert result.exit_code == 0
        assert _stdout_lines(result)[-1] == ("Z/2" if d % 2 == 0 else "0")

    def test_deterministic(self, runner: CliRunner):
        """Two invocations print identical bytes."""
        args = ["repro-h2", "--d", "6"]
        assert runner.invoke(main, args).stdout == runner.invoke(main, args).stdout

    def test_rejects_small_d(self, runner: CliRunner):
        """d < 6 exits 2."""
        result = runner.invoke(main, ["repro-h2", "--d", "5"])
        assert result.exit_code == 2
        assert "d >= 6" in result.stderr


class TestPTorsionCommand:
    """Tests for `p-torsion`."""

    def test_values(self, runner: CliRunner):
        """true exactly when p >= n + 2."""
        assert runner.invoke(main, ["p-torsion", "--p", "5", "--n", "2"]).stdout == "true\n"
        assert runner.invoke(main, ["p-torsion", "--p", "2", "--n", "2"]).stdout == "false\n"

    def test_non_prime(self, runner: CliRunner):
        """Composite p exits 2."""
        assert runner.invoke(main, ["p-torsion", "--p", "9", "--n", "2"]).exit_code == 2
