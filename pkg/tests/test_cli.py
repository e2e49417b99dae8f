"""Command line behavior: output, exit codes, and determinism."""

import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from fuzzycurve.cli import main
from fuzzycurve.dataio import worked_example_json

SVG_NS = "{http://www.w3.org/2000/svg}"
GOLDEN = Path(__file__).parent / "data/worked_example_table.txt"


@pytest.fixture
def example_file(tmp_path) -> Path:
    path = tmp_path / "worked_example.json"
    path.write_text(worked_example_json())
    return path


def test_validate_ok(example_file, capsys):
    assert main(["validate", str(example_file)]) == 0
    assert capsys.readouterr().out == "ok (4 points)\n"


def test_validate_reports_violations(tmp_path, capsys):
    bad = worked_example_json().replace("-12", "-1")  # ll.x becomes -1 > l.x
    path = tmp_path / "bad.json"
    path.write_text(bad)
    assert main(["validate", str(path)]) == 1
    out = capsys.readouterr().out
    assert "point 0: x: order breaks at pair (ll, l)" in out


def test_validate_missing_file(tmp_path, capsys):
    assert main(["validate", str(tmp_path / "nope.json")]) == 1
    assert "error:" in capsys.readouterr().err


def test_validate_bad_json(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("[{]")
    assert main(["validate", str(path)]) == 1
    assert "invalid JSON" in capsys.readouterr().err


def test_table_matches_golden(example_file, capsys):
    assert main(["table", str(example_file)]) == 0
    assert capsys.readouterr().out == GOLDEN.read_text()


def test_table_csv_format(example_file, capsys):
    assert main(["table", str(example_file), "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "point,stage,channel,x,y"
    assert len(lines) == 1 + 4 * 18


def test_table_show_published(example_file, capsys):
    assert main(["table", str(example_file), "--show-published"]) == 0
    out = capsys.readouterr().out
    assert "misprints" in out
    assert "(15.0000, 7.0000)" in out

    assert main(["table", str(example_file), "--alpha", "0.25", "--show-published"]) == 0
    assert "no published reference" in capsys.readouterr().out


def test_table_other_alpha(example_file, capsys):
    assert main(["table", str(example_file), "--alpha", "1"]) == 0
    out = capsys.readouterr().out
    assert "alpha: 1.0" in out


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["tables"],
        ["table"],
        ["table", "x.json", "--alpha", "abc"],
        ["table", "x.json", "--alpha", "1.5"],
        ["curves", "x.json", "--degree", "0"],
        ["curves", "x.json", "--degree", "6"],
        ["curves", "x.json", "--samples", "1"],
        ["curves", "x.json", "--format", "tsv"],
        ["curves", "x.json", "--parametrization", "arc"],
    ],
)
def test_usage_errors_exit_2(argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def run_curves(example_file, out_dir, extra=()):
    return main(
        ["curves", str(example_file), "--out", str(out_dir), "--samples", "40", *extra]
    )


def test_curves_writes_stage_files(example_file, tmp_path, capsys):
    out = tmp_path / "out"
    assert run_curves(example_file, out) == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "stage_a_fuzzy.csv",
        "stage_a_fuzzy.svg",
        "stage_b_alpha_cut.csv",
        "stage_b_alpha_cut.svg",
        "stage_c_reduced.csv",
        "stage_c_reduced.svg",
        "stage_d_defuzzified.csv",
        "stage_d_defuzzified.svg",
        "stages.png",
    ]
    stdout = capsys.readouterr().out
    assert stdout.count("wrote ") == 9

    expected_lines = {
        "stage_a_fuzzy.csv": 1 + 7 * 40,
        "stage_b_alpha_cut.csv": 1 + 7 * 40,
        "stage_c_reduced.csv": 1 + 3 * 40,
        "stage_d_defuzzified.csv": 1 + 1 * 40,
    }
    for name, count in expected_lines.items():
        assert len((out / name).read_text().splitlines()) == count

    expected_polylines = {
        "stage_a_fuzzy.svg": 7,
        "stage_b_alpha_cut.svg": 7,
        "stage_c_reduced.svg": 3,
        "stage_d_defuzzified.svg": 1,
    }
    for name, count in expected_polylines.items():
        root = ET.parse(out / name).getroot()
        assert len(root.findall(f".//{SVG_NS}polyline")) == count


def test_curves_json_format(example_file, tmp_path):
    out = tmp_path / "out"
    assert run_curves(example_file, out, ["--format", "json"]) == 0
    assert (out / "stage_a_fuzzy.json").exists()
    assert not (out / "stage_a_fuzzy.csv").exists()


def test_curves_svg_only_format(example_file, tmp_path):
    out = tmp_path / "out"
    assert run_curves(example_file, out, ["--format", "svg"]) == 0
    names = sorted(p.name for p in out.iterdir())
    assert names == [
        "stage_a_fuzzy.svg",
        "stage_b_alpha_cut.svg",
        "stage_c_reduced.svg",
        "stage_d_defuzzified.svg",
        "stages.png",
    ]


def test_curves_uniform_centripetal_run(example_file, tmp_path):
    for choice in ("uniform", "centripetal"):
        out = tmp_path / choice
        assert run_curves(example_file, out, ["--parametrization", choice]) == 0


def test_curves_degree_needs_points(example_file, tmp_path, capsys):
    assert run_curves(example_file, tmp_path / "o", ["--degree", "5"]) == 1
    assert "at least 6 points" in capsys.readouterr().err


def test_curves_deterministic_bytes(example_file, tmp_path):
    out1, out2 = tmp_path / "a", tmp_path / "b"
    assert run_curves(example_file, out1) == 0
    assert run_curves(example_file, out2) == 0
    for p in sorted(out1.iterdir()):
        assert p.read_bytes() == (out2 / p.name).read_bytes(), p.name


def test_example_subcommand(tmp_path, capsys):
    dest = tmp_path / "copy.json"
    assert main(["example", str(dest)]) == 0
    assert dest.read_text() == worked_example_json()
    assert main(["example", str(dest)]) == 1
    assert "already exists" in capsys.readouterr().err


def test_module_execution_smoke(example_file):
    proc = subprocess.run(
        [sys.executable, "-m", "fuzzycurve.cli", "table", str(example_file)],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == GOLDEN.read_text()
