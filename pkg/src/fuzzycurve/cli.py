"""Command line interface.

Subcommands:
  validate FILE   structural checks only; prints violations if any
  table FILE      per-stage pipeline values as text or CSV
  curves FILE     per-stage SVG drawings, sample tables, and overview PNG
  example [DEST]  write the bundled example dataset to DEST

Exit status: 0 on success, 1 when the input fails to load or validate,
2 on command line usage errors.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bspline import DegenerateChordError, ParamChoice, SolverError
from .bundle import run_curve_pipeline
from .dataio import DatasetFormatError, load_dataset, worked_example_json
from .figures import render_stage_figure
from .points import ValidationError, validate_dataset
from .render import export_bundles
from .report import stage_table_csv, stage_table_text


def _alpha_arg(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"alpha must be a number, got {text!r}")
    if not 0.0 <= value <= 1.0:
        raise argparse.ArgumentTypeError(f"alpha must lie in [0, 1], got {text}")
    return value


def _degree_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"degree must be an integer, got {text!r}")
    if not 1 <= value <= 5:
        raise argparse.ArgumentTypeError(f"degree must lie in [1, 5], got {value}")
    return value


def _samples_arg(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"samples must be an integer, got {text!r}")
    if value < 2:
        raise argparse.ArgumentTypeError(f"samples must be >= 2, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fuzzycurve",
        description="Lateral fuzzy data points and interpolating curve bundles.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", help="check a dataset file and report violations")
    p.add_argument("file", help="dataset JSON file")

    p = sub.add_parser("table", help="print the per-stage pipeline values")
    p.add_argument("file", help="dataset JSON file")
    p.add_argument("--alpha", type=_alpha_arg, default=0.5, help="cut level in [0, 1]")
    p.add_argument("--format", choices=("text", "csv"), default="text")
    p.add_argument(
        "--show-published",
        action="store_true",
        help="append notes on the published reference values (text format only)",
    )

    p = sub.add_parser("curves", help="write per-stage SVG, sample tables, and a PNG")
    p.add_argument("file", help="dataset JSON file")
    p.add_argument("--alpha", type=_alpha_arg, default=0.5, help="cut level in [0, 1]")
    p.add_argument("--degree", type=_degree_arg, default=3)
    p.add_argument(
        "--parametrization",
        choices=tuple(m.value for m in ParamChoice),
        default=ParamChoice.CHORD_LENGTH.value,
    )
    p.add_argument("--samples", type=_samples_arg, default=200, help="samples per channel")
    p.add_argument("--out", default=".", help="output directory")
    p.add_argument(
        "--format",
        choices=("csv", "json", "svg"),
        default="csv",
        help="sample table format; svg writes the drawings only",
    )

    p = sub.add_parser("example", help="write the bundled example dataset")
    p.add_argument("dest", nargs="?", default="worked_example.json")
    return parser


def _cmd_validate(args) -> int:
    dataset = load_dataset(args.file, validate=False)
    report = validate_dataset(dataset)
    if report.ok:
        print(f"ok ({len(dataset)} points)")
        return 0
    print(report)
    return 1


def _cmd_table(args) -> int:
    dataset = load_dataset(args.file)
    if args.format == "csv":
        sys.stdout.write(stage_table_csv(dataset, args.alpha))
    else:
        sys.stdout.write(stage_table_text(dataset, args.alpha, args.show_published))
    return 0


def _cmd_curves(args) -> int:
    dataset = load_dataset(args.file)
    bundles = run_curve_pipeline(
        dataset,
        args.alpha,
        degree=args.degree,
        choice=ParamChoice.from_name(args.parametrization),
    )
    written = export_bundles(
        dataset, bundles, args.out, n_samples=args.samples, fmt=args.format
    )
    written.append(
        render_stage_figure(dataset, bundles, Path(args.out) / "stages.png")
    )
    for path in written:
        print(f"wrote {path}")
    return 0


def _cmd_example(args) -> int:
    dest = Path(args.dest)
    if dest.exists():
        raise FileExistsError(f"{dest} already exists, not overwriting")
    dest.write_text(worked_example_json())
    print(f"wrote {dest}")
    return 0


_COMMANDS = {
    "validate": _cmd_validate,
    "table": _cmd_table,
    "curves": _cmd_curves,
    "example": _cmd_example,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (
        OSError,
        DatasetFormatError,
        ValidationError,
        DegenerateChordError,
        SolverError,
        ValueError,
    ) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
