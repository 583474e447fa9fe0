"""Command-line interface.

Subcommands:

* ``compute``    indicator table for each input portfolio
* ``correlate``  Pearson matrix over selected indicator columns
* ``probe``      replication-scaling verification of declared exponents
* ``dims``       dimension of an index formula, e.g. ``'(eta*i^2*P)^(1/3)'``
* ``table1``     reproduce the bundled ten-author reference table and its
                 correlation block

Exit codes: 0 success, 1 malformed input or expression, 2 scaling
verification failure.  ``--precision`` (or the ``SCINDEX_PRECISION``
environment variable) controls rendered decimals; ``full`` emits
shortest round-trip values.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Sequence

from . import datasets
from .analytics import AnalyticsTable, pearson_matrix
from .errors import FormatError, ScindexError
from .expressions import dimension_of
from .indicators import registry_names, registry_symbols
from .scaling import DEFAULT_LAMBDAS, ProbeResult, probe_registry
from .svgplot import PlotSeries, emit_loglog_svg
from .tabular import emit_matrix, emit_table, parse_input, table_rows

__all__ = ["main", "run"]


def _parse_precision(text: str) -> int | None:
    if text == "full":
        return None
    try:
        value = int(text)
    except ValueError:
        raise FormatError(f"invalid precision {text!r} (expected an integer or 'full')")
    if value < 0:
        raise FormatError(f"precision must be >= 0, got {value}")
    return value


def _resolve_precision(arg: str | None) -> int | None:
    if arg is not None:
        return _parse_precision(arg)
    env = os.environ.get("SCINDEX_PRECISION")
    if env:
        return _parse_precision(env)
    return 2


def _read_input(path: str) -> tuple[str, str]:
    """Return (text, inferred_format)."""
    if path == "-":
        return sys.stdin.read(), "csv"
    text = Path(path).read_text(encoding="utf-8")
    inferred = "json" if path.endswith(".json") else "csv"
    return text, inferred


def _load_records(path: str, format_arg: str | None):
    text, inferred = _read_input(path)
    return parse_input(text, format_arg or inferred)


def _write_output(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        Path(path).write_text(text, encoding="utf-8")


def _split_csv_list(text: str) -> list[str]:
    return [item.strip() for item in text.split(",") if item.strip()]


def _parse_counts_arg(text: str) -> list[int]:
    counts = []
    for item in text.split(";"):
        item = item.strip()
        if item == "":
            continue
        try:
            counts.append(int(item))
        except ValueError:
            raise FormatError(f"invalid citation count {item!r} in --base") from None
    if not counts:
        raise FormatError("--base needs at least one citation count")
    return counts


def _parse_lambdas_arg(text: str) -> list[int]:
    try:
        lams = [int(item) for item in _split_csv_list(text)]
    except ValueError:
        raise FormatError(f"invalid --lambdas value {text!r}") from None
    if not lams:
        raise FormatError("--lambdas needs at least one scale factor")
    return lams


def _format_probe_lines(results: Sequence[ProbeResult]) -> str:
    lines = ["index\tdeclared\tslope\tmax_residual\tverdict\tnote"]
    for result in results:
        if result.estimate is None:
            slope = residual = "-"
        else:
            slope = f"{result.estimate.slope:.6f}"
            residual = f"{result.estimate.max_residual:.3g}"
        verdict = "pass" if result.passed else "fail"
        lines.append(
            f"{result.indicator}\t{result.declared_exponent}\t{slope}\t"
            f"{residual}\t{verdict}\t{result.note}"
        )
    return "\n".join(lines) + "\n"


def _cmd_compute(args: argparse.Namespace) -> int:
    records = _load_records(args.input, args.format)
    columns = _split_csv_list(args.columns) if args.columns else None
    table = AnalyticsTable.from_portfolios(records, columns=columns)
    precision = _resolve_precision(args.precision)
    _write_output(emit_table(table, args.output_format, precision), args.output)
    return 0


def _cmd_correlate(args: argparse.Namespace) -> int:
    records = _load_records(args.input, args.format)
    table = AnalyticsTable.from_portfolios(records)
    columns = _split_csv_list(args.columns) if args.columns else list(table.columns)
    matrix = pearson_matrix(table, columns)
    precision = _resolve_precision(args.precision)
    _write_output(emit_matrix(columns, matrix, args.output_format, precision), args.output)
    return 0


def _cmd_probe(args: argparse.Namespace) -> int:
    base = _parse_counts_arg(args.base)
    lambdas = _parse_lambdas_arg(args.lambdas)
    names = None if args.index == "all" else _split_csv_list(args.index)
    results = probe_registry(base, lambdas, names=names, tolerance=args.tolerance)
    _write_output(_format_probe_lines(results), args.output)
    if args.svg:
        plottable = [
            PlotSeries(r.indicator, list(zip(r.lambdas, r.values)))
            for r in results
            if all(v > 0 for v in r.values)
        ]
        svg, points_csv = emit_loglog_svg(plottable, title="replication scaling")
        Path(args.svg).write_text(svg, encoding="utf-8")
        Path(args.svg).with_suffix(".csv").write_text(points_csv, encoding="utf-8")
    if any(not r.passed for r in results):
        failed = ", ".join(r.indicator for r in results if not r.passed)
        print(f"verification failed for: {failed}", file=sys.stderr)
        return 2
    return 0


def _cmd_dims(args: argparse.Namespace) -> int:
    try:
        dim = dimension_of(args.expression, registry_symbols())
    except ScindexError as exc:
        print(f"error: in expression {args.expression!r}: {exc}", file=sys.stderr)
        return 1
    print(dim)
    return 0


def _cmd_table1(args: argparse.Namespace) -> int:
    precision = _resolve_precision(args.precision)
    reconstructed = datasets.reconstructed_table()
    published = datasets.published_table()
    matrix = pearson_matrix(published, datasets.AUTHOR_COLUMNS)
    if args.output_format == "json":
        payload = {
            "table": table_rows(reconstructed),
            "correlation": {
                "columns": list(datasets.AUTHOR_COLUMNS),
                "matrix": [[float(x) for x in row] for row in matrix],
            },
        }
        _write_output(json.dumps(payload, indent=2) + "\n", args.output)
        return 0
    text = emit_table(reconstructed, args.output_format, precision)
    text += "\n"
    text += emit_matrix(datasets.AUTHOR_COLUMNS, matrix, args.output_format, precision)
    _write_output(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="scindex",
        description="Dimensioned citation indices: compute, correlate, verify.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common_output(p: argparse.ArgumentParser, formats=("tsv", "csv", "json")):
        p.add_argument("--output-format", choices=formats, default="tsv")
        p.add_argument("--precision", default=None, metavar="N|full")
        p.add_argument("-o", "--output", default=None, metavar="PATH")

    compute = sub.add_parser("compute", help="indicator table for each input portfolio")
    compute.add_argument("input", help="CSV/JSON file of portfolios, or - for stdin")
    compute.add_argument("--format", choices=("csv", "json"), default=None)
    compute.add_argument("--columns", default=None, help="comma-separated indicator names")
    add_common_output(compute)
    compute.set_defaults(func=_cmd_compute)

    correlate = sub.add_parser("correlate", help="Pearson matrix over indicator columns")
    correlate.add_argument("input", help="CSV/JSON file of portfolios, or - for stdin")
    correlate.add_argument("--format", choices=("csv", "json"), default=None)
    correlate.add_argument("--columns", default=None, help="comma-separated indicator names")
    add_common_output(correlate)
    correlate.set_defaults(func=_cmd_correlate)

    probe = sub.add_parser("probe", help="verify scaling exponents under replication")
    probe.add_argument("--base", required=True, help="semicolon-delimited counts, e.g. '4;2;1'")
    probe.add_argument(
        "--lambdas",
        default=",".join(str(x) for x in DEFAULT_LAMBDAS),
        help="comma-separated scale factors",
    )
    probe.add_argument(
        "--index",
        default="all",
        help=f"indicator name(s) or 'all' ({', '.join(registry_names())})",
    )
    probe.add_argument("--tolerance", type=float, default=None, help="slope gate override")
    probe.add_argument("--svg", default=None, metavar="PATH", help="write an SVG plot (+ .csv points)")
    probe.add_argument("-o", "--output", default=None, metavar="PATH")
    probe.set_defaults(func=_cmd_probe)

    dims = sub.add_parser("dims", help="dimension of an index formula")
    dims.add_argument("expression", help="e.g. 'C/P' or '(eta*i^2*P)^(1/3)'")
    dims.set_defaults(func=_cmd_dims)

    table1 = sub.add_parser(
        "table1", help="reproduce the bundled reference author table and correlations"
    )
    add_common_output(table1)
    table1.set_defaults(func=_cmd_table1)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors; usage errors are input errors here.
        return 0 if exc.code in (0, None) else 1
    try:
        return args.func(args)
    except ScindexError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
