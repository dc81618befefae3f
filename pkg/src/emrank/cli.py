"""Command-line interface.

Exit codes: 0 success, 1 data/validation error, 2 usage error. All data
goes to stdout, all diagnostics to stderr. The KB argument of a command
falls back to the WORKBENCH_KB_PATH environment variable.
"""

from __future__ import annotations

import csv
import io
import os
import sys

import click

from .errors import DataError, UsageError, WorkbenchError
from .jsonutil import canonical_dumps
from .kb import export_graph, load_kb, validate_kb
from .plotting import PLOT_KINDS, plot_data, plot_data_to_json, render_figure, render_report_figures
from .scenarios import (
    diff_rankings,
    diff_to_json,
    load_report,
    load_scenario,
    report_to_json,
    run_scenario,
)

KB_ENV_VAR = "WORKBENCH_KB_PATH"


def _resolve_kb_path(kb_path: str | None) -> str:
    path = kb_path or os.environ.get(KB_ENV_VAR)
    if not path:
        raise UsageError(f"no knowledge base given; pass a path or set {KB_ENV_VAR}")
    return path


def _emit(text: str) -> None:
    click.echo(text, nl=False)


@click.group()
def cli():
    """Rank techniques from a knowledge base with outranking flows."""


@cli.command()
@click.argument("kb_path", required=False)
def validate(kb_path):
    """Check a knowledge base and print its violation report."""
    kb = load_kb(_resolve_kb_path(kb_path), validate=False)
    violations = validate_kb(kb)
    _emit(canonical_dumps([v.to_json() for v in violations]))
    if violations:
        raise DataError(f"knowledge base has {len(violations)} violation(s)", code=violations[0].code)


@cli.command()
@click.argument("kb_path", required=False)
@click.option("--scenario", "scenario_path", required=True, help="Scenario JSON file to run.")
@click.option("--format", "fmt", type=click.Choice(["json", "csv", "table"]), default="json")
@click.option("--figures", "figures_dir", default=None, metavar="DIR",
              help="Also render points and histogram charts into DIR.")
def rank(kb_path, scenario_path, fmt, figures_dir):
    """Run a scenario and print the ranking report."""
    kb = load_kb(_resolve_kb_path(kb_path))
    report = run_scenario(load_scenario(scenario_path, kb))
    if fmt == "json":
        _emit(canonical_dumps(report_to_json(report)))
    elif fmt == "csv":
        _emit(_flows_csv(report))
    else:
        _emit(_flows_table(report))
    if figures_dir:
        for path in render_report_figures(report, figures_dir):
            click.echo(f"wrote {path}", err=True)


@cli.command()
@click.argument("report_a", type=click.Path(exists=True, dir_okay=False))
@click.argument("report_b", type=click.Path(exists=True, dir_okay=False))
def diff(report_a, report_b):
    """Diff two ranking reports (entered/departed, moves, inversions)."""
    before = load_report(report_a)
    after = load_report(report_b)
    _emit(canonical_dumps(diff_to_json(diff_rankings(before, after))))


@cli.command()
@click.argument("kb_path", required=False)
def graph(kb_path):
    """Emit the KB hierarchy as a nodes/edges JSON document."""
    kb = load_kb(_resolve_kb_path(kb_path))
    _emit(canonical_dumps(export_graph(kb)))


@cli.command()
@click.argument("report_path", type=click.Path(exists=True, dir_okay=False))
@click.option("--kind", type=click.Choice(list(PLOT_KINDS)), required=True)
@click.option("--render", "render_path", default=None, metavar="FILE",
              help="Also render the chart to an image file.")
def plot(report_path, kind, render_path):
    """Emit plot data for a report (and optionally render the chart)."""
    report = load_report(report_path)
    data = plot_data(report, kind)
    _emit(canonical_dumps(plot_data_to_json(data)))
    if render_path:
        render_figure(data, render_path)
        click.echo(f"wrote {render_path}", err=True)


@cli.command()
@click.argument("kb_path", required=False)
@click.option("--addr", default="127.0.0.1:8080", show_default=True, metavar="HOST:PORT")
def serve(kb_path, addr):
    """Serve the HTTP API for the workbench UI."""
    import uvicorn

    from .service import create_app

    host, _, port_text = addr.rpartition(":")
    if not host or not port_text.isdigit():
        raise UsageError(f"--addr must look like host:port, got {addr!r}")
    app = create_app(_resolve_kb_path(kb_path))
    uvicorn.run(app, host=host, port=int(port_text))


def _flows_csv(report) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(["alternative", "label", "class", "positive", "negative", "net", "net_display"])
    display = report.display_net()
    flow = report.flow_table
    for alt, pos, neg, net in zip(flow.alternatives, flow.positive, flow.negative, flow.net):
        writer.writerow(
            [alt.id, alt.label, report.complete.position(alt.id), str(pos), str(neg), str(net), display[alt.id]]
        )
    return buffer.getvalue()


def _flows_table(report) -> str:
    display = report.display_net()
    flow = report.flow_table
    rows = [("class", "alternative", "net", "positive", "negative")]
    for group_index, group in enumerate(report.complete.classes):
        for alt in group:
            i = flow.alternatives.index(alt)
            rows.append(
                (
                    str(group_index + 1),
                    alt.label,
                    display[alt.id],
                    str(flow.positive[i]),
                    str(flow.negative[i]),
                )
            )
    widths = [max(len(row[col]) for row in rows) for col in range(len(rows[0]))]
    lines = ["  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip() for row in rows]
    return f"scenario: {report.scenario}\n" + "\n".join(lines) + "\n"


def main(argv: list[str] | None = None) -> int:
    """Run the CLI without exiting the interpreter; returns the exit code."""
    try:
        cli.main(args=argv, standalone_mode=False)
    except click.exceptions.Exit as exc:
        return exc.exit_code
    except click.UsageError as exc:
        click.echo(f"USAGE: {exc.format_message()}", err=True)
        return 2
    except click.ClickException as exc:
        click.echo(str(exc), err=True)
        return 1
    except UsageError as exc:
        click.echo(str(exc), err=True)
        return 2
    except WorkbenchError as exc:
        click.echo(str(exc), err=True)
        return 1
    except OSError as exc:
        click.echo(f"IO_ERROR: {exc}", err=True)
        return 1
    return 0


def entry() -> None:
    sys.exit(main())
