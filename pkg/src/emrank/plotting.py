"""Ranking charts: plot-data export plus matplotlib rendering to files.

The chart order always equals the complete-ranking order (best first);
values are the display-rounded net flows. Rounding happens after ranking,
so it can never reorder the chart.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt

from .errors import UsageError
from .jsonutil import display_float, display_str
from .scenarios import RankingReport

PLOT_KINDS = ("points", "histogram")


@dataclass(frozen=True)
class PlotData:
    kind: str
    series: tuple[tuple[str, float], ...]  # (alternative label, rounded net flow)


def plot_data(report: RankingReport, kind: str) -> PlotData:
    if kind not in PLOT_KINDS:
        raise UsageError(f"plot kind must be one of {', '.join(PLOT_KINDS)}")
    ordered = report.complete.ordered_alternatives()
    series = tuple((alt.label, display_float(report.flow_table.net_of(alt.id))) for alt in ordered)
    return PlotData(kind=kind, series=series)


def plot_data_to_json(data: PlotData) -> dict:
    return {
        "kind": data.kind,
        "series": [{"label": label, "value": value} for label, value in data.series],
    }


def render_figure(data: PlotData, path: str | os.PathLike) -> None:
    """Draw the points or histogram chart and save it to ``path``."""
    labels = [label for label, _ in data.series]
    values = [value for _, value in data.series]
    fig, ax = plt.subplots(figsize=(max(6.0, 1.2 * len(labels)), 4.0))
    try:
        positions = range(len(labels))
        if data.kind == "histogram":
            ax.bar(positions, values, color="#4878a8", width=0.6)
        else:
            ax.plot(positions, values, "o", color="#4878a8", markersize=9)
        for x, value in zip(positions, values):
            offset = 0.015 if value >= 0 else -0.03
            ax.annotate(f"{value:.3f}", (x, value + offset), ha="center", fontsize=9)
        ax.axhline(0.0, color="#888888", linewidth=0.8)
        ax.set_xticks(list(positions))
        ax.set_xticklabels(labels, rotation=20, ha="right")
        ax.set_ylabel("net flow")
        ax.set_title(f"ranking ({data.kind})")
        ax.margins(y=0.15)
        fig.tight_layout()
        fig.savefig(path, dpi=120)
    finally:
        plt.close(fig)


def render_report_figures(report: RankingReport, directory: str | os.PathLike) -> list[str]:
    """Render both chart kinds for a report into ``directory``; file names
    derive from the scenario name. Returns the written paths."""
    os.makedirs(directory, exist_ok=True)
    stem = report.scenario.replace("/", "_").replace(" ", "_") or "report"
    written = []
    for kind in PLOT_KINDS:
        path = os.path.join(os.fspath(directory), f"{stem}-{kind}.png")
        render_figure(plot_data(report, kind), path)
        written.append(path)
    return written
