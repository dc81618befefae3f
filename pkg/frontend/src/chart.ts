import type { RankingReport } from "./types.js";

export type ChartKind = "points" | "histogram";

export interface SeriesEntry {
  id: string;
  label: string;
  value: number;
  display: string;
  classIndex: number;
}

const SVG_NS = "http://www.w3.org/2000/svg";

/**
 * Flatten a report into chart order: best class first, preserving the
 * report's order inside a class. Values come straight off the report's
 * flow entries; the chart never recomputes anything.
 */
export function rankedSeries(report: RankingReport): SeriesEntry[] {
  const labels = new Map(report.alternatives.map((a) => [a.id, a.label]));
  const flows = new Map(report.flows.map((f) => [f.alternative, f]));
  const series: SeriesEntry[] = [];
  report.ranking.forEach((group, classIndex) => {
    for (const id of group) {
      const flow = flows.get(id);
      if (flow === undefined) continue;
      series.push({
        id,
        label: labels.get(id) ?? id,
        value: flow.net.num / flow.net.den,
        display: flow.net_display,
        classIndex,
      });
    }
  });
  return series;
}

function svgEl<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const el = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) el.setAttribute(k, v);
  return el;
}

const SLOT = 84;
const MARGIN = { top: 28, right: 16, bottom: 44, left: 48 };
const PLOT_HEIGHT = 190;

/**
 * SVG chart of net flows, bars or points, best-to-worst. Indifference
 * classes share a band behind their bars; tied bars have identical
 * geometry because their exact net flows are identical.
 */
export function renderChart(report: RankingReport, kind: ChartKind): SVGSVGElement {
  const series = rankedSeries(report);
  const width = MARGIN.left + SLOT * Math.max(series.length, 1) + MARGIN.right;
  const height = MARGIN.top + PLOT_HEIGHT + MARGIN.bottom;
  const svg = svgEl("svg", {
    viewBox: `0 0 ${width} ${height}`,
    width: String(width),
    height: String(height),
    class: `chart chart-${kind}`,
    role: "img",
  });
  svg.dataset.kind = kind;

  const span = Math.max(...series.map((s) => Math.abs(s.value)), 0.05);
  const zeroY = MARGIN.top + PLOT_HEIGHT / 2;
  const yOf = (value: number) => zeroY - (value / span) * (PLOT_HEIGHT / 2 - 14);
  const xCenter = (i: number) => MARGIN.left + SLOT * i + SLOT / 2;

  // class bands first so everything else draws on top
  let start = 0;
  report.ranking.forEach((group, classIndex) => {
    const band = svgEl("rect", {
      x: String(MARGIN.left + SLOT * start + 4),
      y: String(MARGIN.top),
      width: String(SLOT * group.length - 8),
      height: String(PLOT_HEIGHT),
      class: group.length > 1 ? "class-band class-band-tied" : "class-band",
      "data-class": String(classIndex),
      "data-size": String(group.length),
    });
    svg.appendChild(band);
    start += group.length;
  });

  svg.appendChild(
    svgEl("line", {
      x1: String(MARGIN.left),
      x2: String(width - MARGIN.right),
      y1: String(zeroY),
      y2: String(zeroY),
      class: "zero-line",
    }),
  );

  series.forEach((entry, i) => {
    const x = xCenter(i);
    const y = yOf(entry.value);
    const common = {
      "data-alt": entry.id,
      "data-value": entry.display,
      "data-class": String(entry.classIndex),
    };
    if (kind === "histogram") {
      const top = Math.min(y, zeroY);
      const barHeight = Math.abs(zeroY - y);
      svg.appendChild(
        svgEl("rect", {
          ...common,
          x: String(x - 24),
          y: String(top),
          width: "48",
          height: String(barHeight),
          class: entry.value < 0 ? "bar bar-negative" : "bar",
        }),
      );
    } else {
      svg.appendChild(
        svgEl("circle", {
          ...common,
          cx: String(x),
          cy: String(y),
          r: "7",
          class: "point",
        }),
      );
    }
    const valueLabel = svgEl("text", {
      x: String(x),
      y: String(y + (entry.value < 0 ? 16 : -10)),
      "text-anchor": "middle",
      class: "value-label",
    });
    valueLabel.textContent = entry.display;
    svg.appendChild(valueLabel);

    const nameLabel = svgEl("text", {
      x: String(x),
      y: String(MARGIN.top + PLOT_HEIGHT + 18),
      "text-anchor": "middle",
      class: "name-label",
    });
    nameLabel.textContent = entry.label;
    svg.appendChild(nameLabel);
  });

  return svg;
}
