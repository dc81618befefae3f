import { rankedSeries } from "./chart.js";
import type { RankingReport } from "./types.js";

/** Flows table in ranking order: class, technique, positive, negative, net. */
export function renderFlowsTable(report: RankingReport): HTMLTableElement {
  const flows = new Map(report.flows.map((f) => [f.alternative, f]));
  const table = document.createElement("table");
  table.className = "flows-table";

  const head = table.createTHead().insertRow();
  for (const title of ["class", "technique", "φ⁺", "φ⁻", "φ"]) {
    const th = document.createElement("th");
    th.textContent = title;
    head.appendChild(th);
  }

  const body = table.createTBody();
  for (const entry of rankedSeries(report)) {
    const flow = flows.get(entry.id);
    if (flow === undefined) continue;
    const row = body.insertRow();
    row.dataset.alt = entry.id;
    row.insertCell().textContent = String(entry.classIndex + 1);
    row.insertCell().textContent = entry.label;
    row.insertCell().textContent = flow.positive.decimal;
    row.insertCell().textContent = flow.negative.decimal;
    row.insertCell().textContent = flow.net_display;
  }
  return table;
}
