import { renderChart, type ChartKind } from "./chart.js";
import { renderFlowsTable } from "./table.js";
import type { UiScenarioState } from "./state.js";
import type { CriterionInfo, RankDiff } from "./types.js";

function h<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  attrs: Record<string, string> = {},
  ...children: (string | Node)[]
): HTMLElementTagNameMap[K] {
  const el = document.createElement(tag);
  for (const [k, v] of Object.entries(attrs)) {
    if (k === "className") el.className = v;
    else el.setAttribute(k, v);
  }
  for (const child of children) {
    el.append(child);
  }
  return el;
}

function groupByFamily(criteria: CriterionInfo[]): Map<string, CriterionInfo[]> {
  const families = new Map<string, CriterionInfo[]>();
  for (const criterion of criteria) {
    const group = families.get(criterion.family);
    if (group === undefined) families.set(criterion.family, [criterion]);
    else group.push(criterion);
  }
  return families;
}

/** Mount the workbench into `root`; re-renders on every state change. */
export function mountApp(root: HTMLElement, state: UiScenarioState): void {
  let chartKind: ChartKind = "histogram";

  function render(): void {
    root.innerHTML = "";
    root.append(renderHeader(), h("div", { className: "columns" }, renderControls(), renderResults()));
  }

  function renderHeader(): HTMLElement {
    return h(
      "header",
      { className: "top" },
      h("h1", {}, "Technique ranking workbench"),
      h("span", { className: "scenario-name" }, state.scenarioName),
    );
  }

  function renderError(): HTMLElement | string {
    if (state.error === null) return "";
    return h(
      "div",
      { className: "error-banner", role: "alert" },
      h("code", { className: "error-code" }, state.error.code),
      h("span", {}, " " + state.error.message),
    );
  }

  function renderControls(): HTMLElement {
    const panel = h("section", { className: "controls" });
    panel.append(renderCriteriaPanel(), renderTechniquePanel(), renderValueEditor(), renderAddForm());
    return panel;
  }

  function renderCriteriaPanel(): HTMLElement {
    const panel = h("fieldset", { className: "criteria-panel" }, h("legend", {}, "Criteria"));
    for (const [family, members] of groupByFamily(state.allCriteria())) {
      const group = h("div", { className: "family" }, h("h3", {}, family));
      for (const criterion of members) {
        const checkbox = h("input", {
          type: "checkbox",
          id: `crit-${criterion.id}`,
          "data-criterion": criterion.id,
        });
        checkbox.checked = state.isCriterionSelected(criterion.id);
        checkbox.addEventListener("change", () => state.toggleCriterion(criterion.id));

        const slider = h("input", {
          type: "range",
          min: "1",
          max: "50",
          value: String(state.weightPosition(criterion.id)),
          "data-weight": criterion.id,
        });
        slider.disabled = !state.isCriterionSelected(criterion.id);
        // commit on release, not on every pixel of drag
        slider.addEventListener("change", () => state.setWeight(criterion.id, Number(slider.value)));

        group.append(
          h(
            "label",
            { className: "criterion-row", for: `crit-${criterion.id}` },
            checkbox,
            `${criterion.id} ${criterion.label}`,
            slider,
          ),
        );
      }
      panel.append(group);
    }
    return panel;
  }

  function renderTechniquePanel(): HTMLElement {
    const panel = h("fieldset", { className: "technique-panel" }, h("legend", {}, "Techniques"));
    for (const instance of state.allInstances()) {
      const checkbox = h("input", { type: "checkbox", "data-alternative": instance.id });
      checkbox.checked = state.isAlternativeSelected(instance.id);
      checkbox.addEventListener("change", () => state.toggleAlternative(instance.id));
      panel.append(h("label", { className: "technique-row" }, checkbox, instance.label));
    }
    return panel;
  }

  function renderValueEditor(): HTMLElement {
    const criteria = state.selectedCriterionIds();
    const panel = h("fieldset", { className: "value-editor" }, h("legend", {}, "Values"));
    for (const instance of state.allInstances()) {
      if (!state.isAlternativeSelected(instance.id)) continue;
      const row = h("div", { className: "value-row" }, h("strong", {}, instance.label));
      for (const criterionId of criteria) {
        const select = h("select", { "data-cell": `${instance.id}:${criterionId}` });
        for (const label of state.labelsFor(criterionId)) {
          const option = h("option", { value: label }, label);
          option.selected = instance.values[criterionId] === label;
          select.append(option);
        }
        select.addEventListener("change", () => {
          void state.editValue(instance.id, criterionId, select.value);
        });
        row.append(h("label", { className: "cell" }, criterionId, select));
      }
      panel.append(row);
    }
    return panel;
  }

  function renderAddForm(): HTMLElement {
    const idInput = h("input", { type: "text", placeholder: "id", "data-add": "id" });
    const labelInput = h("input", { type: "text", placeholder: "label", "data-add": "label" });
    const selects = new Map<string, HTMLSelectElement>();
    const grid = h("div", { className: "add-values" });
    for (const criterion of state.allCriteria()) {
      const select = h("select", { "data-add-value": criterion.id });
      for (const label of state.labelsFor(criterion.id)) select.append(h("option", { value: label }, label));
      selects.set(criterion.id, select);
      grid.append(h("label", { className: "cell" }, criterion.id, select));
    }
    const button = h("button", { type: "submit" }, "Add technique");
    const form = h(
      "form",
      { className: "add-form" },
      h("legend", {}, "New technique"),
      idInput,
      labelInput,
      grid,
      button,
    );
    form.addEventListener("submit", (event) => {
      event.preventDefault();
      const values: Record<string, string> = {};
      for (const [criterionId, select] of selects) values[criterionId] = select.value;
      void state.addTechnique(idInput.value.trim(), labelInput.value.trim(), values);
    });
    return form;
  }

  function renderResults(): HTMLElement {
    const panel = h("section", { className: "results" });

    const runButton = h("button", { className: "run-button", type: "button" }, "Run ranking");
    runButton.disabled = !state.canRun();
    runButton.addEventListener("click", () => state.scheduleRank());
    const status = state.isRanking() ? h("span", { className: "busy" }, "ranking…") : "";
    panel.append(h("div", { className: "run-row" }, runButton, status), renderError());

    if (state.report !== null) {
      const toggle = h("div", { className: "kind-toggle" });
      for (const kind of ["points", "histogram"] as const) {
        const button = h("button", { type: "button", "data-kind": kind }, kind);
        if (kind === chartKind) button.className = "active";
        button.addEventListener("click", () => {
          chartKind = kind;
          render();
        });
        toggle.append(button);
      }
      panel.append(toggle, renderChart(state.report, chartKind), renderFlowsTable(state.report));
      panel.append(renderBaselineControls());
    }
    return panel;
  }

  function renderBaselineControls(): HTMLElement {
    const wrap = h("div", { className: "baseline" });
    const pin = h("button", { type: "button", "data-action": "pin-baseline" }, "Pin as baseline");
    pin.addEventListener("click", () => void state.pinBaseline());
    wrap.append(pin);
    if (state.baseline !== null) {
      const clear = h("button", { type: "button", "data-action": "clear-baseline" }, "Clear baseline");
      clear.addEventListener("click", () => state.clearBaseline());
      wrap.append(clear);
      if (state.diff !== null) wrap.append(renderDiffPanel(state.diff));
    }
    // no pinned baseline: no compare panel at all
    return wrap;
  }

  function renderDiffPanel(diff: RankDiff): HTMLElement {
    const panel = h("div", { className: "diff-panel" }, h("h3", {}, "Compared to baseline"));
    const list = (title: string, items: string[]) =>
      h(
        "div",
        { className: "diff-list", "data-diff": title },
        h("h4", {}, title),
        items.length === 0 ? h("em", {}, "none") : h("ul", {}, ...items.map((item) => h("li", {}, item))),
      );
    panel.append(
      list("entered", diff.entered),
      list("departed", diff.departed),
      list(
        "moves",
        diff.changes
          .filter((c) => c.class_before !== c.class_after)
          .map((c) => `${c.alternative}: class ${c.class_before + 1} to ${c.class_after + 1}`),
      ),
      list(
        "inversions",
        diff.inversions.map((inv) => `${inv.promoted} now above ${inv.demoted}`),
      ),
    );
    return panel;
  }

  state.subscribe(render);
  render();
}
