import { WorkbenchApi } from "./api.js";
import { mountApp } from "./app.js";
import { UiScenarioState } from "./state.js";

async function boot(): Promise<void> {
  const root = document.getElementById("app");
  if (root === null) throw new Error("missing #app element");
  const state = new UiScenarioState(new WorkbenchApi(""));
  mountApp(root, state);
  await state.load();
  // start with everything selected, like opening the full comparison
  state.setSelection(
    state.allInstances().map((i) => i.id),
    state.allCriteria().map((c) => c.id),
  );
}

void boot();
