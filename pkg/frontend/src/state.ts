import { ServiceError, WorkbenchApi } from "./api.js";
import type {
  CriterionInfo,
  KbInstance,
  RankDiff,
  RankingReport,
  ScaleLevel,
  ScenarioRequest,
} from "./types.js";

export interface UiError {
  code: string;
  message: string;
  path?: string;
}

export type Listener = () => void;

function toUiError(err: unknown): UiError {
  if (err instanceof ServiceError) {
    return { code: err.code, message: err.message, path: err.path };
  }
  return { code: "NETWORK_ERROR", message: err instanceof Error ? err.message : String(err) };
}

/**
 * Scenario state behind the workbench UI.
 *
 * Holds the selections, weight sliders, the last ranking report and an
 * optional pinned baseline. Every ranking number comes from the service;
 * this class only decides when to ask and which answer is current. Rapid
 * edits are debounced into one request, and each request carries an id so
 * a response that arrives after a newer request was issued is dropped.
 */
export class UiScenarioState {
  private criteriaCatalog = new Map<string, CriterionInfo>();
  private scaleLevels = new Map<string, ScaleLevel[]>();
  private instances = new Map<string, KbInstance>();
  private instanceOrder: string[] = [];

  private selectedAlternatives = new Set<string>();
  private selectedCriteria = new Set<string>();
  private criterionOrder: string[] = [];
  // raw slider positions; normalized against their sum when a request is built
  private sliderPositions = new Map<string, number>();

  report: RankingReport | null = null;
  baseline: RankingReport | null = null;
  diff: RankDiff | null = null;
  error: UiError | null = null;

  private listeners = new Set<Listener>();
  private lastRequestId = 0;
  private rankInFlight = false;
  private timer: ReturnType<typeof setTimeout> | undefined;

  constructor(
    private readonly api: WorkbenchApi,
    private readonly debounceMs = 150,
    public scenarioName = "workbench",
  ) {}

  async load(): Promise<void> {
    const [catalog, kb] = await Promise.all([this.api.criteria(), this.api.kb()]);
    this.criteriaCatalog = new Map(catalog.criteria.map((c) => [c.id, c]));
    this.criterionOrder = catalog.criteria.map((c) => c.id);
    this.scaleLevels = new Map(kb.scales.map((s) => [s.id, s.levels]));
    this.instances = new Map(kb.instances.map((i) => [i.id, structuredClone(i)]));
    this.instanceOrder = kb.instances.map((i) => i.id);
    this.notify();
  }

  subscribe(listener: Listener): () => void {
    this.listeners.add(listener);
    return () => this.listeners.delete(listener);
  }

  private notify(): void {
    for (const listener of this.listeners) listener();
  }

  // ----- selections ------------------------------------------------------

  allCriteria(): CriterionInfo[] {
    return this.criterionOrder.map((id) => this.criteriaCatalog.get(id)!);
  }

  allInstances(): KbInstance[] {
    return this.instanceOrder.map((id) => this.instances.get(id)!);
  }

  isCriterionSelected(id: string): boolean {
    return this.selectedCriteria.has(id);
  }

  isAlternativeSelected(id: string): boolean {
    return this.selectedAlternatives.has(id);
  }

  selectedCriterionIds(): string[] {
    return this.criterionOrder.filter((id) => this.selectedCriteria.has(id));
  }

  selectedAlternativeIds(): string[] {
    return this.instanceOrder.filter((id) => this.selectedAlternatives.has(id));
  }

  setSelection(alternatives: string[], criteria: string[]): void {
    this.selectedAlternatives = new Set(alternatives);
    this.selectedCriteria = new Set(criteria);
    this.notify();
    this.scheduleRank();
  }

  toggleCriterion(id: string): void {
    if (!this.criteriaCatalog.has(id)) return;
    if (!this.selectedCriteria.delete(id)) this.selectedCriteria.add(id);
    this.notify();
    this.scheduleRank();
  }

  toggleAlternative(id: string): void {
    if (!this.instances.has(id)) return;
    if (!this.selectedAlternatives.delete(id)) this.selectedAlternatives.add(id);
    this.notify();
    this.scheduleRank();
  }

  /** Slider commit; the value is a relative position, normalized per request. */
  setWeight(criterionId: string, position: number): void {
    if (!Number.isFinite(position) || position <= 0) return;
    this.sliderPositions.set(criterionId, Math.round(position));
    this.notify();
    this.scheduleRank();
  }

  weightPosition(criterionId: string): number {
    return this.sliderPositions.get(criterionId) ?? 10;
  }

  /** A rank request is only legal with at least 2 techniques and 1 criterion. */
  canRun(): boolean {
    return this.selectedAlternatives.size >= 2 && this.selectedCriteria.size >= 1;
  }

  scenarioRequest(): ScenarioRequest {
    const criteria = this.selectedCriterionIds();
    const positions = criteria.map((id) => this.weightPosition(id));
    const total = positions.reduce((a, b) => a + b, 0);
    const request: ScenarioRequest = {
      name: this.scenarioName,
      alternatives: this.selectedAlternativeIds(),
      criteria,
    };
    // normalized exact weights; omitted entirely while every slider is equal
    if (new Set(positions).size > 1) {
      request.weights = Object.fromEntries(
        criteria.map((id, i) => [id, { num: positions[i]!, den: total }]),
      );
    }
    return request;
  }

  // ----- ranking requests -------------------------------------------------

  scheduleRank(): void {
    if (!this.canRun()) return;
    if (this.timer !== undefined) clearTimeout(this.timer);
    if (this.debounceMs <= 0) {
      void this.dispatchRank();
      return;
    }
    this.timer = setTimeout(() => {
      this.timer = undefined;
      void this.dispatchRank();
    }, this.debounceMs);
  }

  isRanking(): boolean {
    return this.rankInFlight;
  }

  private async dispatchRank(): Promise<void> {
    if (!this.canRun()) return;
    const requestId = ++this.lastRequestId;
    this.rankInFlight = true;
    this.notify();
    try {
      const report = await this.api.rank(this.scenarioRequest());
      if (requestId !== this.lastRequestId) return; // stale response dropped
      this.report = report;
      this.error = null;
      if (this.baseline !== null) {
        const diff = await this.api.diff(this.baseline, report);
        if (requestId !== this.lastRequestId) return;
        this.diff = diff;
      } else {
        this.diff = null;
      }
    } catch (err) {
      if (requestId !== this.lastRequestId) return; // stale failure dropped too
      this.error = toUiError(err);
    } finally {
      if (requestId === this.lastRequestId) {
        this.rankInFlight = false;
        this.notify();
      }
    }
  }

  // ----- baseline ---------------------------------------------------------

  async pinBaseline(): Promise<void> {
    if (this.report === null) return;
    this.baseline = this.report;
    try {
      this.diff = await this.api.diff(this.baseline, this.report);
      this.error = null;
    } catch (err) {
      this.error = toUiError(err);
    }
    this.notify();
  }

  clearBaseline(): void {
    this.baseline = null;
    this.diff = null;
    this.notify();
  }

  // ----- KB edits ---------------------------------------------------------

  labelsFor(criterionId: string): string[] {
    const scaleId = this.criteriaCatalog.get(criterionId)?.scale;
    return (scaleId ? this.scaleLevels.get(scaleId) : undefined)?.map((l) => l.label) ?? [];
  }

  isValidLabel(criterionId: string, label: string): boolean {
    return this.labelsFor(criterionId).includes(label);
  }

  /**
   * Optimistic cell edit: the new label shows immediately, the PUT runs in
   * the background, and a 4xx answer reverts the cell and surfaces the
   * violation. Out-of-scale labels never leave the client.
   */
  async editValue(instanceId: string, criterionId: string, label: string): Promise<void> {
    const instance = this.instances.get(instanceId);
    if (instance === undefined) return;
    if (!this.isValidLabel(criterionId, label)) {
      this.error = {
        code: "UNKNOWN_LABEL",
        message: `label ${JSON.stringify(label)} is not on the scale of ${criterionId}`,
        path: `instances/${instanceId}/values/${criterionId}`,
      };
      this.notify();
      return;
    }
    const previous = instance.values[criterionId];
    instance.values[criterionId] = label;
    this.notify();
    try {
      const updated = await this.api.setValues(instanceId, { [criterionId]: label });
      instance.values = { ...updated.values };
      this.error = null;
      this.scheduleRank();
    } catch (err) {
      if (previous === undefined) delete instance.values[criterionId];
      else instance.values[criterionId] = previous;
      this.error = toUiError(err);
      this.notify();
    }
  }

  /** Add a technique, select it, and re-rank. Nothing optimistic here: the
   * row appears only once the service confirms it. */
  async addTechnique(id: string, label: string, values: Record<string, string>): Promise<void> {
    if (id.trim() === "") {
      this.error = { code: "EMPTY_ID", message: "a technique needs a non-empty id" };
      this.notify();
      return;
    }
    for (const [criterionId, valueLabel] of Object.entries(values)) {
      if (!this.isValidLabel(criterionId, valueLabel)) {
        this.error = {
          code: "UNKNOWN_LABEL",
          message: `label ${JSON.stringify(valueLabel)} is not on the scale of ${criterionId}`,
        };
        this.notify();
        return;
      }
    }
    try {
      const created = await this.api.addInstance({ id, label: label || id, values });
      this.instances.set(created.id, created);
      this.instanceOrder.push(created.id);
      this.selectedAlternatives.add(created.id);
      this.error = null;
      this.notify();
      this.scheduleRank();
    } catch (err) {
      this.error = toUiError(err);
      this.notify();
    }
  }
}
