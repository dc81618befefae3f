import { afterEach, describe, expect, it, vi } from "vitest";

import { WorkbenchApi } from "../src/api.js";
import { mountApp } from "../src/app.js";
import { renderChart } from "../src/chart.js";
import { UiScenarioState } from "../src/state.js";
import type { RankingReport, Rational, ScenarioRequest } from "../src/types.js";

import criteriaFixture from "./fixtures/criteria.json";
import diffFixture from "./fixtures/diff-ten-vs-eight.json";
import kbFixture from "./fixtures/kb.json";
import reportEightRaw from "./fixtures/report-eight-criteria.json";
import reportTenRaw from "./fixtures/report-ten-criteria.json";

const reportTen = reportTenRaw as unknown as RankingReport;
const reportEight = reportEightRaw as unknown as RankingReport;

const SIX = ["MERISE", "GRAI", "CIMOSA", "PERA", "GERAM", "GIM"];
const FIVE = ["MERISE", "GRAI", "CIMOSA", "PERA", "GERAM"];
const TEN = ["f51", "f54", "f53", "f52", "f12", "f13", "f32", "f31", "f21", "f22"];

interface RouteReply {
  status: number;
  body: unknown;
}

function deferred<T>() {
  let resolve!: (value: T) => void;
  let reject!: (reason?: unknown) => void;
  const promise = new Promise<T>((res, rej) => {
    resolve = res;
    reject = rej;
  });
  return { promise, resolve, reject };
}

const flush = () => new Promise<void>((resolve) => setTimeout(resolve, 0));

/** In-memory stand-in for the ranking service, recording every request. */
class FakeService {
  rankBodies: ScenarioRequest[] = [];
  diffBodies: unknown[] = [];
  putCalls: { id: string; body: Record<string, string> }[] = [];
  instancePosts: { id: string; label?: string; values?: Record<string, string> }[] = [];

  rankHandler: (body: ScenarioRequest) => RouteReply | Promise<RouteReply> = () => ({
    status: 200,
    body: reportTen,
  });
  diffHandler: () => RouteReply | Promise<RouteReply> = () => ({ status: 200, body: diffFixture });
  putHandler: (id: string, body: Record<string, string>) => RouteReply | Promise<RouteReply> = (
    id,
    body,
  ) => {
    const instance = kbFixture.instances.find((i) => i.id === id);
    return instance === undefined
      ? { status: 404, body: { code: "UNKNOWN_ID", message: `no instance ${id}`, path: id } }
      : { status: 200, body: { ...instance, values: { ...instance.values, ...body } } };
  };
  instanceHandler: (body: {
    id: string;
    label?: string;
    values?: Record<string, string>;
  }) => RouteReply | Promise<RouteReply> = (body) => ({
    status: 201,
    body: { id: body.id, label: body.label ?? body.id, values: body.values ?? {} },
  });

  fetch = async (input: RequestInfo | URL, init?: RequestInit): Promise<Response> => {
    const url = typeof input === "string" ? input : input instanceof URL ? input.href : input.url;
    const path = url.replace(/^https?:\/\/[^/]+/, "");
    const method = (init?.method ?? "GET").toUpperCase();
    const reply = await this.route(method, path, init);
    return {
      ok: reply.status < 400,
      status: reply.status,
      json: async () => reply.body,
    } as unknown as Response;
  };

  private route(method: string, path: string, init?: RequestInit): RouteReply | Promise<RouteReply> {
    const body = init?.body === undefined ? undefined : JSON.parse(init.body as string);
    if (method === "GET" && path === "/api/criteria") return { status: 200, body: criteriaFixture };
    if (method === "GET" && path === "/api/kb") return { status: 200, body: kbFixture };
    if (method === "POST" && path === "/api/rank") {
      this.rankBodies.push(body as ScenarioRequest);
      return this.rankHandler(body as ScenarioRequest);
    }
    if (method === "POST" && path === "/api/diff") {
      this.diffBodies.push(body);
      return this.diffHandler();
    }
    if (method === "POST" && path === "/api/kb/instances") {
      this.instancePosts.push(body as { id: string });
      return this.instanceHandler(body as { id: string });
    }
    const valuesMatch = path.match(/^\/api\/kb\/instances\/([^/]+)\/values$/);
    if (method === "PUT" && valuesMatch !== null) {
      const id = decodeURIComponent(valuesMatch[1]!);
      this.putCalls.push({ id, body: body as Record<string, string> });
      return this.putHandler(id, body as Record<string, string>);
    }
    return { status: 404, body: { code: "UNKNOWN_ID", message: `no route ${method} ${path}`, path } };
  }
}

async function bootState(debounceMs: number) {
  const service = new FakeService();
  vi.stubGlobal("fetch", service.fetch);
  const state = new UiScenarioState(new WorkbenchApi(""), debounceMs);
  await state.load();
  return { service, state };
}

function mount(state: UiScenarioState): HTMLElement {
  const container = document.createElement("div");
  document.body.append(container);
  mountApp(container, state);
  return container;
}

function chartOrder(container: ParentNode): string[] {
  return [...container.querySelectorAll(".chart [data-alt]")].map(
    (el) => el.getAttribute("data-alt")!,
  );
}

function rational(num: number, den: number): Rational {
  const value = num / den;
  const sign = value < 0 ? "-" : "";
  return { num, den, decimal: sign + Math.abs(value).toFixed(3) };
}

function makeReport(
  entries: { id: string; positive: Rational; negative: Rational; net: Rational }[],
  ranking: string[][],
): RankingReport {
  return {
    scenario: "handmade",
    alternatives: entries.map((e) => ({ id: e.id, label: e.id })),
    criteria: [],
    scores: [],
    credibility: [],
    flows: entries.map((e) => ({
      alternative: e.id,
      positive: e.positive,
      negative: e.negative,
      net: e.net,
      net_display: e.net.decimal,
    })),
    partial: [],
    ranking,
  };
}

afterEach(() => {
  vi.unstubAllGlobals();
  vi.useRealTimers();
  document.body.innerHTML = "";
});

describe("criteria toggling", () => {
  it("re-ranks once with 8 criteria after toggling off f31 and f32, chart follows the response", async () => {
    vi.useFakeTimers();
    const { service, state } = await bootState(25);
    service.rankHandler = (body) => ({
      status: 200,
      body: body.criteria.length === 8 ? reportEight : reportTen,
    });
    const container = mount(state);

    state.setSelection(SIX, TEN);
    await vi.advanceTimersByTimeAsync(30);
    expect(service.rankBodies).toHaveLength(1);
    expect(chartOrder(container)).toEqual(reportTen.ranking.flat());

    state.toggleCriterion("f31");
    state.toggleCriterion("f32");
    await vi.advanceTimersByTimeAsync(30);

    // the two rapid toggles coalesce into a single request
    expect(service.rankBodies).toHaveLength(2);
    const request = service.rankBodies[1]!;
    expect(request.criteria).toHaveLength(8);
    expect(request.criteria).not.toContain("f31");
    expect(request.criteria).not.toContain("f32");
    expect(request.alternatives).toEqual(SIX);

    expect(chartOrder(container)).toEqual(reportEight.ranking.flat());
  });

  it("sends no request and disables the run control while the selection is invalid", async () => {
    const { service, state } = await bootState(0);
    const container = mount(state);

    state.setSelection(["PERA"], TEN);
    await flush();
    expect(service.rankBodies).toHaveLength(0);
    const runButton = container.querySelector<HTMLButtonElement>(".run-button")!;
    expect(runButton.disabled).toBe(true);

    state.setSelection(SIX, TEN);
    await flush();
    expect(service.rankBodies).toHaveLength(1);
    expect(container.querySelector<HTMLButtonElement>(".run-button")!.disabled).toBe(false);
  });
});

describe("stale responses", () => {
  it("drops a delayed response that arrives after a newer request", async () => {
    const { service, state } = await bootState(0);
    const container = mount(state);
    const slow = deferred<RouteReply>();
    let calls = 0;
    service.rankHandler = () => {
      calls += 1;
      return calls === 1 ? slow.promise : { status: 200, body: reportEight };
    };

    state.setSelection(SIX, TEN); // first request, held open
    expect(service.rankBodies).toHaveLength(1);
    state.toggleCriterion("f31"); // second request, answered immediately
    await flush();
    expect(state.report?.criteria).toHaveLength(8);

    slow.resolve({ status: 200, body: reportTen }); // stale answer arrives late
    await flush();
    expect(state.report?.criteria).toHaveLength(8);
    expect(chartOrder(container)).toEqual(reportEight.ranking.flat());
  });
});

describe("chart rendering", () => {
  it("orders bars and points by the report ranking", () => {
    for (const kind of ["histogram", "points"] as const) {
      const svg = renderChart(reportEight, kind);
      const order = [...svg.querySelectorAll("[data-alt]")].map((el) => el.getAttribute("data-alt"));
      expect(order).toEqual(reportEight.ranking.flat());
    }
  });

  it("labels every mark with the service's 3-decimal net flow", () => {
    const svg = renderChart(reportTen, "histogram");
    for (const flow of reportTen.flows) {
      const bar = svg.querySelector(`[data-alt="${flow.alternative}"]`)!;
      expect(bar.getAttribute("data-value")).toBe(flow.net_display);
      expect(flow.net_display).toMatch(/^-?\d+\.\d{3}$/);
    }
  });

  it("draws a tied class as equal-height bars inside one band", () => {
    const report = makeReport(
      [
        { id: "X", positive: rational(1, 2), negative: rational(0, 1), net: rational(1, 2) },
        { id: "A", positive: rational(1, 4), negative: rational(1, 6), net: rational(1, 12) },
        { id: "B", positive: rational(1, 4), negative: rational(1, 6), net: rational(1, 12) },
        { id: "C", positive: rational(1, 4), negative: rational(1, 6), net: rational(1, 12) },
        { id: "D", positive: rational(0, 1), negative: rational(3, 4), net: rational(-3, 4) },
      ],
      [["X"], ["A", "B", "C"], ["D"]],
    );
    const svg = renderChart(report, "histogram");

    const tied = ["A", "B", "C"].map((id) => svg.querySelector(`rect[data-alt="${id}"]`)!);
    const heights = tied.map((bar) => bar.getAttribute("height"));
    expect(new Set(heights).size).toBe(1);
    expect(new Set(tied.map((bar) => bar.getAttribute("y"))).size).toBe(1);
    expect(tied.every((bar) => bar.getAttribute("data-class") === "1")).toBe(true);

    const band = svg.querySelector('.class-band-tied[data-class="1"]')!;
    expect(band.getAttribute("data-size")).toBe("3");
    const bandLeft = Number(band.getAttribute("x"));
    const bandRight = bandLeft + Number(band.getAttribute("width"));
    for (const bar of tied) {
      const left = Number(bar.getAttribute("x"));
      expect(left).toBeGreaterThanOrEqual(bandLeft);
      expect(left + Number(bar.getAttribute("width"))).toBeLessThanOrEqual(bandRight);
    }
  });

  it("renders a two-technique dominance case as bars at +1 and -1", () => {
    const report = makeReport(
      [
        { id: "W", positive: rational(1, 1), negative: rational(0, 1), net: rational(1, 1) },
        { id: "L", positive: rational(0, 1), negative: rational(1, 1), net: rational(-1, 1) },
      ],
      [["W"], ["L"]],
    );
    const svg = renderChart(report, "histogram");
    const winner = svg.querySelector('rect[data-alt="W"]')!;
    const loser = svg.querySelector('rect[data-alt="L"]')!;
    expect(winner.getAttribute("data-value")).toBe("1.000");
    expect(loser.getAttribute("data-value")).toBe("-1.000");
    expect(winner.getAttribute("height")).toBe(loser.getAttribute("height"));
  });
});

describe("value edits", () => {
  it("shows an edit immediately and rolls it back when the service rejects it", async () => {
    const { service, state } = await bootState(0);
    const put = deferred<RouteReply>();
    service.putHandler = () => put.promise;

    const valueOf = () => state.allInstances().find((i) => i.id === "PERA")!.values["f11"];
    const original = valueOf()!;
    expect(original).not.toBe("total");

    const editing = state.editValue("PERA", "f11", "total");
    expect(valueOf()).toBe("total"); // optimistic, before the service answers

    put.resolve({
      status: 422,
      body: { code: "UNKNOWN_LABEL", message: "rejected", path: "instances/PERA/values/f11" },
    });
    await editing;

    expect(valueOf()).toBe(original); // rolled back
    expect(state.error?.code).toBe("UNKNOWN_LABEL");
    expect(service.rankBodies).toHaveLength(0); // failed edit never triggers a re-rank
  });

  it("blocks an out-of-scale label locally without any request", async () => {
    const { service, state } = await bootState(0);
    await state.editValue("PERA", "f11", "amazing");
    expect(service.putCalls).toHaveLength(0);
    expect(state.error?.code).toBe("UNKNOWN_LABEL");
    expect(state.allInstances().find((i) => i.id === "PERA")!.values["f11"]).not.toBe("amazing");
  });

  it("persists a valid edit and re-ranks with it", async () => {
    const { service, state } = await bootState(0);
    state.setSelection(SIX, TEN);
    await flush();
    expect(service.rankBodies).toHaveLength(1);

    await state.editValue("GRAI", "f12", "total");
    await flush();
    expect(service.putCalls).toEqual([{ id: "GRAI", body: { f12: "total" } }]);
    expect(state.allInstances().find((i) => i.id === "GRAI")!.values["f12"]).toBe("total");
    expect(service.rankBodies).toHaveLength(2);
    expect(state.error).toBeNull();
  });
});

describe("adding a technique", () => {
  it("posts the instance, selects it, and re-ranks with six alternatives", async () => {
    const { service, state } = await bootState(0);
    state.setSelection(FIVE, TEN);
    await flush();
    expect(service.rankBodies[0]!.alternatives).toHaveLength(5);

    const values = Object.fromEntries(criteriaFixture.criteria.map((c) => [c.id, "partial"]));
    await state.addTechnique("IEM", "IEM", values);
    await flush();

    expect(service.instancePosts).toHaveLength(1);
    expect(service.instancePosts[0]!.id).toBe("IEM");
    const lastRank = service.rankBodies.at(-1)!;
    expect(lastRank.alternatives).toHaveLength(6);
    expect(lastRank.alternatives).toContain("IEM");
  });
});

describe("baseline comparison", () => {
  it("hides the panel without a baseline, fills it from the diff endpoint, and tracks re-ranks", async () => {
    const { service, state } = await bootState(0);
    const container = mount(state);
    state.setSelection(SIX, TEN);
    await flush();
    expect(container.querySelector(".diff-panel")).toBeNull();

    await state.pinBaseline();
    expect(service.diffBodies).toHaveLength(1);
    const panel = container.querySelector(".diff-panel");
    expect(panel).not.toBeNull();
    expect(panel!.textContent).toContain("MERISE now above GIM");

    state.toggleCriterion("f31");
    await flush();
    expect(service.diffBodies.length).toBeGreaterThanOrEqual(2);
    expect(container.querySelector(".diff-panel")).not.toBeNull();

    state.clearBaseline();
    expect(container.querySelector(".diff-panel")).toBeNull();
  });
});
