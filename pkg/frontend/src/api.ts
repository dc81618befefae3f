import type {
  CriteriaResponse,
  KbDocument,
  KbInstance,
  RankDiff,
  RankingReport,
  ScenarioRequest,
  ServiceErrorBody,
} from "./types.js";

/** Service error carrying the machine-readable code from the response body. */
export class ServiceError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    readonly path: string,
    message: string,
  ) {
    super(message);
    this.name = "ServiceError";
  }

  get isClientError(): boolean {
    return this.status >= 400 && this.status < 500;
  }
}

async function toServiceError(response: Response): Promise<ServiceError> {
  let body: Partial<ServiceErrorBody> = {};
  try {
    body = (await response.json()) as Partial<ServiceErrorBody>;
  } catch {
    // non-JSON error body; keep the status-only error
  }
  return new ServiceError(
    response.status,
    body.code ?? "HTTP_ERROR",
    body.path ?? "",
    body.message ?? `request failed with status ${response.status}`,
  );
}

/** Thin typed client over the workbench HTTP API (its only data source). */
export class WorkbenchApi {
  constructor(private readonly base: string = "") {}

  private async request<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method, headers: { "Content-Type": "application/json" } };
    if (body !== undefined) init.body = JSON.stringify(body);
    const response = await fetch(this.base + path, init);
    if (!response.ok) throw await toServiceError(response);
    return (await response.json()) as T;
  }

  kb(): Promise<KbDocument> {
    return this.request("GET", "/api/kb");
  }

  criteria(): Promise<CriteriaResponse> {
    return this.request("GET", "/api/criteria");
  }

  rank(scenario: ScenarioRequest): Promise<RankingReport> {
    return this.request("POST", "/api/rank", scenario);
  }

  diff(before: RankingReport, after: RankingReport): Promise<RankDiff> {
    return this.request("POST", "/api/diff", { before, after });
  }

  addInstance(instance: { id: string; label?: string; values?: Record<string, string> }): Promise<KbInstance> {
    return this.request("POST", "/api/kb/instances", instance);
  }

  setValues(instanceId: string, values: Record<string, string>): Promise<KbInstance> {
    return this.request("PUT", `/api/kb/instances/${encodeURIComponent(instanceId)}/values`, values);
  }
}
