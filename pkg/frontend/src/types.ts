// Wire types for the workbench service. Every number shown in the UI
// comes from these payloads; the client never computes rankings itself.

export interface Rational {
  num: number;
  den: number;
  decimal: string;
}

export interface AlternativeRef {
  id: string;
  label: string;
}

export interface ReportCriterion {
  id: string;
  direction: string;
  weight: Rational;
  function: { kind: string } & Record<string, unknown>;
}

export interface FlowEntry {
  alternative: string;
  positive: Rational;
  negative: Rational;
  net: Rational;
  net_display: string;
}

export interface RankingReport {
  scenario: string;
  alternatives: AlternativeRef[];
  criteria: ReportCriterion[];
  scores: Rational[][];
  credibility: Rational[][];
  flows: FlowEntry[];
  partial: string[][];
  ranking: string[][];
}

export interface RankDiff {
  before: string;
  after: string;
  entered: string[];
  departed: string[];
  changes: {
    alternative: string;
    class_before: number;
    class_after: number;
    net_before: Rational;
    net_after: Rational;
  }[];
  inversions: { promoted: string; demoted: string }[];
}

export interface CriterionInfo {
  id: string;
  label: string;
  family: string;
  scale: string;
}

export interface CriteriaResponse {
  criteria: CriterionInfo[];
  families: { id: string; criteria: string[] }[];
}

export interface ScaleLevel {
  label: string;
  score: number;
}

export interface KbInstance {
  id: string;
  label: string;
  values: Record<string, string>;
}

export interface KbDocument {
  meta: { name: string; version: string };
  scales: { id: string; levels: ScaleLevel[] }[];
  criteria: CriterionInfo[];
  instances: KbInstance[];
}

// relative weights; {num, den} keeps them exact across the wire
export interface ScenarioRequest {
  name: string;
  alternatives: string[];
  criteria: string[];
  weights?: Record<string, { num: number; den: number }>;
  functions?: Record<string, { kind: string } & Record<string, unknown>>;
}

export interface ServiceErrorBody {
  code: string;
  message: string;
  path: string;
}
