"""What-if layer: scenarios, ranking reports, and ranking diffs.

A scenario selects techniques and criteria from a knowledge base,
optionally overriding weights and preference functions. Running one
produces a self-contained ranking report; two reports can be diffed to
see who entered, who moved, and which pairwise orders flipped. A weight
sweep reruns a scenario across the whole [0, 1] range of one criterion's
weight to probe ranking stability.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Mapping, Sequence

from .core import (
    AlternativeId,
    CompleteRanking,
    CredibilityMatrix,
    CriterionSpec,
    Direction,
    FlowTable,
    PartialRanking,
    PerformanceTable,
    Relation,
    flows,
    preference_index,
    rank_complete,
    rank_partial,
)
from .errors import DataError, UsageError, WorkbenchError
from .jsonutil import display_str, rational_from_json, rational_to_json, to_fraction
from .kb import KnowledgeBase, build_performance_table
from .preference import PreferenceFunction, function_from_json

ONE = Fraction(1)


@dataclass(frozen=True)
class Scenario:
    """A named selection of techniques and criteria with optional weight
    and preference-function overrides. Unspecified weights default to 1,
    so overrides are relative shares, normalized when the table is built."""

    name: str
    kb: KnowledgeBase
    alternatives: tuple[str, ...]
    criteria: tuple[str, ...]
    weights: dict[str, Fraction] = field(default_factory=dict)
    functions: dict[str, PreferenceFunction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(
            self,
            "weights",
            {k: to_fraction(v, context=f"weight of {k}") for k, v in dict(self.weights).items()},
        )
        object.__setattr__(self, "functions", dict(self.functions))
        if len(self.alternatives) < 2:
            raise UsageError(f"scenario {self.name!r}: ranking needs at least two alternatives")
        if len(self.criteria) < 1:
            raise UsageError(f"scenario {self.name!r}: at least one criterion is required")
        for alt_id in self.alternatives:
            self.kb.instance(alt_id)
        for crit_id in self.criteria:
            self.kb.criterion(crit_id)
        for crit_id in list(self.weights) + list(self.functions):
            if crit_id not in self.criteria:
                raise DataError(
                    f"scenario {self.name!r}: override targets criterion {crit_id!r} outside the selection",
                    code="UNKNOWN_ID",
                    path=crit_id,
                )

    def effective_weights(self) -> tuple[Fraction, ...]:
        return tuple(self.weights.get(crit_id, ONE) for crit_id in self.criteria)

    def without_criterion(self, criterion_id: str) -> "Scenario":
        if criterion_id not in self.criteria:
            raise UsageError(f"criterion {criterion_id!r} is not part of scenario {self.name!r}")
        if len(self.criteria) < 2:
            raise UsageError("cannot remove the only criterion of a scenario")
        return replace(
            self,
            criteria=tuple(c for c in self.criteria if c != criterion_id),
            weights={k: v for k, v in self.weights.items() if k != criterion_id},
            functions={k: v for k, v in self.functions.items() if k != criterion_id},
        )


@dataclass(frozen=True)
class RankingReport:
    """Everything one scenario run produced, mutually consistent."""

    scenario: str
    table: PerformanceTable
    credibility: CredibilityMatrix
    flow_table: FlowTable
    complete: CompleteRanking
    partial: PartialRanking

    def display_net(self) -> dict[str, str]:
        return {
            alt.id: display_str(net)
            for alt, net in zip(self.flow_table.alternatives, self.flow_table.net)
        }


@dataclass(frozen=True)
class RankChange:
    alternative: str
    class_before: int
    class_after: int
    net_before: Fraction
    net_after: Fraction


@dataclass(frozen=True)
class Inversion:
    """demoted was strictly above promoted before, strictly below after."""

    demoted: str
    promoted: str


@dataclass(frozen=True)
class RankDiff:
    before: str
    after: str
    entered: tuple[str, ...]
    departed: tuple[str, ...]
    changes: tuple[RankChange, ...]
    inversions: tuple[Inversion, ...]


def run_scenario(scenario: Scenario) -> RankingReport:
    """Full pipeline for one scenario: table -> credibility -> flows ->
    complete + partial rankings. Deterministic for fixed inputs."""
    try:
        raw = scenario.effective_weights()
        total = sum(raw, Fraction(0))
        # normalize here so the report's table matches its JSON form exactly;
        # an all-zero total is left for table validation to reject
        weights = tuple(w / total for w in raw) if total else raw
        table = build_performance_table(
            scenario.kb,
            scenario.alternatives,
            scenario.criteria,
            weights=weights,
            functions=scenario.functions,
        )
        pi = preference_index(table)
        flow_table = flows(pi)
        return RankingReport(
            scenario=scenario.name,
            table=table,
            credibility=pi,
            flow_table=flow_table,
            complete=rank_complete(flow_table),
            partial=rank_partial(flow_table),
        )
    except WorkbenchError as exc:
        if exc.message.startswith(f"scenario {scenario.name!r}"):
            raise
        raise type(exc)(
            f"scenario {scenario.name!r}: {exc.message}", code=exc.code, path=exc.path
        ) from exc


def diff_rankings(before: RankingReport, after: RankingReport) -> RankDiff:
    """Compare two reports: entered/departed alternative sets, per-shared-
    alternative class and net-flow movement, and strict order inversions."""
    before_ids = [alt.id for alt in before.flow_table.alternatives]
    after_ids = [alt.id for alt in after.flow_table.alternatives]
    shared = [alt_id for alt_id in before_ids if alt_id in after_ids]
    entered = tuple(alt_id for alt_id in after_ids if alt_id not in before_ids)
    departed = tuple(alt_id for alt_id in before_ids if alt_id not in after_ids)

    changes = tuple(
        RankChange(
            alternative=alt_id,
            class_before=before.complete.position(alt_id),
            class_after=after.complete.position(alt_id),
            net_before=before.flow_table.net_of(alt_id),
            net_after=after.flow_table.net_of(alt_id),
        )
        for alt_id in shared
    )

    inversions = []
    for i, x in enumerate(shared):
        for y in shared[i + 1 :]:
            before_cmp = _cmp(before.flow_table.net_of(x), before.flow_table.net_of(y))
            after_cmp = _cmp(after.flow_table.net_of(x), after.flow_table.net_of(y))
            if before_cmp > 0 and after_cmp < 0:
                inversions.append(Inversion(demoted=x, promoted=y))
            elif before_cmp < 0 and after_cmp > 0:
                inversions.append(Inversion(demoted=y, promoted=x))
    return RankDiff(
        before=before.scenario,
        after=after.scenario,
        entered=entered,
        departed=departed,
        changes=changes,
        inversions=tuple(inversions),
    )


def _cmp(a: Fraction, b: Fraction) -> int:
    return (a > b) - (a < b)


def weight_sensitivity(
    scenario: Scenario, criterion_id: str, steps: int
) -> list[tuple[Fraction, CompleteRanking]]:
    """Sweep one criterion's weight over {0, 1/steps, ..., 1}, rescaling
    the remaining weights proportionally, and rank at each point."""
    if criterion_id not in scenario.criteria:
        raise UsageError(f"criterion {criterion_id!r} is not part of scenario {scenario.name!r}")
    if steps < 2:
        raise UsageError("a weight sweep needs at least two steps")
    if len(scenario.criteria) < 2:
        raise UsageError("a weight sweep needs at least two criteria to rescale")

    raw = scenario.effective_weights()
    total = sum(raw, Fraction(0))
    if total == 0:
        raise UsageError("scenario weights sum to zero")
    base = [w / total for w in raw]
    target = scenario.criteria.index(criterion_id)
    if base[target] == ONE:
        raise UsageError("the remaining criteria carry zero weight; rescaling is undefined")

    points: list[tuple[Fraction, CompleteRanking]] = []
    rest = ONE - base[target]
    for step in range(steps + 1):
        t = Fraction(step, steps)
        swept = {
            crit_id: (t if i == target else base[i] * (ONE - t) / rest)
            for i, crit_id in enumerate(scenario.criteria)
        }
        probe = replace(scenario, name=f"{scenario.name}@{criterion_id}={t}", weights=swept)
        points.append((t, run_scenario(probe).complete))
    return points


# ---------------------------------------------------------------------------
# JSON forms


def scenario_from_json(payload: Any, kb: KnowledgeBase, *, context: str = "scenario") -> Scenario:
    if not isinstance(payload, dict):
        raise DataError(f"{context}: expected an object", code="BAD_DOCUMENT")
    for key in ("name", "alternatives", "criteria"):
        if key not in payload:
            raise DataError(f"{context}: missing key {key!r}", code="BAD_DOCUMENT", path=key)
    name = payload["name"]
    alternatives = payload["alternatives"]
    criteria = payload["criteria"]
    if not isinstance(name, str) or not isinstance(alternatives, list) or not isinstance(criteria, list):
        raise DataError(f"{context}: name must be a string and selections must be lists", code="BAD_DOCUMENT")
    weights_doc = payload.get("weights") or {}
    functions_doc = payload.get("functions") or {}
    if not isinstance(weights_doc, dict) or not isinstance(functions_doc, dict):
        raise DataError(f"{context}: weights and functions must be objects", code="BAD_DOCUMENT")
    weights = {k: to_fraction(v, context=f"{context}.weights.{k}") for k, v in weights_doc.items()}
    functions = {
        k: function_from_json(v, context=f"{context}.functions.{k}") for k, v in functions_doc.items()
    }
    return Scenario(
        name=name,
        kb=kb,
        alternatives=tuple(str(a) for a in alternatives),
        criteria=tuple(str(c) for c in criteria),
        weights=weights,
        functions=functions,
    )


def scenario_to_json(scenario: Scenario) -> dict:
    payload: dict[str, Any] = {
        "alternatives": list(scenario.alternatives),
        "criteria": list(scenario.criteria),
        "name": scenario.name,
    }
    if scenario.weights:
        payload["weights"] = {k: rational_to_json(v) for k, v in sorted(scenario.weights.items())}
    if scenario.functions:
        payload["functions"] = {k: f.to_json() for k, f in sorted(scenario.functions.items())}
    return payload


def load_scenario(path, kb: KnowledgeBase) -> Scenario:
    import json

    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DataError(
                f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                code="SYNTAX_ERROR",
            ) from exc
    return scenario_from_json(payload, kb)


def report_to_json(report: RankingReport) -> dict:
    table = report.table
    return {
        "alternatives": [{"id": a.id, "label": a.label} for a in table.alternatives],
        "credibility": [[rational_to_json(v) for v in row] for row in report.credibility.values],
        "criteria": [
            {
                "direction": crit.direction.value,
                "function": crit.function.to_json(),
                "id": crit.id,
                "weight": rational_to_json(weight),
            }
            for crit, weight in zip(table.criteria, table.normalized_weights)
        ],
        "flows": [
            {
                "alternative": alt.id,
                "negative": rational_to_json(neg),
                "net": rational_to_json(net),
                "net_display": display_str(net),
                "positive": rational_to_json(pos),
            }
            for alt, pos, neg, net in zip(
                report.flow_table.alternatives,
                report.flow_table.positive,
                report.flow_table.negative,
                report.flow_table.net,
            )
        ],
        "partial": [[relation.value for relation in row] for row in report.partial.relations],
        "ranking": [list(group) for group in report.complete.class_ids()],
        "scenario": report.scenario,
        "scores": [[rational_to_json(v) for v in row] for row in table.scores],
    }


def report_from_json(payload: Any, *, context: str = "report") -> RankingReport:
    if not isinstance(payload, dict):
        raise DataError(f"{context}: expected an object", code="BAD_DOCUMENT")
    try:
        alternatives = tuple(
            AlternativeId(doc["id"], doc.get("label", "")) for doc in payload["alternatives"]
        )
        criteria = tuple(
            CriterionSpec(
                id=doc["id"],
                weight=rational_from_json(doc["weight"], context=f"{context}.criteria.weight"),
                direction=Direction(doc["direction"]),
                function=function_from_json(doc["function"], context=f"{context}.criteria.function"),
            )
            for doc in payload["criteria"]
        )
        scores = tuple(
            tuple(rational_from_json(v, context=f"{context}.scores") for v in row)
            for row in payload["scores"]
        )
        table = PerformanceTable(alternatives, criteria, scores)
        credibility = CredibilityMatrix(
            alternatives,
            tuple(
                tuple(rational_from_json(v, context=f"{context}.credibility") for v in row)
                for row in payload["credibility"]
            ),
        )
        flow_rows = {doc["alternative"]: doc for doc in payload["flows"]}
        positive, negative, net = [], [], []
        for alt in alternatives:
            doc = flow_rows[alt.id]
            positive.append(rational_from_json(doc["positive"], context=f"{context}.flows"))
            negative.append(rational_from_json(doc["negative"], context=f"{context}.flows"))
            net.append(rational_from_json(doc["net"], context=f"{context}.flows"))
        flow_table = FlowTable(alternatives, tuple(positive), tuple(negative), tuple(net))
        by_id = {alt.id: alt for alt in alternatives}
        classes = tuple(tuple(by_id[alt_id] for alt_id in group) for group in payload["ranking"])
        class_net = tuple(flow_table.net_of(group[0]) for group in payload["ranking"])
        complete = CompleteRanking(classes, class_net)
        partial = PartialRanking(
            alternatives,
            tuple(tuple(Relation(cell) for cell in row) for row in payload["partial"]),
        )
        return RankingReport(
            scenario=str(payload["scenario"]),
            table=table,
            credibility=credibility,
            flow_table=flow_table,
            complete=complete,
            partial=partial,
        )
    except (KeyError, IndexError, TypeError, ValueError) as exc:
        raise DataError(f"{context}: malformed report document: {exc}", code="BAD_DOCUMENT") from exc


def load_report(path) -> RankingReport:
    import json

    with open(path, encoding="utf-8") as handle:
        try:
            payload = json.load(handle)
        except json.JSONDecodeError as exc:
            raise DataError(
                f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
                code="SYNTAX_ERROR",
            ) from exc
    return report_from_json(payload)


def validate_report(report: RankingReport) -> list[str]:
    """Mutual-consistency check: the embedded matrix, flows and rankings
    must be recomputable from the embedded table. Empty list means ok."""
    problems = []
    if preference_index(report.table) != report.credibility:
        problems.append("credibility matrix does not match the performance table")
    if flows(report.credibility) != report.flow_table:
        problems.append("flow table does not match the credibility matrix")
    if rank_complete(report.flow_table) != report.complete:
        problems.append("complete ranking does not match the flow table")
    if rank_partial(report.flow_table) != report.partial:
        problems.append("partial ranking does not match the flow table")
    return problems


def diff_to_json(diff: RankDiff) -> dict:
    return {
        "after": diff.after,
        "before": diff.before,
        "changes": [
            {
                "alternative": ch.alternative,
                "class_after": ch.class_after,
                "class_before": ch.class_before,
                "net_after": rational_to_json(ch.net_after),
                "net_before": rational_to_json(ch.net_before),
            }
            for ch in diff.changes
        ],
        "departed": list(diff.departed),
        "entered": list(diff.entered),
        "inversions": [
            {"demoted": inv.demoted, "promoted": inv.promoted} for inv in diff.inversions
        ],
    }
