"""Exact-arithmetic PROMETHEE kernel.

Pipeline: a performance table (alternatives x criteria, with weights,
directions and preference functions) is aggregated into a credibility
matrix of pairwise preference indices, which yields positive/negative/net
flows, a complete ranking by net flow, and a partial ranking from the
joint (positive, negative) flow comparison.

Everything is computed with ``fractions.Fraction``; ties are exact, so
indifference classes are real equalities rather than float coincidences.
All values are immutable and all functions are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import ConfigurationError, DataError, UsageError
from .jsonutil import to_fraction
from .preference import PreferenceFunction, Usual

ZERO = Fraction(0)
ONE = Fraction(1)


class Direction(Enum):
    MAXIMIZE = "maximize"
    MINIMIZE = "minimize"


class Relation(Enum):
    """Cell of a partial-ranking matrix (row vs column alternative)."""

    PREFER = "prefer"
    INDIFFERENT = "indifferent"
    INCOMPARABLE = "incomparable"
    SELF = "self"


@dataclass(frozen=True)
class AlternativeId:
    id: str
    label: str = ""

    def __post_init__(self):
        if not self.id:
            raise DataError("alternative id must be non-empty", code="EMPTY_ID")
        if not self.label:
            object.__setattr__(self, "label", self.id)


@dataclass(frozen=True)
class CriterionSpec:
    """One evaluation dimension: raw weight, direction, preference shape."""

    id: str
    weight: Fraction = ONE
    direction: Direction = Direction.MAXIMIZE
    function: PreferenceFunction = field(default_factory=Usual)

    def __post_init__(self):
        if not self.id:
            raise DataError("criterion id must be non-empty", code="EMPTY_ID")
        object.__setattr__(self, "weight", to_fraction(self.weight, context=f"weight of {self.id}"))
        if self.weight < 0:
            raise ConfigurationError(f"criterion {self.id}: weight must be >= 0", path=self.id)


@dataclass(frozen=True)
class PerformanceTable:
    """Alternatives x criteria score matrix; the input to the pipeline."""

    alternatives: tuple[AlternativeId, ...]
    criteria: tuple[CriterionSpec, ...]
    scores: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(
            self,
            "scores",
            tuple(tuple(to_fraction(v, context="score") for v in row) for row in self.scores),
        )
        m, n = len(self.alternatives), len(self.criteria)
        if m < 2:
            raise UsageError("ranking needs at least two alternatives")
        if n < 1:
            raise UsageError("a performance table needs at least one criterion")
        if len(self.scores) != m or any(len(row) != n for row in self.scores):
            raise UsageError(f"score matrix must be {m}x{n}")
        seen = set()
        for alt in self.alternatives:
            if alt.id in seen:
                raise DataError(f"duplicate alternative id {alt.id!r}", code="DUPLICATE_ID", path=alt.id)
            seen.add(alt.id)
        seen = set()
        for crit in self.criteria:
            if crit.id in seen:
                raise DataError(f"duplicate criterion id {crit.id!r}", code="DUPLICATE_ID", path=crit.id)
            seen.add(crit.id)
        if all(c.weight == 0 for c in self.criteria):
            raise ConfigurationError("all criterion weights are zero; at least one must be positive")

    @property
    def normalized_weights(self) -> tuple[Fraction, ...]:
        total = sum((c.weight for c in self.criteria), ZERO)
        return tuple(c.weight / total for c in self.criteria)


@dataclass(frozen=True)
class CredibilityMatrix:
    """Pairwise preference indices; entry [i][k] aggregates how strongly
    alternative i is preferred to alternative k across criteria."""

    alternatives: tuple[AlternativeId, ...]
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "values", tuple(tuple(row) for row in self.values))
        m = len(self.alternatives)
        if len(self.values) != m or any(len(row) != m for row in self.values):
            raise UsageError(f"credibility matrix must be {m}x{m}")
        for i, row in enumerate(self.values):
            for k, entry in enumerate(row):
                if i == k and entry != 0:
                    raise DataError("credibility diagonal must be zero", code="BAD_MATRIX")
                if not (0 <= entry <= 1):
                    raise DataError("credibility entries must lie in [0, 1]", code="BAD_MATRIX")


@dataclass(frozen=True)
class FlowTable:
    """Positive, negative and net flow per alternative.

    Local consistency (net = positive - negative, ranges) is checked at
    construction. The exact zero-sum of net flows is a property of the
    ``flows`` operation, not of the container: reported flow lists from
    external sources may be rounded and only approximately zero-sum.
    """

    alternatives: tuple[AlternativeId, ...]
    positive: tuple[Fraction, ...]
    negative: tuple[Fraction, ...]
    net: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "alternatives", tuple(self.alternatives))
        object.__setattr__(self, "positive", tuple(to_fraction(v, context="positive flow") for v in self.positive))
        object.__setattr__(self, "negative", tuple(to_fraction(v, context="negative flow") for v in self.negative))
        object.__setattr__(self, "net", tuple(to_fraction(v, context="net flow") for v in self.net))
        m = len(self.alternatives)
        if not (len(self.positive) == len(self.negative) == len(self.net) == m):
            raise UsageError("flow columns must match the alternative count")
        for pos, neg, net in zip(self.positive, self.negative, self.net):
            if net != pos - neg:
                raise DataError("net flow must equal positive - negative", code="BAD_FLOWS")
            if not (0 <= pos <= 1 and 0 <= neg <= 1):
                raise DataError("positive/negative flows must lie in [0, 1]", code="BAD_FLOWS")

    @classmethod
    def from_net(cls, alternatives: Sequence[AlternativeId], net: Iterable) -> "FlowTable":
        """Embed bare net flows (e.g. published result lists) as a table."""
        nets = tuple(to_fraction(v, context="net flow") for v in net)
        pos = tuple(max(v, ZERO) for v in nets)
        neg = tuple(max(-v, ZERO) for v in nets)
        return cls(tuple(alternatives), pos, neg, nets)

    def net_of(self, alt_id: str) -> Fraction:
        for alt, value in zip(self.alternatives, self.net):
            if alt.id == alt_id:
                return value
        raise DataError(f"unknown alternative {alt_id!r}", code="UNKNOWN_ID", path=alt_id)


@dataclass(frozen=True)
class CompleteRanking:
    """Ordered indifference classes, best first; ties stay together."""

    classes: tuple[tuple[AlternativeId, ...], ...]
    class_net: tuple[Fraction, ...]

    def position(self, alt_id: str) -> int:
        for index, group in enumerate(self.classes):
            if any(alt.id == alt_id for alt in group):
                return index
        raise DataError(f"unknown alternative {alt_id!r}", code="UNKNOWN_ID", path=alt_id)

    def ordered_alternatives(self) -> tuple[AlternativeId, ...]:
        return tuple(alt for group in self.classes for alt in group)

    def class_ids(self) -> tuple[tuple[str, ...], ...]:
        return tuple(tuple(alt.id for alt in group) for group in self.classes)


@dataclass(frozen=True)
class PartialRanking:
    """Pairwise relation matrix from the joint flow comparison."""

    alternatives: tuple[AlternativeId, ...]
    relations: tuple[tuple[Relation, ...], ...]

    def relation(self, i: int, k: int) -> Relation:
        return self.relations[i][k]


def preference_degree(d: Fraction, function: PreferenceFunction) -> Fraction:
    """Degree in [0, 1] to which a difference d supports a preference."""
    return function.degree(to_fraction(d, context="difference"))


def directed_difference(table: PerformanceTable, j: int, i: int, k: int) -> Fraction:
    """Score difference of alternatives i over k on criterion j, oriented
    so that positive always means "i does better"."""
    if not 0 <= j < len(table.criteria):
        raise UsageError(f"criterion index {j} out of range")
    if not 0 <= i < len(table.alternatives) or not 0 <= k < len(table.alternatives):
        raise UsageError(f"alternative index out of range: {i}, {k}")
    diff = table.scores[i][j] - table.scores[k][j]
    if table.criteria[j].direction is Direction.MINIMIZE:
        diff = -diff
    return diff


def preference_index(table: PerformanceTable) -> CredibilityMatrix:
    """Weighted aggregation of per-criterion preference degrees for every
    ordered pair of alternatives; the credibility matrix."""
    weights = table.normalized_weights
    m = len(table.alternatives)
    rows = []
    for i in range(m):
        row = []
        for k in range(m):
            if i == k:
                row.append(ZERO)
                continue
            total = ZERO
            for j, crit in enumerate(table.criteria):
                degree = crit.function.degree(directed_difference(table, j, i, k))
                total += weights[j] * degree
            row.append(total)
        rows.append(tuple(row))
    return CredibilityMatrix(table.alternatives, tuple(rows))


def flows(pi: CredibilityMatrix) -> FlowTable:
    """Average outgoing (positive) and incoming (negative) preference per
    alternative, and their difference (net flow). Net flows sum to zero."""
    m = len(pi.alternatives)
    if m < 2:
        raise UsageError("ranking needs at least two alternatives")
    scale = Fraction(1, m - 1)
    positive = tuple(scale * sum((pi.values[i][k] for k in range(m) if k != i), ZERO) for i in range(m))
    negative = tuple(scale * sum((pi.values[k][i] for k in range(m) if k != i), ZERO) for i in range(m))
    net = tuple(p - n for p, n in zip(positive, negative))
    return FlowTable(pi.alternatives, positive, negative, net)


def rank_complete(flow_table: FlowTable) -> CompleteRanking:
    """Sort by strictly decreasing net flow; exact ties share a class and
    keep their input order within it."""
    order = sorted(range(len(flow_table.alternatives)), key=lambda i: flow_table.net[i], reverse=True)
    classes: list[tuple[AlternativeId, ...]] = []
    class_net: list[Fraction] = []
    for i in order:
        if class_net and flow_table.net[i] == class_net[-1]:
            classes[-1] = classes[-1] + (flow_table.alternatives[i],)
        else:
            classes.append((flow_table.alternatives[i],))
            class_net.append(flow_table.net[i])
    return CompleteRanking(tuple(classes), tuple(class_net))


def rank_partial(flow_table: FlowTable) -> PartialRanking:
    """Joint comparison of (positive, negative) flows: preference needs
    agreement of both with at least one strict; disagreement means the
    pair is incomparable."""
    m = len(flow_table.alternatives)
    rows = []
    for i in range(m):
        row = []
        for k in range(m):
            if i == k:
                row.append(Relation.SELF)
                continue
            pos_ge = flow_table.positive[i] >= flow_table.positive[k]
            neg_le = flow_table.negative[i] <= flow_table.negative[k]
            pos_eq = flow_table.positive[i] == flow_table.positive[k]
            neg_eq = flow_table.negative[i] == flow_table.negative[k]
            if pos_eq and neg_eq:
                row.append(Relation.INDIFFERENT)
            elif pos_ge and neg_le:
                row.append(Relation.PREFER)
            else:
                row.append(Relation.INCOMPARABLE)
        rows.append(tuple(row))
    return PartialRanking(flow_table.alternatives, tuple(rows))
