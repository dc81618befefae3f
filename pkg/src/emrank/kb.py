"""File-backed knowledge base of techniques and evaluation criteria.

The KB holds three collections: qualitative value scales (ordered
label -> 0..4 score tables), a criterion registry grouped into the
families f1..f5 under the meta-family F, and technique instances that
assign a qualitative label to criteria. It is the source from which
performance tables are built.

KB values are immutable; mutating operations return a new KB. The file
format is a single canonical JSON document (sorted object keys, 2-space
indent, LF), so serialize-after-parse is byte-stable.
"""

from __future__ import annotations

import json
import os
import tempfile
import threading
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import Any, Iterable, Mapping, Sequence

from .core import AlternativeId, CriterionSpec, Direction, PerformanceTable
from .errors import DataError, UsageError
from .jsonutil import canonical_dumps, to_fraction
from .preference import PreferenceFunction, Usual

FAMILIES = ("f1", "f2", "f3", "f4", "f5")
SCORE_MIN, SCORE_MAX = 0, 4

_write_lock = threading.Lock()  # single-writer contract for persistence


@dataclass(frozen=True)
class KbMeta:
    name: str
    version: str


@dataclass(frozen=True)
class ValueScale:
    """Ordered qualitative labels with their 0..4 scores."""

    id: str
    levels: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "levels", tuple((str(l), int(s)) for l, s in self.levels))

    def score_of(self, label: str) -> int:
        for name, score in self.levels:
            if name == label:
                return score
        raise DataError(
            f"label {label!r} is not part of scale {self.id!r}",
            code="UNKNOWN_LABEL",
            path=f"scales/{self.id}",
        )

    def labels(self) -> tuple[str, ...]:
        return tuple(name for name, _ in self.levels)


@dataclass(frozen=True)
class CriterionDef:
    id: str
    family: str
    label: str
    scale_id: str


@dataclass(frozen=True)
class TechniqueInstance:
    """A technique with its criterion-id -> qualitative label values."""

    id: str
    label: str
    values: dict[str, str] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "values", dict(self.values))

    def with_values(self, updates: Mapping[str, str]) -> "TechniqueInstance":
        merged = dict(self.values)
        merged.update(updates)
        return replace(self, values=merged)


@dataclass(frozen=True)
class KnowledgeBase:
    meta: KbMeta
    scales: tuple[ValueScale, ...]
    criteria: tuple[CriterionDef, ...]
    instances: tuple[TechniqueInstance, ...]

    def __post_init__(self):
        object.__setattr__(self, "scales", tuple(self.scales))
        object.__setattr__(self, "criteria", tuple(self.criteria))
        object.__setattr__(self, "instances", tuple(self.instances))

    def scale(self, scale_id: str) -> ValueScale:
        for scale in self.scales:
            if scale.id == scale_id:
                return scale
        raise DataError(f"unknown scale {scale_id!r}", code="UNKNOWN_ID", path=f"scales/{scale_id}")

    def criterion(self, criterion_id: str) -> CriterionDef:
        for crit in self.criteria:
            if crit.id == criterion_id:
                return crit
        raise DataError(f"unknown criterion {criterion_id!r}", code="UNKNOWN_ID", path=f"criteria/{criterion_id}")

    def instance(self, instance_id: str) -> TechniqueInstance:
        for inst in self.instances:
            if inst.id == instance_id:
                return inst
        raise DataError(f"unknown technique {instance_id!r}", code="UNKNOWN_ID", path=f"instances/{instance_id}")

    def families(self) -> tuple[str, ...]:
        return tuple(sorted({crit.family for crit in self.criteria}))


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str

    def to_json(self) -> dict:
        return {"code": self.code, "message": self.message, "path": self.path}


def validate_kb(kb: KnowledgeBase) -> list[Violation]:
    """All invariant violations, each with a machine-readable code and the
    path of the offending element. Empty list means the KB is valid."""
    found: list[Violation] = []

    def flag(code: str, path: str, message: str):
        found.append(Violation(code, path, message))

    for kind, items in (("scales", kb.scales), ("criteria", kb.criteria), ("instances", kb.instances)):
        seen: set[str] = set()
        for item in items:
            if not item.id:
                flag("EMPTY_ID", f"{kind}/", f"{kind[:-1]} with empty id")
            elif item.id in seen:
                flag("DUPLICATE_ID", f"{kind}/{item.id}", f"duplicate {kind[:-1]} id {item.id!r}")
            seen.add(item.id)

    scale_ids = {s.id for s in kb.scales}
    for scale in kb.scales:
        path = f"scales/{scale.id}"
        if len(scale.levels) < 2:
            flag("SCALE_TOO_SMALL", path, f"scale {scale.id!r} needs at least two levels")
        labels_seen: set[str] = set()
        for index, (label, score) in enumerate(scale.levels):
            if label in labels_seen:
                flag("DUPLICATE_LABEL", f"{path}/levels/{index}", f"duplicate label {label!r} in scale {scale.id!r}")
            labels_seen.add(label)
            if not (SCORE_MIN <= score <= SCORE_MAX):
                flag(
                    "SCORE_RANGE",
                    f"{path}/levels/{index}",
                    f"score {score} of label {label!r} is outside {SCORE_MIN}..{SCORE_MAX}",
                )

    criterion_ids = {c.id for c in kb.criteria}
    for crit in kb.criteria:
        path = f"criteria/{crit.id}"
        if crit.family not in FAMILIES:
            flag("UNKNOWN_FAMILY", path, f"criterion {crit.id!r} declares unknown family {crit.family!r}")
        elif not crit.id.startswith(crit.family):
            flag("FAMILY_MISMATCH", path, f"criterion id {crit.id!r} does not match declared family {crit.family!r}")
        if crit.scale_id not in scale_ids:
            flag("UNKNOWN_SCALE", path, f"criterion {crit.id!r} references unknown scale {crit.scale_id!r}")

    for inst in kb.instances:
        for crit_id in sorted(inst.values):
            label = inst.values[crit_id]
            path = f"instances/{inst.id}/values/{crit_id}"
            if crit_id not in criterion_ids:
                flag("UNKNOWN_CRITERION", path, f"value references unknown criterion {crit_id!r}")
                continue
            crit = kb.criterion(crit_id)
            if crit.scale_id not in scale_ids:
                continue  # already flagged on the criterion
            scale = kb.scale(crit.scale_id)
            if label not in scale.labels():
                flag("UNKNOWN_LABEL", path, f"label {label!r} is not part of scale {crit.scale_id!r}")

    return found


def _require_valid(kb: KnowledgeBase) -> KnowledgeBase:
    violations = validate_kb(kb)
    if violations:
        first = violations[0]
        extra = f" (+{len(violations) - 1} more)" if len(violations) > 1 else ""
        raise DataError(first.message + extra, code=first.code, path=first.path)
    return kb


# ---------------------------------------------------------------------------
# Parsing / serialization


def _expect(payload: Any, key: str, types, path: str):
    if not isinstance(payload, dict) or key not in payload:
        raise DataError(f"missing key {key!r}", code="BAD_DOCUMENT", path=path)
    value = payload[key]
    if not isinstance(value, types):
        raise DataError(f"key {key!r} has the wrong type", code="BAD_DOCUMENT", path=f"{path}/{key}")
    return value


def kb_from_json(payload: Any, *, validate: bool = True) -> KnowledgeBase:
    meta_doc = _expect(payload, "meta", dict, "")
    meta = KbMeta(
        name=str(_expect(meta_doc, "name", str, "meta")),
        version=str(_expect(meta_doc, "version", str, "meta")),
    )
    scales = []
    for index, doc in enumerate(_expect(payload, "scales", list, "")):
        path = f"scales/{index}"
        levels_doc = _expect(doc, "levels", list, path)
        levels = []
        for level in levels_doc:
            label = _expect(level, "label", str, f"{path}/levels")
            score = _expect(level, "score", int, f"{path}/levels")
            levels.append((label, score))
        scales.append(ValueScale(id=_expect(doc, "id", str, path), levels=tuple(levels)))
    criteria = []
    for index, doc in enumerate(_expect(payload, "criteria", list, "")):
        path = f"criteria/{index}"
        criteria.append(
            CriterionDef(
                id=_expect(doc, "id", str, path),
                family=_expect(doc, "family", str, path),
                label=_expect(doc, "label", str, path),
                scale_id=_expect(doc, "scale", str, path),
            )
        )
    instances = []
    for index, doc in enumerate(_expect(payload, "instances", list, "")):
        path = f"instances/{index}"
        values_doc = _expect(doc, "values", dict, path)
        for crit_id, label in values_doc.items():
            if not isinstance(label, str):
                raise DataError(f"value of {crit_id!r} must be a string", code="BAD_DOCUMENT", path=f"{path}/values")
        instances.append(
            TechniqueInstance(
                id=_expect(doc, "id", str, path),
                label=_expect(doc, "label", str, path),
                values=dict(values_doc),
            )
        )
    kb = KnowledgeBase(meta=meta, scales=tuple(scales), criteria=tuple(criteria), instances=tuple(instances))
    return _require_valid(kb) if validate else kb


def parse_kb(text: str, *, validate: bool = True) -> KnowledgeBase:
    """Parse the KB document; raises on syntax errors (with line/column)
    and, unless disabled, on referential-integrity violations."""
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DataError(
            f"invalid JSON at line {exc.lineno}, column {exc.colno}: {exc.msg}",
            code="SYNTAX_ERROR",
        ) from exc
    return kb_from_json(payload, validate=validate)


def kb_to_json(kb: KnowledgeBase) -> dict:
    return {
        "criteria": [
            {"family": c.family, "id": c.id, "label": c.label, "scale": c.scale_id} for c in kb.criteria
        ],
        "instances": [
            {"id": i.id, "label": i.label, "values": {k: i.values[k] for k in sorted(i.values)}}
            for i in kb.instances
        ],
        "meta": {"name": kb.meta.name, "version": kb.meta.version},
        "scales": [
            {"id": s.id, "levels": [{"label": label, "score": score} for label, score in s.levels]}
            for s in kb.scales
        ],
    }


def serialize_kb(kb: KnowledgeBase) -> str:
    return canonical_dumps(kb_to_json(kb))


def load_kb(path: str | os.PathLike, *, validate: bool = True) -> KnowledgeBase:
    with open(path, encoding="utf-8") as handle:
        return parse_kb(handle.read(), validate=validate)


def save_kb(kb: KnowledgeBase, path: str | os.PathLike) -> None:
    """Whole-file rewrite with atomic replace; writers are serialized."""
    text = serialize_kb(kb)
    directory = os.path.dirname(os.fspath(path)) or "."
    with _write_lock:
        fd, tmp_path = tempfile.mkstemp(dir=directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(text)
            os.replace(tmp_path, path)
        except BaseException:
            if os.path.exists(tmp_path):
                os.unlink(tmp_path)
            raise


# ---------------------------------------------------------------------------
# Scale mapping and table building


def qualitative_to_score(label: str, scale: ValueScale) -> int:
    """Exact table lookup of a qualitative label in a scale."""
    return scale.score_of(label)


def build_performance_table(
    kb: KnowledgeBase,
    alternatives: Sequence[str],
    criteria: Sequence[str],
    weights: Sequence | None = None,
    functions: Mapping[str, PreferenceFunction] | None = None,
) -> PerformanceTable:
    """Score the selected techniques on the selected criteria.

    Weights default to the equal 1/n split when omitted; otherwise one
    raw weight per selected criterion. Every selected technique must have
    a value for every selected criterion; gaps are reported all at once.
    """
    if not alternatives or not criteria:
        raise UsageError("selection must include at least one technique and one criterion")
    insts = [kb.instance(alt_id) for alt_id in alternatives]
    crits = [kb.criterion(crit_id) for crit_id in criteria]
    if weights is None:
        weight_values = [Fraction(1, len(crits))] * len(crits)
    else:
        weight_values = [to_fraction(w, context="weight") for w in weights]
        if len(weight_values) != len(crits):
            raise UsageError("weights must match the selected criteria one-to-one")
    functions = dict(functions or {})

    gaps = [(inst.id, crit.id) for inst in insts for crit in crits if crit.id not in inst.values]
    if gaps:
        listing = ", ".join(f"({inst_id}, {crit_id})" for inst_id, crit_id in gaps)
        raise DataError(f"missing values for: {listing}", code="MISSING_VALUE")

    scores = tuple(
        tuple(Fraction(qualitative_to_score(inst.values[crit.id], kb.scale(crit.scale_id))) for crit in crits)
        for inst in insts
    )
    alt_ids = tuple(AlternativeId(inst.id, inst.label) for inst in insts)
    crit_specs = tuple(
        CriterionSpec(
            id=crit.id,
            weight=weight,
            direction=Direction.MAXIMIZE,
            function=functions.get(crit.id, Usual()),
        )
        for crit, weight in zip(crits, weight_values)
    )
    return PerformanceTable(alt_ids, crit_specs, scores)


# ---------------------------------------------------------------------------
# Mutations (always return a new KB)


def add_instance(kb: KnowledgeBase, inst: TechniqueInstance) -> KnowledgeBase:
    """New KB with the technique added; rejects duplicates and values that
    do not validate against the registry and scales."""
    if any(existing.id == inst.id for existing in kb.instances):
        raise DataError(f"technique {inst.id!r} already exists", code="DUPLICATE_ID", path=f"instances/{inst.id}")
    candidate = replace(kb, instances=kb.instances + (inst,))
    return _require_valid(candidate)


def update_instance_values(kb: KnowledgeBase, instance_id: str, updates: Mapping[str, str]) -> KnowledgeBase:
    """New KB with the technique's values merged with ``updates``."""
    target = kb.instance(instance_id)
    for crit_id, label in updates.items():
        crit = kb.criterion(crit_id)  # raises UNKNOWN_ID for bad criterion ids
        scale = kb.scale(crit.scale_id)
        if label not in scale.labels():
            raise DataError(
                f"label {label!r} is not part of scale {crit.scale_id!r}",
                code="UNKNOWN_LABEL",
                path=f"instances/{instance_id}/values/{crit_id}",
            )
    updated = target.with_values(updates)
    instances = tuple(updated if inst.id == instance_id else inst for inst in kb.instances)
    return replace(kb, instances=instances)


# ---------------------------------------------------------------------------
# Graph export


def export_graph(kb: KnowledgeBase) -> dict:
    """Node/edge view of the KB hierarchy: families under the root F,
    criteria under their family, techniques under the root T, and one
    labeled edge per (technique, criterion) value."""
    nodes = [{"id": "F", "kind": "root", "label": "F"}]
    edges = []
    for family in kb.families():
        nodes.append({"id": f"family:{family}", "kind": "family", "label": family})
        edges.append({"from": f"family:{family}", "kind": "is_a", "to": "F"})
    for crit in kb.criteria:
        nodes.append({"id": f"criterion:{crit.id}", "kind": "criterion", "label": crit.label})
        edges.append({"from": f"criterion:{crit.id}", "kind": "is_a", "to": f"family:{crit.family}"})
    nodes.append({"id": "T", "kind": "root", "label": "T"})
    for inst in kb.instances:
        nodes.append({"id": f"technique:{inst.id}", "kind": "technique", "label": inst.label})
        edges.append({"from": f"technique:{inst.id}", "kind": "is_a", "to": "T"})
        for crit_id in sorted(inst.values):
            edges.append(
                {
                    "from": f"technique:{inst.id}",
                    "kind": "has_value",
                    "label": inst.values[crit_id],
                    "to": f"criterion:{crit_id}",
                }
            )
    return {"edges": edges, "nodes": nodes}
