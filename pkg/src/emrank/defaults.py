"""The knowledge base shipped with the workbench.

Fourteen criteria grouped into five families (model, general, structure,
resources, views) under the meta-family F, one five-step qualitative
scale, and six enterprise-modeling techniques. The technique values are
illustrative fixture data authored for the demo scenarios; they are not
measurements.
"""

from __future__ import annotations

from .kb import CriterionDef, KbMeta, KnowledgeBase, TechniqueInstance, ValueScale

DEFAULT_SCALE_ID = "default"

# "unknown" maps to 0 so absent knowledge never advantages a technique.
DEFAULT_LEVELS = (
    ("unknown", 0),
    ("weak", 1),
    ("partial", 2),
    ("good", 3),
    ("total", 4),
)

CRITERIA = (
    # family f1: the model itself
    ("f11", "f1", "generic model"),
    ("f12", "f1", "formalism"),
    ("f13", "f1", "life cycle"),
    ("f14", "f1", "software support"),
    # family f2: general usability
    ("f21", "f2", "learning"),
    ("f22", "f2", "ease of use"),
    ("f23", "f2", "time"),
    # family f3: decision structure
    ("f31", "f3", "decision flow"),
    ("f32", "f3", "decision function"),
    # family f4: resources
    ("f41", "f4", "human resources"),
    # family f5: offered views
    ("f51", "f5", "functional view"),
    ("f52", "f5", "organizational view"),
    ("f53", "f5", "resource view"),
    ("f54", "f5", "informational view"),
)

_CRITERION_ORDER = tuple(cid for cid, _, _ in CRITERIA)

# Illustrative evaluations, one label per criterion in registry order.
TECHNIQUE_VALUES = {
    "MERISE": ("partial", "good", "partial", "good", "good", "good", "weak",
               "unknown", "weak", "weak", "good", "partial", "weak", "total"),
    "GRAI": ("good", "partial", "partial", "partial", "partial", "partial", "partial",
             "total", "good", "partial", "partial", "good", "partial", "weak"),
    "CIMOSA": ("good", "good", "good", "partial", "weak", "weak", "good",
               "unknown", "partial", "partial", "total", "good", "good", "good"),
    "PERA": ("good", "partial", "total", "partial", "partial", "good", "partial",
             "partial", "partial", "total", "good", "good", "good", "partial"),
    "GERAM": ("total", "partial", "good", "weak", "weak", "partial", "partial",
              "partial", "good", "good", "good", "good", "partial", "partial"),
    "GIM": ("partial", "partial", "good", "partial", "partial", "partial", "partial",
            "good", "total", "partial", "good", "total", "partial", "weak"),
}

TECHNIQUE_ORDER = ("MERISE", "GRAI", "CIMOSA", "PERA", "GERAM", "GIM")


def default_kb() -> KnowledgeBase:
    scales = (ValueScale(id=DEFAULT_SCALE_ID, levels=DEFAULT_LEVELS),)
    criteria = tuple(
        CriterionDef(id=cid, family=family, label=label, scale_id=DEFAULT_SCALE_ID)
        for cid, family, label in CRITERIA
    )
    instances = tuple(
        TechniqueInstance(
            id=name,
            label=name,
            values=dict(zip(_CRITERION_ORDER, TECHNIQUE_VALUES[name])),
        )
        for name in TECHNIQUE_ORDER
    )
    return KnowledgeBase(
        meta=KbMeta(name="enterprise-modeling-techniques", version="1"),
        scales=scales,
        criteria=criteria,
        instances=instances,
    )
