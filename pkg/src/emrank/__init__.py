"""Decision-support workbench for comparing enterprise-modeling techniques.

The package ranks alternatives with outranking flows computed over an
editable knowledge base, exposes a what-if scenario layer on top, and
serves both through a CLI and a small HTTP API. All arithmetic is exact
(``fractions.Fraction``); decimals appear only at display boundaries.
"""

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
    directed_difference,
    flows,
    preference_degree,
    preference_index,
    rank_complete,
    rank_partial,
)
from .errors import ConfigurationError, DataError, UsageError, WorkbenchError
from .kb import (
    CriterionDef,
    KbMeta,
    KnowledgeBase,
    TechniqueInstance,
    ValueScale,
    Violation,
    add_instance,
    build_performance_table,
    export_graph,
    kb_from_json,
    kb_to_json,
    load_kb,
    parse_kb,
    save_kb,
    serialize_kb,
    update_instance_values,
    validate_kb,
)
from .preference import (
    Gaussian,
    Level,
    Linear,
    PreferenceFunction,
    Usual,
    UShape,
    VShape,
    function_from_json,
)
from .scenarios import (
    Inversion,
    RankChange,
    RankDiff,
    RankingReport,
    Scenario,
    diff_rankings,
    diff_to_json,
    load_report,
    load_scenario,
    report_from_json,
    report_to_json,
    run_scenario,
    scenario_from_json,
    scenario_to_json,
    validate_report,
    weight_sensitivity,
)

__version__ = "0.1.0"

__all__ = [
    "AlternativeId",
    "CompleteRanking",
    "ConfigurationError",
    "CredibilityMatrix",
    "CriterionDef",
    "CriterionSpec",
    "DataError",
    "Direction",
    "FlowTable",
    "Gaussian",
    "Inversion",
    "KbMeta",
    "KnowledgeBase",
    "Level",
    "Linear",
    "PartialRanking",
    "PerformanceTable",
    "PreferenceFunction",
    "RankChange",
    "RankDiff",
    "RankingReport",
    "Relation",
    "Scenario",
    "TechniqueInstance",
    "UShape",
    "UsageError",
    "Usual",
    "VShape",
    "ValueScale",
    "Violation",
    "WorkbenchError",
    "add_instance",
    "build_performance_table",
    "diff_rankings",
    "diff_to_json",
    "directed_difference",
    "export_graph",
    "flows",
    "function_from_json",
    "kb_from_json",
    "kb_to_json",
    "load_kb",
    "load_report",
    "load_scenario",
    "parse_kb",
    "preference_degree",
    "preference_index",
    "rank_complete",
    "rank_partial",
    "report_from_json",
    "report_to_json",
    "run_scenario",
    "save_kb",
    "scenario_from_json",
    "scenario_to_json",
    "serialize_kb",
    "update_instance_values",
    "validate_kb",
    "validate_report",
    "weight_sensitivity",
]
