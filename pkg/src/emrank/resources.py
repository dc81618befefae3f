"""Access to the data files bundled with the package: the default KB,
the demo scenario fixtures, and the reference net-flow lists."""

from __future__ import annotations

import json
from importlib import resources

_DATA = resources.files("emrank") / "data"


def default_kb_text() -> str:
    return (_DATA / "default_kb.json").read_text(encoding="utf-8")


def default_kb_path() -> str:
    return str(_DATA / "default_kb.json")


def bundled_scenario_names() -> list[str]:
    return sorted(
        entry.name[: -len(".json")]
        for entry in (_DATA / "scenarios").iterdir()
        if entry.name.endswith(".json")
    )


def bundled_scenario_payload(name: str) -> dict | None:
    entry = _DATA / "scenarios" / f"{name}.json"
    if not entry.is_file():
        return None
    return json.loads(entry.read_text(encoding="utf-8"))


def reference_flow_lists() -> dict[str, list]:
    """Known-good net-flow result lists for the demo scenarios, keyed by
    scenario name; each list is [alternative id, net flow string] pairs in
    ranking order. Used as consistency fixtures."""
    text = (_DATA / "reference_flows.json").read_text(encoding="utf-8")
    return json.loads(text)
