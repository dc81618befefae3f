"""Regenerate the data files bundled with the package.

Run from the repo root after changing the default KB or the demo
scenario definitions: python scripts/make_data.py
"""

from __future__ import annotations

import pathlib

from emrank.defaults import default_kb
from emrank.jsonutil import canonical_dumps
from emrank.kb import serialize_kb

DATA = pathlib.Path(__file__).resolve().parent.parent / "src" / "emrank" / "data"

TEN_CRITERIA = ["f51", "f54", "f53", "f52", "f12", "f13", "f32", "f31", "f21", "f22"]
EIGHT_CRITERIA = [c for c in TEN_CRITERIA if c not in ("f31", "f32")]
FIVE_TECHNIQUES = ["MERISE", "GRAI", "CIMOSA", "PERA", "GERAM"]
SIX_TECHNIQUES = FIVE_TECHNIQUES + ["GIM"]

SCENARIOS = {
    "experiment-1": {
        "alternatives": FIVE_TECHNIQUES,
        "criteria": TEN_CRITERIA,
        "name": "experiment-1",
    },
    "experiment-2": {
        "alternatives": SIX_TECHNIQUES,
        "criteria": TEN_CRITERIA,
        "name": "experiment-2",
    },
    "experiment-3-five": {
        "alternatives": FIVE_TECHNIQUES,
        "criteria": EIGHT_CRITERIA,
        "name": "experiment-3-five",
    },
    "experiment-3-six": {
        "alternatives": SIX_TECHNIQUES,
        "criteria": EIGHT_CRITERIA,
        "name": "experiment-3-six",
    },
}

# Known-good net flows for the demo scenarios, in ranking order. These are
# consistency fixtures (each list sums to ~0 and fixes a class structure);
# they are not recomputed from the shipped KB values.
REFERENCE_FLOWS = {
    "experiment-1": [
        ["PERA", "0.074"],
        ["CIMOSA", "0"],
        ["GERAM", "-0.012"],
        ["GRAI", "-0.024"],
        ["MERISE", "-0.038"],
    ],
    "experiment-2": [
        ["PERA", "0.078"],
        ["GIM", "0.033"],
        ["CIMOSA", "-0.022"],
        ["GERAM", "-0.022"],
        ["GRAI", "-0.022"],
        ["MERISE", "-0.045"],
    ],
    "experiment-3-five": [
        ["PERA", "0.124"],
        ["CIMOSA", "0.062"],
        ["GERAM", "0.042"],
        ["MERISE", "-0.063"],
        ["GRAI", "-0.167"],
    ],
    "experiment-3-six": [
        ["CIMOSA", "0.083"],
        ["PERA", "0.055"],
        ["MERISE", "0"],
        ["GIM", "0"],
        ["GERAM", "-0.07"],
        ["GRAI", "-0.07"],
    ],
}


def main() -> None:
    (DATA / "scenarios").mkdir(parents=True, exist_ok=True)
    (DATA / "default_kb.json").write_text(serialize_kb(default_kb()), encoding="utf-8")
    for name, payload in SCENARIOS.items():
        (DATA / "scenarios" / f"{name}.json").write_text(canonical_dumps(payload), encoding="utf-8")
    (DATA / "reference_flows.json").write_text(canonical_dumps(REFERENCE_FLOWS), encoding="utf-8")
    print(f"wrote {DATA}")


if __name__ == "__main__":
    main()
