import json
import shutil

import pytest

from emrank.kb import load_kb
from emrank.resources import bundled_scenario_payload, default_kb_path


@pytest.fixture(scope="session")
def kb_path() -> str:
    return default_kb_path()


@pytest.fixture(scope="session")
def kb(kb_path):
    return load_kb(kb_path)


@pytest.fixture
def kb_copy_path(tmp_path):
    """Private copy of the default KB for tests that mutate or persist."""
    target = tmp_path / "kb.json"
    shutil.copyfile(default_kb_path(), target)
    return str(target)


@pytest.fixture(scope="session")
def scenario_payloads() -> dict[str, dict]:
    names = ("experiment-1", "experiment-2", "experiment-3-five", "experiment-3-six")
    return {name: bundled_scenario_payload(name) for name in names}


@pytest.fixture
def scenario_file(tmp_path, scenario_payloads):
    def write(name: str) -> str:
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps(scenario_payloads[name]), encoding="utf-8")
        return str(path)

    return write
