import sys
from pathlib import Path

import pytest

PACKAGE_DIR = Path(__file__).resolve().parents[1]
if str(PACKAGE_DIR) not in sys.path:
    sys.path.insert(0, str(PACKAGE_DIR))

from hamgen_settings import activate  # noqa: E402


@pytest.fixture(autouse=True)
def default_settings(monkeypatch, tmp_path):
    monkeypatch.setenv("HAMGEN_CONFIG", str(tmp_path / "absent-config.json"))
    activate({})
    yield
    activate({})
