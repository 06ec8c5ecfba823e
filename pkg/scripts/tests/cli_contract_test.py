from __future__ import annotations

import json
import os
import re
import subprocess
import sys
from pathlib import Path

import pytest

REPO_ROOT = Path(__file__).resolve().parents[2]
CASES_PATH = REPO_ROOT / "scripts/tests/cli_contract_cases.json"


def _load_cases() -> list[dict[str, object]]:
    return json.loads(CASES_PATH.read_text(encoding="utf-8"))


def _interpreter() -> list[str]:
    requested = os.environ.get("HAMGEN_PYTHON", "").strip()
    return [requested or sys.executable, "-m", "hamgen"]


def _parse_document(stdout: str) -> dict[str, object]:
    """The whole stdout as one JSON document, or the last JSON line of a stream."""
    try:
        return json.loads(stdout)
    except ValueError:
        lines = [line for line in stdout.splitlines() if line.strip()]
        return json.loads(lines[-1]) if lines else {}


def _subset(expected: object, got: object) -> bool:
    if isinstance(expected, dict):
        return isinstance(got, dict) and all(
            _subset(v, got.get(k)) for k, v in expected.items()
        )
    return expected == got


def _write_files(files: dict[str, str], tmp_path: Path) -> None:
    """Write case inputs under tmp_path, one byte per character so bodies can hold raw bytes."""
    for name, body in files.items():
        (tmp_path / name).write_bytes(body.encode("latin-1"))


CASES = _load_cases()


@pytest.mark.parametrize("case", CASES, ids=[case["name"] for case in CASES])
def test_cli_contract(case: dict[str, object], tmp_path: Path) -> None:
    args = [str(a).replace("{tmp}", str(tmp_path)) for a in case["args"]]
    _write_files(case.get("files", {}), tmp_path)
    env = dict(os.environ, HAMGEN_CONFIG=str(tmp_path / "absent-config.json"))
    proc = subprocess.run(
        [*_interpreter(), *args],
        cwd=REPO_ROOT,
        env=env,
        check=False,
        capture_output=True,
        text=True,
    )
    output = f"{proc.stdout}\n{proc.stderr}"
    assert proc.returncode == case["expect_exit"], (
        f"case={case['name']} expected exit={case['expect_exit']} "
        f"got={proc.returncode}\n{output}"
    )

    expected_fields = case.get("expect", {})
    if expected_fields:
        document = _parse_document(proc.stdout)
        for key, expected in expected_fields.items():
            assert _subset(expected, document.get(key)), (
                f"case={case['name']} key={key} expected={expected!r} "
                f"got={document.get(key)!r}\n{output}"
            )

    expected_error = case.get("expect_error_contains")
    if expected_error:
        assert re.search(re.escape(str(expected_error)), output), (
            f"case={case['name']} missing expected error text {expected_error!r}\n{output}"
        )
