import json
import os
import shutil
from pathlib import Path

import pytest

ROOT = Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def root():
    return ROOT


@pytest.fixture(scope="session")
def schema():
    return json.loads((ROOT / "schemas" / "report.schema.json").read_text())


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("SRANK_CLI") or shutil.which("srank")
    if not path:
        pytest.skip("srank executable not found (set SRANK_CLI)")
    return path


def fixture_text(name):
    return (ROOT / "fixtures" / name).read_text()
