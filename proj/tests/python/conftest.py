import os
import pathlib

import pytest

ROOT = pathlib.Path(__file__).resolve().parents[2]


@pytest.fixture(scope="session")
def cli():
    path = os.environ.get("ARBOR_CLI")
    if not path:
        pytest.skip("ARBOR_CLI is not set")
    return path


@pytest.fixture(scope="session")
def schemas():
    return pathlib.Path(os.environ.get("ARBOR_SCHEMAS", ROOT / "schemas"))
