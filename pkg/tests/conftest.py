# tests/conftest.py
import sys, os

sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

import pytest

from algebra.group import build_group

from oracles import SUITE_GROUPS


@pytest.fixture(scope="session")
def groups():
    return {spec: build_group(spec) for spec in SUITE_GROUPS}
