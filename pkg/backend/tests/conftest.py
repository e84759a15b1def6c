from __future__ import annotations

import sys
from pathlib import Path

import pytest

# Adiciona o diretório backend ao path
backend_path = Path(__file__).parent.parent
sys.path.insert(0, str(backend_path))

from cache import memo  # noqa: E402
from rootsys import build_root_system  # noqa: E402


@pytest.fixture(scope="session")
def a1():
    return build_root_system("A", 1)


@pytest.fixture(scope="session")
def a2():
    return build_root_system("A", 2)


@pytest.fixture(scope="session")
def a3():
    return build_root_system("A", 3)


@pytest.fixture(scope="session")
def b2():
    return build_root_system("B2", 2)


@pytest.fixture
def fresh_memo():
    """Memo desligado durante o teste (força recomputação)"""
    previous = memo.enabled
    memo.enabled = False
    yield memo
    memo.enabled = previous

