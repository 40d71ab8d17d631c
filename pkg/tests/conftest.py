from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from weakbrace.brace import WeakBrace  # noqa: E402
from weakbrace.enumeration import enumerate_weak_braces  # noqa: E402
from weakbrace.fixtures import fixture_objects  # noqa: E402

FIXTURE_DIR = Path(__file__).resolve().parent.parent / "fixtures"


def brace_corpus() -> dict[str, WeakBrace]:
    """Enumerated weak braces of orders 1-3 plus every weak-brace fixture."""
    corpus = {}
    for n in (1, 2, 3):
        for i, wb in enumerate(enumerate_weak_braces(n)):
            corpus[f"enum{n}_{i}"] = wb
    for name, obj in fixture_objects().items():
        if isinstance(obj, WeakBrace):
            corpus[name] = obj
    return corpus


@pytest.fixture(scope="session")
def corpus() -> dict[str, WeakBrace]:
    return brace_corpus()


@pytest.fixture(scope="session")
def fixture_dir() -> Path:
    return FIXTURE_DIR
