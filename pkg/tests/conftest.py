import pytest

from digroot.utils.utils_config import load_config


@pytest.fixture(autouse=True)
def engine_invariants_on(monkeypatch):
    """Run every extraction in the suite with the loop invariant assertions enabled."""
    monkeypatch.setitem(load_config().setdefault("engine", {}), "check_invariants", True)
