import re
from pathlib import Path

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from digroot.engine import RootKind, extract_root
from digroot.tableau import render_text
from digroot.tableau.tableau import COMBINING_CIRCUMFLEX, COMBINING_OVERLINE, MARGIN, adjustment_notes

GOLDEN_DIR = Path(__file__).parent / "goldens"


def golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text().rstrip("\n")


def parsed_subtrahends(text: str, x: int):
    """(value, place) for every subtrahend line of a rendered tableau."""
    top = len(str(x)) - 1
    found = []
    for line in text.splitlines():
        match = re.match(r"-\s*(\d+)", line)
        if not match:
            continue
        end_column = match.end(1) - 1
        found.append((int(match.group(1)), top - (end_column - MARGIN)))
    return found


@pytest.mark.parametrize(
    "x, kind, name",
    [
        (34965783, RootKind.CUBE, "cbrt_34965783.txt"),
        (11943936, RootKind.SQUARE, "sqrt_11943936.txt"),
        (256, RootKind.SQUARE, "sqrt_256.txt"),
    ],
)
def test_matches_golden(x, kind, name):
    result = extract_root(x, kind)
    assert render_text(result, x, kind) == golden(name)


def test_worked_example_subtrahend_columns():
    text = render_text(extract_root(34965783, RootKind.CUBE))
    assert [v for v, _ in parsed_subtrahends(text, 34965783)] == [27, 54, 36, 8, 21504, 4704, 343]
    assert text.splitlines()[-1] == "Root result: 327"

    text = render_text(extract_root(11943936, RootKind.SQUARE))
    assert [v for v, _ in parsed_subtrahends(text, 11943936)] == [9, 24, 16, 340, 25, 4140, 36]
    assert text.splitlines()[-1] == "Root result: 3456"


def test_zero_tableau():
    assert render_text(extract_root(0, RootKind.SQUARE), 0, RootKind.SQUARE) == "  0\nRoot result: 0"


def test_clamp_note():
    result = extract_root(361, RootKind.SQUARE)
    assert list(adjustment_notes(result).values()) == ["trial 13 -> 9"]
    assert "trial 13 -> 9" in render_text(result)


def test_render_is_deterministic():
    result = extract_root(34965783, RootKind.CUBE)
    outputs = {render_text(extract_root(34965783, RootKind.CUBE)) for _ in range(5)}
    assert outputs == {render_text(result)}


def test_unicode_markers():
    text = render_text(extract_root(34965783, RootKind.CUBE), unicode_markers=True)
    first = text.splitlines()[0]
    assert first.count(COMBINING_OVERLINE) == 3
    assert first.count(COMBINING_CIRCUMFLEX) == 5
    assert first.replace(COMBINING_OVERLINE, "").replace(COMBINING_CIRCUMFLEX, "") == "  34965783"


def test_render_rejects_mismatched_input():
    result = extract_root(256, RootKind.SQUARE)
    with pytest.raises(ValueError):
        render_text(result, 257, RootKind.SQUARE)
    with pytest.raises(ValueError):
        render_text(result, 256, RootKind.CUBE)


@given(st.integers(min_value=1, max_value=10**30), st.sampled_from([RootKind.SQUARE, RootKind.CUBE]))
@settings(max_examples=200, deadline=None)
def test_render_replays_to_input_minus_remainder(x, kind):
    result = extract_root(x, kind)
    text = render_text(result)
    total = sum(value * 10**place for value, place in parsed_subtrahends(text, x))
    assert total == x - int(result.remainder)
    assert text.splitlines()[-1] == f"Root result: {result.root}"
