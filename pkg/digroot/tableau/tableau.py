"""
Long-form rendering of an extraction, laid out the way it is worked by hand.

    ^-^^-^^-          marker line: '-' over anchor places, '^' over the others
      34965783
    - 27              subtrahends right-aligned under the place of their units digit
      --
       79             running remainder with the next digit brought down
    ...
    Root result: 327
"""

from typing import Dict, List, Optional, Union

from digroot.engine import RootKind, RootResult
from digroot.engine.events import ACCUMULATE_ROOT, ADJUSTMENT_KINDS, DIVIDE_ESTIMATE, SUBTRACT
from digroot.natural import DecimalNatural, NaturalLike, as_natural
from digroot.utils.utils_config import get_setting
from digroot.utils.utils_io import get_logger

logger = get_logger()

COMBINING_OVERLINE = "\u0305"
COMBINING_CIRCUMFLEX = "\u0302"
# Columns left of the digits: the minus sign and a space.
MARGIN = 2


def marker_line(x: DecimalNatural, k: int, anchor_marker: str = "-", intermediate_marker: str = "^") -> str:
    top = x.top_index
    return " " * MARGIN + "".join(
        anchor_marker if j % k == 0 else intermediate_marker for j in range(top, -1, -1)
    )


def combining_digits_line(x: DecimalNatural, k: int) -> str:
    """Input digits carrying an overline (anchor) or a circumflex (intermediate) as combining characters."""
    text = str(x)
    top = x.top_index
    return " " * MARGIN + "".join(
        c + (COMBINING_OVERLINE if (top - pos) % k == 0 else COMBINING_CIRCUMFLEX) for pos, c in enumerate(text)
    )


def adjustment_notes(result: RootResult) -> Dict[int, str]:
    """
    Map the trace index of a subtract event to a side note such as 'trial 7 -> 6'.

    The note goes on the first subtraction after a digit whose trial quotient was clamped or decremented.
    """
    notes: Dict[int, str] = {}
    trial: Optional[DecimalNatural] = None
    adjusted = False
    pending: Optional[str] = None
    for index, event in enumerate(result.trace):
        if event.kind == DIVIDE_ESTIMATE:
            trial, adjusted = event.result, False
        elif event.kind in ADJUSTMENT_KINDS:
            adjusted = True
        elif event.kind == ACCUMULATE_ROOT and adjusted:
            pending = f"trial {trial} -> {event.operands[1]}"
        elif event.kind == SUBTRACT and pending is not None:
            notes[index] = pending
            pending = None
    return notes


def render_text(
    result: RootResult,
    x: Optional[NaturalLike] = None,
    kind: Union[RootKind, int, None] = None,
    unicode_markers: bool = False,
) -> str:
    """Render the trace of `result` as a fixed-width tableau. Output is deterministic for a given input."""
    x = as_natural(x) if x is not None else result.x
    k = kind.k if isinstance(kind, RootKind) else (kind if kind is not None else result.k)
    if x != result.x or k != result.k:
        error_msg = f"Result was produced for x={result.x}, k={result.k}; cannot render it for x={x}, k={k}."
        logger.error(error_msg)
        raise ValueError(error_msg)

    if x.is_zero():
        return "\n".join([" " * MARGIN + "0", f"Root result: {result.root}"])

    width = MARGIN + x.digit_count()
    lines: List[str] = []
    if unicode_markers:
        lines.append(combining_digits_line(x, k))
    else:
        anchor = str(get_setting("tableau", "anchor_marker", "-"))
        intermediate = str(get_setting("tableau", "intermediate_marker", "^"))
        lines.append(marker_line(x, k, anchor, intermediate))
        lines.append(" " * MARGIN + str(x))

    notes = adjustment_notes(result)
    last_position = 0
    first = True
    for index, event in enumerate(result.trace):
        if event.kind != SUBTRACT:
            continue
        minuend, subtrahend = event.operands
        column = width - event.position
        if not first:
            lines.append(str(minuend).rjust(column))
        subtrahend_line = "-" + str(subtrahend).rjust(column)[1:]
        if index in notes:
            subtrahend_line += "   " + notes[index]
        lines.append(subtrahend_line)
        lines.append(("-" * len(str(subtrahend))).rjust(column))
        last_position = event.position
        first = False

    lines.append(str(result.remainder).rjust(width - last_position))
    lines.append(f"Root result: {result.root}")
    return "\n".join(lines)
