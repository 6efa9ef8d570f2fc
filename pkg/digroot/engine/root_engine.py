"""
Digit-by-digit square and cube root extraction.

The input's places are marked in groups of k from the units place. The leading group seeds the
root with a table lookup, then each further group yields one root digit B: the remainder with the
next digit brought down is divided by 3R**2 (cube) or 2R (square) to estimate B, the estimate is
clamped to 9 and decremented until (10R + B)**k fits the consumed prefix, and the binomial terms of
(10R + B)**k - (10R)**k are subtracted one per brought-down digit.
"""

from typing import Dict, Optional, Tuple, Union

from digroot.engine.events import (
    CLAMP,
    DECREMENT_ADJUST,
    MARK_PLACES,
    SEED,
    OpCounters,
    PlaceMarking,
    RootResult,
    RootState,
)
from digroot.engine.recorder import OperationRecorder
from digroot.engine.root_kind import RootKind
from digroot.errors import InvariantViolationError
from digroot.natural import ONE, ZERO, DecimalNatural, NaturalLike, as_natural
from digroot.utils.utils_config import get_setting
from digroot.utils.utils_io import get_logger

logger = get_logger()

NINE = DecimalNatural.from_int(9)

# A**k for A in 0..10, the lookup table behind the leading digit.
POWER_TABLES: Dict[RootKind, Tuple[DecimalNatural, ...]] = {
    kind: tuple(DecimalNatural.from_int(a**kind.k) for a in range(11)) for kind in RootKind
}


def _as_kind(kind: Union[RootKind, int]) -> RootKind:
    return kind if isinstance(kind, RootKind) else RootKind.from_exponent(kind)


def iteration_count(digit_count: int, kind: Union[RootKind, int]) -> int:
    """Groups below the leading group: highest anchor index / k."""
    kind = _as_kind(kind)
    return (digit_count - 1) // kind.k


def literal_iteration_count(top_index: int, kind: Union[RootKind, int]) -> int:
    """
    floor((n - 1) / k) with n the index of the leftmost digit, taken as written.
    Falls one short of iteration_count when the digit count is 1 mod k.
    """
    kind = _as_kind(kind)
    return max((top_index - 1) // kind.k, 0)


def mark_places(x: DecimalNatural, kind: Union[RootKind, int]) -> PlaceMarking:
    """Classify every place as anchor (index divisible by k) or intermediate and find the highest anchor."""
    kind = _as_kind(kind)
    if x.is_zero():
        error_msg = "Cannot mark places of zero; zero has to be handled before marking."
        logger.error(error_msg)
        raise ValueError(error_msg)
    n = x.top_index
    return PlaceMarking(top_index=n, k=kind.k, highest_anchor=kind.k * (n // kind.k))


def leading_group_value(x: DecimalNatural, marking: PlaceMarking, kind: Union[RootKind, int]) -> DecimalNatural:
    """The 1-to-k digit number formed by the places from the highest anchor upwards."""
    kind = _as_kind(kind)
    return x.slice_digits(marking.highest_anchor, marking.highest_anchor + kind.k)


def initial_root_digit(
    group: DecimalNatural,
    kind: Union[RootKind, int],
    recorder: Optional[OperationRecorder] = None,
    position: int = 0,
) -> Tuple[int, DecimalNatural]:
    """
    Largest A in 1..9 with A**k <= group, and the remainder group - A**k.

    One table lookup plus one subtraction.
    """
    kind = _as_kind(kind)
    recorder = recorder if recorder is not None else OperationRecorder()
    if group.is_zero() or group.top_index >= kind.k:
        error_msg = f"Leading group must be between 1 and {10 ** kind.k - 1}, got {group}."
        logger.error(error_msg)
        raise InvariantViolationError(error_msg)

    table = POWER_TABLES[kind]
    recorder.lookup()
    A = 1
    while table[A + 1] <= group:
        A += 1
    recorder.record(SEED, position, (group,), DecimalNatural.from_int(A))
    remainder = recorder.subtract(group, table[A], position)
    return A, remainder


def _estimate_divisor(R: DecimalNatural, kind: RootKind, recorder: OperationRecorder) -> DecimalNatural:
    """3R**2 for cube roots, 2R for square roots."""
    if kind is RootKind.CUBE:
        return recorder.multiply_small(recorder.power_small(R, 2), 3)
    return recorder.multiply_small(R, 2)


def _numerator_from_prefix(R: DecimalNatural, kind: RootKind, prefix: DecimalNatural) -> DecimalNatural:
    """Remainder with the first digit of the group brought down, recovered from the prefix alone."""
    head = prefix.slice_digits(kind.k - 1, max(prefix.top_index + 1, kind.k - 1))
    return head.subtract(R.power_small(kind.k).shift(1))


def _select(
    R: DecimalNatural,
    kind: RootKind,
    prefix: DecimalNatural,
    numerator: DecimalNatural,
    recorder: OperationRecorder,
    position: int,
) -> Tuple[int, DecimalNatural]:
    divisor = _estimate_divisor(R, kind, recorder)
    trial = recorder.divide(numerator, divisor, position)

    if trial > NINE:
        recorder.record(CLAMP, position, (trial,), NINE)
        candidate = 9
    else:
        candidate = int(trial)

    while True:
        power = recorder.power_small(R.add_digit_shifted(candidate), kind.k)
        if power <= prefix:
            return candidate, divisor
        if candidate == 0:
            error_msg = f"(10R)^{kind.k} exceeds the prefix {prefix} for R={R}; the loop invariant is broken."
            logger.error(error_msg)
            raise InvariantViolationError(error_msg)
        recorder.record(DECREMENT_ADJUST, position, (DecimalNatural.from_int(candidate), power, prefix),
                        DecimalNatural.from_int(candidate - 1))
        candidate -= 1


def select_digit(
    R: DecimalNatural,
    kind: Union[RootKind, int],
    prefix: DecimalNatural,
    numerator: Optional[DecimalNatural] = None,
    recorder: Optional[OperationRecorder] = None,
    position: int = 0,
) -> int:
    """
    Next root digit B = max{b in 0..9 : (10R + b)**k <= prefix}.

    The division estimate floor(numerator / 3R**2) or floor(numerator / 2R) is tried first, clamped
    to 9 and decremented while too large; the estimate never falls below B. `prefix` is the value of
    every digit consumed through the end of the current group. When `numerator` (l for cube roots, y
    for square roots) is not supplied it is recovered from `prefix` and R.
    """
    kind = _as_kind(kind)
    recorder = recorder if recorder is not None else OperationRecorder()
    if numerator is None:
        numerator = _numerator_from_prefix(R, kind, prefix)
    digit, _ = _select(R, kind, prefix, numerator, recorder, position)
    return digit


def check_loop_invariant(state: RootState, kind: Union[RootKind, int]) -> None:
    """Raise InvariantViolationError unless S = P - R**k and 0 <= S < (R+1)**k - R**k."""
    kind = _as_kind(kind)
    power = state.R.power_small(kind.k)
    if power > state.P or state.P.subtract(power) != state.S:
        error_msg = f"Loop invariant S = P - R^{kind.k} broken at i={state.i}: R={state.R}, S={state.S}, P={state.P}."
        logger.error(error_msg)
        raise InvariantViolationError(error_msg)
    gap = state.R.add(ONE).power_small(kind.k).subtract(power)
    if not state.S < gap:
        error_msg = f"Remainder {state.S} is not below (R+1)^{kind.k} - R^{kind.k} = {gap} for R={state.R}."
        logger.error(error_msg)
        raise InvariantViolationError(error_msg)


def run_iteration(
    state: RootState,
    x: DecimalNatural,
    kind: Union[RootKind, int],
    recorder: Optional[OperationRecorder] = None,
    check_invariants: bool = False,
) -> RootState:
    """
    Consume the k digits below anchor i and append one digit to the root.

    Cube: subtract 3R**2*B from l = 10S + d[i-1], 3R*B**2 from m = 10S' + d[i-2], B**3 from n = 10S'' + d[i-3].
    Square: subtract 2R*B from y = 10S + d[i-1], B**2 from c = 10S' + d[i-2].
    """
    kind = _as_kind(kind)
    recorder = recorder if recorder is not None else OperationRecorder()
    k, i, R = kind.k, state.i, state.R
    if state.p < 1 or i < k:
        error_msg = f"No group left to consume below anchor {i} (p={state.p})."
        logger.error(error_msg)
        raise InvariantViolationError(error_msg)

    prefix = state.P.shift(k).add(x.slice_digits(i - k, i))

    numerator = recorder.bring_down(state.S, x.digit_at(i - 1), i - 1)
    B, divisor = _select(R, kind, prefix, numerator, recorder, i - 1)
    new_root = recorder.accumulate_root(R, B, i - k)

    remainder = recorder.subtract(numerator, recorder.multiply_small(divisor, B), i - 1)
    if kind is RootKind.CUBE:
        m = recorder.bring_down(remainder, x.digit_at(i - 2), i - 2)
        b_squared = recorder.power_small(DecimalNatural.from_int(B), 2)
        three_r = recorder.multiply_small(R, 3)
        remainder = recorder.subtract(m, recorder.multiply_small(three_r, int(b_squared)), i - 2)
    last = recorder.bring_down(remainder, x.digit_at(i - k), i - k)
    remainder = recorder.subtract(last, recorder.power_small(DecimalNatural.from_int(B), k), i - k)

    new_state = RootState(R=new_root, S=remainder, P=prefix, i=i - k, p=state.p - 1)
    if check_invariants:
        check_loop_invariant(new_state, kind)
    return new_state


def extract_root(
    x: NaturalLike, kind: Union[RootKind, int], check_invariants: Optional[bool] = None
) -> RootResult:
    """
    Floor k-th root of x with its remainder, full trace and operation counts.

    Runs to the units place, so non-powers end with a positive remainder.
    """
    x = as_natural(x)
    kind = _as_kind(kind)
    if check_invariants is None:
        check_invariants = bool(get_setting("engine", "check_invariants", False))

    if x.is_zero():
        return RootResult(x, ZERO, ZERO, (), OpCounters(), kind.k, 0, (OpCounters(),))

    recorder = OperationRecorder()
    marking = mark_places(x, kind)
    i = marking.highest_anchor
    recorder.record(MARK_PLACES, i, (x,), DecimalNatural.from_int(len(marking.anchors)))

    group = leading_group_value(x, marking, kind)
    A, remainder = initial_root_digit(group, kind, recorder, position=i)
    state = RootState(R=DecimalNatural.from_int(A), S=remainder, P=group, i=i, p=marking.iterations)
    if check_invariants:
        check_loop_invariant(state, kind)

    history = [recorder.counters.copy()]
    while state.p > 0:
        state = run_iteration(state, x, kind, recorder, check_invariants)
        history.append(recorder.counters.copy())

    return RootResult(
        x=x,
        root=state.R,
        remainder=state.S,
        trace=tuple(recorder.trace),
        counters=recorder.counters,
        k=kind.k,
        iterations=marking.iterations,
        counter_history=tuple(history),
    )
