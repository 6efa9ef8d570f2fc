from typing import List, Sequence

from digroot.engine.events import ACCUMULATE_ROOT, BRING_DOWN, DIVIDE_ESTIMATE, SUBTRACT, OpCounters, TraceEvent
from digroot.natural import DecimalNatural


class OperationRecorder:
    """
    Per-extraction tally and trace.

    Every arithmetic step the algorithm itself performs goes through one of these methods, which
    tally it once regardless of operand width:
    multiply_small, power_small -> M; bring_down, accumulate_root -> A; divide -> D; subtract -> S; lookup -> lookups.
    Bookkeeping the algorithm does not need (the consumed prefix P, invariant checks) bypasses the recorder.
    """

    def __init__(self) -> None:
        self.counters = OpCounters()
        self.trace: List[TraceEvent] = []

    def record(self, kind: str, position: int, operands: Sequence[DecimalNatural], result: DecimalNatural) -> None:
        self.trace.append(TraceEvent(kind, position, tuple(operands), result))

    def lookup(self) -> None:
        self.counters.lookups += 1

    def multiply_small(self, a: DecimalNatural, m: int) -> DecimalNatural:
        self.counters.M += 1
        return a.multiply_small(m)

    def power_small(self, a: DecimalNatural, e: int) -> DecimalNatural:
        self.counters.M += 1
        return a.power_small(e)

    def divide(self, numerator: DecimalNatural, divisor: DecimalNatural, position: int) -> DecimalNatural:
        self.counters.D += 1
        quotient = numerator.divide_floor(divisor)
        self.record(DIVIDE_ESTIMATE, position, (numerator, divisor), quotient)
        return quotient

    def bring_down(self, remainder: DecimalNatural, digit: int, position: int) -> DecimalNatural:
        self.counters.A += 1
        value = remainder.add_digit_shifted(digit)
        self.record(BRING_DOWN, position, (remainder, DecimalNatural.from_int(digit)), value)
        return value

    def accumulate_root(self, root: DecimalNatural, digit: int, position: int) -> DecimalNatural:
        self.counters.A += 1
        value = root.add_digit_shifted(digit)
        self.record(ACCUMULATE_ROOT, position, (root, DecimalNatural.from_int(digit)), value)
        return value

    def subtract(self, minuend: DecimalNatural, subtrahend: DecimalNatural, position: int) -> DecimalNatural:
        """Staged subtraction; an underflow here means the chosen digit was too large."""
        self.counters.S += 1
        difference = minuend.subtract(subtrahend)
        self.record(SUBTRACT, position, (minuend, subtrahend), difference)
        return difference
