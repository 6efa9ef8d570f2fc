"""
Predicted versus measured primitive-operation counts.

The predicted figures are the closed forms, taken as stated:
    cube:   iterations * (12M + 3A + 3D + 4S) + 1 lookup
    square: iterations * (5M + 3A + 2D + 3S) + 1 lookup
with the corrected iteration count (highest anchor index / k). The closed forms do not decompose
into the stated per-step costs, so predicted and measured are reported side by side and never
forced to agree.
"""

from fractions import Fraction
from typing import Dict, List, NamedTuple, Sequence, Union

import numpy as np

from digroot.engine import OpCounters, RootKind, RootResult, iteration_count, literal_iteration_count
from digroot.engine.events import COUNTER_NAMES
from digroot.utils.utils_io import get_logger

logger = get_logger()

PER_ITERATION_COEFFICIENTS: Dict[RootKind, OpCounters] = {
    RootKind.CUBE: OpCounters(M=12, A=3, D=3, S=4),
    RootKind.SQUARE: OpCounters(M=5, A=3, D=2, S=3),
}
LOOKUP_TERM = OpCounters(lookups=1)


class ComplexityReport(NamedTuple):
    """
    Attributes:
    - N: digit count of the input.
    - iterations: iterations the engine ran (highest anchor index / k).
    - literal_iterations: N/k as the closed form writes it, kept as a fraction.
    - literal_loop_count: floor((n-1)/k) with n the top digit index, the unmodified loop bound.
    - predicted, measured: counters from the closed form and from the run.
    - adjustments: clamp and decrement events in the trace.
    - per_iteration: counter increments contributed by each iteration.
    """

    kind: RootKind
    N: int
    iterations: int
    literal_iterations: Fraction
    literal_loop_count: int
    predicted: OpCounters
    measured: OpCounters
    adjustments: int
    per_iteration: List[OpCounters]

    @property
    def difference(self) -> OpCounters:
        """measured - predicted, per counter. Entries may be negative."""
        return self.measured - self.predicted

    def to_dict(self) -> Dict[str, object]:
        return {
            "N": self.N,
            "iterations": self.iterations,
            "literal_iterations": str(self.literal_iterations),
            "literal_loop_count": self.literal_loop_count,
            "adjustments": self.adjustments,
            "predicted": self.predicted.as_dict(),
            "measured": self.measured.as_dict(),
            "difference": self.difference.as_dict(),
            "per_iteration": [delta.as_dict() for delta in self.per_iteration],
        }

    def describe(self) -> str:
        lines = [
            f"{self.kind.label}: N={self.N} digits, {self.iterations} iterations "
            f"(closed form N/k = {self.literal_iterations}, unmodified loop bound {self.literal_loop_count})",
            f"{'':<10}" + "".join(f"{name:>9}" for name in COUNTER_NAMES),
        ]
        for label, counters in (("predicted", self.predicted), ("measured", self.measured),
                                ("diff", self.difference)):
            lines.append(f"{label:<10}" + "".join(f"{value:>9}" for value in counters.as_tuple()))
        lines.append(f"adjustments: {self.adjustments}")
        return "\n".join(lines)


def _as_kind(kind: Union[RootKind, int]) -> RootKind:
    return kind if isinstance(kind, RootKind) else RootKind.from_exponent(kind)


def predicted_counts(N: int, kind: Union[RootKind, int]) -> OpCounters:
    """Closed-form operation counts for an N-digit input."""
    kind = _as_kind(kind)
    if N < 1:
        error_msg = f"Digit count must be at least 1, got {N}."
        logger.error(error_msg)
        raise ValueError(error_msg)
    return PER_ITERATION_COEFFICIENTS[kind].scaled(iteration_count(N, kind)) + LOOKUP_TERM


def counter_matrix(history: Sequence[OpCounters]) -> np.ndarray:
    """One row per snapshot, one column per counter."""
    return np.array([c.as_tuple() for c in history], dtype=np.int64).reshape(-1, len(COUNTER_NAMES))


def per_iteration_deltas(result: RootResult) -> List[OpCounters]:
    deltas = np.diff(counter_matrix(result.counter_history), axis=0)
    return [OpCounters(*(int(v) for v in row)) for row in deltas]


def compare(result: RootResult, kind: Union[RootKind, int, None] = None) -> ComplexityReport:
    """Put the closed-form prediction next to the counters measured during `result`'s extraction."""
    kind = _as_kind(kind if kind is not None else result.k)
    if kind.k != result.k:
        error_msg = f"Result was extracted with k={result.k}, cannot compare as k={kind.k}."
        logger.error(error_msg)
        raise ValueError(error_msg)
    N = result.x.digit_count()
    return ComplexityReport(
        kind=kind,
        N=N,
        iterations=result.iterations,
        literal_iterations=Fraction(N, kind.k),
        literal_loop_count=literal_iteration_count(N - 1, kind),
        predicted=predicted_counts(N, kind),
        measured=result.counters.copy(),
        adjustments=result.adjustments,
        per_iteration=per_iteration_deltas(result),
    )


def measured_slopes(reports: Sequence[ComplexityReport]) -> np.ndarray:
    """
    Increment of each measured counter per added iteration, between consecutive reports.

    Reports must be ordered by strictly increasing iteration count.
    """
    iterations = np.array([r.iterations for r in reports], dtype=np.int64)
    measured = counter_matrix([r.measured for r in reports])
    steps = np.diff(iterations)
    if np.any(steps <= 0):
        error_msg = f"Reports must have strictly increasing iteration counts, got {iterations.tolist()}."
        logger.error(error_msg)
        raise ValueError(error_msg)
    return np.diff(measured, axis=0) / steps[:, None]


def is_linear(reports: Sequence[ComplexityReport]) -> bool:
    """True when every measured counter grows by the same amount per iteration across all reports."""
    if len(reports) < 3:
        return True
    slopes = measured_slopes(reports)
    return bool(np.all(slopes == slopes[0]))
