"""Value types flowing through and out of the root engine."""

from typing import Dict, List, NamedTuple, Tuple

from digroot.natural import DecimalNatural

MARK_PLACES = "mark-places"
SEED = "seed"
BRING_DOWN = "bring-down"
DIVIDE_ESTIMATE = "divide-estimate"
CLAMP = "clamp"
DECREMENT_ADJUST = "decrement-adjust"
SUBTRACT = "subtract"
ACCUMULATE_ROOT = "accumulate-root"

EVENT_KINDS = (MARK_PLACES, SEED, BRING_DOWN, DIVIDE_ESTIMATE, CLAMP, DECREMENT_ADJUST, SUBTRACT, ACCUMULATE_ROOT)
ADJUSTMENT_KINDS = (CLAMP, DECREMENT_ADJUST)

COUNTER_NAMES = ("M", "A", "D", "S", "lookups")


class TraceEvent(NamedTuple):
    """One recorded engine action. `position` is a digit place of the input."""

    kind: str
    position: int
    operands: Tuple[DecimalNatural, ...]
    result: DecimalNatural

    def to_dict(self) -> Dict[str, object]:
        return {
            "kind": self.kind,
            "position": self.position,
            "operands": [str(o) for o in self.operands],
            "result": str(self.result),
        }

    def describe(self) -> str:
        operands = ", ".join(str(o) for o in self.operands)
        return f"{self.kind:<16} @{self.position:<3} [{operands}] -> {self.result}"


class OpCounters:
    """
    Tallies of primitive operations: multiplications M, additions A, divisions D,
    subtractions S, and lookup-table operations. Counts only ever go up during a run.
    """

    __slots__ = COUNTER_NAMES

    def __init__(self, M: int = 0, A: int = 0, D: int = 0, S: int = 0, lookups: int = 0) -> None:
        self.M = M
        self.A = A
        self.D = D
        self.S = S
        self.lookups = lookups

    def copy(self) -> "OpCounters":
        return OpCounters(*self.as_tuple())

    def as_tuple(self) -> Tuple[int, int, int, int, int]:
        return self.M, self.A, self.D, self.S, self.lookups

    def as_dict(self) -> Dict[str, int]:
        return dict(zip(COUNTER_NAMES, self.as_tuple()))

    def total(self) -> int:
        return sum(self.as_tuple())

    def __sub__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(*(a - b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def __add__(self, other: "OpCounters") -> "OpCounters":
        return OpCounters(*(a + b for a, b in zip(self.as_tuple(), other.as_tuple())))

    def scaled(self, factor: int) -> "OpCounters":
        return OpCounters(*(factor * a for a in self.as_tuple()))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OpCounters):
            return NotImplemented
        return self.as_tuple() == other.as_tuple()

    def __repr__(self) -> str:
        return "OpCounters(" + ", ".join(f"{name}={value}" for name, value in self.as_dict().items()) + ")"


class PlaceMarking(NamedTuple):
    """
    Classification of digit places for grouping period k.

    Place j is an anchor when j % k == 0 (cubic places for k=3, odd places for k=2);
    `highest_anchor` is the leftmost one, where the leading group starts.
    """

    top_index: int
    k: int
    highest_anchor: int

    def is_anchor(self, j: int) -> bool:
        return j % self.k == 0

    @property
    def anchors(self) -> List[int]:
        return list(range(0, self.highest_anchor + 1, self.k))

    @property
    def iterations(self) -> int:
        """Number of k-digit groups below the leading group."""
        return self.highest_anchor // self.k


class RootState(NamedTuple):
    """
    Loop state between iterations.

    R: assembled root; S: running remainder; P: value of every digit consumed so far;
    i: anchor index of the last consumed group; p: iterations still to run.
    After seeding and after every iteration S = P - R**k and R**k <= P < (R+1)**k.
    """

    R: DecimalNatural
    S: DecimalNatural
    P: DecimalNatural
    i: int
    p: int


class RootResult(NamedTuple):
    """Outcome of one extraction; root**k + remainder equals the input x."""

    x: DecimalNatural
    root: DecimalNatural
    remainder: DecimalNatural
    trace: Tuple[TraceEvent, ...]
    counters: OpCounters
    k: int
    iterations: int
    counter_history: Tuple[OpCounters, ...]

    @property
    def adjustments(self) -> int:
        return sum(1 for event in self.trace if event.kind in ADJUSTMENT_KINDS)

    def subtractions(self) -> List[TraceEvent]:
        return [event for event in self.trace if event.kind == SUBTRACT]
