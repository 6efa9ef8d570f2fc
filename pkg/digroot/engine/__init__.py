from .events import OpCounters, PlaceMarking, RootResult, RootState, TraceEvent
from .root_engine import (
    extract_root,
    initial_root_digit,
    iteration_count,
    leading_group_value,
    literal_iteration_count,
    mark_places,
    run_iteration,
    select_digit,
)
from .root_kind import RootKind
