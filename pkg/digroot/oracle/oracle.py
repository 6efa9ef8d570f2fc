"""
Brute-force floor roots used as ground truth for the engine.

Works on native ints and shares no code with the engine: a binary search over candidate roots
using only multiplication and comparison.
"""

from digroot.errors import UnsupportedRootKindError
from digroot.natural import DecimalNatural, NaturalLike, as_natural
from digroot.utils.utils_io import get_logger

logger = get_logger()


def floor_root_int(x: int, k: int) -> int:
    """Unique r with r**k <= x < (r+1)**k, by binary search over [0, 2**(bits//k + 1)]."""
    if k not in (2, 3):
        error_msg = f"Oracle supports k=2 and k=3, got k={k}."
        logger.error(error_msg)
        raise UnsupportedRootKindError(error_msg)
    if x < 0:
        error_msg = f"Oracle is defined for non-negative integers, got {x}."
        logger.error(error_msg)
        raise ValueError(error_msg)

    lo, hi = 0, 1 << (x.bit_length() // k + 1)
    # lo**k <= x < hi**k throughout
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**k <= x:
            lo = mid
        else:
            hi = mid
    return lo


def floor_root(x: NaturalLike, k: int) -> DecimalNatural:
    """DecimalNatural front end of floor_root_int."""
    return DecimalNatural.from_int(floor_root_int(int(as_natural(x)), k))
