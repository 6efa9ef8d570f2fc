from enum import Enum

from digroot.errors import UnsupportedRootKindError
from digroot.utils.utils_io import get_logger

logger = get_logger()


class RootKind(Enum):
    """Which root is extracted. The value is the exponent k, which is also the digit grouping period."""

    SQUARE = 2
    CUBE = 3

    @property
    def k(self) -> int:
        return self.value

    @property
    def label(self) -> str:
        return "sqrt" if self is RootKind.SQUARE else "cbrt"

    @classmethod
    def from_exponent(cls, k: int) -> "RootKind":
        try:
            return cls(k)
        except ValueError:
            error_msg = f"Only square (k=2) and cube (k=3) roots are supported, got k={k}."
            logger.error(error_msg)
            raise UnsupportedRootKindError(error_msg) from None
