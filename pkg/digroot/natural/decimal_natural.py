"""
Arbitrary-precision non-negative integers stored as little-endian decimal digit tuples.

Only the primitives the root engine needs are provided. Index 0 is the units place, so
`digit_at(i)` reads the digit worth 10**i. Zero is canonically the empty tuple; every
constructor strips high-order zeros so two equal values always have equal digit tuples.
"""

from functools import total_ordering
from typing import Iterable, Tuple, Union

from digroot.errors import ArithmeticUnderflowError, MalformedNumberError
from digroot.utils.utils_io import get_logger

logger = get_logger()

__all__ = [
    "DecimalNatural",
    "ZERO",
    "ONE",
    "NaturalLike",
    "as_natural",
    "from_decimal_string",
    "digit_at",
    "compare",
    "subtract",
    "add_digit_shifted",
    "multiply_small",
    "power_small",
]

_DIGIT_CHARS = frozenset("0123456789")

# Conversion to and from int goes through chunks of this many digits, never through str.
_CHUNK_DIGITS = 18
_CHUNK = 10**_CHUNK_DIGITS


def _strip(digits: Iterable[int]) -> Tuple[int, ...]:
    """Drop high-order zeros. An all-zero sequence becomes the empty tuple."""
    stripped = list(digits)
    while stripped and stripped[-1] == 0:
        stripped.pop()
    return tuple(stripped)


@total_ordering
class DecimalNatural:
    """
    Immutable non-negative integer with indexed base-10 digit access.

    Attributes:
    - digits (Tuple[int, ...]): little-endian digits, each in 0..9, no high-order zero.
    """

    __slots__ = ("_digits",)

    def __init__(self, digits: Iterable[int] = ()) -> None:
        canonical = _strip(digits)
        for d in canonical:
            if not 0 <= d <= 9:
                error_msg = f"Digit {d} is outside 0..9."
                logger.error(error_msg)
                raise ValueError(error_msg)
        self._digits = canonical

    @classmethod
    def _trusted(cls, digits: Iterable[int]) -> "DecimalNatural":
        """Build from digits produced by our own arithmetic, skipping the range check."""
        value = cls.__new__(cls)
        value._digits = _strip(digits)
        return value

    @classmethod
    def from_decimal_string(cls, s: str) -> "DecimalNatural":
        """Parse bare decimal text ('0'-'9' only). Leading zeros are stripped."""
        if not s:
            error_msg = "Empty string is not a decimal number."
            logger.error(error_msg)
            raise MalformedNumberError(error_msg)
        if not set(s) <= _DIGIT_CHARS:
            error_msg = f"'{s}' is not a bare decimal number (only the characters 0-9 are accepted)."
            logger.error(error_msg)
            raise MalformedNumberError(error_msg)
        return cls._trusted(ord(c) - 48 for c in reversed(s))

    @classmethod
    def from_int(cls, n: int) -> "DecimalNatural":
        if n < 0:
            error_msg = f"Negative value {n} has no DecimalNatural representation."
            logger.error(error_msg)
            raise ValueError(error_msg)
        digits = []
        while n:
            n, chunk = divmod(n, _CHUNK)
            for _ in range(_CHUNK_DIGITS):
                chunk, d = divmod(chunk, 10)
                digits.append(d)
        return cls._trusted(digits)

    @property
    def digits(self) -> Tuple[int, ...]:
        return self._digits

    @property
    def top_index(self) -> int:
        """Index of the highest nonzero digit, -1 for zero."""
        return len(self._digits) - 1

    def digit_count(self) -> int:
        """Number of decimal digits; zero is written with one digit."""
        return max(len(self._digits), 1)

    def is_zero(self) -> bool:
        return not self._digits

    def digit_at(self, i: int) -> int:
        """Digit at place i. Places above the top digit read as 0."""
        if i < 0:
            error_msg = f"Digit index must be non-negative, got {i}."
            logger.error(error_msg)
            raise IndexError(error_msg)
        return self._digits[i] if i < len(self._digits) else 0

    def slice_digits(self, low: int, high: int) -> "DecimalNatural":
        """Value of the digits at places low..high-1, read as a number of their own."""
        return DecimalNatural._trusted(self.digit_at(j) for j in range(low, high))

    # Comparison

    def compare(self, other: "DecimalNatural") -> int:
        """Return -1, 0 or 1 as self is less than, equal to or greater than other."""
        a, b = self._digits, other._digits
        if len(a) != len(b):
            return -1 if len(a) < len(b) else 1
        for da, db in zip(reversed(a), reversed(b)):
            if da != db:
                return -1 if da < db else 1
        return 0

    def __eq__(self, other: object) -> bool:
        if isinstance(other, DecimalNatural):
            return self._digits == other._digits
        if isinstance(other, int) and not isinstance(other, bool):
            return other >= 0 and self._digits == DecimalNatural.from_int(other)._digits
        return NotImplemented

    def __lt__(self, other: "DecimalNatural") -> bool:
        if not isinstance(other, DecimalNatural):
            return NotImplemented
        return self.compare(other) < 0

    def __hash__(self) -> int:
        # compares equal to the int of the same value
        return hash(int(self))

    # Arithmetic

    def add(self, other: "DecimalNatural") -> "DecimalNatural":
        a, b = self._digits, other._digits
        out = []
        carry = 0
        for j in range(max(len(a), len(b))):
            t = (a[j] if j < len(a) else 0) + (b[j] if j < len(b) else 0) + carry
            carry, d = (1, t - 10) if t >= 10 else (0, t)
            out.append(d)
        if carry:
            out.append(carry)
        return DecimalNatural._trusted(out)

    def subtract(self, other: "DecimalNatural") -> "DecimalNatural":
        """Exact difference self - other. Requires self >= other."""
        a, b = self._digits, other._digits
        if self.compare(other) < 0:
            error_msg = f"Subtraction underflow: {self} - {other} is negative."
            logger.error(error_msg)
            raise ArithmeticUnderflowError(error_msg)
        out = []
        borrow = 0
        for j, da in enumerate(a):
            t = da - (b[j] if j < len(b) else 0) - borrow
            borrow, d = (1, t + 10) if t < 0 else (0, t)
            out.append(d)
        return DecimalNatural._trusted(out)

    def add_digit_shifted(self, digit: int) -> "DecimalNatural":
        """10 * self + digit: the bring-down of long division, and the way a root grows."""
        if not 0 <= digit <= 9:
            error_msg = f"Digit {digit} is outside 0..9."
            logger.error(error_msg)
            raise ValueError(error_msg)
        return DecimalNatural._trusted((digit,) + self._digits)

    def shift(self, places: int) -> "DecimalNatural":
        """self * 10**places."""
        if not self._digits:
            return self
        return DecimalNatural._trusted((0,) * places + self._digits)

    def multiply_small(self, m: int) -> "DecimalNatural":
        """self * m for a native non-negative int m (a digit, a small coefficient or a digit power)."""
        if m < 0:
            error_msg = f"Multiplier must be non-negative, got {m}."
            logger.error(error_msg)
            raise ValueError(error_msg)
        if m == 0 or not self._digits:
            return ZERO
        out = []
        carry = 0
        for d in self._digits:
            carry, r = divmod(d * m + carry, 10)
            out.append(r)
        while carry:
            carry, r = divmod(carry, 10)
            out.append(r)
        return DecimalNatural._trusted(out)

    def multiply(self, other: "DecimalNatural") -> "DecimalNatural":
        """Schoolbook product of two values."""
        a, b = self._digits, other._digits
        if not a or not b:
            return ZERO
        acc = [0] * (len(a) + len(b))
        for j, db in enumerate(b):
            if db == 0:
                continue
            carry = 0
            for m, da in enumerate(a):
                carry, acc[j + m] = divmod(acc[j + m] + da * db + carry, 10)
            position = j + len(a)
            while carry:
                carry, acc[position] = divmod(acc[position] + carry, 10)
                position += 1
        return DecimalNatural._trusted(acc)

    def power_small(self, e: int) -> "DecimalNatural":
        """self ** e for e in {2, 3}."""
        if e not in (2, 3):
            error_msg = f"power_small supports exponents 2 and 3, got {e}."
            logger.error(error_msg)
            raise ValueError(error_msg)
        square = self.multiply(self)
        return square if e == 2 else square.multiply(self)

    def divide_floor(self, divisor: "DecimalNatural") -> "DecimalNatural":
        """
        floor(self / divisor) by long division, each quotient digit found by repeated subtraction.

        Serves the engine's trial quotient, which is small but may exceed 9.
        """
        if divisor.is_zero():
            error_msg = f"Division of {self} by zero."
            logger.error(error_msg)
            raise ZeroDivisionError(error_msg)
        quotient = []
        remainder = ZERO
        for d in reversed(self._digits):
            remainder = remainder.add_digit_shifted(d)
            q = 0
            while remainder.compare(divisor) >= 0:
                remainder = remainder.subtract(divisor)
                q += 1
            quotient.append(q)
        return DecimalNatural._trusted(reversed(quotient))

    # Conversion

    def to_string(self) -> str:
        if not self._digits:
            return "0"
        return "".join(chr(48 + d) for d in reversed(self._digits))

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"DecimalNatural('{self.to_string()}')"

    def __int__(self) -> int:
        value = 0
        for high in range(len(self._digits), 0, -_CHUNK_DIGITS):
            low = max(high - _CHUNK_DIGITS, 0)
            chunk = 0
            for d in reversed(self._digits[low:high]):
                chunk = chunk * 10 + d
            value = value * 10 ** (high - low) + chunk
        return value

    def __reduce__(self) -> Tuple[type, Tuple[Tuple[int, ...]]]:
        return DecimalNatural, (self._digits,)


ZERO = DecimalNatural()
ONE = DecimalNatural((1,))


def from_decimal_string(s: str) -> DecimalNatural:
    return DecimalNatural.from_decimal_string(s)


def digit_at(x: DecimalNatural, i: int) -> int:
    return x.digit_at(i)


def compare(a: DecimalNatural, b: DecimalNatural) -> int:
    return a.compare(b)


def subtract(a: DecimalNatural, b: DecimalNatural) -> DecimalNatural:
    return a.subtract(b)


def add_digit_shifted(a: DecimalNatural, digit: int) -> DecimalNatural:
    return a.add_digit_shifted(digit)


def multiply_small(a: DecimalNatural, m: int) -> DecimalNatural:
    return a.multiply_small(m)


def power_small(a: DecimalNatural, e: int) -> DecimalNatural:
    return a.power_small(e)


NaturalLike = Union[DecimalNatural, int, str]


def as_natural(value: NaturalLike) -> DecimalNatural:
    """Coerce a DecimalNatural, a non-negative int or bare decimal text to a DecimalNatural."""
    if isinstance(value, DecimalNatural):
        return value
    if isinstance(value, str):
        return DecimalNatural.from_decimal_string(value)
    return DecimalNatural.from_int(value)
