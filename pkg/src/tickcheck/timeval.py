"""Exact time values: nonnegative rationals plus an absorbing infinity.

Every duration, clock reading, message delay, and property bound in the
checker is a TimeValue.  Values are exact (arbitrary-precision rationals in
lowest terms), never floats: state deduplication hashes canonical forms, so
any rounding would corrupt the visited set.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[int, Fraction, "TimeValue"]


class TimeError(ValueError):
    """Raised for ill-formed time values (negative, or undefined arithmetic)."""


class TimeValue:
    """A nonnegative exact rational duration, or the infinite time INF.

    Immutable and hashable; equal values have identical canonical form.
    """

    __slots__ = ("_frac",)

    def __init__(self, numerator: RationalLike = 0, denominator: int | None = None):
        if isinstance(numerator, TimeValue):
            if denominator is not None:
                raise TypeError("denominator not allowed when copying a TimeValue")
            self._frac = numerator._frac
            return
        frac = Fraction(numerator) if denominator is None else Fraction(numerator, denominator)
        if frac < 0:
            raise TimeError(f"negative time value: {frac}")
        self._frac = frac

    # -- construction -----------------------------------------------------

    @staticmethod
    def parse(text: str) -> "TimeValue":
        """Parse 'a', 'a/b', a decimal like '2.5' (normalized to 5/2), or 'INF'."""
        text = text.strip()
        if text == "INF":
            return INF
        if text.startswith("-"):
            raise TimeError(f"negative time literal: {text!r}")
        try:
            return TimeValue(Fraction(text))
        except (ValueError, ZeroDivisionError) as exc:
            raise TimeError(f"bad time literal: {text!r}") from exc

    # -- predicates --------------------------------------------------------

    @property
    def is_infinite(self) -> bool:
        return self._frac is None

    @property
    def is_finite(self) -> bool:
        return self._frac is not None

    @property
    def numerator(self) -> int:
        if self._frac is None:
            raise TimeError("INF has no numerator")
        return self._frac.numerator

    @property
    def denominator(self) -> int:
        if self._frac is None:
            raise TimeError("INF has no denominator")
        return self._frac.denominator

    @property
    def fraction(self) -> Fraction:
        if self._frac is None:
            raise TimeError("INF is not a finite rational")
        return self._frac

    def is_zero(self) -> bool:
        return self._frac == 0

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "TimeValue") -> "TimeValue":
        if not isinstance(other, TimeValue):
            return NotImplemented
        if self._frac is None or other._frac is None:
            return INF
        return TimeValue(self._frac + other._frac)

    def __sub__(self, other: "TimeValue") -> "TimeValue":
        if not isinstance(other, TimeValue):
            return NotImplemented
        if self._frac is None:
            return INF
        if other._frac is None:
            raise TimeError("cannot subtract INF")
        return TimeValue(self._frac - other._frac)  # raises TimeError if negative

    def __mul__(self, other: "TimeValue") -> "TimeValue":
        if not isinstance(other, TimeValue):
            return NotImplemented
        if self._frac is None or other._frac is None:
            if self._frac == 0 or other._frac == 0:
                raise TimeError("INF * 0 is undefined")
            return INF
        return TimeValue(self._frac * other._frac)

    # -- ordering ------------------------------------------------------------

    def compare(self, other: "TimeValue") -> int:
        """Total order with INF maximal: -1, 0, or 1."""
        if self._frac is None:
            return 0 if other._frac is None else 1
        if other._frac is None:
            return -1
        if self._frac == other._frac:
            return 0
        return -1 if self._frac < other._frac else 1

    def __lt__(self, other: "TimeValue") -> bool:
        return self.compare(other) < 0

    def __le__(self, other: "TimeValue") -> bool:
        return self.compare(other) <= 0

    def __gt__(self, other: "TimeValue") -> bool:
        return self.compare(other) > 0

    def __ge__(self, other: "TimeValue") -> bool:
        return self.compare(other) >= 0

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TimeValue) and self._frac == other._frac

    def __hash__(self) -> int:
        return hash(("INF",)) if self._frac is None else hash(self._frac)

    # -- rendering -------------------------------------------------------------

    def __str__(self) -> str:
        if self._frac is None:
            return "INF"
        if self._frac.denominator == 1:
            return str(self._frac.numerator)
        return f"{self._frac.numerator}/{self._frac.denominator}"

    def __repr__(self) -> str:
        return f"TimeValue({self})"

    def sort_key(self) -> tuple:
        # INF sorts after every finite value.
        return (1,) if self._frac is None else (0, self._frac)


INF = TimeValue.__new__(TimeValue)
INF._frac = None

ZERO = TimeValue(0)


def add(a: TimeValue, b: TimeValue) -> TimeValue:
    """Exact rational sum; INF is absorbing."""
    return a + b


def minimum(a: TimeValue, b: TimeValue) -> TimeValue:
    """Total-order minimum with INF maximal."""
    return a if a.compare(b) <= 0 else b


def maximum(a: TimeValue, b: TimeValue) -> TimeValue:
    return a if a.compare(b) >= 0 else b


def compare(a: TimeValue, b: TimeValue) -> int:
    return a.compare(b)


def tv(numerator: RationalLike, denominator: int | None = None) -> TimeValue:
    """Shorthand constructor used heavily in tests and model fixtures."""
    return TimeValue(numerator, denominator)
