"""Scalar backends.

Two kinds of scalars flow through the kernel:

* exact rationals (``int`` and :class:`fractions.Fraction`), for which every
  predicate is decided exactly, and
* ``float``, for which zero tests and comparisons use a relative tolerance.

The backend of a computation is decided by the values themselves: as soon as a
float enters an expression the result is a float, and the tolerant branch of
each predicate is taken.
"""

from __future__ import annotations

import contextlib
import math
from contextvars import ContextVar
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

Scalar = Union[int, Fraction, float]

DEFAULT_EPSILON = 1e-9

_epsilon: ContextVar[float] = ContextVar("epsilon", default=DEFAULT_EPSILON)


def get_epsilon() -> float:
    return _epsilon.get()


@contextlib.contextmanager
def epsilon(value: float):
    """Temporarily override the float tolerance in the current context."""
    if not value > 0:
        raise ValueError("epsilon must be positive")
    token = _epsilon.set(float(value))
    try:
        yield value
    finally:
        _epsilon.reset(token)


def is_exact(x) -> bool:
    return isinstance(x, Rational)


def all_exact(values: Iterable) -> bool:
    return all(isinstance(v, Rational) for v in values)


def to_scalar(value, exact: bool | None = None) -> Scalar:
    """Coerce ``value`` into a kernel scalar.

    Strings are parsed as decimals or ``p/q`` rationals. With ``exact=None``
    the backend follows the input type; ``exact=True`` turns floats into their
    exact binary value and ``exact=False`` turns everything into ``float``.
    """
    if isinstance(value, str):
        value = parse_scalar(value)
    elif isinstance(value, bool):
        raise TypeError("bool is not a scalar")
    elif hasattr(value, "item") and not isinstance(value, (int, float, Fraction)):
        # numpy scalars
        value = value.item()

    if exact is None:
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, (Fraction, float)):
            return value
        if isinstance(value, Rational):
            return Fraction(value.numerator, value.denominator)
        raise TypeError(f"unsupported scalar type {type(value).__name__}")
    if exact:
        if isinstance(value, float) and not math.isfinite(value):
            raise ValueError(f"non-finite value {value!r}")
        return Fraction(value)
    return float(value)


def parse_scalar(text: str) -> Fraction:
    """Parse ``"3"``, ``"-1.25"``, ``"2e3"`` or ``"p/q"`` into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a scalar: {text!r}") from exc


def is_zero(x: Scalar, scale: Scalar = 1) -> bool:
    """Exact zero test for rationals; ``|x| <= eps * max(1, scale)`` for floats."""
    if isinstance(x, Rational):
        return x == 0
    return abs(x) <= get_epsilon() * max(1.0, abs(float(scale)))


def close(x: Scalar, y: Scalar) -> bool:
    if isinstance(x, Rational) and isinstance(y, Rational):
        return x == y
    x, y = float(x), float(y)
    return abs(x - y) <= get_epsilon() * max(1.0, abs(x), abs(y))


def norm(values: Iterable[Scalar]) -> float:
    return math.sqrt(sum(float(v) * float(v) for v in values))


def format_scalar(x: Scalar) -> str:
    """``p/q`` (or an integer) for rationals, ``repr``-free 17 digits for floats."""
    if isinstance(x, Rational):
        x = Fraction(x)
        if x.denominator == 1:
            return str(x.numerator)
        return f"{x.numerator}/{x.denominator}"
    return f"{x:.17g}"


def format_decimal(x: Scalar, digits: int = 10) -> str:
    return f"{float(x):.{digits}g}"
