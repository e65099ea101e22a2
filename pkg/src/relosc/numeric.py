"""Scalar helpers for the two numeric modes.

Exact mode works over ``int``/``fractions.Fraction`` where every sign test
is error-free.  Float mode is binary64; sign classification of floats
follows a documented tolerance policy: x counts as zero iff
``|x| <= TAU_ABS + TAU_REL * scale`` for a caller-supplied scale
(typically the largest magnitude in the sequence being classified).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Union

Number = Union[int, Fraction, float]

TAU_ABS = 1e-300
TAU_REL = 1e-12


def is_exact(x: Number) -> bool:
    """True for int/Fraction values (error-free comparisons)."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def all_exact(values: Iterable[Number]) -> bool:
    return all(is_exact(v) for v in values)


def zero_tolerance(scale: float) -> float:
    return TAU_ABS + TAU_REL * abs(scale)


def sign(x: Number, scale: float = 1.0) -> int:
    """Sign in {-1, 0, +1}; exact for rationals, tolerance-based for floats."""
    if is_exact(x):
        return (x > 0) - (x < 0)
    if abs(x) <= zero_tolerance(scale):
        return 0
    return 1 if x > 0 else -1


def in_tolerance_band(x: Number, scale: float = 1.0) -> bool:
    """True when a float is classified as zero but is not exactly zero."""
    if is_exact(x):
        return False
    return x != 0.0 and abs(x) <= zero_tolerance(scale)


def seq_scale(values: Iterable[Number]) -> float:
    """Default classification scale: largest magnitude in the sequence."""
    m = max((abs(float(v)) for v in values), default=0.0)
    return m if m > 0.0 else 1.0


def parse_scalar(value) -> Number:
    """Parse a JSON/CLI scalar: int and float pass through, strings are
    exact rationals of the form "p" or "p/q"."""
    if isinstance(value, bool):
        raise ValueError(f"not a scalar: {value!r}")
    if isinstance(value, (int, float)):
        return value
    if isinstance(value, str):
        return Fraction(value.strip())
    raise ValueError(f"not a scalar: {value!r}")


def format_scalar(x: Number, exact: bool):
    """Render for a report: rational string in exact mode, shortest
    round-trip float otherwise."""
    if exact:
        f = Fraction(x)
        return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"
    return float(x)


def to_exact(x: Number) -> Fraction:
    return Fraction(x)


def to_float(x: Number) -> float:
    return float(x)
