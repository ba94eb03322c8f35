"""Dual-mode scalars.

A scalar is either a :class:`fractions.Fraction` (exact mode) or a
:class:`float` (approximate mode).  Plain ``int`` input is promoted to
``Fraction`` on entry.  Every comparison in the package goes through
:func:`scalar_eq` / :func:`is_zero` so there is one tolerance policy.
"""
from __future__ import annotations

import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence, Union

Scalar = Union[Fraction, float]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$")


@dataclass(frozen=True)
class Tolerance:
    """Relative/absolute tolerance; ignored when both operands are exact."""

    rel: float = 1e-9
    abs: float = 1e-12

    def __post_init__(self):
        if not (self.rel >= 0 and self.abs >= 0):
            raise ValueError("tolerances must be nonnegative")

    def scaled(self, factor: float) -> "Tolerance":
        return Tolerance(self.rel * factor, self.abs * factor)

    @classmethod
    def parse(cls, text: str) -> "Tolerance":
        """Parse ``"T"`` (absolute tolerance) or ``"rel=R,abs=A"``."""
        text = text.strip()
        if "=" not in text:
            return cls(abs=float(text))
        fields = {}
        for part in text.split(","):
            key, _, value = part.partition("=")
            key = key.strip()
            if key not in ("rel", "abs"):
                raise ValueError(f"unknown tolerance field {key!r}")
            fields[key] = float(value)
        return cls(**fields)


DEFAULT_TOL = Tolerance()


def default_tolerance() -> Tolerance:
    """Default tolerance, overridden by the ``DRGTIGHT_TOL`` environment variable."""
    env = os.environ.get("DRGTIGHT_TOL")
    if env:
        return Tolerance.parse(env)
    return DEFAULT_TOL


def is_exact(x) -> bool:
    return isinstance(x, (Fraction, int)) and not isinstance(x, bool)


def all_exact(values: Iterable) -> bool:
    return all(is_exact(v) for v in values)


def to_scalar(x) -> Scalar:
    """Coerce ``x`` into a scalar.  ``int`` becomes exact, strings are parsed."""
    if isinstance(x, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, float):
        return x
    if isinstance(x, str):
        return parse_scalar(x)
    raise TypeError(f"cannot interpret {x!r} as a scalar")


def parse_scalar(text: str) -> Scalar:
    """``"p/q"`` or ``"n"`` give an exact rational; anything else a float."""
    if _RATIONAL_RE.match(text):
        return Fraction(text.replace(" ", ""))
    value = float(text)
    if not math.isfinite(value):
        raise ValueError(f"non-finite scalar {text!r}")
    return value


def format_scalar(x: Scalar) -> str:
    """``"p/q"`` for rationals, 15 significant digits for floats."""
    if is_exact(x):
        return str(Fraction(x))
    return f"{x:.15g}"


def to_float(x: Scalar) -> float:
    return float(x)


class Unified(NamedTuple):
    values: tuple
    exact: bool
    promoted: bool


def unify(values: Iterable) -> Unified:
    """Bring ``values`` into a common mode.

    If any value is approximate, all become floats and ``promoted`` reports
    whether an exact value had to be converted.
    """
    vals = [to_scalar(v) for v in values]
    if all(isinstance(v, Fraction) for v in vals):
        return Unified(tuple(vals), True, False)
    promoted = any(isinstance(v, Fraction) for v in vals)
    return Unified(tuple(float(v) for v in vals), False, promoted)


def scalar_eq(a: Scalar, b: Scalar, tol: Tolerance = DEFAULT_TOL) -> bool:
    if is_exact(a) and is_exact(b):
        return a == b
    a, b = float(a), float(b)
    return abs(a - b) <= max(tol.abs, tol.rel * max(abs(a), abs(b)))


def is_zero(x: Scalar, tol: Tolerance = DEFAULT_TOL, scale: float = 1.0) -> bool:
    """Zero test; in approximate mode ``|x| <= max(abs, rel*scale)``."""
    if is_exact(x):
        return x == 0
    return abs(x) <= max(tol.abs, tol.rel * abs(float(scale)))


def max_abs(values: Sequence[Scalar]) -> float:
    return max((abs(float(v)) for v in values), default=0.0)


def rationalize(x: float, max_denominator: int = 10_000) -> Fraction:
    """Best rational approximation of ``x`` with bounded denominator."""
    return Fraction(x).limit_denominator(max_denominator)
