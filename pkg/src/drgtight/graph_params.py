"""Intersection arrays and the four structural cases."""
from __future__ import annotations

import enum
import json
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Optional, Sequence

from .errors import ValidationError
from .numeric import Scalar, format_scalar, to_scalar, unify


class IntersectionArrayWarning(UserWarning):
    """The array cannot come from an actual distance-regular graph."""


class CaseTag(enum.Enum):
    I = "I"  # a_i = 0 for i <= D-1 (bipartite / almost bipartite)
    II = "II"  # a_i = 0 for i <= D-2, a_{D-1} != 0
    III = "III"  # a_1 = 0, some a_i != 0 with 2 <= i <= D-2
    IV = "IV"  # a_1 != 0

    def __str__(self):
        return self.value


@dataclass(frozen=True)
class IntersectionArray:
    """Validated intersection array ``{b_0..b_{D-1}; c_1..c_D}``.

    Build through :func:`validate_array`; ``a`` and ``k`` are derived.
    ``b_ext`` and ``c_ext`` hold ``b_0..b_D`` and ``c_0..c_D`` with the
    conventions ``b_D = 0`` and ``c_0 = 0``.
    """

    D: int
    b: tuple
    c: tuple
    a: tuple
    k: Scalar
    name: Optional[str] = None
    exact: bool = True
    promoted: bool = False
    warnings: tuple = ()
    b_ext: tuple = field(repr=False, default=())
    c_ext: tuple = field(repr=False, default=())

    def __str__(self):
        b = ",".join(format_scalar(x) for x in self.b)
        c = ",".join(format_scalar(x) for x in self.c)
        return f"{{{b};{c}}}"

    @property
    def a1(self) -> Scalar:
        return self.a[1]

    def to_json(self) -> dict:
        doc = {}
        if self.name is not None:
            doc["name"] = self.name
        doc["D"] = self.D
        doc["b"] = [format_scalar(x) for x in self.b]
        doc["c"] = [format_scalar(x) for x in self.c]
        return doc

    def as_float(self) -> "IntersectionArray":
        """Same array in approximate mode."""
        return validate_array(self.D, [float(x) for x in self.b],
                              [float(x) for x in self.c], name=self.name)


def validate_array(D: int, b: Sequence, c: Sequence, name: Optional[str] = None,
                   *, warn: bool = True) -> IntersectionArray:
    """Check every intersection-array constraint and derive ``a_i``, ``k``.

    Raises :class:`ValidationError` naming the first violated invariant.
    A violation of "a_1 != 0 implies a_i != 0 for 1 <= i <= D-1" only
    produces an :class:`IntersectionArrayWarning`.
    """
    if isinstance(D, bool) or not isinstance(D, int):
        raise ValidationError(f"D must be an integer, got {D!r}")
    if D < 3:
        raise ValidationError(f"D = {D} < 3")
    if len(b) != D:
        raise ValidationError(f"b has length {len(b)}, expected D = {D}")
    if len(c) != D:
        raise ValidationError(f"c has length {len(c)}, expected D = {D}")
    try:
        unified = unify(list(b) + list(c))
    except (TypeError, ValueError) as exc:
        raise ValidationError(str(exc)) from exc
    vals = unified.values
    b, c = vals[:D], vals[D:]
    zero = Fraction(0) if unified.exact else 0.0

    if c[0] != 1:
        raise ValidationError("c_1 != 1")
    for i, x in enumerate(b):
        if not x > 0:
            raise ValidationError(f"b_{i} not positive")
    for i, x in enumerate(c, start=1):
        if not x > 0:
            raise ValidationError(f"c_{i} not positive")
    for i in range(2, D + 1):
        if c[i - 1] < c[i - 2]:
            raise ValidationError(f"c_{i} < c_{i - 1}")
    for i in range(1, D):
        if b[i] > b[i - 1]:
            raise ValidationError(f"b_{i} > b_{i - 1}")

    k = b[0]
    b_ext = tuple(b) + (zero,)
    c_ext = (zero,) + tuple(c)
    a = tuple(k - b_ext[i] - c_ext[i] for i in range(D + 1))
    for i, x in enumerate(a):
        if x < 0:
            raise ValidationError(f"a_{i} negative")

    notes = []
    if unified.promoted:
        notes.append("mixed exact/decimal input promoted to approximate arithmetic")
    if a[1] != 0:
        bad = [i for i in range(1, D) if a[i] == 0]
        if bad:
            msg = (f"a_1 != 0 but a_{bad[0]} = 0: no distance-regular graph has "
                   "this array")
            notes.append(msg)
            if warn:
                warnings.warn(msg, IntersectionArrayWarning, stacklevel=2)

    return IntersectionArray(D=D, b=tuple(b), c=tuple(c), a=a, k=k, name=name,
                             exact=unified.exact, promoted=unified.promoted,
                             warnings=tuple(notes), b_ext=b_ext, c_ext=c_ext)


def k_subscript(arr: IntersectionArray, i: int) -> Scalar:
    """``k_i = b_0...b_{i-1} / (c_1...c_i)``; ``k_0 = 1``."""
    if not 0 <= i <= arr.D:
        raise IndexError(f"k_{i} out of range 0..{arr.D}")
    num = Fraction(1) if arr.exact else 1.0
    den = Fraction(1) if arr.exact else 1.0
    for j in range(i):
        num *= arr.b[j]
        den *= arr.c[j]
    return num / den


def detect_case(arr: IntersectionArray) -> CaseTag:
    if arr.a[1] != 0:
        return CaseTag.IV
    nonzero = [i for i in range(1, arr.D) if arr.a[i] != 0]
    if not nonzero:
        return CaseTag.I
    if nonzero[0] == arr.D - 1:
        return CaseTag.II
    return CaseTag.III


def is_bipartite_like(arr: IntersectionArray) -> bool:
    """Bipartite or almost bipartite: ``a_i = 0`` for ``i <= D-1``."""
    return detect_case(arr) is CaseTag.I


def array_from_json(doc: dict) -> IntersectionArray:
    """Build an array from the input document schema.

    ``{"name": str?, "D": int, "b": [scalar...], "c": [scalar...]}``.
    JSON floats and decimal strings force approximate mode.
    """
    if not isinstance(doc, dict):
        raise ValidationError("input document must be a JSON object")
    missing = [key for key in ("D", "b", "c") if key not in doc]
    if missing:
        raise ValidationError(f"missing field(s): {', '.join(missing)}")
    b, c = doc["b"], doc["c"]
    if not isinstance(b, list) or not isinstance(c, list):
        raise ValidationError("b and c must be lists")
    name = doc.get("name")
    if name is not None and not isinstance(name, str):
        raise ValidationError("name must be a string")
    return validate_array(doc["D"], b, c, name=name)


def load_array(path) -> IntersectionArray:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"{path}: invalid JSON ({exc.msg})") from exc
    return array_from_json(doc)


def from_string(text: str, name: Optional[str] = None) -> IntersectionArray:
    """Parse the compact ``"{3,2,1;1,2,3}"`` notation."""
    body = text.strip().strip("{}")
    left, sep, right = body.partition(";")
    if not sep:
        raise ValidationError(f"expected 'b...;c...' in {text!r}")
    b = [to_scalar(x.strip()) for x in left.split(",") if x.strip()]
    c = [to_scalar(x.strip()) for x in right.split(",") if x.strip()]
    return validate_array(len(b), b, c, name=name)

