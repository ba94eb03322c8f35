"""Pseudo cosine sequences and the identities they satisfy.

A pseudo cosine sequence for ``theta`` is ``sigma_0 .. sigma_D`` with
``sigma_0 = 1`` and ``c_i s_{i-1} + a_i s_i + b_i s_{i+1} = theta s_i`` for
``0 <= i <= D-1``.  Everything here works on exact rationals or floats;
the float forward recurrence runs in :mod:`drgtight.kernels`.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from . import kernels
from .errors import LengthError
from .graph_params import IntersectionArray, k_subscript
from .numeric import (DEFAULT_TOL, Scalar, Tolerance, all_exact, is_exact,
                      scalar_eq, to_scalar)


@dataclass(frozen=True)
class PseudoCosineSeq:
    theta: Scalar
    sigma: tuple

    @property
    def D(self) -> int:
        return len(self.sigma) - 1

    @property
    def s1(self) -> Scalar:
        """``sigma_1``, written plain ``sigma`` in the formulas."""
        return self.sigma[1]

    @property
    def exact(self) -> bool:
        return is_exact(self.theta) and all_exact(self.sigma)

    def is_trivial(self, tol: Tolerance = DEFAULT_TOL) -> bool:
        return all(scalar_eq(x, 1, tol) for x in self.sigma)

    def __iter__(self):
        return iter(self.sigma)

    def __len__(self):
        return len(self.sigma)

    def __getitem__(self, i):
        return self.sigma[i]


def sigma_of(s) -> tuple:
    """Accept a :class:`PseudoCosineSeq` or a raw sequence of scalars."""
    if isinstance(s, PseudoCosineSeq):
        return s.sigma
    return tuple(to_scalar(x) for x in s)


def _params(arr: IntersectionArray, exact: bool):
    """``(k, b_ext, a, c_ext)`` in the requested mode."""
    if exact and arr.exact:
        return arr.k, arr.b_ext, arr.a, arr.c_ext
    return (float(arr.k), tuple(map(float, arr.b_ext)), tuple(map(float, arr.a)),
            tuple(map(float, arr.c_ext)))


def _mode(arr: IntersectionArray, values) -> bool:
    return arr.exact and all_exact(values)


def _coerce(values, exact: bool) -> tuple:
    if exact:
        return tuple(Fraction(v) for v in values)
    return tuple(float(v) for v in values)


def _close(lhs, rhs, magnitude, tol: Tolerance) -> bool:
    """Residual test: exact equality, or ``|lhs - rhs|`` within ``tol`` of ``magnitude``."""
    if is_exact(lhs) and is_exact(rhs):
        return lhs == rhs
    return abs(float(lhs) - float(rhs)) <= max(tol.abs, tol.rel * float(magnitude))


def pseudo_cosine_sequence(arr: IntersectionArray, theta) -> PseudoCosineSeq:
    """Solve the recurrence forward from ``sigma_0 = 1``, ``sigma_1 = theta/k``."""
    theta = to_scalar(theta)
    if arr.exact and is_exact(theta):
        D = arr.D
        b, a, c = arr.b_ext, arr.a, arr.c_ext
        sigma = [Fraction(1), theta / arr.k]
        for i in range(1, D):
            sigma.append(((theta - a[i]) * sigma[i] - c[i] * sigma[i - 1]) / b[i])
        return PseudoCosineSeq(theta, tuple(sigma))
    _, b, a, c = _params(arr, exact=False)
    theta = float(theta)
    return PseudoCosineSeq(theta, tuple(kernels.pcs_float(b, a, c, theta)))


def terminal_residual(arr: IntersectionArray, s: PseudoCosineSeq) -> Scalar:
    """``c_D s_{D-1} + a_D s_D - theta s_D``; zero exactly for eigenvalues."""
    exact = _mode(arr, (s.theta,) + s.sigma)
    _, _, a, c = _params(arr, exact)
    sig = _coerce(s.sigma, exact)
    theta = Fraction(s.theta) if exact else float(s.theta)
    D = arr.D
    return c[D] * sig[D - 1] + a[D] * sig[D] - theta * sig[D]


def is_cosine_sequence(arr: IntersectionArray, s: PseudoCosineSeq,
                       tol: Tolerance = DEFAULT_TOL) -> bool:
    """True iff the recurrence also holds at ``i = D`` (``theta`` is an eigenvalue)."""
    D = arr.D
    res = terminal_residual(arr, s)
    if is_exact(res):
        return res == 0
    mag = (abs(float(arr.c[D - 1] * s.sigma[D - 1])) + abs(float(arr.a[D] * s.sigma[D]))
           + abs(float(s.theta * s.sigma[D])))
    return abs(res) <= max(tol.abs, tol.rel * mag)


def recurrence_residual(arr: IntersectionArray, seq) -> float:
    """Largest absolute residual of the recurrence for ``theta = k * seq[1]``."""
    sig = sigma_of(seq)
    if len(sig) != arr.D + 1:
        raise LengthError(f"sequence has length {len(sig)}, expected {arr.D + 1}")
    exact = _mode(arr, sig)
    k, b, a, c = _params(arr, exact)
    sig = _coerce(sig, exact)
    theta = k * sig[1]
    worst = abs(sig[0] - 1)
    for i in range(arr.D):
        prev = c[i] * sig[i - 1] if i else 0
        worst = max(worst, abs(prev + a[i] * sig[i] + b[i] * sig[i + 1] - theta * sig[i]))
    return worst


def christoffel_darboux(arr: IntersectionArray, s: PseudoCosineSeq,
                        r: PseudoCosineSeq, i: int):
    """Both sides of the Christoffel-Darboux identity at index ``i``.

    ``lhs = (sigma - rho) * sum_{h<=i} k_h sigma_h rho_h`` and
    ``rhs = (b_1..b_i)/(c_1..c_i) * (sigma_{i+1} rho_i - sigma_i rho_{i+1})``.
    """
    if not 0 <= i <= arr.D - 1:
        raise IndexError(f"i = {i} out of range 0..{arr.D - 1}")
    exact = _mode(arr, s.sigma + r.sigma)
    sig, rho = _coerce(s.sigma, exact), _coerce(r.sigma, exact)
    total = 0
    for h in range(i + 1):
        kh = k_subscript(arr, h)
        total += (kh if exact else float(kh)) * sig[h] * rho[h]
    lhs = (sig[1] - rho[1]) * total
    ratio = Fraction(1) if exact else 1.0
    for j in range(1, i + 1):
        ratio *= arr.b[j] if exact else float(arr.b[j])
        ratio /= arr.c[j - 1] if exact else float(arr.c[j - 1])
    rhs = ratio * (sig[i + 1] * rho[i] - sig[i] * rho[i + 1])
    return lhs, rhs


class Characterization(NamedTuple):
    """Outcome of the five equivalent pseudo-cosine tests."""

    recurrence: bool
    diff_form: bool
    sum_form: bool
    b_form: bool
    c_form: bool

    @property
    def consistent(self) -> bool:
        return len(set(self)) == 1

    @property
    def holds(self) -> bool:
        return all(self)


def characterize(arr: IntersectionArray, seq, tol: Tolerance = DEFAULT_TOL) -> Characterization:
    """Evaluate each characterization of a pseudo cosine sequence separately.

    The forms are the recurrence itself, the first-difference form, the
    partial-sum form and the two forms solved for ``b_i`` and ``c_i``.  For a
    well-posed input all five agree; that agreement is what makes this a
    usable oracle for the rest of the package.
    """
    sig = sigma_of(seq)
    D = arr.D
    if len(sig) != D + 1:
        raise LengthError(f"sequence has length {len(sig)}, expected {D + 1}")
    exact = _mode(arr, sig)
    k, b, a, c = _params(arr, exact)
    sig = _coerce(sig, exact)
    s = sig[1]
    if not (sig[0] == 1 if exact else abs(sig[0] - 1) <= tol.abs):
        return Characterization(False, False, False, False, False)

    def ok(lhs, rhs, *terms):
        return _close(lhs, rhs, sum(abs(float(t)) for t in terms), tol)

    recurrence = ok(b[0] * sig[1], k * s * sig[0], b[0] * sig[1], k * s)
    for i in range(1, D):
        lhs = c[i] * sig[i - 1] + a[i] * sig[i] + b[i] * sig[i + 1]
        rhs = k * s * sig[i]
        recurrence = recurrence and ok(lhs, rhs, c[i] * sig[i - 1], a[i] * sig[i],
                                       b[i] * sig[i + 1], rhs)

    diff_form = True
    for i in range(1, D):
        lhs = c[i] * (sig[i - 1] - sig[i]) - b[i] * (sig[i] - sig[i + 1])
        rhs = k * (s - 1) * sig[i]
        diff_form = diff_form and ok(lhs, rhs, c[i] * sig[i - 1], c[i] * sig[i],
                                     b[i] * sig[i], b[i] * sig[i + 1], k * s * sig[i],
                                     k * sig[i])

    sum_form = True
    total = 0
    mag = 0.0
    ratio = Fraction(1) if exact else 1.0
    for i in range(D):
        kh = k_subscript(arr, i)
        kh = kh if exact else float(kh)
        total += kh * sig[i]
        mag += abs(float(kh * sig[i]))
        if i:
            ratio = ratio * b[i] / c[i]
        lhs = (s - 1) * total
        rhs = ratio * (sig[i + 1] - sig[i])
        sum_form = sum_form and _close(
            lhs, rhs, (abs(float(s)) + 1) * mag
            + abs(float(ratio)) * (abs(float(sig[i + 1])) + abs(float(sig[i]))), tol)

    b_form = True
    c_form = True
    for i in range(1, D):
        lhs = b[i] * (sig[i - 1] - sig[i + 1])
        rhs = k * (sig[i - 1] - s * sig[i]) - a[i] * (sig[i - 1] - sig[i])
        b_form = b_form and ok(lhs, rhs, b[i] * sig[i - 1], b[i] * sig[i + 1],
                               k * sig[i - 1], k * s * sig[i], a[i] * sig[i - 1],
                               a[i] * sig[i])
        lhs = c[i] * (sig[i + 1] - sig[i - 1])
        rhs = k * (sig[i + 1] - s * sig[i]) - a[i] * (sig[i + 1] - sig[i])
        c_form = c_form and ok(lhs, rhs, c[i] * sig[i + 1], c[i] * sig[i - 1],
                               k * sig[i + 1], k * s * sig[i], a[i] * sig[i + 1],
                               a[i] * sig[i])

    return Characterization(recurrence, diff_form, sum_form, b_form, c_form)


def is_pseudo_cosine(arr: IntersectionArray, seq, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Recurrence test alone (the first characterization)."""
    return characterize(arr, seq, tol).recurrence


def trivial_sequence(arr: IntersectionArray) -> PseudoCosineSeq:
    one = Fraction(1) if arr.exact else 1.0
    return PseudoCosineSeq(arr.k, (one,) * (arr.D + 1))


def sequence_from_sigma(arr: IntersectionArray, seq: Sequence) -> PseudoCosineSeq:
    """Wrap a raw sequence, taking ``theta = k * sigma_1``."""
    sig = sigma_of(seq)
    return PseudoCosineSeq(arr.k * sig[1], sig)
