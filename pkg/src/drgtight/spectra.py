"""Eigenvalues of the intersection matrix and of the reduced case-II matrix.

Both are tridiagonal with positive off-diagonal products, hence similar to a
symmetric tridiagonal with off-diagonals ``sqrt(sub_i * sup_i)``.  We bisect
on Sturm counts of that symmetric matrix.  Only the products enter the LDL^T
pivots, so the square roots are never taken.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from . import kernels
from .errors import DegenerateSpectrum, LengthError, NonRealizable, WrongCase
from .graph_params import CaseTag, IntersectionArray, detect_case
from .numeric import DEFAULT_TOL, Scalar, Tolerance, to_scalar
from .sequences import is_cosine_sequence, pseudo_cosine_sequence


@dataclass(frozen=True)
class TridiagonalSpec:
    """``diag`` has length n, ``sub`` and ``sup`` length n-1.

    ``sub[i]`` sits at row i+1, column i; ``sup[i]`` at row i, column i+1.
    """

    diag: tuple
    sub: tuple
    sup: tuple

    def __post_init__(self):
        n = len(self.diag)
        if n == 0:
            raise LengthError("empty matrix")
        if len(self.sub) != n - 1 or len(self.sup) != n - 1:
            raise LengthError("off-diagonals must have length n-1")

    @property
    def n(self) -> int:
        return len(self.diag)

    def offdiag_products(self) -> list:
        prods = [float(s) * float(t) for s, t in zip(self.sub, self.sup)]
        for i, p in enumerate(prods):
            if not p > 0:
                raise NonRealizable(f"sub[{i}] * sup[{i}] = {p} is not positive")
        return prods

    def to_rows(self) -> list:
        n = self.n
        rows = [[0] * n for _ in range(n)]
        for i in range(n):
            rows[i][i] = self.diag[i]
        for i in range(n - 1):
            rows[i + 1][i] = self.sub[i]
            rows[i][i + 1] = self.sup[i]
        return rows


@dataclass(frozen=True)
class Spectrum:
    values: tuple
    residual_bound: float

    def __iter__(self):
        return iter(self.values)

    def __len__(self):
        return len(self.values)


def gershgorin_bounds(diag: Sequence[float], offsq: Sequence[float]):
    """Interval containing every eigenvalue of the symmetrized matrix."""
    n = len(diag)
    off = [math.sqrt(p) for p in offsq]
    lo, hi = math.inf, -math.inf
    for i in range(n):
        radius = (off[i - 1] if i > 0 else 0.0) + (off[i] if i < n - 1 else 0.0)
        lo = min(lo, diag[i] - radius)
        hi = max(hi, diag[i] + radius)
    pad = 1e-9 * max(1.0, abs(lo), abs(hi))
    return lo - pad, hi + pad


def sturm_count(t: TridiagonalSpec, x: float) -> int:
    """Number of eigenvalues of ``t`` strictly below ``x``."""
    return kernels.sturm_count([float(d) for d in t.diag], t.offdiag_products(), float(x))


def tridiag_eigenvalues(t: TridiagonalSpec, tol: Tolerance = DEFAULT_TOL) -> Spectrum:
    """All eigenvalues, descending; ``tol.abs`` is the minimum separation accepted."""
    diag = [float(d) for d in t.diag]
    offsq = t.offdiag_products()
    lo, hi = gershgorin_bounds(diag, offsq)
    width = tol.abs if tol.abs > 0 else 1e-12
    # bisect to float resolution; the kernel stops once the midpoint stalls
    values = kernels.bisect_eigenvalues(diag, offsq, lo, hi, 0.0)
    scale = max(abs(lo), abs(hi), 1.0)
    bound = 8 * t.n * math.ulp(scale)
    for x, y in zip(values, values[1:]):
        if x - y < 10 * width:
            raise DegenerateSpectrum(f"eigenvalues {x!r} and {y!r} are not separated")
    return Spectrum(tuple(values), bound)


def intersection_matrix(arr: IntersectionArray) -> TridiagonalSpec:
    return TridiagonalSpec(tuple(arr.a), tuple(arr.c), tuple(arr.b))


def reduced_matrix(arr: IntersectionArray) -> TridiagonalSpec:
    """The D x D matrix whose eigenvalues pair with ``-k`` in case II.

    Zero diagonal except the last entry ``k - c_{D-1}``; sub-diagonal
    ``c_1..c_{D-1}``, super-diagonal ``b_0..b_{D-2}``.
    """
    if detect_case(arr) is not CaseTag.II:
        raise WrongCase(f"reduced matrix needs case II, array is case {detect_case(arr)}")
    D = arr.D
    zero = arr.k - arr.k
    diag = (zero,) * (D - 1) + (arr.k - arr.c[D - 2],)
    return TridiagonalSpec(diag, tuple(arr.c[:D - 1]), tuple(arr.b[:D - 1]))


def graph_eigenvalues(arr: IntersectionArray, tol: Tolerance = DEFAULT_TOL) -> Spectrum:
    return tridiag_eigenvalues(intersection_matrix(arr), tol)


def reduced_matrix_eigenvalues(arr: IntersectionArray,
                               tol: Tolerance = DEFAULT_TOL) -> Spectrum:
    return tridiag_eigenvalues(reduced_matrix(arr), tol)


def exact_eigenvalue(arr: IntersectionArray, value: float, *, reduced: bool = False,
                     max_denominator: int = 1000) -> Optional[Fraction]:
    """Recover an eigenvalue exactly if it is a small-denominator rational.

    The candidate from :meth:`fractions.Fraction.limit_denominator` is accepted
    only if the exact terminal condition holds: ``sigma_D`` satisfies the last
    recurrence row for the intersection matrix, or ``sigma_{D-1} = sigma_D``
    for the reduced matrix.
    """
    if not arr.exact:
        return None
    candidate = Fraction(value).limit_denominator(max_denominator)
    s = pseudo_cosine_sequence(arr, candidate)
    if reduced:
        ok = s.sigma[arr.D - 1] == s.sigma[arr.D]
    else:
        ok = is_cosine_sequence(arr, s)
    return candidate if ok else None


def snap(arr: IntersectionArray, values, *, reduced: bool = False) -> list:
    """Replace every eigenvalue that is exactly rational by its ``Fraction``."""
    out = []
    for v in values:
        q = exact_eigenvalue(arr, v, reduced=reduced)
        out.append(q if q is not None else float(v))
    return out


def char_poly_value(t: TridiagonalSpec, x: Scalar) -> Scalar:
    """``det(x I - T)`` by the three-term continuant recurrence."""
    x = to_scalar(x)
    p_prev, p = 1, x - t.diag[0]
    for i in range(1, t.n):
        p_prev, p = p, (x - t.diag[i]) * p - t.sub[i - 1] * t.sup[i - 1] * p_prev
    return p
