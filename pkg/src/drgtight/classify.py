"""Classification of the tight pairs of an intersection array.

The structural case decides the answer:

* case I: ``theta`` pairs with both ``k`` and ``-k``, nothing else;
* case II: ``-k`` pairs exactly with the eigenvalues of the reduced matrix;
* case III: only the pairs with ``k``;
* case IV: finitely many pairs, one partner per ``theta`` at most, found
  from the eigenvalue-pair hyperbola and confirmed by the product test.

Every pair in a report has been confirmed with :func:`is_tight_pair`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .graph_params import CaseTag, IntersectionArray, detect_case
from .numeric import (DEFAULT_TOL, Scalar, Tolerance, format_scalar, is_exact,
                      scalar_eq, to_scalar)
from .sequences import pseudo_cosine_sequence
from .spectra import graph_eigenvalues, reduced_matrix_eigenvalues, snap
from .tightness import (AnyReal, PartnerKind, TightPairWitness, is_tight_pair,
                        tight_partner_value)

RULE_K = "(theta, k) for all theta"
RULE_MINUS_K = "(theta, -k) for all theta"


@dataclass(frozen=True)
class TightPairRecord:
    theta: Scalar
    theta_prime: Scalar
    epsilon: object
    verified: bool
    trivial: bool = False
    residual: float = 0.0

    def to_json(self) -> dict:
        eps = "any" if isinstance(self.epsilon, AnyReal) else format_scalar(self.epsilon)
        return {"theta": format_scalar(self.theta), "theta_prime": format_scalar(self.theta_prime),
                "epsilon": eps, "verified": self.verified, "trivial": self.trivial}


@dataclass
class ClassificationReport:
    case: CaseTag
    universal: list
    pairs: list = field(default_factory=list)
    samples: list = field(default_factory=list)
    rejected: list = field(default_factory=list)
    warnings: list = field(default_factory=list)

    def nontrivial_pairs(self) -> list:
        return [p for p in self.pairs if not p.trivial]

    def to_json(self) -> dict:
        return {"case": self.case.value, "universal": list(self.universal),
                "pairs": [p.to_json() for p in self.pairs],
                "warnings": list(self.warnings)}


def _verify_tol(values, tol: Tolerance) -> Tolerance:
    # bisection error in approximate eigenvalues propagates into the residuals
    return tol if all(is_exact(v) for v in values) else tol.scaled(1e3)


def check_pair(arr: IntersectionArray, theta, theta2,
               tol: Tolerance = DEFAULT_TOL) -> Optional[TightPairWitness]:
    """Direct product test for the pair ``(theta, theta2)``."""
    theta, theta2 = to_scalar(theta), to_scalar(theta2)
    s = pseudo_cosine_sequence(arr, theta)
    r = pseudo_cosine_sequence(arr, theta2)
    return is_tight_pair(arr, s, r, _verify_tol((theta, theta2), tol))


def _record(arr, theta, theta2, w, tol) -> TightPairRecord:
    trivial = scalar_eq(theta, arr.k, tol) or scalar_eq(theta2, arr.k, tol)
    return TightPairRecord(theta, theta2, w.epsilon, True, trivial, w.residual)


def _sample_thetas(arr: IntersectionArray, count: int = 5) -> list:
    k = arr.k
    return [Fraction(-k) + Fraction(2 * k * j, count + 1) for j in range(1, count + 1)]


def auto_candidates(arr: IntersectionArray, tol: Tolerance = DEFAULT_TOL) -> list:
    """Graph eigenvalues other than ``k``, exact where they are rational."""
    values = snap(arr, graph_eigenvalues(arr, tol).values)
    return [v for v in values if not scalar_eq(v, arr.k, tol.scaled(1e3))]


def classify_tight_pairs(arr: IntersectionArray, candidates=None,
                         tol: Tolerance = DEFAULT_TOL) -> ClassificationReport:
    """Classify the tight pairs of ``arr``.

    ``candidates`` only matters in case IV; ``None`` means the graph
    eigenvalues other than ``k``.
    """
    case = detect_case(arr)
    report = ClassificationReport(case, [RULE_K], warnings=list(arr.warnings))
    minus_k = -arr.k

    if case is CaseTag.I:
        report.universal.append(RULE_MINUS_K)
        for theta in _sample_thetas(arr) if arr.exact else map(float, _sample_thetas(arr)):
            w = check_pair(arr, theta, minus_k, tol)
            report.samples.append(TightPairRecord(theta, minus_k, w.epsilon if w else None,
                                                  w is not None))
            if w is None:
                report.warnings.append(f"sample theta = {format_scalar(theta)} failed")
        return report

    if case is CaseTag.II:
        values = reduced_matrix_eigenvalues(arr, tol).values
        if arr.exact:
            values = snap(arr, values, reduced=True)
        for theta in values:
            w = check_pair(arr, theta, minus_k, tol)
            if w is None:
                report.rejected.append((theta, minus_k))
                report.warnings.append(
                    f"reduced eigenvalue {format_scalar(theta)} failed verification")
                continue
            report.pairs.append(_record(arr, theta, minus_k, w, tol))
        return report

    if case is CaseTag.III:
        return report

    if candidates is None:
        candidates = auto_candidates(arr, tol)
    else:
        candidates = [to_scalar(x) for x in candidates]
    seen = []
    for theta in sorted(candidates, key=float, reverse=True):
        if scalar_eq(theta, arr.k, tol):
            continue
        if any(scalar_eq(theta, x, tol) for x in seen):
            continue
        sol = tight_partner_value(arr, theta, tol)
        if sol.kind is not PartnerKind.PARTNER or scalar_eq(sol.value, arr.k, tol):
            report.rejected.append((theta, sol.value))
            continue
        theta2 = sol.value
        w = check_pair(arr, theta, theta2, tol)
        if w is None:
            report.rejected.append((theta, theta2))
            continue
        seen.extend([theta, theta2])
        report.pairs.append(_record(arr, theta, theta2, w, tol))
    return report


def theta_grid(arr: IntersectionArray, points: int = 50) -> list:
    """``points`` evenly spaced rationals from ``-k`` to ``k``."""
    k = Fraction(arr.k) if arr.exact else Fraction(float(arr.k)).limit_denominator(10**6)
    return [-k + 2 * k * Fraction(j, points - 1) for j in range(points)]


def _claimed(report, theta, theta2, tol) -> bool:
    for p in report.pairs:
        if ((scalar_eq(p.theta, theta, tol) and scalar_eq(p.theta_prime, theta2, tol))
                or (scalar_eq(p.theta, theta2, tol) and scalar_eq(p.theta_prime, theta, tol))):
            return True
    return False


def _covered(arr, report, theta, theta2, tol) -> bool:
    if scalar_eq(theta, arr.k, tol) or scalar_eq(theta2, arr.k, tol):
        return True
    if RULE_MINUS_K in report.universal and (
            scalar_eq(theta, -arr.k, tol) or scalar_eq(theta2, -arr.k, tol)):
        return True
    return _claimed(report, theta, theta2, tol)


def verify_report(arr: IntersectionArray, report: ClassificationReport,
                  tol: Tolerance = DEFAULT_TOL) -> bool:
    """Re-check every claimed pair, then look for unclaimed pairs on a grid.

    For 50 rational ``theta`` across ``[-k, k]``, plus the eigenvalues, the
    hyperbola partner (or, when every partner is allowed, every grid point)
    is tested directly; a tight pair that no rule or claimed pair covers
    makes the report false.
    """
    if report.case is not detect_case(arr) or RULE_K not in report.universal:
        return False
    if (RULE_MINUS_K in report.universal) != (report.case is CaseTag.I):
        return False
    if report.case is CaseTag.III and report.pairs:
        return False
    for p in report.pairs:
        if not p.verified or check_pair(arr, p.theta, p.theta_prime, tol) is None:
            return False
    grid = theta_grid(arr)
    if not arr.exact:
        grid = [float(x) for x in grid]
    # the eigenvalues are where special pairs live; include them explicitly
    grid += auto_candidates(arr, tol)
    if report.case is CaseTag.II:
        values = reduced_matrix_eigenvalues(arr, tol).values
        grid += snap(arr, values, reduced=True) if arr.exact else list(values)
    for theta in grid:
        if scalar_eq(theta, arr.k, tol):
            continue
        sol = tight_partner_value(arr, theta, tol)
        if sol.kind is PartnerKind.NONE:
            continue
        partners = grid if sol.kind is PartnerKind.ANY else [sol.value]
        for theta2 in partners:
            if _covered(arr, report, theta, theta2, tol):
                continue
            if check_pair(arr, theta, theta2, tol) is not None:
                return False
    return True
