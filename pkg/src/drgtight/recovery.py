"""Case IV (a_1 != 0): intersection numbers from a tight sequence.

Given a tight pseudo cosine sequence and its auxiliary parameter ``eps``,
closed forms give ``k`` and ``a_i, b_i, c_i`` for ``1 <= i <= D-1``.  Nothing
in them involves ``c_D``; the reconstructed array therefore carries an
explicit "unconstrained" marker for it unless the caller asserts the
sequence is a genuine cosine sequence.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .errors import (NotFeasible, TrivialSequence, ValidationError, WrongCase,
                     ZeroDenominator)
from .graph_params import IntersectionArray, validate_array
from .numeric import (DEFAULT_TOL, Scalar, Tolerance, all_exact, format_scalar,
                      is_exact, is_zero, max_abs, scalar_eq, to_scalar)
from .sequences import PseudoCosineSeq, is_pseudo_cosine, pseudo_cosine_sequence, sigma_of
from .tightness import AnyReal, PartnerKind, is_tight_pair, tight_partner_value


@dataclass(frozen=True)
class RecoveryParams:
    h: Scalar
    g: Scalar
    epsilon: Scalar


@dataclass(frozen=True)
class RecoveredArray:
    """Parameters determined by a tight sequence.

    ``b`` is ``b_0..b_{D-1}``; ``c`` and ``a`` cover indices ``1..D-1``.
    ``c_D`` is ``None`` when the formulas leave it unconstrained.
    """

    D: int
    k: Scalar
    b: tuple
    c: tuple
    a: tuple
    c_D: Optional[Scalar] = None
    params: Optional[RecoveryParams] = field(default=None, compare=False)

    @property
    def c_D_unconstrained(self) -> bool:
        return self.c_D is None

    def full_c(self) -> tuple:
        """``c_1..c_D``; an unconstrained ``c_D`` defaults to ``k`` (``a_D := 0``)."""
        return self.c + ((self.k if self.c_D is None else self.c_D),)

    def to_array(self, name: Optional[str] = None) -> IntersectionArray:
        return validate_array(self.D, list(self.b), list(self.full_c()), name=name)

    def matches(self, arr: IntersectionArray, tol: Tolerance = DEFAULT_TOL) -> bool:
        """Agreement with ``arr`` on every index the formulas determine."""
        if arr.D != self.D or not scalar_eq(self.k, arr.k, tol):
            return False
        pairs = list(zip(self.b, arr.b)) + list(zip(self.c, arr.c))
        pairs += list(zip(self.a, arr.a[1:arr.D]))
        if self.c_D is not None:
            pairs.append((self.c_D, arr.c[-1]))
        return all(scalar_eq(x, y, tol) for x, y in pairs)

    def to_json(self, name: Optional[str] = None) -> dict:
        doc = {}
        if name is not None:
            doc["name"] = name
        doc["D"] = self.D
        doc["b"] = [format_scalar(x) for x in self.b]
        doc["c"] = [format_scalar(x) for x in self.full_c()]
        doc["unconstrained"] = ["c_D"] if self.c_D is None else []
        return doc


@dataclass
class ConditionReport:
    A: bool
    B: bool
    C: bool
    failures: list = field(default_factory=list)

    @property
    def all(self) -> bool:
        return self.A and self.B and self.C


def _mode_values(sig, eps):
    if all_exact(sig) and is_exact(eps):
        return tuple(Fraction(x) for x in sig), Fraction(eps)
    return tuple(float(x) for x in sig), float(eps)


def _nz(x, tol, scale=1.0) -> bool:
    return not is_zero(x, tol, scale)


def _h_and_g(sig, eps, tol):
    s, s2 = sig[1], sig[2]
    if not _nz(1 - s2, tol):
        raise ZeroDenominator("sigma_2 = 1")
    if not _nz(1 - eps * s, tol):
        raise ZeroDenominator("eps*sigma = 1")
    if not _nz(s * s - s2, tol, max(s * s, abs(s2))):
        raise ZeroDenominator("sigma_2 = sigma^2")
    den = (s * s - s2) * (1 - eps * s)
    return (1 - s) * (1 - s2) / den, (eps - 1) * (1 - s2) / den


def recovery_params(s, eps, tol: Tolerance = DEFAULT_TOL) -> RecoveryParams:
    """``h`` and ``g`` from ``sigma``, ``sigma_2`` and ``eps``."""
    sig, eps = _mode_values(sigma_of(s), to_scalar(eps))
    h, g = _h_and_g(sig, eps, tol)
    return RecoveryParams(h, g, eps)


def _check_feasible(sig, tol):
    for i in range(1, len(sig) - 1):
        if not _nz(sig[i - 1] - sig[i + 1], tol, max_abs(sig)):
            raise NotFeasible(f"sigma_{i - 1} = sigma_{i + 1}")


def _check_steps(sig, tol):
    D = len(sig) - 1
    for j in range(1, D + 1):
        if not _nz(sig[j - 1] - sig[j], tol, max_abs(sig)):
            raise ZeroDenominator(j, f"sigma_{j - 1} = sigma_{j}")


def _valency(sig, eps, h, tol):
    s = sig[1]
    if not _nz(s - 1, tol):
        raise ZeroDenominator("sigma = 1")
    return h * (s - eps) / (s - 1)


def _b_c(sig, eps, h, i):
    s = sig[1]
    b = (h * (sig[i - 1] - s * sig[i]) * (sig[i + 1] - eps * sig[i])
         / ((sig[i + 1] - sig[i]) * (sig[i - 1] - sig[i + 1])))
    c = (h * (sig[i + 1] - s * sig[i]) * (sig[i - 1] - eps * sig[i])
         / ((sig[i - 1] - sig[i]) * (sig[i + 1] - sig[i - 1])))
    return b, c


def recover_intersection_numbers(s, eps, *, cosine: bool = False,
                                 tol: Tolerance = DEFAULT_TOL) -> RecoveredArray:
    """Intersection numbers of the array on which ``s`` is tight with parameter ``eps``.

    ``a_i`` uses the ``g`` formula directly, ``b_i`` and ``c_i`` the ``h``
    formulas divided by ``sigma_{i-1} - sigma_{i+1}``.  With ``cosine=True``
    the terminal condition ``c_D (sigma_{D-1} - sigma_D) = k (sigma - 1) sigma_D``
    also fixes ``c_D``.
    """
    sig, eps = _mode_values(sigma_of(s), to_scalar(eps))
    D = len(sig) - 1
    if not _nz(sig[1] - 1, tol):
        raise ZeroDenominator("sigma = 1")
    _check_feasible(sig, tol)
    h, g = _h_and_g(sig, eps, tol)
    k = _valency(sig, eps, h, tol)
    _check_steps(sig, tol)
    s1 = sig[1]
    a, b, c = [], [k], []
    for i in range(1, D):
        a.append(g * (sig[i + 1] - s1 * sig[i]) * (sig[i - 1] - s1 * sig[i])
                 / ((sig[i + 1] - sig[i]) * (sig[i - 1] - sig[i])))
        bi, ci = _b_c(sig, eps, h, i)
        b.append(bi)
        c.append(ci)
    c_D = None
    if cosine:
        c_D = k * (s1 - 1) * sig[D] / (sig[D - 1] - sig[D])
    return RecoveredArray(D, k, tuple(b), tuple(c), tuple(a), c_D, RecoveryParams(h, g, eps))


def feasible_array_from_sequence(sigma, eps, tol: Tolerance = DEFAULT_TOL) -> RecoveredArray:
    """Array for which ``sigma`` is a feasible sequence with parameter ``eps``.

    ``h`` is fixed by ``c_1 = 1``; then ``k``, ``b_i``, ``c_i`` follow for
    ``1 <= i <= D-1`` and ``a_i = k - b_i - c_i``.
    """
    sig, eps = _mode_values(sigma_of(sigma), to_scalar(eps))
    D = len(sig) - 1
    if D < 3:
        raise ValidationError(f"need D >= 3, got {D}")
    if not scalar_eq(sig[0], 1, tol):
        raise ValidationError("sigma_0 != 1")
    if scalar_eq(eps, 1, tol) or scalar_eq(eps, -1, tol):
        raise NotFeasible("eps must not be 1 or -1")
    if not _nz(sig[1] - 1, tol):
        raise ZeroDenominator("sigma = 1")
    _check_feasible(sig, tol)
    h, _ = _h_and_g(sig, eps, tol)
    k = _valency(sig, eps, h, tol)
    _check_steps(sig, tol)
    b, c, a = [k], [], []
    for i in range(1, D):
        bi, ci = _b_c(sig, eps, h, i)
        b.append(bi)
        c.append(ci)
        a.append(k - bi - ci)
    return RecoveredArray(D, k, tuple(b), tuple(c), tuple(a), None,
                          RecoveryParams(h, None, eps))


def check_conditions(s, eps, arr: IntersectionArray,
                     tol: Tolerance = DEFAULT_TOL) -> ConditionReport:
    """Evaluate conditions A, B and C literally against ``arr``.

    A: ``eps != -1`` and every ``a_i`` equals its ``g`` formula.
    B: every ``b_i`` satisfies its ``h`` formula.
    C: ``k`` and every ``c_i`` satisfy their ``h`` formulas.
    Each includes nonzero denominators.  No condition is inferred from another.
    """
    if arr.a[1] == 0:
        raise WrongCase("conditions A/B/C need a_1 != 0")
    sig, eps = _mode_values(sigma_of(s), to_scalar(eps))
    D = arr.D
    if len(sig) != D + 1:
        raise ValidationError(f"sequence length {len(sig)} != D + 1")
    exact = is_exact(eps) and arr.exact
    if exact:
        k, a_, b_, c_ = arr.k, arr.a, arr.b_ext, arr.c_ext
    else:
        sig = tuple(float(x) for x in sig)
        eps = float(eps)
        k, a_, b_, c_ = (float(arr.k), [float(x) for x in arr.a],
                         [float(x) for x in arr.b_ext], [float(x) for x in arr.c_ext])
    failures = []
    if not scalar_eq(sig[0], 1, tol):
        return ConditionReport(False, False, False, ["sigma_0 != 1"])
    s1, s2 = sig[1], sig[2]
    if not _nz(s1 - 1, tol):
        failures.append("sigma = 1 denominators")
    scale = max(1.0, max_abs(sig)) ** 2 * max(1.0, abs(float(k)))

    def same(lhs, rhs):
        if is_exact(lhs) and is_exact(rhs):
            return lhs == rhs
        return abs(float(lhs) - float(rhs)) <= max(tol.abs, tol.rel * max(
            abs(float(lhs)), abs(float(rhs)), 1.0) * 10)

    h_den = (s1 * s1 - s2) * (1 - eps * s1)
    h_ok = _nz(s1 * s1 - s2, tol) and _nz(1 - eps * s1, tol)
    if not h_ok:
        failures.append("h/g denominator zero (sigma_2 = sigma^2 or eps*sigma = 1)")

    # A
    A = True
    if scalar_eq(eps, -1, tol):
        A = False
        failures.append("A: eps = -1")
    if not h_ok:
        A = False
    else:
        g = (eps - 1) * (1 - s2) / h_den
        for i in range(1, D):
            den = (sig[i + 1] - sig[i]) * (sig[i - 1] - sig[i])
            if not _nz(den, tol, scale):
                A = False
                failures.append(f"A: zero denominator at i={i}")
                continue
            val = g * (sig[i + 1] - s1 * sig[i]) * (sig[i - 1] - s1 * sig[i]) / den
            if not same(a_[i], val):
                A = False
                failures.append(f"A: a_{i} mismatch")

    # B
    B = h_ok
    if h_ok:
        h = (1 - s1) * (1 - s2) / h_den
        for i in range(1, D):
            den = sig[i + 1] - sig[i]
            if not _nz(den, tol, scale):
                B = False
                failures.append(f"B: zero denominator at i={i}")
                continue
            lhs = b_[i] * (sig[i - 1] - sig[i + 1])
            rhs = h * (sig[i - 1] - s1 * sig[i]) * (sig[i + 1] - eps * sig[i]) / den
            if not same(lhs, rhs):
                B = False
                failures.append(f"B: b_{i} mismatch")

    # C
    C = h_ok
    if h_ok:
        h = (1 - s1) * (1 - s2) / h_den
        if not _nz(s1 - 1, tol):
            C = False
            failures.append("C: sigma = 1 denominator")
        elif not same(k, h * (s1 - eps) / (s1 - 1)):
            C = False
            failures.append("C: k mismatch")
        for i in range(1, D):
            den = sig[i - 1] - sig[i]
            if not _nz(den, tol, scale):
                C = False
                failures.append(f"C: zero denominator at i={i}")
                continue
            lhs = c_[i] * (sig[i + 1] - sig[i - 1])
            rhs = h * (sig[i + 1] - s1 * sig[i]) * (sig[i - 1] - eps * sig[i]) / den
            if not same(lhs, rhs):
                C = False
                failures.append(f"C: c_{i} mismatch")
    return ConditionReport(A, B, C, failures)


def _require_case_iv(arr):
    if arr.a[1] == 0:
        raise WrongCase("tight sequences are defined for a_1 != 0")


def is_tight_sequence(arr: IntersectionArray, s: PseudoCosineSeq,
                      tol: Tolerance = DEFAULT_TOL) -> Optional[Scalar]:
    """The auxiliary parameter of ``s`` if it is tight, otherwise ``None``.

    The only candidate partner comes from the eigenvalue-pair hyperbola; it
    is confirmed with the direct product test.
    """
    _require_case_iv(arr)
    if s.is_trivial(tol):
        raise TrivialSequence("the trivial sequence is never tight")
    sol = tight_partner_value(arr, s.theta, tol)
    if sol.kind is not PartnerKind.PARTNER or scalar_eq(sol.value, arr.k, tol):
        return None
    r = pseudo_cosine_sequence(arr, sol.value)
    w = is_tight_pair(arr, s, r, tol)
    if w is None or isinstance(w.epsilon, AnyReal):
        return None
    return w.epsilon


def is_feasible(arr: IntersectionArray, s: PseudoCosineSeq,
                tol: Tolerance = DEFAULT_TOL) -> bool:
    _require_case_iv(arr)
    if s.is_trivial(tol):
        return False
    sig = s.sigma
    if any(scalar_eq(sig[i - 1], sig[i + 1], tol) for i in range(1, arr.D)):
        return False
    return is_tight_sequence(arr, s, tol) is not None


def satisfies_characterization(arr: IntersectionArray, sigma, eps,
                               tol: Tolerance = DEFAULT_TOL) -> dict:
    """The four equivalent statements about ``(sigma, eps)`` as booleans.

    ``tight``: nontrivial, tight, and ``eps`` is its parameter (direct test);
    ``pcs_A``: nontrivial pseudo cosine sequence satisfying A; ``A_B``; ``A_C``.
    """
    _require_case_iv(arr)
    sig = sigma_of(sigma)
    eps = to_scalar(eps)
    nontrivial = not all(scalar_eq(x, 1, tol) for x in sig)
    pcs = is_pseudo_cosine(arr, sig, tol)
    tight = False
    if nontrivial and pcs:
        s = PseudoCosineSeq(arr.k * sig[1], sig)
        found = is_tight_sequence(arr, s, tol)
        tight = found is not None and scalar_eq(found, eps, tol)
    cond = check_conditions(sig, eps, arr, tol)
    return {"tight": tight, "pcs_A": nontrivial and pcs and cond.A,
            "A_B": cond.A and cond.B, "A_C": cond.A and cond.C}
