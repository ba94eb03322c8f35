"""The tight relation between pseudo cosine sequences.

Two sequences are tight when their componentwise product is again a pseudo
cosine sequence.  :func:`is_tight_pair` tests that definition directly via
:func:`drgtight.sequences.characterize`; the auxiliary-parameter machinery
(:func:`check_eps_equation`, :func:`partner_from_product_formula`, ...) is
kept separate so each route can check the other.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import (MismatchedDiameter, TrivialSequence, TrivialTheta, WrongCase,
                     ZeroDenominator)
from .graph_params import IntersectionArray
from .numeric import (DEFAULT_TOL, Scalar, Tolerance, is_exact, is_zero, max_abs,
                      scalar_eq, to_scalar)
from .sequences import (PseudoCosineSeq, characterize, recurrence_residual,
                        sigma_of)


class AnyReal:
    """Marker: every real number is an auxiliary parameter (``sigma = rho``)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ANY_REAL"

    def __str__(self):
        return "any"


ANY_REAL = AnyReal()
Epsilon = Union[Scalar, AnyReal]


@dataclass(frozen=True)
class TightPairWitness:
    s: PseudoCosineSeq
    r: PseudoCosineSeq
    product: tuple
    psi: Scalar
    epsilon: Epsilon
    residual: float = 0.0


def _mul(x, y):
    if is_exact(x) and is_exact(y):
        return Fraction(x) * Fraction(y)
    return float(x) * float(y)


def product_sequence(s, r) -> tuple:
    """``(sigma_0 rho_0, ..., sigma_D rho_D)``."""
    sig, rho = sigma_of(s), sigma_of(r)
    if len(sig) != len(rho):
        raise MismatchedDiameter(f"lengths {len(sig)} and {len(rho)} differ")
    return tuple(_mul(x, y) for x, y in zip(sig, rho))


def _eps_formula(sig1, rho1, tol: Tolerance) -> Epsilon:
    if scalar_eq(sig1, rho1, tol):
        return ANY_REAL
    return (_mul(sig1, rho1) - 1) / (rho1 - sig1)


def is_tight_pair(arr: IntersectionArray, s: PseudoCosineSeq, r: PseudoCosineSeq,
                  tol: Tolerance = DEFAULT_TOL) -> Optional[TightPairWitness]:
    """Witness if ``s, r`` is tight, else ``None``.

    The product sequence is handed to the characterization oracle; when it
    passes, ``psi = k sigma rho`` and ``epsilon`` (``(sigma rho - 1)/(rho -
    sigma)``, or :data:`ANY_REAL` when ``sigma = rho``) are recorded.
    """
    gamma = product_sequence(s, r)
    if len(gamma) != arr.D + 1:
        raise MismatchedDiameter(f"sequences have length {len(gamma)}, array D = {arr.D}")
    if not characterize(arr, gamma, tol).recurrence:
        return None
    psi = arr.k * gamma[1] if is_exact(gamma[1]) else float(arr.k) * gamma[1]
    eps = _eps_formula(s.sigma[1], r.sigma[1], tol)
    return TightPairWitness(s, r, gamma, psi, eps, float(recurrence_residual(arr, gamma)))


def auxiliary_parameter(s: PseudoCosineSeq, r: PseudoCosineSeq,
                        tol: Tolerance = DEFAULT_TOL) -> Epsilon:
    """``(sigma rho - 1)/(rho - sigma)``, or :data:`ANY_REAL` if ``sigma = rho``."""
    for name, seq in (("first", s), ("second", r)):
        if all(scalar_eq(x, 1, tol) for x in sigma_of(seq)):
            raise TrivialSequence(f"{name} sequence is trivial")
    return _eps_formula(sigma_of(s)[1], sigma_of(r)[1], tol)


def eps_residuals(s, r, eps) -> list:
    """``sigma_i rho_i - sigma_{i-1} rho_{i-1} - eps (sigma_{i-1} rho_i - sigma_i rho_{i-1})``."""
    sig, rho = sigma_of(s), sigma_of(r)
    if len(sig) != len(rho):
        raise MismatchedDiameter(f"lengths {len(sig)} and {len(rho)} differ")
    eps = to_scalar(eps)
    out = []
    for i in range(1, len(sig)):
        lhs = _mul(sig[i], rho[i]) - _mul(sig[i - 1], rho[i - 1])
        rhs = _mul(eps, _mul(sig[i - 1], rho[i]) - _mul(sig[i], rho[i - 1]))
        out.append(lhs - rhs)
    return out


def check_eps_equation(s, r, eps, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Does ``eps`` satisfy the auxiliary-parameter equation for ``1 <= i <= D``?"""
    if isinstance(eps, AnyReal):
        # affine in eps: holding at two values means holding for all
        return check_eps_equation(s, r, 0, tol) and check_eps_equation(s, r, 1, tol)
    res = eps_residuals(s, r, eps)
    scale = max(1.0, abs(float(eps))) * max(1.0, max_abs(product_sequence(s, r)),
                                             max_abs(sigma_of(s)) * max_abs(sigma_of(r)))
    return all(is_zero(x, tol, scale) for x in res)


def eps_test(s, r, tol: Tolerance = DEFAULT_TOL) -> bool:
    """Tightness via the epsilon equation alone.

    The candidate is forced by the ``i = 1`` equation when ``sigma != rho``;
    otherwise epsilon does not enter the equation and 0 is used.
    """
    eps = _eps_formula(sigma_of(s)[1], sigma_of(r)[1], tol)
    return check_eps_equation(s, r, 0 if isinstance(eps, AnyReal) else eps, tol)


class PartnerKind(enum.Enum):
    PARTNER = "partner"
    ANY = "any"
    NONE = "none"


@dataclass(frozen=True)
class PartnerSolution:
    kind: PartnerKind
    value: Optional[Scalar] = None


NO_PARTNER = PartnerSolution(PartnerKind.NONE)
ANY_PARTNER = PartnerSolution(PartnerKind.ANY)


def tight_partner_value(arr: IntersectionArray, theta,
                        tol: Tolerance = DEFAULT_TOL) -> PartnerSolution:
    """Solve ``(theta + k/(a1+1)) (theta' + k/(a1+1)) = -k a1 b1 / (a1+1)^2``.

    Every tight pair away from ``k`` satisfies this, but not every solution
    is tight: confirm with :func:`is_tight_pair`.
    """
    theta = to_scalar(theta)
    k, a1, b1 = arr.k, arr.a[1], arr.b[1]
    if not (is_exact(theta) and arr.exact):
        k, a1, b1, theta = float(k), float(a1), float(b1), float(theta)
    if scalar_eq(theta, k, tol):
        raise TrivialTheta("theta = k pairs with every real number")
    if a1 == 0:
        if scalar_eq(theta, -k, tol):
            return ANY_PARTNER
        return PartnerSolution(PartnerKind.PARTNER, -k)
    shift = k / (a1 + 1)
    left = theta + shift
    if is_zero(left, tol, max(abs(float(theta)), abs(float(shift)))):
        return NO_PARTNER
    return PartnerSolution(PartnerKind.PARTNER, -k * a1 * b1 / ((a1 + 1) ** 2 * left) - shift)


def partner_from_product_formula(s, eps, tol: Tolerance = DEFAULT_TOL) -> tuple:
    """``rho_i = prod_{j<=i} (sigma_{j-1} - eps sigma_j) / (sigma_j - eps sigma_{j-1})``."""
    sig = sigma_of(s)
    eps = to_scalar(eps)
    rho = [Fraction(1) if is_exact(sig[0]) else 1.0]
    for j in range(1, len(sig)):
        num = sig[j - 1] - _mul(eps, sig[j])
        den = sig[j] - _mul(eps, sig[j - 1])
        if is_zero(den, tol, max(abs(float(sig[j])), abs(float(_mul(eps, sig[j - 1]))))):
            raise ZeroDenominator(j, f"sigma_{j} - eps sigma_{j - 1} = 0")
        rho.append(rho[-1] * num / den)
    return tuple(rho)


def zero_rho_equivalence(arr: IntersectionArray, s, r, eps, i: int,
                         tol: Tolerance = DEFAULT_TOL):
    """The four conditions that are equivalent for tight pairs when ``a_1 != 0``.

    Returns ``(sigma_{i-1} = eps sigma_i, sigma_{i+1} = eps sigma_i,
    sigma_{i-1} = sigma_{i+1}, rho_i = 0)``.
    """
    if arr.a[1] == 0:
        raise WrongCase("needs a_1 != 0")
    sig, rho = sigma_of(s), sigma_of(r)
    if not 1 <= i <= len(sig) - 2:
        raise IndexError(f"i = {i} out of range 1..{len(sig) - 2}")
    eps = to_scalar(eps)
    mid = _mul(eps, sig[i])
    return (scalar_eq(sig[i - 1], mid, tol), scalar_eq(sig[i + 1], mid, tol),
            scalar_eq(sig[i - 1], sig[i + 1], tol), is_zero(rho[i], tol))


def neighbour_terms(s, eps, i: int, rho_i):
    """``(rho_{i-1}, rho_{i+1})`` from ``rho_i`` when no zero condition holds at ``i``."""
    sig = sigma_of(s)
    eps, rho_i = to_scalar(eps), to_scalar(rho_i)
    den_minus = sig[i - 1] - _mul(eps, sig[i])
    den_plus = sig[i + 1] - _mul(eps, sig[i])
    if den_minus == 0 or den_plus == 0:
        raise ZeroDenominator(i)
    rho_minus = _mul(rho_i, sig[i] - _mul(eps, sig[i - 1])) / den_minus
    rho_plus = _mul(rho_i, sig[i] - _mul(eps, sig[i + 1])) / den_plus
    return rho_minus, rho_plus


def hyperbola_residual(arr: IntersectionArray, theta, theta2) -> Scalar:
    """Left minus right side of the eigenvalue-pair hyperbola."""
    theta, theta2 = to_scalar(theta), to_scalar(theta2)
    k, a1, b1 = arr.k, arr.a[1], arr.b[1]
    if not (is_exact(theta) and is_exact(theta2) and arr.exact):
        k, a1, b1, theta, theta2 = map(float, (k, a1, b1, theta, theta2))
    shift = k / (a1 + 1)
    return (theta + shift) * (theta2 + shift) + k * a1 * b1 / (a1 + 1) ** 2
