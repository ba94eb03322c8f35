import json
import random
from fractions import Fraction

import pytest
from hypothesis import strategies as st

from drgtight import from_string, validate_array

ARRAYS = {
    "q3": "{3,2,1;1,2,3}",
    "q4": "{4,3,2,1;1,2,3,4}",
    "j63": "{9,4,1;1,4,9}",
    "j73": "{12,6,2;1,4,9}",
    "h33": "{6,4,2;1,2,3}",
    "coxeter": "{3,2,2,1;1,1,1,2}",
    "case3": "{4,3,2,1;1,1,2,4}",
    "odd4": "{4,3,3;1,1,2}",
    "dodecahedron": "{3,2,1,1,1;1,1,1,2,3}",
}


def load(name):
    return from_string(ARRAYS[name], name=name)


@pytest.fixture
def q3():
    return load("q3")


@pytest.fixture
def q4():
    return load("q4")


@pytest.fixture
def j63():
    return load("j63")


@pytest.fixture
def coxeter():
    return load("coxeter")


@pytest.fixture
def case3():
    return load("case3")


@pytest.fixture(params=sorted(ARRAYS))
def any_array(request):
    return load(request.param)


@pytest.fixture
def write_array(tmp_path):
    def write(name, D, b, c):
        path = tmp_path / f"{name}.json"
        path.write_text(json.dumps({"name": name, "D": D, "b": b, "c": c}))
        return str(path)
    return write


def random_rational(rng: random.Random, k, den=12) -> Fraction:
    """A rational in ``[-k, k]`` with denominator at most ``den``."""
    q = rng.randint(1, den)
    return Fraction(rng.randint(int(-k * q), int(k * q)), q)


@st.composite
def arrays(draw, min_D=3, max_D=5, max_k=10):
    """Random valid integer intersection arrays (not necessarily graphical)."""
    D = draw(st.integers(min_D, max_D))
    k = draw(st.integers(2, max_k))
    b, c = [k], []
    for i in range(1, D):
        ci = 1 if i == 1 else draw(st.integers(c[-1], k - 1))
        bi = draw(st.integers(1, min(b[-1], k - ci)))
        c.append(ci)
        b.append(bi)
    c.append(draw(st.integers(c[-1], k)))
    return validate_array(D, b, c, warn=False)


@st.composite
def rationals(draw, bound=12, max_den=12):
    q = draw(st.integers(1, max_den))
    return Fraction(draw(st.integers(-bound * q, bound * q)), q)


def _bracket(i, q):
    return Fraction(i) if q == 1 else Fraction(q**i - 1, q - 1)


def classical_array(D, q, alpha, beta):
    """Array with classical parameters ``(D, q, alpha, beta)``."""
    b = [(_bracket(D, q) - _bracket(i, q)) * (beta - alpha * _bracket(i, q)) for i in range(D)]
    c = [_bracket(i, q) * (1 + alpha * _bracket(i - 1, q)) for i in range(1, D + 1)]
    return validate_array(D, b, c, warn=False)


def classical_eigenvalues(D, q, alpha, beta):
    return [_bracket(D - i, q) * (beta - alpha * _bracket(i, q)) - _bracket(i, q)
            for i in range(D + 1)]


def case_iv_tight_pairs():
    """``(arr, theta, theta2, eps)`` for exact tight pairs on graphical case IV arrays.

    Sources: classical-parameter arrays (eigenvalue pairs found by exhaustive
    search) and arrays built from random rational feasible sequences.
    """
    from drgtight import (CaseTag, DrgError, detect_case, feasible_array_from_sequence,
                          is_tight_pair, pseudo_cosine_sequence, tight_partner_value)
    from drgtight.tightness import PartnerKind

    out = []
    for D in range(3, 6):
        for q in (1, 2, 3, -2):
            for alpha in sorted({0, 1, 2, q - 1}):
                for beta in range(1, 16):
                    try:
                        arr = classical_array(D, q, Fraction(alpha), Fraction(beta))
                    except DrgError:
                        continue
                    if arr.warnings or detect_case(arr) is not CaseTag.IV:
                        continue
                    for theta in classical_eigenvalues(D, q, alpha, beta)[1:]:
                        sol = tight_partner_value(arr, theta)
                        if sol.kind is not PartnerKind.PARTNER or sol.value == arr.k:
                            continue
                        w = is_tight_pair(arr, pseudo_cosine_sequence(arr, theta),
                                          pseudo_cosine_sequence(arr, sol.value))
                        if w is not None:
                            out.append((arr, theta, sol.value, w.epsilon))
    rng = random.Random(2024)
    for _ in range(20000):
        D = rng.randint(3, 5)
        sigma = [Fraction(1)] + [Fraction(rng.randint(-12, 12), rng.randint(1, 12))
                                 for _ in range(D)]
        eps = Fraction(rng.randint(-20, 20), rng.randint(1, 6))
        try:
            arr = feasible_array_from_sequence(sigma, eps).to_array()
        except DrgError:
            continue
        if arr.warnings or detect_case(arr) is not CaseTag.IV:
            continue
        theta = arr.k * sigma[1]
        sol = tight_partner_value(arr, theta)
        if sol.kind is PartnerKind.PARTNER:
            out.append((arr, theta, sol.value, eps))
    return out


_TIGHT_CACHE = []


def tight_pool():
    if not _TIGHT_CACHE:
        _TIGHT_CACHE.extend(case_iv_tight_pairs())
    return _TIGHT_CACHE


def random_array(rng: random.Random, min_D=3, max_D=5, max_k=10):
    """Seeded counterpart of the ``arrays`` strategy."""
    D = rng.randint(min_D, max_D)
    k = rng.randint(2, max_k)
    b, c = [k], []
    for i in range(1, D):
        ci = 1 if i == 1 else rng.randint(c[-1], k - 1)
        bi = rng.randint(1, min(b[-1], k - ci))
        c.append(ci)
        b.append(bi)
    c.append(rng.randint(c[-1], k))
    return validate_array(D, b, c, warn=False)


def random_case_ii_array(rng: random.Random, max_D=6, max_k=10):
    """``a_i = 0`` for ``i <= D-2`` and ``a_{D-1} != 0``."""
    D = rng.randint(3, max_D)
    k = rng.randint(3, max_k)
    b, c = [k], []
    for i in range(1, D - 1):
        # a_i = 0 makes b_i = k - c_i, so b is non-increasing automatically
        ci = 1 if i == 1 else rng.randint(c[-1], k - 1)
        c.append(ci)
        b.append(k - ci)
    # row D-1: keep c non-decreasing, b non-increasing, and leave room for a_{D-1} >= 1
    ci = rng.randint(c[-1], k - 2) if c[-1] <= k - 2 else None
    if ci is None:
        return random_case_ii_array(rng, max_D, max_k)
    bi = rng.randint(1, min(b[-1], k - ci - 1))
    c.append(ci)
    b.append(bi)
    c.append(rng.randint(ci, k))
    return validate_array(D, b, c, warn=False)


_results = {}


def record(number, ok, detail):
    _results[number] = (ok, detail)


def pytest_terminal_summary(terminalreporter):
    if not _results:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_results):
        ok, detail = _results[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {detail}")
