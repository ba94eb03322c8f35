import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from drgtight import (ANY_REAL, MismatchedDiameter, TrivialSequence, TrivialTheta, WrongCase,
                      ZeroDenominator, auxiliary_parameter, check_eps_equation, eps_test,
                      is_tight_pair, partner_from_product_formula, product_sequence,
                      pseudo_cosine_sequence, tight_partner_value)
from drgtight.tightness import (ANY_PARTNER, NO_PARTNER, PartnerKind, hyperbola_residual,
                                neighbour_terms, zero_rho_equivalence)

from conftest import ARRAYS, arrays, load, random_rational, rationals, tight_pool

F = Fraction


def pcs(arr, theta):
    return pseudo_cosine_sequence(arr, theta)


def test_product_sequence(q3, j63):
    assert product_sequence(pcs(q3, 1), pcs(q3, -3)) == (1, F(-1, 3), F(-1, 3), 1)
    assert product_sequence(pcs(j63, 3), pcs(j63, -3)) == (1, F(-1, 9), F(-1, 9), 1)
    s = pcs(j63, F(2, 7))
    assert product_sequence(s, pcs(j63, 9)) == s.sigma
    with pytest.raises(MismatchedDiameter):
        product_sequence(s, pcs(load("coxeter"), 1))


def test_tight_pair_q3(q3):
    w = is_tight_pair(q3, pcs(q3, 1), pcs(q3, -3))
    assert w.psi == -1 and w.epsilon == 1


def test_tight_pair_j63(j63):
    w = is_tight_pair(j63, pcs(j63, 3), pcs(j63, -3))
    assert w.psi == -1 and w.epsilon == F(5, 3)
    assert w.product == (1, F(-1, 9), F(-1, 9), 1)
    assert is_tight_pair(j63, pcs(j63, 3), pcs(j63, -1)) is None


def test_auxiliary_parameter(q3, j63):
    assert auxiliary_parameter(pcs(j63, 3), pcs(j63, -3)) == F(5, 3)
    assert auxiliary_parameter(pcs(q3, 1), pcs(q3, -3)) == 1
    assert auxiliary_parameter(pcs(q3, -3), pcs(q3, -3)) is ANY_REAL
    with pytest.raises(TrivialSequence):
        auxiliary_parameter(pcs(q3, 3), pcs(q3, 1))


def test_eps_equation(j63):
    s, r = pcs(j63, 3), pcs(j63, -3)
    assert check_eps_equation(s, r, F(5, 3))
    assert not check_eps_equation(s, r, 2)


def test_eps_equation_with_trivial(j63):
    s, one = pcs(j63, F(3, 2)), pcs(j63, 9)
    assert check_eps_equation(s, one, -1)
    assert not check_eps_equation(s, one, F(1, 2))


def test_eps_equation_any_real(q3):
    s = pcs(q3, -3)
    assert check_eps_equation(s, s, ANY_REAL)
    assert not check_eps_equation(pcs(q3, 1), pcs(q3, 2), ANY_REAL)


def test_partner_value(j63, q3):
    assert tight_partner_value(j63, 3).value == -3
    sol = tight_partner_value(q3, 1)
    assert sol.kind is PartnerKind.PARTNER and sol.value == -3
    assert tight_partner_value(q3, -3) == ANY_PARTNER
    assert tight_partner_value(j63, F(-9, 5)) == NO_PARTNER
    assert tight_partner_value(j63, -1).value == -9
    with pytest.raises(TrivialTheta):
        tight_partner_value(j63, 9)


def test_product_formula(j63, q3):
    assert partner_from_product_formula(pcs(j63, 3), F(5, 3)) == pcs(j63, -3).sigma
    assert partner_from_product_formula(pcs(q3, 1), 1) == (1, -1, 1, -1)
    # numerator vanishes at j = 1
    assert partner_from_product_formula(pcs(j63, 2), F(9, 2)) == (1, 0, 0, 0)
    s = pcs(j63, 3)
    with pytest.raises(ZeroDenominator) as info:
        partner_from_product_formula(s, F(1, 3))
    assert info.value.where == 1


def test_zero_rho_equivalence(j63, q3):
    s, r = pcs(j63, 3), pcs(j63, -3)
    for i in (1, 2):
        assert zero_rho_equivalence(j63, s, r, F(5, 3), i) == (False,) * 4
    with pytest.raises(WrongCase):
        zero_rho_equivalence(q3, pcs(q3, 1), pcs(q3, -3), 1, 1)


def test_hyperbola(j63):
    assert hyperbola_residual(j63, 3, -3) == 0
    assert hyperbola_residual(j63, 3, -1) != 0


def test_example_pairs_with_k(any_array):
    rng = random.Random(1)
    for _ in range(10):
        theta = random_rational(rng, any_array.k)
        w = is_tight_pair(any_array, pcs(any_array, theta), pcs(any_array, any_array.k))
        assert w is not None and w.epsilon in (-1, ANY_REAL)


def test_float_mode_tight(j63):
    arr = j63.as_float()
    w = is_tight_pair(arr, pcs(arr, 3.0), pcs(arr, -3.0))
    assert w is not None and w.epsilon == pytest.approx(5 / 3)


@settings(max_examples=400)
@given(arrays(), rationals(), rationals())
def test_direct_and_eps_tests_agree(arr, t1, t2):
    s, r = pcs(arr, t1), pcs(arr, t2)
    assert (is_tight_pair(arr, s, r) is not None) == eps_test(s, r)


@settings(max_examples=300)
@given(arrays(), rationals())
def test_tight_with_minus_k_agrees(arr, theta):
    s, r = pcs(arr, theta), pcs(arr, -arr.k)
    assert (is_tight_pair(arr, s, r) is not None) == eps_test(s, r)


def test_equal_theta_not_tight_off_bipartite():
    for name in ("j63", "j73", "h33", "coxeter", "case3", "dodecahedron"):
        arr = load(name)
        rng = random.Random(name)
        for _ in range(30):
            theta = random_rational(rng, arr.k)
            if theta == arr.k:
                continue
            assert is_tight_pair(arr, pcs(arr, theta), pcs(arr, theta)) is None


def test_eps_one_lemma():
    # with eps = 1: (s_{i-1} - s_i)(r_{i-1} + r_i) = 0; with eps = -1 the signs swap
    for arr, t1, t2 in _all_tight_pairs():
        s, r = pcs(arr, t1).sigma, pcs(arr, t2).sigma
        w = is_tight_pair(arr, pcs(arr, t1), pcs(arr, t2))
        for i in range(1, arr.D + 1):
            if w.epsilon == 1:
                assert (s[i - 1] - s[i]) * (r[i - 1] + r[i]) == 0
            if w.epsilon == -1:
                assert (s[i - 1] + s[i]) * (r[i - 1] - r[i]) == 0


def _all_tight_pairs():
    """Tight pairs from every fixture plus the case IV pool (nontrivial members)."""
    pairs = []
    for name in ARRAYS:
        arr = load(name)
        grid = [arr.k * F(j, 6) for j in range(-6, 6)]
        for t1 in grid:
            for t2 in grid:
                if is_tight_pair(arr, pcs(arr, t1), pcs(arr, t2)) is not None:
                    pairs.append((arr, t1, t2))
    pairs += [(arr, t1, t2) for arr, t1, t2, _ in tight_pool()]
    return pairs


def test_case_iv_tight_pairs_properties():
    assert len(tight_pool()) >= 20
    for arr, t1, t2, eps in tight_pool():
        s, r = pcs(arr, t1), pcs(arr, t2)
        w = is_tight_pair(arr, s, r)
        assert w is not None and w.epsilon == eps
        assert eps not in (1, -1)
        for i in range(1, arr.D + 1):
            assert s[i - 1] != s[i] and r[i - 1] != r[i]
        assert hyperbola_residual(arr, t1, t2) == 0
        if all(s[i - 1] != s[i + 1] for i in range(1, arr.D)):
            assert partner_from_product_formula(s, eps) == r.sigma
        for i in range(1, arr.D):
            conds = zero_rho_equivalence(arr, s, r, eps, i)
            assert len(set(conds)) == 1
            if not conds[0]:
                assert neighbour_terms(s, eps, i, r[i]) == (r[i - 1], r[i + 1])
