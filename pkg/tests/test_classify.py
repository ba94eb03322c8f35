import random
from fractions import Fraction

import pytest
from hypothesis import given, settings

from drgtight import (CaseTag, classify_tight_pairs, detect_case, validate_array, graph_eigenvalues, is_tight_pair,
                      pseudo_cosine_sequence, reduced_matrix_eigenvalues, tight_partner_value,
                      verify_report)
from drgtight.classify import (RULE_K, RULE_MINUS_K, TightPairRecord, auto_candidates,
                               check_pair, theta_grid)
from drgtight.tightness import PartnerKind

from conftest import arrays, classical_array, load, random_rational

F = Fraction


def test_q3(q3):
    report = classify_tight_pairs(q3)
    assert report.case is CaseTag.I
    assert report.universal == [RULE_K, RULE_MINUS_K]
    assert report.samples and all(p.verified for p in report.samples)
    assert verify_report(q3, report)


def test_j63_auto(j63):
    report = classify_tight_pairs(j63)
    assert report.case is CaseTag.IV
    assert [(p.theta, p.theta_prime, p.epsilon) for p in report.pairs] == [(3, -3, F(5, 3))]
    assert (-1, -9) in report.rejected
    assert verify_report(j63, report)


def test_j63_bogus_pair_fails(j63):
    report = classify_tight_pairs(j63)
    report.pairs.append(TightPairRecord(F(-1), F(-1), F(0), True))
    assert not verify_report(j63, report)


def test_dropped_pair_fails(j63):
    report = classify_tight_pairs(j63)
    report.pairs.clear()
    assert not verify_report(j63, report)


def test_wrong_case_tag_fails(j63, q3):
    assert not verify_report(q3, classify_tight_pairs(j63))


def test_coxeter(coxeter):
    report = classify_tight_pairs(coxeter)
    assert report.case is CaseTag.II
    assert len(report.pairs) == 4
    thetas = [float(p.theta) for p in report.pairs]
    assert thetas == pytest.approx(reduced_matrix_eigenvalues(coxeter).values, abs=1e-12)
    assert all(p.theta_prime == -3 and p.epsilon == 1 for p in report.pairs)
    assert [p.trivial for p in report.pairs] == [True, False, False, False]
    assert report.pairs[0].theta == 3 and isinstance(report.pairs[0].theta, Fraction)
    assert verify_report(coxeter, report)


def test_coxeter_exclusivity(coxeter):
    reduced = reduced_matrix_eigenvalues(coxeter).values
    for theta in graph_eigenvalues(coxeter).values:
        if min(abs(theta - r) for r in reduced) < 1e-6:
            continue
        assert check_pair(coxeter, theta, -3) is None


def test_case3(case3):
    report = classify_tight_pairs(case3)
    assert report.case is CaseTag.III and report.pairs == []
    assert verify_report(case3, report)


def test_case3_report_with_pair_fails(case3):
    report = classify_tight_pairs(case3)
    report.pairs.append(TightPairRecord(F(4), F(1), F(-1), True, True))
    assert not verify_report(case3, report)


def test_dodecahedron_case3():
    arr = load("dodecahedron")
    report = classify_tight_pairs(arr)
    assert report.case is CaseTag.III and verify_report(arr, report)


def test_explicit_candidates(j63):
    report = classify_tight_pairs(j63, [F(-3), F(1, 2)])
    assert [(p.theta, p.theta_prime) for p in report.pairs] == [(-3, 3)]


@pytest.mark.parametrize("name", ["h33", "j73", "odd4", "q4"])
def test_other_fixtures_verify(name):
    arr = load(name)
    assert verify_report(arr, classify_tight_pairs(arr))


def test_json_shape(j63):
    doc = classify_tight_pairs(j63).to_json()
    assert set(doc) == {"case", "universal", "pairs", "warnings"}
    assert doc["case"] == "IV"
    assert doc["pairs"][0] == {"theta": "3", "theta_prime": "-3", "epsilon": "5/3",
                               "verified": True, "trivial": False}


def test_float_array(j63):
    arr = j63.as_float()
    report = classify_tight_pairs(arr)
    assert len(report.pairs) == 1
    assert report.pairs[0].epsilon == pytest.approx(5 / 3)


def test_partner_uniqueness_on_classical():
    # each theta appears in at most one special pair
    for D, q, alpha, beta in [(3, 1, 1, 3), (4, 1, 1, 4), (3, 1, 0, 2), (3, 2, 1, 7)]:
        arr = classical_array(D, q, F(alpha), F(beta))
        report = classify_tight_pairs(arr)
        members = [p.theta for p in report.pairs] + [p.theta_prime for p in report.pairs]
        assert len(members) == len(set(members))
        assert verify_report(arr, report)


def test_case_iii_emptiness_grid(case3):
    rng = random.Random(5)
    thetas = list(graph_eigenvalues(case3).values) + [random_rational(rng, 4) for _ in range(30)]
    for t1 in thetas:
        for t2 in thetas:
            if t1 == case3.k or t2 == case3.k:
                continue
            assert check_pair(case3, t1, t2) is None


@settings(max_examples=60, deadline=None)
@given(arrays(max_D=4, max_k=8))
def test_reports_verify_on_random_arrays(arr):
    # eigenvalues plus the grid: the absence check then has nothing left to find
    candidates = auto_candidates(arr) + theta_grid(arr)
    report = classify_tight_pairs(arr, candidates if detect_case(arr) is CaseTag.IV else None)
    assert all(p.verified for p in report.pairs)
    assert verify_report(arr, report)


@pytest.mark.parametrize("arr,pair,grid_sees_it", [
    (validate_array(3, [7, 2, 2], [1, 5, 5], warn=False), (-3, 0), True),
    (classical_array(3, 2, F(0), F(2)), (F(7, 2), -11), False),
])
def test_auto_candidates_can_miss_non_eigenvalue_pairs(arr, pair, grid_sees_it):
    # tight pairs of non-eigenvalues exist, so eigenvalue-only reports can be incomplete
    assert check_pair(arr, *pair) is not None
    auto = classify_tight_pairs(arr)
    assert not any({p.theta, p.theta_prime} == set(pair) for p in auto.pairs)
    assert verify_report(arr, auto) is not grid_sees_it
    explicit = classify_tight_pairs(arr, auto_candidates(arr) + theta_grid(arr) + [pair[0]])
    assert any({p.theta, p.theta_prime} == set(pair) for p in explicit.pairs)
    assert verify_report(arr, explicit)


def test_dropped_case_ii_pair_fails(coxeter):
    report = classify_tight_pairs(coxeter)
    del report.pairs[2]
    assert not verify_report(coxeter, report)
