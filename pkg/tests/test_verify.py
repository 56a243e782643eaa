import json

import pytest
from hypothesis import given, strategies as st

from signed_foata.perm import SignedPermutation, parity
from signed_foata.statistics import ell_A, ell_L, neg_of_inverse, nrmaj
from signed_foata.verify import (
    QPolynomial, check_all_subsets, check_alternating, check_equidistribution,
    check_psi, check_theta, enumerate_group, group_order, poly_over,
    product_formula_A, product_formula_L, subsets,
)

from oracles import all_signed, expand_product, poly_counts

Q = QPolynomial


def test_qpolynomial_basics():
    p = Q((1, 2))
    assert p * Q((1, 1)) == Q((1, 3, 2))
    assert p + Q((0, 0, 5)) == Q((1, 2, 5))
    assert Q((1, 0, 0)) == Q((1,))
    assert Q((1, 3, 2))(1) == 6 and Q((1, 3, 2))(2) == 15
    assert str(Q((1, 3, 2))) == "1 + 3q + 2q^2"
    assert str(Q((0, 1))) == "q"
    assert str(Q()) == "0"
    assert str(Q((-1, 0, -3))) == "-1 - 3q^2"
    assert Q((1, 3, 2)).degree == 2
    assert Q() * p == Q()


@given(st.lists(st.integers(-5, 5), max_size=6), st.lists(st.integers(-5, 5), max_size=6),
       st.integers(-3, 3))
def test_qpolynomial_evaluation_is_a_ring_map(a, b, q):
    pa, pb = Q(tuple(a)), Q(tuple(b))
    assert (pa * pb)(q) == pa(q) * pb(q)
    assert (pa + pb)(q) == pa(q) + pb(q)


def test_big_coefficients_stay_exact():
    p = Q((1, 1)) * Q((1, 1))
    for _ in range(200):
        p = p * Q((1, 1))
    assert p(1) == 2 ** 202


@pytest.mark.parametrize("label, rank, size", [
    ("A", 3, 3), ("L", 3, 24), ("B", 2, 8), ("S", 4, 24), ("A", 1, 1), ("L", 1, 1), ("A", 2, 1),
])
def test_enumerate_sizes(label, rank, size):
    elems = list(enumerate_group(label, rank))
    assert len(elems) == size == group_order(label, rank)
    assert len(set(elems)) == size


@pytest.mark.parametrize("rank", [1, 2, 3, 4])
def test_enumerate_L_membership(rank):
    expected = {w for w in all_signed(rank) if parity(SignedPermutation(w)) == 0}
    assert {p.window for p in enumerate_group("L", rank)} == expected


def test_enumeration_order_is_fixed():
    first = [p.window for p in enumerate_group("L", 3)][:4]
    # identity with sign masks 0, 1+2 (bits 0,1), 1+3, 2+3 as the parity filter allows
    assert first == [(1, 2, 3), (-1, -2, 3), (-1, 2, -3), (1, -2, -3)]
    assert [p.window for p in enumerate_group("A", 3)] == [(1, 2, 3), (2, 3, 1), (3, 1, 2)]


def test_rank_cap():
    with pytest.raises(ValueError, match="cap"):
        list(enumerate_group("L", 9))
    with pytest.raises(ValueError, match="cap"):
        poly_over("L", 5, "ell_L", cap=4)
    with pytest.raises(ValueError):
        list(enumerate_group("S", 0))


def test_poly_over_examples():
    assert poly_over("L", 3, "ell_L", set()) == Q((1, 2))
    assert poly_over("L", 3, "ell_L", {1}) == Q((1, 3, 2))
    assert poly_over("A", 2, "ell_A") == Q((1,))


def test_poly_over_matches_brute_force():
    # independent: enumerate all 2^4 4! signed windows and filter by parity by hand
    rows = [w for w in all_signed(4) if parity(SignedPermutation(w)) == 0]
    for b in ({1, 3}, set(), {1, 2, 3, 4}):
        vals = [ell_L(SignedPermutation(w)) for w in rows
                if {-x for x in w if x < 0} <= b]
        assert poly_over("L", 4, "ell_L", b).to_list() == poly_counts(vals)


def test_poly_over_errors():
    with pytest.raises(ValueError):
        poly_over("A", 3, "ell_A", {1})
    with pytest.raises(ValueError):
        poly_over("L", 3, "ell_A")
    with pytest.raises(ValueError):
        poly_over("L", 3, "nope")
    with pytest.raises(ValueError):
        poly_over("L", 3, "ell_L", {4})


def test_poly_over_parallel_matches_serial():
    serial = poly_over("L", 5, "nrmaj", {1, 4})
    assert poly_over("L", 5, "nrmaj", {1, 4}, workers=3) == serial
    assert poly_over("L", 5, "nrmaj", {1, 4}, workers=7) == serial


def _alt_factors(n):
    return [[1] * i + [2] for i in range(1, n)]


def test_product_formula_examples():
    assert product_formula_L(3, set()) == Q((1, 2))
    assert product_formula_L(3, {1}) == Q((1, 3, 2))
    assert product_formula_A(3) == Q((1, 2))
    assert product_formula_A(4) == Q((1, 2)) * Q((1, 1, 2))


@pytest.mark.parametrize("rank", range(2, 10))
def test_product_formulas_against_naive_expansion(rank):
    n = rank - 1
    assert product_formula_A(rank).to_list() == expand_product(_alt_factors(n))
    for b in ({1}, {rank}, set(range(1, rank + 1))):
        naive = expand_product(_alt_factors(n) + [[1] + [0] * (i - 1) + [1] for i in sorted(b)])
        assert product_formula_L(rank, b).to_list() == naive


@pytest.mark.parametrize("rank", range(2, 10))
def test_product_formulas_at_one_count_elements(rank):
    assert product_formula_A(rank)(1) == group_order("A", rank)
    assert product_formula_L(rank, set())(1) == group_order("A", rank)
    assert product_formula_L(rank, set(range(1, rank + 1)))(1) == group_order("L", rank)


def test_product_formula_errors():
    with pytest.raises(ValueError):
        product_formula_L(3, {4})
    with pytest.raises(ValueError):
        product_formula_A(1)


@pytest.mark.parametrize("b", subsets(range(1, 4)))
def test_check_equidistribution_rank3(b):
    r = check_equidistribution(3, b)
    assert r.passed and r.counterexample is None
    assert r.elements == sum(1 for p in enumerate_group("L", 3) if neg_of_inverse(p) <= b)


def test_check_equidistribution_full_rank6():
    r = check_equidistribution(6)
    assert r.passed and r.elements == 23040
    assert r.lhs.degree == max(nrmaj(p) for p in enumerate_group("L", 6))


def _broken_nrmaj(p):
    return nrmaj(p) + (1 if p.window[0] == 1 else 0)


def test_corrupted_statistic_fails_with_counterexample():
    r = check_equidistribution(3, {1, 2, 3}, lhs_statistic=_broken_nrmaj)
    assert not r.passed
    assert r.counterexample is not None
    assert "differ" in r.message
    assert "FAIL" in r.summary()


def test_all_subsets_matches_single_checks():
    for rank in (3, 4):
        fast = check_all_subsets(rank)
        for r in fast:
            slow = check_equidistribution(rank, r.subset)
            assert (r.lhs, r.rhs, r.passed, r.elements) == (slow.lhs, slow.rhs, slow.passed, slow.elements)


def test_check_theta_and_psi_small():
    assert check_theta(1).passed
    assert check_theta(2).passed
    r = check_theta(4)
    assert r.passed and r.elements == 192
    for rank, n in ((2, 1), (3, 3), (5, 60)):
        r = check_psi(rank)
        assert r.passed and r.elements == n


def test_check_alternating_small():
    for rank in range(2, 7):
        assert check_alternating(rank).passed


def test_psi_report_polys_are_distributions():
    r = check_psi(5)
    assert r.lhs == r.rhs == poly_over("A", 5, "rmaj")
    assert r.rhs == poly_over("A", 5, "ell_A") == product_formula_A(5)
    assert r.lhs == poly_over("A", 5, lambda v: ell_A(v))


def test_report_serializes():
    d = json.loads(json.dumps(check_equidistribution(3, {2}).to_dict()))
    assert d["passed"] and d["subset"] == [2] and d["product"] == d["lhs"]


def test_report_deterministic():
    a = check_theta(4).to_dict()
    b = check_theta(4).to_dict()
    a.pop("elapsed"), b.pop("elapsed")
    assert a == b
