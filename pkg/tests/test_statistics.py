import json
from itertools import permutations

import pytest
from hypothesis import given

from signed_foata.canonical import a_factorize, s_factorize
from signed_foata.perm import NotInGroupError, SignedPermutation, generator_a, identity
from signed_foata.statistics import (
    del_B, des, des_A, des_A_set, des_set, ell_A, ell_B, ell_L, inv,
    neg_of_inverse, nrmaj, rmaj, statistics_bundle,
)
from signed_foata.verify import enumerate_group

from oracles import coxeter_lengths, window_compose
from test_perm import signed_perms

P = SignedPermutation


def test_word_statistics_example():
    r = (3, -4, 2, 1, 5, -6)
    # pairs led by 3, -4, 2, 1, 5: 4 + 1 + 2 + 1 + 1
    assert inv(r) == 9
    assert des_set(r) == {1, 3, 5}
    assert des(r) == 3


@pytest.mark.parametrize("m", range(0, 7))
def test_word_statistics_trivial(m):
    up = tuple(range(1, m + 1))
    down = up[::-1]
    assert inv(up) == 0 and des_set(up) == set()
    assert inv(down) == m * (m - 1) // 2
    assert del_B(down) == max(m - 1, 0)
    assert del_B(up) == 0
    assert des_set((2, 1)) == {1}


def test_neg_of_inverse():
    assert neg_of_inverse(P((5, -1, 2, -3, 4))) == {1, 3}
    assert neg_of_inverse(identity(4)) == set()
    neg = neg_of_inverse(P((3, -6, -4, 5, 2, -1)))
    assert neg == {6, 4, 1} and sum(neg) == 11


@given(signed_perms())
def test_neg_of_inverse_matches_inverse_window(p):
    inverse_neg = {i for i, x in enumerate(p.inverse().window, start=1) if x < 0}
    assert neg_of_inverse(p) == inverse_neg


def test_del_B_example():
    assert del_B((5, -1, 2, -3, 4)) == 2


def test_ell_B_examples():
    assert ell_B(identity(5)) == 0
    assert ell_B(P((-1, 2, 3, 4))) == 1
    # inv([3,-6,-4,5,2,-1]) = 7 by pair count, plus the Neg sum 11
    assert inv((3, -6, -4, 5, 2, -1)) == 7
    assert ell_B(P((3, -6, -4, 5, 2, -1))) == 18


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_ell_B_is_coxeter_length(n):
    for w, length in coxeter_lengths(n, signed=True).items():
        assert ell_B(P(w)) == length


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_inv_is_coxeter_length_on_S(n):
    for w, length in coxeter_lengths(n, signed=False).items():
        assert inv(w) == length


def test_ell_A_examples():
    assert ell_A(identity(4)) == 0
    assert ell_A(P((2, 3, 1))) == 1
    u = P((5, 2, 1, 6, 4, 3))
    assert ell_A(u) == 6
    assert len(a_factorize(u)) == 6


def test_ell_A_rejects_outside_A():
    with pytest.raises(NotInGroupError):
        ell_A(P((2, 1, 3)))
    with pytest.raises(NotInGroupError):
        ell_A(P((-1, -2, 3)))


def test_ell_L_examples():
    assert ell_L(P((-6, 3, 5, -4, 2, -1))) == 18
    assert ell_L(identity(6)) == 0
    assert ell_L(P((2, 3, 1))) == 1


@given(signed_perms())
def test_ell_L_is_ell_B_minus_del_B(p):
    assert ell_L(p) == ell_B(p) - del_B(p.window)


@given(signed_perms())
def test_unsigned_relations(p):
    w = P(tuple(abs(x) for x in p.window))
    assert ell_B(w) == inv(w.window)
    if w.is_even:
        assert ell_L(w) == ell_A(w)


def _des_A_oracle(window):
    """The definition, with a_i built by hand as swap(1,2) then swap(i+1,i+2)."""
    rank = len(window)
    base = inv(window) - del_B(window) + sum(-x for x in window if x < 0)
    out = set()
    for i in range(1, rank - 1):
        a = list(range(1, rank + 1))
        a[0], a[1] = a[1], a[0]
        a = tuple(a)
        b = list(range(1, rank + 1))
        b[i], b[i + 1] = b[i + 1], b[i]
        x = window_compose(window, window_compose(a, tuple(b)))
        if inv(x) - del_B(x) + sum(-y for y in x if y < 0) <= base:
            out.add(i)
    return out


def test_des_A_examples():
    assert des_A_set(P((5, -1, 2, -3, 4))) == {1, 2}
    assert des_A_set(P((3, -6, -4, 5, 2, -1))) == {1, 3, 4}


@pytest.mark.parametrize("rank", range(1, 9))
def test_des_A_of_identity(rank):
    # every a_i has ell_L = 1 > 0, so the weak inequality never holds
    assert _des_A_oracle(tuple(range(1, rank + 1))) == set()
    assert des_A_set(identity(rank)) == set()
    assert rmaj(identity(rank)) == 0
    assert nrmaj(identity(rank)) == 0


@pytest.mark.parametrize("rank", [2, 3, 4])
def test_des_A_matches_oracle(rank):
    for p in enumerate_group("L", rank):
        assert des_A_set(p) == _des_A_oracle(p.window)


def test_rmaj_nrmaj_examples():
    pi = P((5, -1, 2, -3, 4))
    assert rmaj(pi) == 5 and nrmaj(pi) == 9
    pi = P((3, -6, -4, 5, 2, -1))
    assert rmaj(pi) == 7 and nrmaj(pi) == 18


def test_L_statistics_reject_odd():
    for fn in (des_A_set, des_A, rmaj, nrmaj):
        with pytest.raises(NotInGroupError):
            fn(P((2, 1, 3)))


@pytest.mark.parametrize("rank", range(3, 8))
def test_ell_A_is_a_word_length(rank):
    for v in enumerate_group("A", rank):
        assert ell_A(v) == len(a_factorize(v))


@pytest.mark.parametrize("n", range(1, 8))
def test_inv_is_s_word_length(n):
    for w in permutations(range(1, n + 1)):
        assert inv(w) == len(s_factorize(P(w)))


def test_generators_a_have_A_length_one():
    for rank in range(3, 8):
        for i in range(1, rank - 1):
            assert ell_A(generator_a(i, rank)) == 1


def test_degenerate_ranks():
    for p in (P(()), P((1,)), P((1, 2))):
        assert inv(p.window) == 0 and ell_L(p) == 0 and des_A_set(p) == set()
        assert rmaj(p) == 0


def test_bundle_invariants_and_json():
    b = statistics_bundle(P((5, -1, 2, -3, 4)))
    assert b.ell_L == b.inv - b.del_B + sum(b.neg_of_inverse)
    assert b.ell_B == b.inv + sum(b.neg_of_inverse)
    assert b.nrmaj == b.rmaj + sum(b.neg_of_inverse)
    d = json.loads(json.dumps(b.to_dict()))
    assert d["rmaj"] == 5 and d["nrmaj"] == 9 and d["des_A_set"] == [1, 2]
    assert set(d) >= {"inv", "des_set", "des", "neg_of_inverse", "ell_B", "del_B",
                      "ell_L", "des_A_set", "des_A", "rmaj", "nrmaj"}


def test_bundle_for_odd_permutation():
    b = statistics_bundle(P((2, 1, 3)))
    assert b.inv == 1 and b.rmaj is None and b.des_A_set is None
