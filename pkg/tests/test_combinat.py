import random
from itertools import product
from math import comb, factorial

import pytest
from hypothesis import given, settings, strategies as st

from chromllt.combinat import (
    SkewShape,
    Tableau,
    cocharge,
    column_tableau,
    compositions_of,
    conjugate,
    descent_set,
    hook,
    hook_length_count,
    inner_corners,
    is_flat,
    jdt_rectify,
    k_star,
    knuth_equivalent,
    kostka,
    lr_coefficient,
    partitions_of,
    refinements,
    row_tableau,
    rsk,
    shuffle_words_Dk,
    slide,
    special_rim_hook_count,
    ssyt_enumerate,
    standardize,
    syt_enumerate,
    tableau_switch,
    word_descents,
)
from chromllt.errors import ShapeMismatch, SizeMismatch


# ---------------------------------------------------------------- partitions

def test_partition_counts():
    assert [len(partitions_of(n)) for n in range(9)] == [1, 1, 2, 3, 5, 7, 11, 15, 22]
    assert partitions_of(4)[0] == (4,)
    assert len(compositions_of(5)) == 16


def test_conjugate():
    assert conjugate((4, 2, 1)) == (3, 2, 1, 1)
    assert conjugate(conjugate((5, 3, 3, 1))) == (5, 3, 3, 1)


def test_refinements_include_self():
    refs = set(refinements((2, 1)))
    assert refs == {(2, 1), (1, 1, 1)}


# ------------------------------------------------------------------ tableaux

def test_kostka_values():
    assert kostka((2, 1), (2, 1)) == 1
    assert kostka((2, 1), (1, 1, 1)) == 2
    assert kostka((1, 1), (2,)) == 0
    with pytest.raises(SizeMismatch):
        kostka((2,), (1,))


def test_kostka_matches_enumeration():
    for la in partitions_of(5):
        for mu in partitions_of(5):
            count = sum(1 for t in ssyt_enumerate(SkewShape(la), len(mu)) if t.weight() == mu)
            assert kostka(la, mu) == count


def test_rsk_examples():
    p, q = rsk((1, 2, 3))
    assert p == q == row_tableau((3,))
    p, _ = rsk((3, 2, 1))
    assert p.shape.outer == (1, 1, 1)
    p, q = rsk((2, 1, 2))
    assert p.shape.outer == (2, 1)
    assert descent_set(q) == {1}


def test_standardize():
    assert standardize((1, 1, 2)) == (1, 2, 3)
    assert standardize((2, 1, 2)) == (2, 1, 3)
    assert standardize((3, 1, 1)) == (3, 1, 2)


def test_descent_sets_agree_on_words():
    for n in range(1, 6):
        for w in product(range(1, 5), repeat=n):
            d = word_descents(w)
            assert d == word_descents(standardize(w))
            assert d == descent_set(rsk(w)[1])


def test_rsk_counts():
    for n in range(1, 9):
        assert sum(len(syt_enumerate(la)) ** 2 for la in partitions_of(n)) == factorial(n)
        for la in partitions_of(n):
            assert len(syt_enumerate(la)) == hook_length_count(la)


def test_cocharge():
    assert cocharge(row_tableau((4,))) == 0
    assert cocharge(column_tableau(5)) == 10


def _all_rectifications(t):
    corners = inner_corners(t.shape)
    if not corners:
        return {t}
    out = set()
    for c in corners:
        out |= _all_rectifications(slide(t, c))
    return out


def test_rectification_independent_of_corner_order():
    for outer, inner in [((3, 2, 1), (1,)), ((3, 3, 1), (2, 1)), ((4, 2, 2), (2, 1)), ((3, 3, 2), (2, 1))]:
        for t in syt_enumerate(SkewShape(outer, inner)):
            assert _all_rectifications(t) == {jdt_rectify(t)}


def test_descents_invariant_under_slides():
    for outer, inner in [((3, 2, 2), (2, 1)), ((4, 3, 1), (2, 1)), ((3, 3, 2), (1, 1))]:
        for t in syt_enumerate(SkewShape(outer, inner)):
            assert descent_set(jdt_rectify(t)) == descent_set(t)


def test_lr_coefficients():
    assert lr_coefficient((2, 1), (2, 1), (3, 2, 1)) == 2
    assert lr_coefficient((1,), (1,), (2,)) == 1
    assert lr_coefficient((2,), (1, 1), (2, 2)) == 0
    with pytest.raises(ShapeMismatch):
        lr_coefficient((3,), (1,), (2, 2))


SWITCH_T = Tableau.from_rows([[None, 1], [2, 3], [4]])
SWITCH_S = Tableau.from_rows([[None, None, 1, 3], [None, None, 2], [None, 4, 5]])


def test_switching_worked_example():
    s_out, t_out = tableau_switch(SWITCH_T, SWITCH_S)
    assert s_out == Tableau.from_rows([[None, 1, 3], [2, 5], [4]])
    assert t_out == Tableau.from_rows([[None, None, None, 1], [None, None, 3], [None, 2, 4]])


def test_switching_past_empty():
    t = Tableau.from_rows([[None, 1], [2]])
    s_out, t_out = tableau_switch(t, Tableau(SkewShape((2, 1), (2, 1)), {}))
    assert t_out == t
    assert len(s_out) == 0 and s_out.shape.outer == (1,)


def _nested_pairs(max_cells):
    for total in range(1, max_cells + 1):
        for nu in partitions_of(total):
            for k in range(0, total):
                for mu in partitions_of(k) if k else [()]:
                    if len(mu) > len(nu) or any(a > b for a, b in zip(mu, nu)):
                        continue
                    for j in range(0, k + 1):
                        for la in partitions_of(j) if j else [()]:
                            if len(la) > len(mu) or any(a > b for a, b in zip(la, mu)):
                                continue
                            yield la, mu, nu


def test_switching_properties_exhaustive():
    rng = random.Random(7)
    checked = 0
    for la, mu, nu in _nested_pairs(7):
        ts = syt_enumerate(SkewShape(mu, la)) if sum(mu) > sum(la) else ()
        ss = syt_enumerate(SkewShape(nu, mu))
        pairs = [(t, s) for t in ts for s in ss]
        if len(pairs) > 40:
            pairs = rng.sample(pairs, 40)
        for t, s in pairs:
            s_out, t_out = tableau_switch(t, s)
            assert knuth_equivalent(s_out, s)
            assert knuth_equivalent(t_out, t)
            assert tableau_switch(s_out, t_out) == (t, s)
            checked += 1
    assert checked > 1000


# ---------------------------------------------------------------- rim hooks

def test_special_rim_hooks():
    for n in range(1, 7):
        assert special_rim_hook_count((n,), (n,)) == 1
        assert special_rim_hook_count((1,) * n, (1,) * n) == 1
        assert special_rim_hook_count((n,), (1,) * n) == (-1) ** (n - 1)
    with pytest.raises(SizeMismatch):
        special_rim_hook_count((2,), (1,))


def test_kostka_times_inverse_is_identity():
    for n in range(1, 7):
        parts = partitions_of(n)
        for la in parts:
            for mu in parts:
                total = sum(kostka(la, a) * special_rim_hook_count(a, mu) for a in compositions_of(n))
                assert total == (la == mu)


def test_k_star_flat_rule_matches_refinement_sum():
    for n in range(1, 7):
        for a in compositions_of(n):
            for la in partitions_of(n):
                assert k_star(a, la, "flat") == k_star(a, la, "sum")


def test_k_star_on_hooks():
    for n in range(1, 7):
        for k in range(1, n + 1):
            h = hook(k, n)
            for a in compositions_of(n):
                assert k_star(a, h) == (1 if a == h else 0)
    assert is_flat((3, 1, 1), (3, 1, 1))


def test_shuffle_words():
    assert shuffle_words_Dk(5, 5) == [(1, 2, 3, 4, 5)]
    assert set(shuffle_words_Dk(5, 2)) == {
        (1, 5, 4, 3, 2), (5, 1, 4, 3, 2), (5, 4, 1, 3, 2), (5, 4, 3, 1, 2)
    }
    assert len(shuffle_words_Dk(6, 3)) == 10
    for n in range(1, 8):
        for k in range(1, n + 1):
            ws = shuffle_words_Dk(n, k)
            assert len(ws) == comb(n - 1, k - 1)
            assert all(w[-1] == k for w in ws)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.integers(1, 4), min_size=1, max_size=7))
def test_rsk_shape_and_weight(word):
    p, q = rsk(word)
    assert p.is_semistandard() and q.is_standard()
    assert p.shape == q.shape
    assert sorted(v for _, v in p.items()) == sorted(word)
