import pytest

from chromllt.combinat import column_tableau, hook, partitions_of, row_tableau
from chromllt.errors import BruteForceBound, LengthMismatch, RangeError
from chromllt.lltuni import (
    check_product_bijection,
    hook_coefficient,
    inv_count,
    llt_bruteforce_words,
    llt_complete_cocharge,
    llt_schur,
    llt_via_F,
    plethysm_bridge_check,
    proved_family,
    schur_via_wt,
    wt,
)
from chromllt.combinat.tableaux import cocharge
from chromllt.qpoly import QPoly
from chromllt.symfunc import SymExpansion, change_basis, multiply, quasi_to_monomial
from chromllt.unigraphs import (
    complete,
    disjoint_union,
    enumerate_nuio,
    family_graphs,
    lollipop,
    path,
)

s = lambda *la: SymExpansion.basis_element("s", la)
WORKED_AREA = (3, 3, 2, 1, 0)
WORKED_HOOK = QPoly((0, 0, 0, 0, 0, 0, 2, 1, 1))


def test_inv_count_examples():
    assert inv_count((1, 5, 4, 3, 2), WORKED_AREA) == 6
    assert inv_count((5, 4, 3, 1, 2), WORKED_AREA) == 8
    assert inv_count((1, 1, 2, 3, 3), WORKED_AREA) == 0
    with pytest.raises(LengthMismatch):
        inv_count((1, 2), WORKED_AREA)


def test_word_oracle_small():
    assert llt_bruteforce_words((0,)) == s(1)
    assert llt_bruteforce_words((1, 0)) == s(2) + s(1, 1).scale(QPoly((0, 1)))
    for g in enumerate_nuio(4):
        at1 = llt_bruteforce_words(g).at_q1()
        e1n = SymExpansion.basis_element("e", (1, 1, 1, 1))
        assert at1 == e1n


def test_bounds():
    with pytest.raises(BruteForceBound):
        llt_bruteforce_words(path(8))
    with pytest.raises(BruteForceBound):
        llt_via_F(path(10))


def test_F_expansion_small():
    f = llt_via_F((1, 0))
    assert f[(2,)] == QPoly((1,)) and f[(1, 1)] == QPoly((0, 1))
    flat = llt_via_F((0, 0, 0, 0))
    assert all(c.degree == 0 for _, c in flat.items())
    assert change_basis(quasi_to_monomial(flat), "e") == SymExpansion.basis_element("e", (1, 1, 1, 1))


def test_F_route_matches_words():
    for n in range(1, 7):
        for g in enumerate_nuio(n):
            assert quasi_to_monomial(llt_via_F(g)) == llt_bruteforce_words(g)


def test_elw_and_monomial_extraction_agree():
    for n in range(1, 7):
        for g in enumerate_nuio(n):
            assert llt_schur(g, "elw") == llt_schur(g, "m")


def test_worked_hook_coefficient():
    assert llt_schur(WORKED_AREA)[(2, 1, 1, 1)] == WORKED_HOOK
    for route in ("shuffle", "wt", "elw"):
        for fast in (True, False):
            assert hook_coefficient(WORKED_AREA, 2, route, fast) == WORKED_HOOK


def test_hook_coefficient_edges():
    for g in enumerate_nuio(5):
        assert hook_coefficient(g, 5) == QPoly((1,))
        assert hook_coefficient(g, 1) == QPoly.monomial(sum(g.area))
    with pytest.raises(RangeError):
        hook_coefficient(WORKED_AREA, 0)


def test_wt_and_cocharge_examples():
    k3 = s(3) + s(2, 1).scale(QPoly((0, 1, 1))) + s(1, 1, 1).scale(QPoly((0, 0, 0, 1)))
    assert schur_via_wt(complete(3)) == k3
    assert llt_complete_cocharge(3) == k3
    assert schur_via_wt(path(2)) == s(2) + s(1, 1).scale(QPoly((0, 1)))
    assert cocharge(row_tableau((5,))) == 0
    assert cocharge(column_tableau(4)) == 6
    assert wt(column_tableau(5), WORKED_AREA) == 9


def test_wt_on_melting_lollipops():
    for label, g in family_graphs(7):
        if label.startswith("melting"):
            assert schur_via_wt(g) == llt_schur(g), label


def test_proved_family_detection():
    assert proved_family(complete(4).area) == "complete:4"
    assert proved_family((1, 1, 0)) == "path:3"
    assert proved_family((1, 0, 1, 0)) == "melting:3,1,2"
    assert proved_family((2, 1, 1, 0)) is None


def test_wt_product_rule():
    factors = [path(2), complete(3), lollipop(2, 1), path(3), complete(2)]
    for a in factors:
        for b in factors:
            if a.n + b.n <= 7:
                u = disjoint_union(a, b)
                assert schur_via_wt(u) == multiply(schur_via_wt(a), schur_via_wt(b))


def test_product_bijection_small():
    rep = check_product_bijection((3, 2, 1), 3, [((2, 1, 0), (1, 1, 0))])
    assert rep.passed, rep.witness
    assert rep.params["domain"] == rep.params["codomain"] == 16


def test_plethysm_bridge_examples():
    assert plethysm_bridge_check(path(1)).passed
    assert plethysm_bridge_check(complete(2)).passed
    for g in enumerate_nuio(4):
        assert plethysm_bridge_check(g).passed


def test_schur_positivity_small():
    for n in range(1, 6):
        for g in enumerate_nuio(n):
            for _, c in llt_schur(g).items():
                assert c.is_integral() and min(c.coeffs) >= 0
    for la in partitions_of(4):
        assert llt_schur(complete(4))[la] == llt_complete_cocharge(4)[la]
    assert llt_schur(WORKED_AREA)[hook(2, 5)] == WORKED_HOOK
