import pytest

from chromllt.errors import RangeError
from chromllt.qpoly import QPoly
from chromllt.relcheck import (
    chain_holds,
    lowered,
    scan_relations,
    summarize,
    verify_equivalence,
    verify_k_deletion,
    verify_lee,
)
from chromllt.unigraphs import complete, enumerate_nuio, from_area, lollipop, path

WORKED_AREA = (2, 3, 3, 2, 1, 1, 0)


def test_worked_example():
    assert lowered(WORKED_AREA, 2, 1)[:3] == (2, 2, 3)
    rep = verify_lee(WORKED_AREA, 2)
    assert rep.status == "ok" and rep.detail == {"llt_ok": True, "chromatic_ok": True}
    a, b = verify_k_deletion(WORKED_AREA, 2, 2, 1)
    assert (a.relation, b.relation) == ("kdel-a", "kdel-b")
    assert a.passed and b.passed


def test_counterexample_without_chain_condition():
    rep = verify_lee((2, 1, 1, 0), 1)
    assert rep.status == "hypothesis-failed"
    assert rep.identity_ok is False
    assert rep.witness == {"form": "llt", "partition": [2, 2], "q_power": 1, "value": "-1"}
    assert not chain_holds((2, 1, 1, 0), 1, 2)


def test_invalid_lowered_area():
    rep = verify_lee((1, 0), 1)
    assert rep.status == "invalid-area"
    assert rep.identity_ok is None and not rep.passed


def test_two_deletion_matches_lee():
    for n in range(3, 6):
        for g in enumerate_nuio(n):
            for i in range(1, n + 1):
                lee = verify_lee(g.area, i)
                kdel = verify_k_deletion(g.area, i, 2, 1)[0]
                assert lee.status == kdel.status, (g.area, i)


def test_melting_relation_as_deletion():
    for m in range(3, 6):
        for n in range(1, 3):
            reps = verify_k_deletion(lollipop(m, n).area, n + 1, m - 1, 1)
            assert [r.status for r in reps] == ["ok", "ok"]


def test_deletion_parameter_ranges():
    with pytest.raises(RangeError):
        verify_k_deletion((2, 1, 1, 0), 1, 2, 5)
    with pytest.raises(RangeError):
        verify_k_deletion((2, 1, 1, 0), 1, 4, 1)


def test_scan_counts():
    assert summarize(scan_relations(2)) == {"lee": {"invalid-area": 4}}
    s4 = summarize(scan_relations(4))
    assert s4["lee"] == {"invalid-area": 50, "ok": 5, "hypothesis-failed": 1}
    assert s4["kdel-a"] == s4["kdel-b"] == {"invalid-area": 160, "ok": 7, "hypothesis-failed": 1}
    s5 = summarize(scan_relations(5, workers=2))
    assert s5["lee"] == {"ok": 21, "hypothesis-failed": 7, "invalid-area": 182}
    assert s5["kdel-a"] == {"ok": 34, "hypothesis-failed": 11, "invalid-area": 1215}
    with pytest.raises(RangeError):
        list(scan_relations(8))


def test_no_failures_when_hypothesis_holds():
    for n in range(1, 6):
        for rep in scan_relations(n):
            assert rep.status != "failed", rep.to_json()


def test_equivalence():
    one, neg = QPoly((1,)), QPoly((-1,))
    assert verify_equivalence([one, neg], [path(3), path(3)]).detail == {"llt_zero": True, "chromatic_zero": True}
    rep = verify_equivalence([one, neg], [path(3), complete(3)])
    assert rep.passed and rep.detail == {"llt_zero": False, "chromatic_zero": False}
    # the Lee relation on the worked example, read as a linear combination
    a = WORKED_AREA
    graphs = [lowered(a, 2, z) for z in (0, 1, 2)]
    rep = verify_equivalence([one, QPoly((-1, -1)), QPoly((0, 1))], [from_area(x) for x in graphs])
    assert rep.passed and rep.detail["llt_zero"]
    with pytest.raises(RangeError):
        verify_equivalence([one], [path(2), path(3)])
    with pytest.raises(RangeError):
        verify_equivalence([one, one], [path(2), path(3)])
