import pytest

import gen32


def test_symmetric_group():
    g = gen32.symmetric_group(4)
    assert g.order() == 24
    assert g.is_two_transitive()
    assert gen32.d_exact(g)["value"] == 2


def test_s0_dichotomy():
    assert gen32.d_exact(gen32.s0_group(5).perm_group())["value"] == 3
    assert gen32.d_exact(gen32.s0_group(7).perm_group())["value"] == 2


def test_table1_row():
    g0 = gen32.table1_matrix_group(1)
    assert g0.order() == 16
    assert g0.is_irreducible()
    g = gen32.affine_group(g0)
    assert g.degree == 25
    assert g.rank() == 4
    assert g.is_three_halves()
    d = gen32.d_affine(g0)
    assert d["value"] == 3 and d["verified"]


def test_perm_group_from_lists():
    g = gen32.PermGroup(4, [[1, 0, 2, 3], [1, 2, 3, 0]])
    assert g.order() == 24
    assert g.contains([0, 1, 3, 2])
    assert len(g.conjugacy_class_reps()) == 5


def test_analyze_and_reproduce():
    rep = gen32.analyze(gen32.agl1(5), "agl1_5")
    assert rep["schema"] == "gen32/1"
    assert rep["transitivity"]["frobenius"] is True
    out = gen32.reproduce("lemma7", q=[5, 7])
    assert out["failed"] == 0
    assert len(out["verdicts"]) == 6


def test_errors():
    with pytest.raises(ValueError):
        gen32.s0_group(4)
    with pytest.raises(ValueError):
        gen32.reproduce("nosuch")
