import pytest

from powerideals.arrangement import boolean, corpus, uniform_2_3
from powerideals.coxring import (
    LEMMAS,
    MODES,
    cox_closed_form,
    cox_series,
    cox_table_direct,
    lemma_generating_check,
    lemma_sides,
    line_hyperplane_matrix,
)
from powerideals.zonotopal import hilbert_series

CORPUS = corpus()
B2 = boolean(2)
U23 = uniform_2_3()


def test_line_hyperplane_matrices():
    H = line_hyperplane_matrix(B2)
    assert H.lines == ((1, 0), (0, 1)) and H.entries == ((1, 0), (0, 1))
    H = line_hyperplane_matrix(U23)
    assert H.lines_count == 3 and all(sum(row) == 2 for row in H.entries)
    H = line_hyperplane_matrix(CORPUS["G"])
    assert H.lines_count == 4
    # the hyperplane y3 = 0 contains every line but e3
    assert [row[2] for row in H.entries] == [0, 0, 1, 0]


def test_direct_examples():
    ring = cox_table_direct(B2, "ring")
    assert [ring[d, (1, 1)] for d in range(4)] == [1, 2, 1, 0]
    central = cox_table_direct(B2, "central")
    assert [central[d, (1, 1)] for d in range(3)] == [1, 0, 0]
    internal = cox_table_direct(U23, "internal")
    assert [internal[d, (1, 1, 1)] for d in range(3)] == [1, 0, 0]


def test_closed_form_examples():
    ring = cox_series(B2, "ring")
    assert ring.coefficient("t", 2).coefficient("t1", 1).coefficient("t2", 1).constant_term() == 1
    table = cox_closed_form(B2, "ring")
    assert table.column((0, 0)) == [1]
    assert cox_closed_form(U23, "central", 4, 3) == cox_table_direct(U23, "central", 4, 3)


@pytest.mark.parametrize("name", sorted(CORPUS))
@pytest.mark.parametrize("mode", sorted(MODES))
@pytest.mark.parametrize("convention", ["formula", "literal"])
def test_dual_route(name, mode, convention):
    cfg = CORPUS[name]
    a = cox_closed_form(cfg, mode, 6, 3, convention)
    b = cox_table_direct(cfg, mode, 6, 3, convention)
    assert a == b, a.differences(b)


def test_empty_support_conventions():
    # the formula convention reports the empty matroid's value; literal reports the zero space
    for mode in ("central", "internal"):
        assert cox_table_direct(B2, mode)[0, (0, 0)] == 1
        assert cox_table_direct(B2, mode, convention="literal")[0, (0, 0)] == 0
    assert cox_table_direct(B2, "ring", convention="literal")[0, (0, 0)] == 1


@pytest.mark.parametrize("name", ["B2", "U23", "braid3"])
@pytest.mark.parametrize("mode", sorted(MODES))
def test_all_ones_column(name, mode):
    cfg = CORPUS[name]
    column = cox_closed_form(cfg, mode, 6, cfg.n).column((1,) * cfg.n)
    assert column == hilbert_series(cfg, MODES[mode], literal=False)


def test_all_ones_column_of_g():
    cfg = CORPUS["G"]
    column = cox_closed_form(cfg, "ring", 6, 5).column((1,) * 5)
    assert column == [1, 3, 5, 6, 4, 1]


@pytest.mark.parametrize("name", ["B2", "U23", "G"])
def test_true_grading_is_a_push_forward(name):
    cfg = CORPUS[name]
    table = cox_table_direct(cfg, "ring", 4, 2)
    H = table.matrix
    expected = {}
    for (d, a), c in table.entries.items():
        s = tuple(sum(H.entries[j][i] * a[i] for i in range(cfg.n)) for j in range(H.lines_count))
        expected[(d, s)] = expected.get((d, s), 0) + c
    assert table.true_grading() == expected
    assert sum(table.true_grading().values()) == sum(table.entries.values())


def test_non_essential_has_no_true_grading():
    table = cox_table_direct(CORPUS["braid3"], "ring", 3, 2)
    assert table.matrix is None
    with pytest.raises(ValueError):
        table.true_grading()


@pytest.mark.parametrize("name", ["B2", "U23", "G", "U23_211"])
@pytest.mark.parametrize("which", LEMMAS)
def test_generating_identities(name, which):
    D_a = 3 if name in ("B2", "U23") else 2
    assert lemma_generating_check(CORPUS[name], which, D_a)


def test_generating_identities_are_not_vacuous():
    lhs, rhs = lemma_sides(U23, "weighted", 3)
    assert len(lhs.terms) > 20 and lhs == rhs
    assert lhs != rhs + 1


def test_bad_arguments():
    with pytest.raises(ValueError):
        cox_table_direct(B2, "weird")
    with pytest.raises(ValueError):
        cox_closed_form(B2, "ring", convention="other")
    with pytest.raises(ValueError):
        lemma_sides(B2, "unknown")
