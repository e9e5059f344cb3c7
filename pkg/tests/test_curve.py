import pytest

from tecc.curve import (O, add, curve_new, enumerate_points, group_structure, make_evalset, mul, neg,
                        parse_point, point_count, select_eval_set, subset_sum_bruteforce, subset_sum_count)
from tecc.errors import BadCurve, Insufficient, OffCurve, ValidationError
from tecc.gf import field_new


@pytest.fixture
def e5():
    return curve_new("type1", field_new(5), [1, 1, 0, 1])


@pytest.fixture
def e4():
    F = field_new(2, 2)
    return curve_new("type2", F, [0, 0, 0, 1])


def pts(c, *texts):
    return [parse_point(c.ctx, t) for t in texts]


def test_gf5_points(e5):
    P = enumerate_points(e5)
    assert P[0] == O and len(P) == 9
    assert set(P[1:]) == set(pts(e5, "(0,1)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(3,4)", "(4,2)", "(4,3)"))


def test_gf16_points():
    F = field_new(2, 4)
    c = curve_new("type2", F, [F.one, 0, 0, F.one])
    P = enumerate_points(c)
    assert len(P) == 9
    assert parse_point(F, "(0,w^2+w)") in P


def test_type3_points():
    F = field_new(2, 2)
    c = curve_new("type3", F, (), F.one, F.one)
    P = enumerate_points(c)
    for Q in pts(c, "(a,0)", "(a,1)", "(0,a)", "(0,a+1)"):
        assert Q in P


def test_group_law_examples(e4, e5):
    P1, P3, P6 = pts(e4, "(1,a)", "(a,a)", "(a+1,a+1)")
    assert add(e4, P1, P3) == P6
    assert add(e4, P1, O) == P1
    Q1, Q7 = pts(e5, "(0,1)", "(4,2)")
    assert mul(e5, 2, Q1) == Q7
    assert add(e5, Q1, neg(e5, Q1)) == O


def test_group_structures(e4, e5):
    g4 = group_structure(e4)
    assert (g4.n1, g4.n2) == (3, 3)
    g5 = group_structure(e5)
    assert (g5.n1, g5.n2) == (1, 9)
    assert g5.order == point_count(e5)


def test_subset_sums(e4, e5):
    D4 = make_evalset(e4, pts(e4, "(1,a)", "(1,a+1)", "(a,a)", "(a,a+1)", "(a+1,a)", "(a+1,a+1)"))
    assert subset_sum_count(e4, 4, O, D4).count == 3
    r3 = subset_sum_count(e4, 3, O, D4)
    assert r3.count == 2
    assert {frozenset(S) for S in r3.witnesses} == {
        frozenset(pts(e4, "(1,a)", "(a,a)", "(a+1,a)")),
        frozenset(pts(e4, "(1,a+1)", "(a,a+1)", "(a+1,a+1)")),
    }
    D5 = select_eval_set(e5, 8)
    assert subset_sum_count(e5, 4, O, D5).count == 8
    for k in range(9):
        assert subset_sum_count(e5, k, O, D5).count == subset_sum_bruteforce(e5, k, O, D5)


def test_witness_cap(e5):
    D = select_eval_set(e5, 8)
    res = subset_sum_count(e5, 4, O, D, witness_cap=3)
    assert res.count == 8 and res.witnesses is None


def test_select_eval_set(e4, e5):
    D = select_eval_set(e5, 8)
    assert [x.v for x in D.T] == [0, 2, 3, 4] and D.split_complete
    D4 = select_eval_set(e4, 6)
    assert list(D4) == pts(e4, "(0,0)", "(0,1)", "(1,a)", "(1,a+1)", "(a,a)", "(a,a+1)")
    with pytest.raises(Insufficient):
        select_eval_set(e5, 7)
    with pytest.raises(Insufficient):
        select_eval_set(e5, 10)


def test_units_first_policy(e5):
    D = select_eval_set(e5, 6, "units-first")
    assert all(x.v != 0 for x in D.T)


def test_bad_curves():
    with pytest.raises(BadCurve):
        curve_new("type1", field_new(5), [0, 0, 0, 1])  # x^3 has a repeated root
    with pytest.raises(BadCurve):
        curve_new("type2", field_new(5), [0, 0, 0, 1])
    with pytest.raises(BadCurve):
        curve_new("type1", field_new(2, 2), [1, 1, 0, 1])
    with pytest.raises(BadCurve):
        curve_new("type3", field_new(2, 2), (), 0, 1)


def test_evalset_checks(e5):
    with pytest.raises(OffCurve):
        make_evalset(e5, pts(e5, "(1,1)"))
    with pytest.raises(ValidationError):
        make_evalset(e5, [O])
    half = make_evalset(e5, pts(e5, "(0,1)", "(2,1)"))
    assert not half.split_complete
