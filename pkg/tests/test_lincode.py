import pytest

from tecc.curve import curve_new, select_eval_set
from tecc.errors import BadShape, BudgetExceeded
from tecc.gf import field_new
from tecc.lincode import (MatrixFq, classify, dual, format_matrix, is_self_dual, min_distance, nullspace,
                          parse_matrix, rank, row_space_equal, rref, rs_nonequiv_check, schur_square_dim)
from tecc.teccbuild import ecc_generator

F5 = field_new(5)

# parity check of the first worked example with the sign slip corrected
H1 = [[1, 4, 4, 1, 3, 2, 1, 4],
      [0, 0, 3, 2, 4, 1, 4, 1],
      [0, 0, 1, 4, 2, 3, 1, 4],
      [1, 1, 4, 4, 3, 3, 2, 2]]
H1_PRINTED = [[1, 4, 1, 4, 3, 2, 1, 4],
              [0, 0, 2, 3, 4, 1, 4, 1],
              [0, 0, 4, 1, 2, 3, 1, 4],
              [1, 1, 4, 4, 3, 3, 2, 2]]


@pytest.fixture(scope="module")
def g1():
    c = curve_new("type1", F5, [1, 1, 0, 1])
    return ecc_generator(c, select_eval_set(c, 8), 4)


def vandermonde(ctx, xs, k):
    return MatrixFq(ctx, [[ctx.pow(x, i) for x in xs] for i in range(k)], len(xs))


def test_rank_and_rref(g1):
    assert rank(MatrixFq(F5, [[1 if i == j else 0 for j in range(4)] for i in range(4)], 4)) == 4
    assert rank(g1) == 4
    R, piv = rref(g1)
    assert rref(R)[0].rows == R.rows and len(piv) == 4


def test_nullspace_matches_corrected_parity_check(g1):
    N = nullspace(g1)
    assert N.nrows == 4 and (g1 @ N.T).is_zero()
    assert row_space_equal(N, MatrixFq(F5, H1, 8))
    assert not (g1 @ MatrixFq(F5, H1_PRINTED, 8).T).is_zero()


def test_dual_involution(g1):
    assert row_space_equal(dual(dual(g1)), g1)


def test_min_distance(g1):
    assert min_distance(g1) == 4
    assert min_distance(MatrixFq(F5, [[1] * 8], 8)) == 8


def test_min_distance_budget(g1):
    with pytest.raises(BudgetExceeded):
        min_distance(g1, budget=3)


def test_example1_is_nmds(g1):
    s = classify(g1)
    assert (s.d, s.defect, s.dual_defect, s.cls) == (4, 1, 1, "NMDS")
    assert not s.self_dual


def test_example2_self_dual():
    F = field_new(2, 4)
    c = curve_new("type2", F, [1, 0, 0, 1])
    g = ecc_generator(c, select_eval_set(c, 8), 4)
    assert is_self_dual(g) and row_space_equal(dual(g), g)


def test_schur_dimensions():
    F = field_new(13)
    assert schur_square_dim(MatrixFq(F, [[1, 2, 3, 4, 5]], 5)) == 1
    V = vandermonde(F, list(range(1, 13)), 4)
    assert schur_square_dim(V) == 7
    assert rs_nonequiv_check(V) == "INCONCLUSIVE"
    with pytest.raises(BadShape):
        rs_nonequiv_check(vandermonde(F, list(range(1, 9)), 5))


def test_matrix_text_roundtrip(g1):
    assert parse_matrix(F5, format_matrix(g1)).rows == g1.rows
