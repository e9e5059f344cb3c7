"""Property suites that need no reference data.

These run standalone: nothing here imports the worked-example goldens.
"""

from __future__ import annotations

import itertools

from hypothesis import assume, given
from hypothesis import strategies as st

from tecc.curve import (O, add, curve_new, enumerate_points, group_structure, hasse_ok, make_evalset, neg,
                        point_count, select_eval_set, split_x_values, subset_sum_bruteforce,
                        subset_sum_count)
from tecc.differential import partial_fraction_sums, residues
from tecc.errors import BadCurve
from tecc.gf import field_new
from tecc.lincode import MatrixFq, dual, min_distance, rank, row_space_equal, schur_square_dim

FIELDS = [(2, 1), (3, 1), (5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (13, 1)]

fields = st.sampled_from(FIELDS).map(lambda pm: field_new(*pm))


@st.composite
def field_and_elems(draw, k=3):
    ctx = draw(fields)
    return ctx, [draw(st.integers(0, ctx.q - 1)) for _ in range(k)]


@st.composite
def curves(draw):
    ctx = draw(st.sampled_from([field_new(*pm) for pm in [(5, 1), (7, 1), (2, 2), (2, 3), (3, 2), (11, 1)]]))
    for _ in range(50):
        try:
            if ctx.p == 2:
                if draw(st.booleans()):
                    f = [draw(st.integers(0, ctx.q - 1)) for _ in range(3)] + [1]
                    return curve_new("type2", ctx, [ctx.elem(a) for a in f])
                a, b = draw(st.integers(1, ctx.q - 1)), draw(st.integers(0, ctx.q - 1))
                return curve_new("type3", ctx, (), ctx.elem(a), ctx.elem(b))
            f = [draw(st.integers(0, ctx.q - 1)) for _ in range(3)] + [1]
            return curve_new("type1", ctx, [ctx.elem(a) for a in f])
        except BadCurve:
            continue
    assume(False)


# -- field axioms ----------------------------------------------------------------------

@given(field_and_elems())
def test_field_axioms(fe):
    ctx, (a, b, c) = fe
    A, B, C = (ctx.elem(x) for x in (a, b, c))
    assert A + B == B + A and A * B == B * A
    assert (A + B) + C == A + (B + C)
    assert (A * B) * C == A * (B * C)
    assert A * (B + C) == A * B + A * C
    assert A + ctx.zero == A and A * ctx.one == A
    assert A + (-A) == ctx.zero
    if a:
        assert A * A.inv() == ctx.one


@given(field_and_elems(2))
def test_frobenius_is_additive(fe):
    ctx, (a, b) = fe
    A, B = ctx.elem(a), ctx.elem(b)
    p = ctx.p
    assert (A + B) ** p == A ** p + B ** p
    assert (A * B) ** p == A ** p * B ** p


@given(field_and_elems(1))
def test_fermat(fe):
    ctx, (a,) = fe
    A = ctx.elem(a)
    assert A ** ctx.q == A
    if a:
        assert A ** (ctx.q - 1) == ctx.one


@given(field_and_elems(1))
def test_sqrt_of_square(fe):
    ctx, (a,) = fe
    A = ctx.elem(a)
    r = (A * A).sqrt()
    assert r is not None and r * r == A * A


@given(fields)
def test_default_modulus_is_primitive(ctx):
    if ctx.m == 1:
        return
    g = ctx.gen
    assert len({(g ** e).v for e in range(ctx.q - 1)}) == ctx.q - 1


# -- curves ----------------------------------------------------------------------------

@given(curves())
def test_hasse_bound(c):
    assert hasse_ok(c)
    assert point_count(c) == len(enumerate_points(c))


@given(curves(), st.data())
def test_group_law(c, data):
    pts = enumerate_points(c)
    P, Q, R = (data.draw(st.sampled_from(pts)) for _ in range(3))
    assert add(c, add(c, P, Q), R) == add(c, P, add(c, Q, R))
    assert add(c, P, Q) == add(c, Q, P)
    assert add(c, P, O) == P
    assert add(c, P, neg(c, P)) == O


@given(curves())
def test_dlog_table_is_an_isomorphism(c):
    gs = group_structure(c)
    pts = enumerate_points(c)
    assert sorted(gs.dlog.values()) == sorted(itertools.product(range(gs.n1), range(gs.n2)))
    for P, Q in itertools.islice(itertools.product(pts, repeat=2), 400):
        (i1, j1), (i2, j2) = gs.dlog[P], gs.dlog[Q]
        assert gs.dlog[add(c, P, Q)] == ((i1 + i2) % gs.n1, (j1 + j2) % gs.n2)


@given(curves(), st.integers(1, 5))
def test_subset_sum_matches_dlog_space_count(c, k):
    xs = split_x_values(c)
    assume(len(xs) >= 3)
    D = select_eval_set(c, 2 * min(len(xs), 5))
    assume(k <= len(D))
    gs = group_structure(c)
    logs = [gs.dlog[P] for P in D]
    for b in enumerate_points(c)[:3]:
        target = gs.dlog[b]
        cnt = sum(1 for S in itertools.combinations(logs, k)
                  if (sum(i for i, _ in S) % gs.n1, sum(j for _, j in S) % gs.n2) == target)
        assert subset_sum_count(c, k, b, D).count == cnt


@given(curves(), st.integers(1, 4))
def test_subset_sum_dp_matches_bruteforce(c, k):
    xs = split_x_values(c)
    assume(len(xs) >= 3)
    D = select_eval_set(c, 2 * min(len(xs), 4))
    assume(k <= len(D))
    for b in enumerate_points(c)[:4]:
        res = subset_sum_count(c, k, b, D)
        assert res.count == subset_sum_bruteforce(c, k, b, D)
        assert len(res.witnesses) == res.count


# -- residues --------------------------------------------------------------------------

@given(curves(), st.integers(2, 6))
def test_partial_fraction_sums_vanish(c, half):
    xs = split_x_values(c)
    assume(len(xs) >= half)
    rv = residues(select_eval_set(c, 2 * half))
    assert all(s == 0 for s in partial_fraction_sums(rv))


@given(curves())
def test_residue_is_inverse_derivative(c):
    xs = split_x_values(c)
    assume(len(xs) >= 2)
    D = select_eval_set(c, 2 * len(xs))
    rv = residues(D)
    ctx = c.ctx
    for a, g in zip(rv.T, rv.t_gamma):
        prod = 1
        for b in rv.T:
            if b != a:
                prod = ctx.mul(prod, ctx.sub(a.v, b.v))
        assert ctx.mul(prod, g) == 1


# -- codes -----------------------------------------------------------------------------

@st.composite
def matrices(draw, max_k=3, max_n=6):
    ctx = draw(st.sampled_from([field_new(2), field_new(3), field_new(2, 2), field_new(5)]))
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, min(max_k, n - 1)))
    rows = [[draw(st.integers(0, ctx.q - 1)) for _ in range(n)] for _ in range(k)]
    M = MatrixFq(ctx, rows, n)
    assume(rank(M) >= 1)
    return M


@given(matrices())
def test_singleton_bound(g):
    k = rank(g)
    assert min_distance(g) <= g.ncols - k + 1


@given(matrices())
def test_dual_involution(g):
    H = dual(g)
    assert rank(H) == g.ncols - rank(g)
    assert (g @ H.T).is_zero()
    if H.nrows:
        assert row_space_equal(dual(H), g)


@given(matrices(), st.data())
def test_schur_dim_monomial_invariance(g, data):
    ctx = g.ctx
    n = g.ncols
    scale = [data.draw(st.integers(1, ctx.q - 1)) for _ in range(n)]
    perm = data.draw(st.permutations(range(n)))
    h = g.scale_columns(scale).select_columns(perm)
    assert schur_square_dim(h) == schur_square_dim(g)
    assert schur_square_dim(g) <= min(n, rank(g) * (rank(g) + 1) // 2)


@given(matrices(), st.data())
def test_min_distance_matches_enumeration(g, data):
    ctx = g.ctx
    best = g.ncols
    for co in itertools.product(range(ctx.q), repeat=g.nrows):
        w = [0] * g.ncols
        for ci, row in zip(co, g.rows):
            for j, a in enumerate(row):
                w[j] = ctx.add(w[j], ctx.mul(ci, a))
        wt = sum(1 for a in w if a)
        if wt:
            best = min(best, wt)
    assert min_distance(g) == best


def test_evalset_rejects_repeats():
    c = curve_new("type1", field_new(5), [1, 1, 0, 1])
    P = enumerate_points(c)[1]
    try:
        make_evalset(c, [P, P])
    except ValueError:
        return
    raise AssertionError("duplicate points accepted")
