import pytest
from _sweep import sweep_curves, sweep_handles

from tecc.curve import curve_new, make_evalset, mul, parse_point, select_eval_set
from tecc.errors import BadShape, BadTwist
from tecc.gf import field_new, parse_elem
from tecc.lincode import min_distance, nullspace, rank, row_space_equal, MatrixFq
from tecc.rrspace import basis_LkO, ell_extreme, evaluate, format_func
from tecc.teccbuild import (ALL_ETA, NO_ETA, NO_FUNCTION, VALUE, ecc_generator, ecc_parity_check,
                            eta_of_points, eta_witnesses, handle_from_json, make_handle, min_distance_class,
                            schur_audit, search_codes, self_dual_check, self_dual_scaling,
                            tecc_parity_check_closed, tecc_parity_check_nullspace,
                            tecc_parity_check_recursive)


@pytest.fixture(scope="module")
def gf5():
    c = curve_new("type1", field_new(5), [1, 1, 0, 1])
    return c, select_eval_set(c, 8)


@pytest.fixture(scope="module")
def gf4():
    F = field_new(2, 2)
    c = curve_new("type2", F, [0, 0, 0, 1])
    D = make_evalset(c, [parse_point(F, t) for t in
                         ("(1,a)", "(1,a+1)", "(a,a)", "(a,a+1)", "(a+1,a)", "(a+1,a+1)")])
    return c, D


def multiples(c, ms):
    P1 = parse_point(c.ctx, "(0,1)")
    return [mul(c, m, P1) for m in ms]


def test_ecc_generator_and_parity_check(gf5):
    c, D = gf5
    G = ecc_generator(c, D, 4)
    H = ecc_parity_check(c, D, 4)
    assert (G @ H.T).is_zero() and rank(H) == 4
    assert G.rows[0] == (1,) * 8


def test_example2_parity_check_is_generator():
    c = curve_new("type2", field_new(2, 4), [1, 0, 0, 1])
    D = select_eval_set(c, 8)
    assert ecc_parity_check(c, D, 4) == ecc_generator(c, D, 4)


@pytest.mark.parametrize("eta", [1, 2, 3, 4])
def test_gf5_twisted_generator(gf5, eta):
    c, D = gf5
    G = make_handle(c, D, 3, ell=0, eta=eta).G
    assert G.rows[2][:4] == (1, 4, (1 + 4 * eta) % 5, (4 + 4 * eta) % 5)


def test_parity_check_routes_agree(gf5):
    c, D = gf5
    for k in range(3, 7):
        for ell in range(ell_extreme(k) + 1):
            h = make_handle(c, D, k, ell=ell, eta=2)
            Hn = tecc_parity_check_nullspace(h)
            Hr, trace = tecc_parity_check_recursive(h)
            assert row_space_equal(Hr, Hn) and (h.G @ Hr.T).is_zero()
            if ell == ell_extreme(k):
                assert row_space_equal(tecc_parity_check_closed(h), Hn)


def test_untwisted_example2_self_dual():
    c = curve_new("type2", field_new(2, 4), [1, 0, 0, 1])
    h = make_handle(c, select_eval_set(c, 8), 4)
    assert row_space_equal(tecc_parity_check_nullspace(h), h.G)


def test_odd_length_handles(gf5):
    c, _ = gf5
    D = make_evalset(c, [parse_point(c.ctx, t) for t in ("(0,1)", "(0,4)", "(2,1)", "(2,4)", "(3,1)", "(4,2)",
                                                         "(4,3)")])
    h = make_handle(c, D, 3, ell=0, eta=1)
    assert h.n == 7 and rank(h.G) == 3
    assert (h.G @ tecc_parity_check_nullspace(h).T).is_zero()
    with pytest.raises(Exception):
        tecc_parity_check_recursive(h)  # the residue routes need complete fibres


def test_eta_of_points(gf5):
    c, _ = gf5
    w = eta_of_points(c, 3, 0, multiples(c, [1, 4, 6, 7]))
    assert w.status == VALUE and w.eta == 3
    assert format_func(w.func) == "4 + 3*x^2 + y"
    w1 = eta_of_points(c, 3, 0, multiples(c, [1, 2, 7, 8]))
    assert w1.status == NO_ETA and format_func(w1.func) == "x + x^2"
    assert eta_of_points(c, 3, 0, multiples(c, [1, 2, 3, 4])).status == NO_FUNCTION


def test_eta_witness_table(gf5):
    c, D = gf5
    wits = eta_witnesses(c, D, 3, 0)
    assert len(wits) == 8
    assert sorted(w.eta for w in wits if w.status == VALUE) == [2, 3]
    assert not any(w.status == ALL_ETA for w in wits)


@pytest.mark.parametrize("eta,d,case", [(1, 5, "n-k"), (2, 4, "n-k-1"), (3, 4, "n-k-1"), (4, 5, "n-k")])
def test_gf5_distance(gf5, eta, d, case):
    c, D = gf5
    r = min_distance_class(make_handle(c, D, 3, ell=0, eta=eta))
    assert (r.d, r.case, r.exhaustive) == (d, case, d)
    if eta == 3:
        assert set(r.witness) == set(multiples(c, [1, 4, 6, 7]))


@pytest.mark.parametrize("eta", [1, 2, 3])
def test_gf4_distance_is_three(gf4, eta):
    # stated as [6,3,4]; a weight-3 word exists for every eta
    c, D = gf4
    r = min_distance_class(make_handle(c, D, 3, ell=0, eta=eta))
    assert (r.d, r.case, r.exhaustive) == (3, "n-k", 3)
    assert r.predicted_case == "n-k"


def test_gf4_self_dual(gf4):
    c, D = gf4
    a = parse_elem(c.ctx, "a").v
    for lam in (1, 2, 3):
        for eta in (1, 2, 3):
            ctx = c.ctx
            v = [lam, lam, ctx.div(lam, a), ctx.div(lam, a), ctx.div(lam, a ^ 1), ctx.div(lam, a ^ 1)]
            cert = self_dual_check(make_handle(c, D, 3, ell=0, eta=eta, v=v))
            assert cert.verdict and cert.span_equal
    plain = self_dual_check(make_handle(c, D, 3, ell=0, eta=1))
    assert not plain.verdict and not plain.span_equal
    # characteristic 2: the eta condition holds identically
    assert plain.lhs == 0


def test_self_dual_shape_errors(gf5):
    c, D = gf5
    with pytest.raises(BadShape):
        self_dual_check(make_handle(c, D, 3, ell=0, eta=1))
    with pytest.raises(BadShape):
        self_dual_check(make_handle(c, D, 4, ell=0, eta=1))


def test_search(gf4, gf5):
    c4, D4 = gf4
    hits = search_codes(c4, D4, 3, self_dual=True)
    assert len(hits) == 3 and all(h.summary.cls == "NMDS" and h.summary.self_dual for h in hits)
    assert search_codes(c4, D4, 3, want="MDS", self_dual=True) == []
    c5, D5 = gf5
    assert search_codes(c5, D5, 3, want="MDS") == []
    assert {h.handle.twist.eta for h in search_codes(c5, D5, 3, want="NMDS")} == {1, 4}
    with pytest.raises(BadShape):
        search_codes(c5, D5, 8)


def test_twist_validation(gf5):
    c, D = gf5
    with pytest.raises(BadTwist):
        make_handle(c, D, 2, ell=0, eta=1)
    with pytest.raises(BadTwist):
        make_handle(c, D, 3, ell=0, eta=0).G


def test_handle_json_roundtrip(gf5):
    c, D = gf5
    h = make_handle(c, D, 4, ell=1, eta=3)
    h2 = handle_from_json(h.to_json())
    assert h2.G == h.G and h2.twist == h.twist
    h3 = handle_from_json({"field": {"p": 5}, "curve": {"kind": "type1", "f": [1, 1, 0, 1]},
                           "D": {"n": 8}, "k": 3, "twist": {"ell": 0, "eta": 3}})
    assert h3.G == make_handle(c, D, 3, ell=0, eta=3).G


# -- Schur squares ------------------------------------------------------------------------

@pytest.fixture(scope="module")
def gf13():
    c = next(c for c in sweep_curves() if c.ctx.q == 13)
    return c, select_eval_set(c, 14)


def test_schur_extreme_and_interior(gf13):
    c, D = gf13
    assert schur_audit(make_handle(c, D, 5, ell=1, eta=1)).dim == 11
    assert schur_audit(make_handle(c, D, 5, ell=0, eta=1)).dim >= 12
    assert schur_audit(make_handle(c, D, 4)).dim == 8


def test_schur_even_k_exceptions(gf13):
    # interior ell still reaches 2k+1 for some eta when k is even
    c, D = gf13
    dims = {eta: schur_audit(make_handle(c, D, 4, ell=1, eta=eta)).dim for eta in range(1, 13)}
    assert {e for e, d in dims.items() if d == 9} == {5, 8}
    assert all(d >= 9 for d in dims.values())


def test_schur_dual_even_k_extreme(gf13):
    c, D = gf13
    for eta in range(1, 13):
        r = schur_audit(make_handle(c, D, 10, ell=0, eta=eta))
        assert r.dual_dim == 9 and r.lower_bound is None


def test_schur_out_of_range(gf5):
    c, D = gf5
    with pytest.raises(BadShape):
        schur_audit(make_handle(c, D, 4, ell=0, eta=1))


# -- sweep ----------------------------------------------------------------------------------

def test_distance_classifier_matches_exhaustive():
    total = predicted_off = 0
    for h in sweep_handles():
        r = min_distance_class(h)
        assert r.agrees, (h.curve, h.k, h.twist)
        assert r.d == min_distance(h.G)
        total += 1
        predicted_off += not r.predicted_agrees
    # the N(k, O, D) based prediction is wrong on a fixed share of the sweep
    assert (total, predicted_off) == (831, 55)


def test_sandwich(gf5):
    c, D = gf5
    for k in (3, 5):
        for ell in range(ell_extreme(k) + 1):
            G = make_handle(c, D, k, ell=ell, eta=1).G
            lower = MatrixFq(c.ctx, evaluate(basis_LkO(c, 2 * ell + 2), D), 8)
            upper = MatrixFq(c.ctx, evaluate(basis_LkO(c, k + 1), D), 8)
            assert rank(lower.stack(G)) == rank(G) > rank(lower)
            assert rank(upper.stack(G)) == rank(upper) > rank(G)
            assert nullspace(G).nrows == 8 - k
