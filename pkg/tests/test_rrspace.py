import pytest
from _sweep import sweep_curves
from hypothesis import given
from hypothesis import strategies as st

from tecc.curve import curve_new, enumerate_points, parse_point, select_eval_set
from tecc.errors import BadK, BadRange, BadTwist, PoleAtPoint
from tecc.gf import PolyFq, field_new
from tecc.rrspace import (CurveFunc, basis_dual_space, basis_LkO, defining_set_general, defining_set_single,
                          ell_range, evaluate, format_func)
from tecc.lincode import MatrixFq, rank


@pytest.fixture(scope="module")
def e5():
    return curve_new("type1", field_new(5), [1, 1, 0, 1])


@pytest.fixture(scope="module")
def e16():
    F = field_new(2, 4)
    return curve_new("type2", F, [1, 0, 0, 1])


@pytest.fixture(scope="module")
def e4t3():
    F = field_new(2, 2)
    return curve_new("type3", F, (), 1, 1)


def texts(fb):
    return [format_func(f) for f in fb]


def test_LkO_bases(e5, e4t3):
    assert texts(basis_LkO(e5, 4)) == ["1", "x", "x^2", "y"]
    assert len(basis_LkO(e5, 3)) == 3
    assert texts(basis_LkO(e5, 1)) == ["1"]
    assert len(basis_LkO(e4t3, 3)) == 3
    for k in range(1, 12):
        fb = basis_LkO(e5, k)
        assert len(fb) == k and fb.distinct_poles()
    with pytest.raises(BadK):
        basis_LkO(e5, 0)


def test_dual_bases(e5, e16, e4t3):
    b1 = basis_dual_space(e5, 8, 4)
    assert [f.pole_order() for f in b1] == [-3, -1, 1, 0]
    assert b1.tag == "(y)+4O"
    assert texts(basis_dual_space(e16, 8, 4)) == ["1", "x", "x^2", "y"]
    b3 = basis_dual_space(e4t3, 6, 4)
    assert len(b3) == 2 and all(not f.den.is_zero() and f.den.deg == 1 for f in b3)
    with pytest.raises(BadRange):
        basis_dual_space(e5, 8, 8)


def test_single_twist_sets(e5):
    eta = 2
    assert texts(defining_set_single(e5, 3, 0, eta)) == ["1", "x", "2*x^2 + y"]
    assert texts(defining_set_single(e5, 4, 2, eta)) == ["1", "x", "x^2 + 2*x*y", "y"]
    with pytest.raises(BadTwist):
        defining_set_single(e5, 3, 0, 0)
    with pytest.raises(BadTwist):
        defining_set_single(e5, 5, 2, 1)


@pytest.mark.parametrize("k", range(3, 10))
def test_single_twist_shape(e5, k):
    for ell in ell_range(k):
        fb = defining_set_single(e5, k, ell, 3)
        hooked = 2 * ell + 3 if k % 2 else 2 * ell
        want = (set(range(k + 1)) - {1, hooked}) | {k + 1}
        assert len(fb) == k and sorted(fb.pole_orders()) == sorted(want)


def test_general_twist_specializes(e5):
    for k in range(3, 7):
        assert texts(defining_set_general(e5, k, 8, [], [], [])) == texts(basis_LkO(e5, k))
    # one twist with t=1 is the single twist with the same hook
    assert texts(defining_set_general(e5, 5, 8, [1], [0], [2])) == texts(defining_set_single(e5, 5, 0, 2))
    assert texts(defining_set_general(e5, 4, 8, [1], [1], [3])) == texts(defining_set_single(e5, 4, 1, 3))


def test_general_twist_rank():
    c = next(c for c in sweep_curves() if c.ctx.q == 13)
    D = select_eval_set(c, 14)
    with pytest.warns(UserWarning, match="parity classes"):
        fb = defining_set_general(c, 5, 14, [1, 2], [1, 1], [1, 1])
    assert len(fb) == 5
    assert rank(MatrixFq(c.ctx, evaluate(fb, D), 14)) == 5


def test_general_twist_rejects(e5):
    with pytest.raises(BadTwist):
        defining_set_general(e5, 5, 8, [1, 1], [0, 1], [1, 1])
    with pytest.raises(BadTwist):
        defining_set_general(e5, 5, 8, [1], [0], [0])
    with pytest.raises(BadTwist):
        defining_set_general(e5, 5, 8, [3], [0], [1])  # t <= n-k-1 = 2


def test_example1_generator(e5):
    D = select_eval_set(e5, 8)
    G = evaluate(basis_LkO(e5, 4), D)
    assert G == [[1] * 8, [0, 0, 2, 2, 3, 3, 4, 4], [0, 0, 4, 4, 4, 4, 1, 1], [1, 4, 1, 4, 1, 4, 2, 3]]


def test_inverse_y_value(e5):
    inv_y = basis_dual_space(e5, 8, 4)[0]
    P = parse_point(e5.ctx, "(4,2)")
    assert inv_y(P) == 3


def test_pole_at_ramified_point():
    c = curve_new("type1", field_new(5), [0, 1, 0, 1])  # y^2 = x^3 + x has (0,0)
    inv_y = basis_dual_space(c, 4, 2)[0]
    with pytest.raises(PoleAtPoint):
        inv_y(parse_point(c.ctx, "(0,0)"))


def _rand_func(c, draw):
    q = c.ctx.q
    u = PolyFq(c.ctx, [draw(st.integers(0, q - 1)) for _ in range(3)])
    v = PolyFq(c.ctx, [draw(st.integers(0, q - 1)) for _ in range(2)])
    return CurveFunc(c, u, v)


@given(st.sampled_from(["e5", "e16", "e4t3"]), st.data())
def test_func_arithmetic(name, data):
    c = {"e5": curve_new("type1", field_new(5), [1, 1, 0, 1]),
         "e16": curve_new("type2", field_new(2, 4), [1, 0, 0, 1]),
         "e4t3": curve_new("type3", field_new(2, 2), (), 1, 1)}[name]
    f, g, h = (_rand_func(c, data.draw) for _ in range(3))
    assert f * g == g * f
    assert (f * g) * h == f * (g * h)
    if not f.is_zero() and not g.is_zero():
        assert (f * g).pole_order() == f.pole_order() + g.pole_order()
    for P in enumerate_points(c)[1:]:
        assert (f * g)(P) == c.ctx.mul(f(P), g(P))
