from _sweep import sweep_curves
from tecc.curve import curve_new, select_eval_set
from tecc.differential import canonical_info, orthogonality_families, partial_fraction_sums, residues
from tecc.gf import field_new, parse_elem


def test_example1_residues():
    c = curve_new("type1", field_new(5), [1, 1, 0, 1])
    rv = residues(select_eval_set(c, 8))
    assert list(rv) == [1, 1, 4, 4, 3, 3, 2, 2]
    assert [a.v for a in rv.T] == [0, 2, 3, 4]


def test_example2_residues():
    F = field_new(2, 4)
    c = curve_new("type2", F, [1, 0, 0, 1])
    D = select_eval_set(c, 8)
    w = F.gen
    assert {a.v for a in D.T} == {0, 1, (w ** 5).v, (w ** 10).v}
    assert list(residues(D)) == [1] * 8


def test_example3_residues():
    # computed values; the worked example prints their Frobenius conjugates
    F = field_new(2, 2)
    c = curve_new("type3", F, (), 1, 1)
    D = select_eval_set(c, 6)
    a = parse_elem(F, "a").v
    assert [x.v for x in D.T] == [0, a, a ^ 1]
    assert list(residues(D)) == [1, 1, a ^ 1, a ^ 1, a, a]


def test_partial_fractions():
    c = next(c for c in sweep_curves() if c.ctx.q == 13)
    for n in (4, 8, 12):
        assert all(s == 0 for s in partial_fraction_sums(residues(select_eval_set(c, n))))


def test_canonical_tags():
    F4 = field_new(2, 2)
    assert canonical_info(curve_new("type1", field_new(5), [1, 1, 0, 1]), 8, 4).dual_tag == "(y)+4O"
    assert canonical_info(curve_new("type2", F4, [0, 0, 0, 1]), 6, 3).dual_tag == "3O"
    info = canonical_info(curve_new("type3", F4, (), 1, 1), 6, 4)
    assert info.dx == "(ax+b)" and info.dual_tag == "(ax+b)+2O"
    assert canonical_info(curve_new("type2", F4, [0, 0, 0, 1])).dual_tag is None


def test_orthogonality_all_types():
    F4 = field_new(2, 2)
    for c, n in [(curve_new("type1", field_new(5), [1, 1, 0, 1]), 8),
                 (curve_new("type2", field_new(2, 4), [1, 0, 0, 1]), 8),
                 (curve_new("type3", F4, (), 1, 1), 6)]:
        D = select_eval_set(c, n)
        for k in range(1, n):
            for sums in orthogonality_families(c, D, k).values():
                assert all(s == 0 for s in sums)
