import json

import pytest
import sympy
from hypothesis import given, strategies as st

from superinv import membership, superalg, weyl
from superinv.poly import GradedSubspace, LinearForm, Poly, parse_poly, substitute


def P(d, text):
    return d.reduce(parse_poly(text, d.full))


def test_in_I_alpha_examples():
    d = superalg.get("gl(1|1)")
    a = d.form("e1 - d1")
    assert membership.in_I_alpha(P(d, "e1 - d1"), a, d).ok
    v = membership.in_I_alpha(P(d, "e1"), a, d)
    assert not v.ok
    assert v.to_dict()["failures"][0]["remainder"] == "1"
    with pytest.raises(membership.MembershipError):
        membership.in_I_alpha(P(d, "e1"), d.form("e1"), d)


def test_toy_alpha_times_l():
    d = superalg.rank_two_toy()
    (a,) = d.tilde_odd_pos
    assert membership.in_I_alpha(P(d, "e1*e2"), a, d).ok
    assert not membership.in_I_alpha(P(d, "e2^2"), a, d).ok


def test_in_I_examples():
    d = superalg.get("gl(2|1)")
    assert membership.in_I(P(d, "e1^2 + e2^2 - d1^2"), d).ok
    d = superalg.get("pe(2)")
    v = membership.in_I(P(d, "e1*e2"), d)
    assert not v.ok
    assert {f["root"] for f in v.to_dict()["failures"]} == {str(d.form("e1 + e2"))}
    d = superalg.get("vect(0|2)")
    assert membership.in_I(P(d, "e1*e2"), d).ok


def test_not_invariant_is_reported():
    d = superalg.get("gl(2|1)")
    v = membership.in_I(P(d, "e1"), d)
    assert not v.ok and v.failures[0][1] == "W-invariance"
    assert json.loads(v.to_json())["ok"] is False


def test_graded_examples():
    d = superalg.get("gl(1|1)")
    assert [membership.graded_basis(d, k).dim for k in range(5)] == [1, 1, 2, 3, 4]
    d = superalg.get("pe(2)")
    assert membership.graded_basis(d, 2) == GradedSubspace.from_polys(
        d.vartable, 2, [P(d, "e1^2 + 2*e1*e2 + e2^2")])
    d = superalg.get("vect(0|2)")
    assert membership.graded_basis(d, 2) == GradedSubspace.from_polys(d.vartable, 2, [P(d, "e1*e2")])


def test_check_main_theorem_examples():
    r = membership.check_main_theorem(superalg.get("gl(1|1)"), 4, {0: 1, 1: 1, 2: 2, 3: 3})
    assert [x.intersection for x in r] == [1, 1, 2, 3, 4]
    assert all(x.agree for x in r)
    assert all(x.agree for x in membership.check_main_theorem(superalg.get("pe(2)"), 4))
    r = membership.check_main_theorem(superalg.get("osp(1|2)"), 6)
    assert [x.intersection for x in r] == [1, 0, 1, 0, 1, 0, 1]
    assert all(x.agree for x in r)


def test_rank1_witness():
    d = superalg.get("gl(1|1)")
    a = d.form("e1 - d1")
    assert membership.rank1_witness(P(d, "e1^2 - d1^2"), a, d) == Poly.const(d.vartable, 2)
    assert membership.rank1_witness(P(d, "5"), a, d).is_zero()
    assert membership.rank1_witness(P(d, "e1^3 - d1^3"), a, d) == P(d, "3*e1 + 3*d1")
    with pytest.raises(membership.MembershipError):
        membership.rank1_witness(P(d, "e1"), a, d)


def _supersymmetric(f, d):
    """Independent check: f(e1 = t, d1 = t) does not depend on t (sympy)."""
    syms = sympy.symbols(d.vartable.names)
    t = sympy.Symbol("t")
    expr = sympy.Integer(0) + sum(sympy.Rational(c.numerator, c.denominator) *
               sympy.Mul(*[s ** k for s, k in zip(syms, m)]) for m, c in f.terms.items())
    expr = sympy.expand(expr.subs({syms[0]: t, syms[d.vartable.index("d1")]: t}))
    return sympy.diff(expr, t) == 0


@pytest.mark.parametrize("name,deg", [("gl(2|1)", 3), ("gl(2|1)", 6), ("gl(2|2)", 4), ("gl(1|2)", 5)])
def test_gl_membership_matches_substitution(name, deg):
    d = superalg.get(name)
    good = membership.graded_basis(d, deg).polys()
    invs = weyl.invariant_basis(d, deg).polys()

    @given(st.lists(st.integers(-2, 2), min_size=len(good), max_size=len(good)),
           st.lists(st.sampled_from([0, 0, 0, 1, -1]), min_size=len(invs), max_size=len(invs)))
    def check(cg, ci):
        f = Poly(d.vartable)
        for c, g in zip(cg, good):
            f = f + g.scale(c)
        for c, g in zip(ci, invs):
            f = f + g.scale(c)
        assert membership.in_I(f, d).ok == _supersymmetric(f, d)

    check()


@pytest.mark.parametrize("name", ["gl(2|1)", "ab3", "spe(4)", "osp(4|2)", "vect(0|3)"])
def test_graded_inside_invariants(name):
    d = superalg.get(name)
    for k in range(5):
        g = membership.graded_basis(d, k)
        assert g.issubset(weyl.invariant_basis(d, k))
        for p in g.polys():
            assert membership.in_I(p, d).ok


def _alpha_space(d, a, deg, drop):
    basis = GradedSubspace.full(d.vartable, deg).polys()
    return membership._solve_on(d, basis, membership._alpha_ops(d, a, drop), deg)


def test_order_two_condition_is_active():
    d = superalg.get("sl(2|2)")
    for a in d.tilde_odd_pos:
        # degree 2: D_h1 D_h2 f is a constant killed by alpha(h2) = 0
        assert _alpha_space(d, a, 2, False) == _alpha_space(d, a, 2, True)
        full, weak = _alpha_space(d, a, 3, False), _alpha_space(d, a, 3, True)
        assert full.issubset(weak) and (full.dim, weak.dim) == (5, 6)
        full = membership.alpha_basis(d, a, 4)
        weak = membership.alpha_basis(d, a, 4, drop_order2=True)
        assert full.issubset(weak) and full.dim < weak.dim
