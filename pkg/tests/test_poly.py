from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from superinv.poly import (GradedSubspace, LinearForm, ParseError, Poly, PolyError, VarTable,
                           directional_derivative, divides, exact_quotient, format_poly,
                           linear_division, monomials, parse_poly, substitute)

VT = VarTable(("e", "d"))
E, D = Poly.var(VT, "e"), Poly.var(VT, "d")
ALPHA = LinearForm(VT, [1, -1])
VT3 = VarTable(("e1", "e2", "d1"))
SYMS = sympy.symbols("e1 e2 d1")


def to_sympy(p):
    return sympy.expand(sum(sympy.Rational(c.numerator, c.denominator) *
                            sympy.Mul(*[s ** k for s, k in zip(SYMS, m)])
                            for m, c in p.terms.items()))


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)
polys = st.dictionaries(st.tuples(*[st.integers(0, 3)] * 3), coeffs, max_size=6).map(
    lambda t: Poly(VT3, t))
forms = st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any).map(
    lambda c: LinearForm(VT3, c))


def test_arithmetic_examples():
    assert (E - D) * (E + D) == E ** 2 - D ** 2
    p = E * D + 3
    assert p + Poly(VT) == p
    assert (E * D).scale(Fraction(3, 2)).terms == {(1, 1): Fraction(3, 2)}


def test_mismatched_tables():
    with pytest.raises(PolyError):
        E + Poly.var(VT3, 0)


def test_derivative_examples():
    assert directional_derivative(E * D, (1, 1)) == E + D
    assert directional_derivative(E ** 2 - D ** 2, (1, 1)) == (E - D).scale(2)
    assert directional_derivative(Poly.const(VT, 7), (3, -2)).is_zero()


def test_linear_division_examples():
    rs, tail = linear_division(E ** 2, ALPHA, 2)
    assert rs == [D ** 2, D.scale(2)] and tail == Poly.const(VT, 1)
    rs, _ = linear_division(E ** 2 - D ** 2, ALPHA, 1)
    assert rs[0].is_zero()
    rs, _ = linear_division(D ** 3, ALPHA, 1)
    assert rs[0] == D ** 3
    with pytest.raises(PolyError):
        linear_division(E, LinearForm(VT, [0, 0]))


def test_substitute_examples():
    vt = VT.extend("t")
    t = Poly.var(vt, "t")
    up = Poly(vt, {m + (0,): c for m, c in (E ** 2 - D ** 2).terms.items()})
    assert substitute(up, {"e": t, "d": t}).is_zero()
    ed = Poly(vt, {(1, 1, 0): 1})
    assert substitute(ed, {"e": t, "d": t}) == t ** 2
    vt2 = VarTable(("e1", "e2"))
    e1, e2 = Poly.var(vt2, 0), Poly.var(vt2, 1)
    assert substitute(e1 * e2, {"e2": -e1}) == -(e1 ** 2)


def test_parse_examples():
    vt = VarTable(("e1", "d1"))
    assert parse_poly("e1^2 - d1^2", vt) == Poly.var(vt, 0) ** 2 - Poly.var(vt, 1) ** 2
    assert parse_poly("3/2*e1*d1", vt).terms == {(1, 1): Fraction(3, 2)}
    with pytest.raises(ParseError) as err:
        parse_poly("e1 + q", vt)
    assert err.value.position == 5


def test_parse_syntax_errors():
    for bad in ("", "e1 +", "e1 ** 2", "e1 $ d1", "e1^1/2"):
        with pytest.raises(ParseError):
            parse_poly(bad, VT3)


@given(polys, forms, st.integers(1, 3))
def test_linear_division_reassembles(p, ell, k):
    rs, tail = linear_division(p, ell, k)
    lp = ell.to_poly()
    total = tail * lp ** k
    for i, r in enumerate(rs):
        assert not r.uses(ell.pivot())
        total = total + r * lp ** i
    assert total == p


@given(polys, forms)
def test_divides_agrees_with_sympy(p, ell):
    q = to_sympy(p * ell.to_poly())
    assert divides(ell, p * ell.to_poly())
    assert to_sympy(exact_quotient(p * ell.to_poly(), ell)) == to_sympy(p)
    lp = to_sympy(ell.to_poly())
    _, rem = sympy.div(to_sympy(p), lp, *SYMS)
    assert divides(ell, p) == (rem == 0)
    assert q == sympy.expand(to_sympy(p) * lp)


@given(polys, polys, st.lists(st.integers(-3, 3), min_size=3, max_size=3))
def test_leibniz(p, q, h):
    lhs = directional_derivative(p * q, h)
    rhs = directional_derivative(p, h) * q + p * directional_derivative(q, h)
    assert lhs == rhs
    x = to_sympy(p)
    assert to_sympy(directional_derivative(p, h)) == sympy.expand(
        sum(c * sympy.diff(x, s) for c, s in zip(h, SYMS)))


@given(polys)
def test_format_parse_round_trip(p):
    assert parse_poly(format_poly(p), VT3) == p


def test_round_trip_five_variables_degree_six():
    vt = VarTable(("e1", "e2", "e3", "d1", "d2"))
    p = Poly(vt, {m: Fraction(i - 7, (i % 3) + 1) for i, m in enumerate(monomials(5, 6)) if i % 5})
    assert parse_poly(format_poly(p), vt) == p


def test_graded_subspace():
    g = GradedSubspace.from_polys(VT, 2, [E ** 2, E * D, E ** 2 + E * D])
    assert g.dim == 2
    assert g.contains(E ** 2 - E * D) and not g.contains(D ** 2)
    h = GradedSubspace.from_polys(VT, 2, [E * D, D ** 2])
    assert g.intersect(h) == GradedSubspace.from_polys(VT, 2, [E * D])
    assert (g + h).dim == 3 and g.issubset(g + h)
    assert GradedSubspace.full(VT, 3).dim == 4
