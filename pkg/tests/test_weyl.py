import itertools

import pytest
import sympy
from hypothesis import given, strategies as st

from superinv import superalg, weyl
from superinv.poly import GradedSubspace, Poly, VarTable, monomials


@pytest.mark.parametrize("name,order", [
    ("gl(2|1)", 2), ("gl(1|1)", 1), ("osp_alpha(4|2,alpha=2)", 8), ("ab3", 96),
    ("osp(4|4)", 32), ("osp(3|2)", 4), ("ag2", 24), ("vect(0|3)", 6), ("gl(3|2)", 12)])
def test_orders(name, order):
    assert len(weyl.enumerate(superalg.get(name))) == order


def test_cap():
    with pytest.raises(weyl.GroupTooLarge):
        weyl.enumerate(superalg.get("ab3"), cap=10)


def test_act_examples():
    vt = VarTable(("e1", "e2", "d1"))
    e1, e2, d1 = (Poly.var(vt, i) for i in range(3))
    swap = ((0, 1, 0), (1, 0, 0), (0, 0, 1))
    assert weyl.act(swap, e1 ** 2 * d1) == e2 ** 2 * d1
    flip = ((1, 0, 0), (0, 1, 0), (0, 0, -1))
    assert weyl.act(flip, d1 ** 3) == -(d1 ** 3)
    ident = ((1, 0, 0), (0, 1, 0), (0, 0, 1))
    p = e1 * e2 - d1 ** 2 + 3
    assert weyl.act(ident, p) == p


coeffs = st.integers(-3, 3)


@pytest.mark.parametrize("name", ["ab3", "ag2", "spe(4)", "osp(4|2)"])
def test_composition_law(name):
    d = superalg.get(name)
    group = weyl.enumerate(d)
    n = len(d.vartable)
    p = Poly(d.vartable, {m: i + 1 for i, m in enumerate(monomials(n, 3))})
    for w1, w2 in itertools.islice(itertools.product(group, repeat=2), 0, None, 37):
        prod = tuple(tuple(sum(w1[i][k] * w2[k][j] for k in range(n)) for j in range(n))
                     for i in range(n))
        assert weyl.act(prod, p) == weyl.act(w1, weyl.act(w2, p))


@pytest.mark.parametrize("name,deg,dim", [("gl(2|1)", 2, 4), ("gl(1|1)", 3, 4),
                                          ("gl(1|1)", 5, 6), ("vect(0|2)", 2, 2)])
def test_invariant_dims(name, deg, dim):
    assert weyl.invariant_basis(superalg.get(name), deg).dim == dim


def test_gl21_degree_two_basis():
    d = superalg.get("gl(2|1)")
    e1, e2, d1 = (Poly.var(d.vartable, i) for i in range(3))
    expected = GradedSubspace.from_polys(d.vartable, 2,
                                         [e1 ** 2 + e2 ** 2, e1 * e2, (e1 + e2) * d1, d1 ** 2])
    assert weyl.invariant_basis(d, 2) == expected


def _molien(group, n, deg):
    """Dimension of degree ``deg`` invariants from Molien's formula."""
    t = sympy.symbols("t")
    total = 0
    for w in group:
        total += 1 / (sympy.eye(n) - t * sympy.Matrix(w)).det()
    series = sympy.series(total / len(group), t, 0, deg + 1).removeO()
    return series.coeff(t, deg)


@pytest.mark.parametrize("name", ["osp(3|2)", "ag2", "spe(4)", "osp_alpha(4|2,alpha=2)",
                                  "svect~(0|4)"])
def test_invariant_dims_against_molien(name):
    d = superalg.get(name)
    group = weyl.enumerate(d)
    for deg in range(5):
        assert weyl.invariant_basis(d, deg).dim == _molien(group, len(d.vartable), deg)


@pytest.mark.parametrize("name", ["ab3", "ag2", "spe(3)"])
def test_basis_is_invariant(name):
    d = superalg.get(name)
    for p in weyl.invariant_basis(d, 3).polys():
        assert weyl.is_invariant(d, p)
