from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from superinv.exactalg import (as_rational, inverse, kernel_basis, rank, rref, solve,
                               solve_square, sparse_kernel, subspace_intersection)

small = st.integers(min_value=-4, max_value=4)
matrices = st.integers(1, 4).flatmap(
    lambda c: st.lists(st.lists(small, min_size=c, max_size=c), min_size=1, max_size=4))


def test_rref_examples():
    r, piv = rref([[1, 0], [0, 1]])
    assert r.tolist() == [[1, 0], [0, 1]] and piv == [0, 1]
    r, piv = rref([[1, 2], [2, 4]])
    assert r.tolist()[0] == [1, 2] and piv == [0]
    r, piv = rref([[0, 1], [1, 0]])
    assert r.tolist() == [[1, 0], [0, 1]] and piv == [0, 1]


def _proportional(u, v):
    return sympy.Matrix([list(u), list(v)]).rank() == 1


def test_kernel_examples():
    (v,) = kernel_basis([[1, 1]])
    assert _proportional(v, (1, -1))
    assert kernel_basis([[1, 0, 0], [0, 1, 0], [0, 0, 1]]) == []
    (v,) = kernel_basis([[1, 2], [2, 4]])
    assert _proportional(v, (2, -1))


def test_intersection_examples():
    assert len(subspace_intersection([[[1, 0]], [[1, 0]]], 2)) == 1
    assert subspace_intersection([[[1, 0]], [[0, 1]]], 2) == []
    (v,) = subspace_intersection([[[1, 0], [0, 1]], [[1, 1]]], 2)
    assert _proportional(v, (1, 1))


def test_floats_refused():
    with pytest.raises(TypeError):
        as_rational(0.5)


@given(matrices)
def test_rref_matches_sympy(m):
    r, piv = rref(m)
    ref, spiv = sympy.Matrix(m).rref()
    assert piv == list(spiv)
    ours = [row for row in r.tolist() if any(row)]
    theirs = [[Fraction(int(x.p), int(x.q)) for x in ref.row(i)] for i in range(len(spiv))]
    assert ours == theirs


@given(matrices)
def test_kernel_matches_sympy(m):
    ker = kernel_basis(m)
    assert len(ker) == len(sympy.Matrix(m).nullspace())
    for v in ker:
        assert all(sum(a * b for a, b in zip(row, v)) == 0 for row in m)
    if ker:
        assert rank(ker) == len(ker)


@given(matrices)
def test_sparse_kernel_agrees(m):
    cols = len(m[0])
    eqs = [{j: x for j, x in enumerate(row) if x} for row in m]
    sk = sparse_kernel(eqs, cols)
    dense = kernel_basis(m)
    assert len(sk) == len(dense)
    if sk:
        assert rank(sk + dense) == len(dense)


def test_solvers():
    assert solve_square([[1, 2], [1, 8]], [0, 6]) == [-2, 1]
    x = solve([[1, 1], [2, 2]], [1, 2])
    assert x[0] + x[1] == 1
    with pytest.raises(ValueError):
        solve([[1, 1], [2, 2]], [1, 3])
    inv = inverse([[2, 1], [1, 1]])
    assert inv == [[1, -1], [-1, 2]]
    with pytest.raises(ValueError):
        solve_square([[1, 1], [1, 1]], [1, 2])
