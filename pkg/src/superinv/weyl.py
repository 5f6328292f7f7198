"""Finite Weyl groups acting on polynomial functions on the Cartan subalgebra.

Group elements are integer matrices; column ``i`` holds the image of the
``i``-th coordinate function, so ``act(w1 @ w2, p) == act(w1, act(w2, p))``.
"""

from __future__ import annotations

import builtins
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactalg import row_basis
from .poly import GradedSubspace, LinearForm, Poly, monomials

DEFAULT_CAP = 5000


class GroupTooLarge(RuntimeError):
    pass


def _mul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def _identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def enumerate_group(gens: Sequence, n: int, cap: int = DEFAULT_CAP) -> list:
    """Closure of ``gens`` under multiplication, breadth first."""
    gens = [tuple(tuple(int(x) for x in r) for r in g) for g in gens]
    e = _identity(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = _mul(g, s)
                if h not in seen:
                    seen.add(h)
                    if len(seen) > cap:
                        raise GroupTooLarge("Weyl group exceeds %d elements" % cap)
                    nxt.append(h)
        frontier = nxt
    return sorted(seen)


def enumerate(datum, cap: int = DEFAULT_CAP) -> list:  # noqa: A001
    return _cached(datum, cap)


_cache: dict = {}


def _cached(datum, cap):
    key = (id(datum), cap)
    if key not in _cache:
        _cache[key] = (datum, enumerate_group(datum.weyl_gens, datum.rank, cap))
    return _cache[key][1]


def act(w, p: Poly) -> Poly:
    """Substitute ``x_i -> sum_j w[j][i] x_j``."""
    n = len(p.vt)
    images = [[w[j][i] for j in range(n)] for i in range(n)]
    out: dict = {}
    for mono, c in p.terms.items():
        term = {tuple([0] * n): Fraction(c)}
        for i, e in builtins.enumerate(mono):
            for _ in range(e):
                term = _mul_linear(term, images[i], n)
        for m, v in term.items():
            out[m] = out.get(m, 0) + v
    return Poly(p.vt, {m: v for m, v in out.items() if v})


def _mul_linear(term: dict, lin: Sequence, n: int) -> dict:
    out: dict = {}
    for m, c in term.items():
        for j, a in zip(range(n), lin):
            if a:
                mm = list(m)
                mm[j] += 1
                mm = tuple(mm)
                out[mm] = out.get(mm, 0) + c * a
    return out


def act_form(w, a: LinearForm) -> LinearForm:
    n = len(a.vt)
    return LinearForm(a.vt, [sum(w[i][j] * a.coeffs[j] for j in range(n)) for i in range(n)])


def reynolds(p: Poly, group: Sequence) -> Poly:
    acc = Poly(p.vt)
    for w in group:
        acc = acc + act(w, p)
    return acc.scale(Fraction(1, len(group)))


@lru_cache(maxsize=None)
def _orbit_sums(gens_key, n: int, d: int):
    group = enumerate_group(gens_key, n)
    from .poly import VarTable
    vt = VarTable(tuple("x%d" % i for i in range(n)))
    mons = monomials(n, d)
    index = {m: i for i, m in builtins.enumerate(mons)}
    # signed permutations send monomials to monomials, so one Reynolds
    # image per orbit suffices; otherwise every monomial is averaged
    monomial_action = all(sum(1 for x in row if x) == 1 for g in gens_key for row in g)
    rows = []
    done = set()
    for m in mons:
        if m in done:
            continue
        p = reynolds(Poly(vt, {m: 1}), group)
        if monomial_action:
            for w in group:
                done.update(act(w, Poly(vt, {m: 1})).terms)
        v = [Fraction(0)] * len(mons)
        for mm, c in p.terms.items():
            v[index[mm]] = c
        rows.append(v)
    return tuple(tuple(r) for r in row_basis(rows, len(mons))) if rows else ()


def invariant_basis(datum, d: int) -> GradedSubspace:
    """Degree-``d`` W-invariants in the reduced ring."""
    return GradedSubspace(datum.vartable, d, invariant_rows(datum, d))


def invariant_rows(datum, d: int):
    """Same as :func:`invariant_basis` but as coefficient rows over ``monomials``."""
    gens_key = tuple(tuple(tuple(r) for r in g) for g in datum.weyl_gens)
    return [list(r) for r in _orbit_sums(gens_key, datum.rank, d)]


def is_invariant(datum, p: Poly) -> bool:
    return all(act(g, p) == p for g in datum.weyl_gens)
