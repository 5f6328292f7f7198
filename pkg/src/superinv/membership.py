"""Restrictions of invariant polynomials to the Cartan subalgebra.

``f`` lies in ``I^alpha`` when ``D_h f`` is divisible by ``alpha`` for every
stored direction ``h`` of ``alpha`` (and, for roots of multiplicity two,
``D_h1 D_h2 f`` is divisible by ``alpha^2``).  The image of the invariants is
the set of W-invariant ``f`` that lie in every ``I^alpha``.

Every condition is linear in the coefficients of ``f``: the remainders from
:func:`poly.linear_division` are linear in their input.  Graded bases are
therefore kernels of stacked coefficient equations on the W-invariant basis.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Sequence

from . import weyl
from .exactalg import kernel_basis, subspace_intersection
from .poly import (GradedSubspace, LinearForm, Poly, PolyError, directional_derivative,
                   exact_quotient, format_poly, linear_division)


class MembershipError(ValueError):
    pass


@dataclass
class MembershipVerdict:
    ok: bool
    failures: list = field(default_factory=list)  # (root, tag, remainder)

    def to_dict(self):
        return {"ok": self.ok,
                "failures": [{"root": str(a) if a is not None else None, "condition": tag,
                              "remainder": format_poly(r)} for a, tag, r in self.failures]}

    def to_json(self):
        return json.dumps(self.to_dict())

    def __bool__(self):
        return self.ok


def _first_nonzero(rs):
    return next((r for r in rs if not r.is_zero()), None)


def _conditions(d, alpha: LinearForm):
    """Yield ``(tag, operator, order)``: ``operator(f)`` must lie in ``(alpha**order)``."""
    dirs = d.cartan_dirs[alpha]
    if d.nu[alpha] == 2:
        h1, h2 = dirs[0], dirs[1]
        yield "D_h1", (lambda f, h=h1: directional_derivative(f, h)), 1
        yield "D_h2", (lambda f, h=h2: directional_derivative(f, h)), 1
        yield "D_h1_D_h2_order2", (lambda f: directional_derivative(
            directional_derivative(f, h1), h2)), 2
        for h in dirs[2:]:
            yield "D_h", (lambda f, h=h: directional_derivative(f, h)), 1
    else:
        for h in dirs:
            yield "D_h", (lambda f, h=h: directional_derivative(f, h)), 1


def _check_root(d, alpha):
    if alpha not in d.nu:
        raise MembershipError("%s is not in the reduced positive odd roots" % alpha)


def in_I_alpha(f: Poly, alpha: LinearForm, d, drop_order2: bool = False) -> MembershipVerdict:
    _check_root(d, alpha)
    f = d.reduce(f)
    failures = []
    for tag, op, order in _conditions(d, alpha):
        if drop_order2 and order == 2:
            continue
        rs, _ = linear_division(op(f), alpha, order)
        bad = _first_nonzero(rs)
        if bad is not None:
            failures.append((alpha, tag, bad))
    return MembershipVerdict(not failures, failures)


def in_I(f: Poly, d) -> MembershipVerdict:
    f = d.reduce(f)
    failures = []
    for g in d.weyl_gens:
        diff = weyl.act(g, f) - f
        if not diff.is_zero():
            failures.append((None, "W-invariance", diff))
            break
    for z in d.translations:
        dz = directional_derivative(f, z)
        if not dz.is_zero():
            failures.append((None, "translation", dz))
    for alpha in d.tilde_odd_pos:
        failures.extend(in_I_alpha(f, alpha, d).failures)
    return MembershipVerdict(not failures, failures)


# ----------------------------------------------------------------------------
# graded bases


def _equations(d, polys: Sequence[Poly], ops) -> list:
    """One equation per (operator, remainder monomial): coefficients over ``polys``."""
    eqs = []
    for op, alpha, order in ops:
        rems = []
        for p in polys:
            rs, _ = linear_division(op(p), alpha, order) if alpha is not None else ([op(p)], None)
            rems.append(rs)
        keys = set()
        for rs in rems:
            for i, r in enumerate(rs):
                keys.update((i, m) for m in r.terms)
        for i, m in sorted(keys):
            eqs.append([rs[i].terms.get(m, 0) for rs in rems])
    return eqs


def _solve_on(d, basis: list, ops, deg: int) -> GradedSubspace:
    if not basis:
        return GradedSubspace(d.vartable, deg)
    eqs = _equations(d, basis, ops)
    ker = kernel_basis(eqs, len(basis)) if eqs else \
        [[int(i == j) for j in range(len(basis))] for i in range(len(basis))]
    polys = []
    for v in ker:
        acc = Poly(d.vartable)
        for c, b in zip(v, basis):
            if c:
                acc = acc + b.scale(c)
        polys.append(acc)
    return GradedSubspace.from_polys(d.vartable, deg, polys)


def _translation_ops(d):
    return [((lambda f, z=z: directional_derivative(f, z)), None, 0) for z in d.translations]


def _alpha_ops(d, alpha, drop_order2=False):
    return [(op, alpha, order) for _, op, order in _conditions(d, alpha)
            if not (drop_order2 and order == 2)]


def alpha_basis(d, alpha: LinearForm, deg: int, drop_order2: bool = False) -> GradedSubspace:
    """``I^alpha`` intersected with the degree-``deg`` W-invariants."""
    _check_root(d, alpha)
    basis = weyl.invariant_basis(d, deg).polys()
    return _solve_on(d, basis, _translation_ops(d) + _alpha_ops(d, alpha, drop_order2), deg)


def graded_basis(d, deg: int) -> GradedSubspace:
    if deg < 0:
        raise MembershipError("degree must be non-negative")
    basis = weyl.invariant_basis(d, deg).polys()
    ops = _translation_ops(d)
    for alpha in d.tilde_odd_pos:
        ops.extend(_alpha_ops(d, alpha))
    return _solve_on(d, basis, ops, deg)


def intersection_basis(d, deg: int) -> GradedSubspace:
    """Intersection over ``alpha`` of the separately computed ``I^alpha`` slices."""
    inv = weyl.invariant_basis(d, deg)
    if not d.tilde_odd_pos:
        return _solve_on(d, inv.polys(), _translation_ops(d), deg)
    slices = [alpha_basis(d, a, deg) for a in d.tilde_odd_pos]
    if any(s.dim == 0 for s in slices):
        return GradedSubspace(d.vartable, deg)
    rows = subspace_intersection([s.basis for s in slices], len(inv.ambient))
    return GradedSubspace(d.vartable, deg, rows)


@dataclass
class DegreeReport:
    degree: int
    invariants: int
    intersection: int
    closed_form: int | None
    oracle: int | None = None

    @property
    def agree(self):
        vals = [self.intersection] + [v for v in (self.closed_form, self.oracle) if v is not None]
        return len(set(vals)) == 1

    def to_dict(self):
        return {"degree": self.degree, "invariants": self.invariants,
                "intersection": self.intersection, "closed_form": self.closed_form,
                "oracle": self.oracle, "agree": self.agree}


def check_main_theorem(d, dmax: int, oracle_dims: dict | None = None,
                       closed_form: bool = True) -> list:
    """Per-degree comparison of the intersection with the closed-form span.

    The closed form must agree as a subspace, not only in dimension; a
    mismatch of spans is reported as ``closed_form = -1``.
    """
    from . import gens
    out = []
    for k in range(dmax + 1):
        inter = intersection_basis(d, k)
        cf = None
        if closed_form:
            span = gens.normal_form_basis(d, k)
            cf = span.dim if span == inter else -1
        o = oracle_dims.get(k) if oracle_dims else None
        out.append(DegreeReport(k, weyl.invariant_basis(d, k).dim, inter.dim, cf, o))
    return out


def rank1_witness(f: Poly, alpha: LinearForm, d) -> Poly:
    """``D_h f / alpha``: the coefficient of ``v* u*`` in the invariant extending ``f``."""
    _check_root(d, alpha)
    if d.nu[alpha] != 1 or len(d.cartan_dirs[alpha]) != 1:
        raise MembershipError("rank-one witness needs a single direction with nu = 1")
    f = d.reduce(f)
    try:
        return exact_quotient(directional_derivative(f, d.cartan_dirs[alpha][0]), alpha)
    except PolyError as exc:
        raise MembershipError(str(exc)) from None
