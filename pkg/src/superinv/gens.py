"""Closed-form generators of the restricted invariants, family by family.

``normal_form_basis`` assembles the degree slice of each family's explicit
description: a span of products of power sums (or generating-function
coefficients) plus an odd-root product times W-invariants.  It is computed
independently of :mod:`membership`, so comparing the two is a genuine check.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from . import weyl
from .membership import in_I
from .poly import GradedSubspace, Poly, PolyError, directional_derivative, format_poly, parse_poly
from .superalg import osp_alpha_lambdas


class GeneratorError(ValueError):
    pass


class TheoremViolation(RuntimeError):
    pass


@dataclass
class GeneratorSet:
    family: str
    items: list = field(default_factory=list)  # (name, Poly)

    def to_list(self):
        return [{"name": n, "degree": p.degree(), "polynomial": format_poly(p)} for n, p in self.items]


def _full_var(d, name):
    return Poly.var(d.full, name)


def _names(d, block):
    return [n for n, b in zip(d.full.names, d.full.blocks) if b == block]


def _signed_power_sum(d, k, eps_sign=1, del_sign=-1):
    p = Poly(d.full)
    for n in _names(d, "epsilon"):
        p = p + _full_var(d, n) ** k * eps_sign
    for n in _names(d, "delta"):
        p = p + _full_var(d, n) ** k * del_sign
    return d.reduce(p)


def power_sums(d, k: int) -> Poly:
    """``Delta_k`` for gl-type, ``Delta_{2k}`` for osp, ``Delta_{2k+1}`` for pe-type."""
    f = d.family
    if f in ("gl", "sl", "psl"):
        if k < 1:
            raise GeneratorError("k must be positive")
        return _signed_power_sum(d, k)
    if f in ("ospB", "ospD"):
        if k < 1:
            raise GeneratorError("k must be positive")
        return _signed_power_sum(d, 2 * k)
    if f in ("pe", "spe"):
        if k < 0:
            raise GeneratorError("k must be non-negative")
        return _signed_power_sum(d, 2 * k + 1)
    raise GeneratorError("no power sums for family %s" % f)


# ----------------------------------------------------------------------------
# generating functions, expanded in s = 1/t


def _series_mul(a, b, order):
    out = [None] * (order + 1)
    for i, x in enumerate(a):
        if x.is_zero():
            continue
        for j in range(0, order + 1 - i):
            y = b[j]
            if y.is_zero():
                continue
            out[i + j] = x * y if out[i + j] is None else out[i + j] + x * y
    vt = a[0].vt
    return [o if o is not None else Poly(vt) for o in out]


def _factor_series(a: Poly, power: int, sign: int, order: int):
    """Series of ``(1 - sign*a*s**power)`` (``inverse=False``) as a list."""
    vt = a.vt
    out = [Poly(vt) for _ in range(order + 1)]
    out[0] = Poly.const(vt, 1)
    if power <= order:
        out[power] = a.scale(-sign)
    return out


def _geometric(a: Poly, power: int, sign: int, order: int):
    """Series of ``1 / (1 - sign*a*s**power)``."""
    vt = a.vt
    out = [Poly(vt) for _ in range(order + 1)]
    term = Poly.const(vt, 1)
    for k in range(0, order // power + 1):
        out[k * power] = term
        term = term * a.scale(sign)
    return out


def _ratio_series(d, num, den, order):
    """``prod(1 - c*a*s^p) / prod(1 - c*a*s^p)`` for (poly, power, sign) lists."""
    ser = [Poly.const(d.full, 1)] + [Poly(d.full)] * order
    for a, p, c in num:
        ser = _series_mul(ser, _factor_series(a, p, c, order), order)
    for a, p, c in den:
        ser = _series_mul(ser, _geometric(a, p, c, order), order)
    return [d.reduce(x) for x in ser]


def F_series(d, order: int) -> list:
    """Coefficients of ``t^-1 .. t^-order`` of the family's ``F(t)`` at infinity.

    The integral power of ``t`` is factored out first, so the ``k``-th entry
    is homogeneous of degree ``k``.
    """
    if order < 1:
        raise GeneratorError("order must be positive")
    f = d.family
    eps = [_full_var(d, n) for n in _names(d, "epsilon")]
    dels = [_full_var(d, n) for n in _names(d, "delta")]
    if f in ("gl", "sl", "psl"):
        ser = _ratio_series(d, [(y, 1, 1) for y in dels], [(x, 1, 1) for x in eps], order)
    elif f in ("ospB", "ospD"):
        ser = _ratio_series(d, [(y * y, 2, 1) for y in dels], [(x * x, 2, 1) for x in eps], order)
    elif f == "pe" or (f == "spe" and len(eps) != 4):
        ser = _ratio_series(d, [(x, 1, -1) for x in eps], [(x, 1, 1) for x in eps], order)
    elif f == "spe":
        ser = _ratio_series(d, [(x, 1, 1) for x in eps], [(x, 1, -1) for x in eps], order)
    elif f == "ab3":
        half = Fraction(1, 2)
        e1, e2, e3 = eps
        dl = dels[0]
        odd = [(dl + e1 * s1 + e2 * s2 + e3 * s3).scale(half * sd)
               for sd, s1, s2, s3 in itertools.product((1, -1), repeat=4)]
        even = [x * s for x in eps for s in (1, -1)] + [dl, -dl]
        even += [(x * a + y * b) for x, y in itertools.combinations(eps, 2)
                 for a, b in itertools.product((1, -1), repeat=2)]
        ser = _ratio_series(d, [(a, 1, 1) for a in odd], [(a, 1, 1) for a in even], order)
    else:
        raise GeneratorError("no generating function for family %s" % f)
    return ser[1:]


def log_series(d, order: int) -> list:
    """Coefficients of ``log`` of the normalised ``F`` (gl-type), degree 1..order."""
    ser = [Poly.const(d.vartable, 1)] + F_series(d, order)
    # log(1 + u) with u the positive-degree part; only degrees <= order matter
    u = [Poly(d.vartable)] + ser[1:]
    out = [Poly(d.vartable) for _ in range(order + 1)]
    power = list(u)
    for k in range(1, order + 1):
        for i in range(order + 1):
            if not power[i].is_zero():
                out[i] = out[i] + power[i].scale(Fraction((-1) ** (k + 1), k))
        power = _series_mul(power, u, order)
    return out[1:]


# ----------------------------------------------------------------------------


def odd_root_product(d, with_multiplicity: bool = False) -> Poly:
    """Product of the reduced positive odd roots (each taken ``nu`` times if asked)."""
    if not d.tilde_odd_pos:
        raise GeneratorError("no isotropic odd roots")
    q = Poly.const(d.vartable, 1)
    for a in d.tilde_odd_pos:
        q = q * a.to_poly() ** (d.nu[a] if with_multiplicity else 1)
    return q


def special_invariants(d) -> GeneratorSet:
    f = d.family
    vt = d.full
    if f == "osp_alpha":
        lam = osp_alpha_lambdas(d.spec.alpha)
        q = Poly(vt)
        for i, n in enumerate(("e1", "e2", "e3")):
            q = q + Poly.var(vt, n) ** 2 * (1 / lam[i])
        return GeneratorSet(f, [("q", q)])
    if f == "ag2":
        p = parse_poly("3*d1^2 - 2*l1^2 - 2*l2^2 - 2*l3^2", vt)
        return GeneratorSet(f, [("q", d.reduce(p))])
    if f == "ab3":
        return GeneratorSet(f, [("L2", ab3_L2(d)), ("L6", ab3_L6(d))])
    raise GeneratorError("no special invariants for family %s" % f)


def ab3_L2(d) -> Poly:
    return parse_poly("3*e1^2 + 3*e2^2 + 3*e3^2 - d1^2", d.full)


def ab3_L6(d) -> Poly:
    vt = d.full
    e1, e2, e3, dl = (Poly.var(vt, n) for n in ("e1", "e2", "e3", "d1"))
    p = dl ** 6 + e1 ** 6 + e2 ** 6 + e3 ** 6
    for x, y in ((e1, e2), (e1, e3), (e2, e3)):
        p = p + (x - y) ** 6 + (x + y) ** 6
    tail = Poly(vt)
    for s1, s2, s3 in itertools.product((1, -1), repeat=3):
        tail = tail + (dl + e1 * s1 + e2 * s2 + e3 * s3) ** 6
    return p - tail.scale(Fraction(1, 64))


# ----------------------------------------------------------------------------
# normal forms


def _products(vt, gens, deg):
    """All products of ``gens`` (list of homogeneous Polys) of total degree ``deg``."""
    gens = [g for g in gens if not g.is_zero() and g.degree() > 0]
    if deg == 0:
        return [Poly.const(vt, 1)]
    out = []

    def rec(start, remaining, acc):
        if remaining == 0:
            out.append(acc)
            return
        for i in range(start, len(gens)):
            g = gens[i]
            if g.degree() <= remaining:
                rec(i, remaining - g.degree(), acc * g)

    rec(0, deg, Poly.const(vt, 1))
    return out


def _times_invariants(d, q: Poly, deg: int):
    k = deg - q.degree()
    if k < 0:
        return []
    return [q * b for b in weyl.invariant_basis(d, k).polys()]


def _span(d, deg, polys):
    return GradedSubspace.from_polys(d.vartable, deg, [p for p in polys if not p.is_zero()])


def _kernel_of_translations(d, space: GradedSubspace) -> GradedSubspace:
    from .exactalg import kernel_basis
    polys = space.polys()
    if not polys or not d.translations:
        return space
    eqs = []
    for z in d.translations:
        ims = [directional_derivative(p, z) for p in polys]
        keys = sorted({m for p in ims for m in p.terms})
        eqs.extend([p.terms.get(m, 0) for p in ims] for m in keys)
    ker = kernel_basis(eqs, len(polys)) if eqs else \
        [[int(i == j) for j in range(len(polys))] for i in range(len(polys))]
    comb = []
    for v in ker:
        acc = Poly(d.vartable)
        for c, p in zip(v, polys):
            if c:
                acc = acc + p.scale(c)
        comb.append(acc)
    return _span(d, space.degree, comb)


def generator_set(d, max_degree: int = 8) -> GeneratorSet:
    """The generators entering the family's normal form, up to ``max_degree``.

    For psl the power sums are not translation invariant themselves, so the
    set is a minimal generating system of the filtered normal form instead.
    """
    if d.family != "psl":
        return _raw_generators(d, max_degree)
    items = []
    for k in range(1, max_degree + 1):
        cur = _span(d, k, _products(d.vartable, [p for _, p in items], k))
        j = 0
        for p in normal_form_basis(d, k).polys():
            if not cur.contains(p):
                j += 1
                items.append(("I_%d_%d" % (k, j), p))
                cur = cur + _span(d, k, [p])
    return GeneratorSet(d.family, items)


def _raw_generators(d, max_degree: int) -> GeneratorSet:
    f = d.family
    items = []
    if f in ("gl", "sl", "psl"):
        items = [("Delta_%d" % k, power_sums(d, k)) for k in range(1, max_degree + 1)]
        if (f in ("sl", "psl")) and d.spec.ranks == (2, 2):
            items = [("mu_%d" % k, m) for k, m in enumerate(F_series(d, max_degree), 1)
                     if not m.is_zero()]
    elif f in ("ospB", "ospD"):
        items = [("Delta_%d" % (2 * k), power_sums(d, k)) for k in range(1, max_degree // 2 + 1)]
    elif f in ("pe", "spe"):
        if f == "spe" and d.spec.ranks[0] == 4:
            items = [("F_%d" % k, m) for k, m in enumerate(F_series(d, max_degree), 1)
                     if not m.is_zero()]
        else:
            items = [("Delta_%d" % (2 * k + 1), power_sums(d, k))
                     for k in range((max_degree + 1) // 2)]
    elif f in ("osp_alpha", "ag2", "ab3"):
        items = [(n, d.reduce(p)) for n, p in special_invariants(d).items]
    if f in ("ospD", "osp_alpha", "ag2", "ab3", "spe", "vect", "svect", "svect_tilde") \
            or (f == "sl" and d.spec.ranks in ((2, 2),)) or (f == "psl" and d.spec.ranks == (2, 2)):
        items.append(("Q", _f1_factor(d)))
    items = [(n, p) for n, p in items if not p.is_zero() and p.degree() <= max_degree]
    return GeneratorSet(f, items)


def _f1_factor(d) -> Poly:
    f = d.family
    if f == "ospD":
        m = d.spec.ranks[0]
        eps = [Poly.var(d.full, "e%d" % (i + 1)) for i in range(m)]
        dels = _names(d, "delta")
        q = Poly.const(d.full, 1)
        for x in eps:
            q = q * x
            for y in dels:
                q = q * (x * x - Poly.var(d.full, y) ** 2)
        return d.reduce(q)
    if f in ("vect", "svect", "svect_tilde"):
        q = Poly.const(d.full, 1)
        for n in d.full.names:
            q = q * Poly.var(d.full, n)
        return d.reduce(q)
    if f in ("sl", "psl") or (f == "spe" and d.spec.ranks[0] == 4):
        return odd_root_product(d) ** 2
    return odd_root_product(d)


def normal_form_basis(d, deg: int) -> GradedSubspace:
    if deg < 0:
        raise GeneratorError("degree must be non-negative")
    f = d.family
    vt = d.vartable
    gs = _raw_generators(d, max(deg, 1)).items
    main = [p for n, p in gs if n != "Q"]
    q = next((p for n, p in gs if n == "Q"), None)
    polys = []
    three_part = (f in ("sl", "psl") and d.spec.ranks == (2, 2)) or \
        (f == "spe" and d.spec.ranks[0] == 4)
    if three_part:
        # c + (single F-coefficient) + Q^2 * invariants
        if deg == 0:
            polys.append(Poly.const(vt, 1))
        polys.extend(p for p in main if p.degree() == deg)
    elif f in ("vect", "svect", "svect_tilde"):
        if deg == 0:
            polys.append(Poly.const(vt, 1))
    else:
        polys.extend(_products(vt, main, deg))
    if q is not None:
        polys.extend(_times_invariants(d, q, deg))
    space = _span(d, deg, polys)
    if f == "psl":
        space = _kernel_of_translations(d, space)
    return space


def express_PQ(f: Poly, d) -> Poly:
    """``P = Q f`` with ``Q`` the odd-root product (roots of multiplicity two squared)."""
    f = d.reduce(f)
    if not weyl.is_invariant(d, f):
        raise GeneratorError("f is not W-invariant")
    if not d.tilde_odd_pos:
        p = f
    else:
        p = odd_root_product(d, with_multiplicity=True) * f
    if d.translations:
        for z in d.translations:
            if not directional_derivative(p, z).is_zero():
                raise GeneratorError("P is not translation invariant; restrict f first")
    verdict = in_I(p, d)
    if not verdict.ok:
        raise TheoremViolation("Q*f is not a restricted invariant: %s" % verdict.to_json())
    return p


__all__ = ["GeneratorSet", "GeneratorError", "TheoremViolation", "power_sums", "F_series",
           "log_series", "odd_root_product", "special_invariants", "normal_form_basis",
           "express_PQ", "generator_set", "PolyError"]
