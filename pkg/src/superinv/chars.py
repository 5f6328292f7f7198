"""Truncated exponential series, Vandermonde solvers and small characters.

Characters live in the completed symmetric algebra: ``e^lambda`` is the
Taylor series of the exponential of a linear form, cut at a total degree.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactalg import solve, solve_square
from .poly import LinearForm, Poly, PolyError, VarTable
from . import weyl


class NotFound(LookupError):
    """The search space was too small; retry with a larger bound."""


class TruncSeries:
    __slots__ = ("vt", "cutoff", "body")

    def __init__(self, vt: VarTable, cutoff: int, body: Poly | None = None):
        if cutoff < 0:
            raise ValueError("cutoff must be non-negative")
        self.vt = vt
        self.cutoff = cutoff
        body = body if body is not None else Poly(vt)
        self.body = Poly(vt, {m: c for m, c in body.terms.items() if sum(m) <= cutoff})

    @classmethod
    def const(cls, vt, cutoff, c=1):
        return cls(vt, cutoff, Poly.const(vt, c))

    def _peer(self, other):
        if isinstance(other, TruncSeries):
            if other.vt != self.vt:
                raise PolyError("series over different tables")
            return other, min(self.cutoff, other.cutoff)
        return TruncSeries(self.vt, self.cutoff, Poly.const(self.vt, other)), self.cutoff

    def __add__(self, other):
        o, n = self._peer(other)
        return TruncSeries(self.vt, n, self.body + o.body)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.vt, self.cutoff, -self.body)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o, n = self._peer(other)
        out: dict = {}
        for m1, c1 in self.body.terms.items():
            d1 = sum(m1)
            for m2, c2 in o.body.terms.items():
                if d1 + sum(m2) <= n:
                    m = tuple(a + b for a, b in zip(m1, m2))
                    out[m] = out.get(m, 0) + c1 * c2
        return TruncSeries(self.vt, n, Poly(self.vt, {m: c for m, c in out.items() if c}))

    __rmul__ = __mul__

    def scale(self, c):
        return TruncSeries(self.vt, self.cutoff, self.body.scale(c))

    def component(self, d: int) -> Poly:
        if d > self.cutoff:
            raise ValueError("degree %d beyond the cutoff %d" % (d, self.cutoff))
        return self.body.homogeneous_part(d)

    def lowest(self) -> tuple[int, Poly] | None:
        """``(degree, component)`` of the lowest nonzero component, or None."""
        for d in range(self.cutoff + 1):
            c = self.body.homogeneous_part(d)
            if not c.is_zero():
                return d, c
        return None

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        n = min(self.cutoff, other.cutoff)
        return self.vt == other.vt and \
            TruncSeries(self.vt, n, self.body).body == TruncSeries(self.vt, n, other.body).body

    def __repr__(self):
        return "TruncSeries(%s + O(%d))" % (self.body, self.cutoff + 1)


def exp_weight(lam: LinearForm, N: int) -> TruncSeries:
    """``sum_{d <= N} lam^d / d!``."""
    p = lam.to_poly()
    acc = Poly.const(lam.vt, 1)
    term = Poly.const(lam.vt, 1)
    for d in range(1, N + 1):
        term = term * p
        acc = acc + term.scale(Fraction(1, math.factorial(d)))
    return TruncSeries(lam.vt, N, acc)


# ----------------------------------------------------------------------------
# Vandermonde solvers


def _check_distinct(ns: Sequence[int], k: int):
    if len(ns) != k + 1:
        raise ValueError("need exactly k+1 = %d integers" % (k + 1))
    if any(n < 0 for n in ns):
        raise ValueError("integers must be non-negative")
    if len(set(ns)) != len(ns):
        raise ValueError("singular system: repeated n")


def sinh_solver(k: int, ns: Sequence[int]) -> list:
    """``c`` with ``sum c_i sinh((n_i+1)x) = x^(2k+1) + O(x^(2k+3))``."""
    _check_distinct(ns, k)
    rows = [[Fraction(n + 1) ** (2 * j + 1) for n in ns] for j in range(k + 1)]
    rhs = [0] * k + [math.factorial(2 * k + 1)]
    return solve_square(rows, rhs)


def cosh_solver(k: int, ns: Sequence[int]) -> list:
    """``c`` with ``sum c_i cosh(n_i x) = x^(2k) + O(x^(2k+2))``."""
    _check_distinct(ns, k)
    rows = [[Fraction(n) ** (2 * j) if (n or j) else Fraction(1) for n in ns] for j in range(k + 1)]
    rhs = [0] * k + [math.factorial(2 * k)]
    return solve_square(rows, rhs)


def sinh_taylor(cs, ns, order: int) -> list:
    """Taylor coefficients of ``sum c_i sinh((n_i+1)x)`` up to ``x^order``."""
    out = []
    for p in range(order + 1):
        if p % 2 == 0:
            out.append(Fraction(0))
        else:
            out.append(sum((c * Fraction(n + 1) ** p for c, n in zip(cs, ns)), Fraction(0))
                       / math.factorial(p))
    return out


def cosh_taylor(cs, ns, order: int) -> list:
    out = []
    for p in range(order + 1):
        if p % 2:
            out.append(Fraction(0))
        else:
            out.append(sum((c * (Fraction(n) ** p if (n or p) else 1) for c, n in zip(cs, ns)),
                           Fraction(0)) / math.factorial(p))
    return out


# ----------------------------------------------------------------------------
# characters


def _ssyt_contents(shape: Sequence[int], r: int):
    """Contents (weight vectors) of semistandard tableaux of ``shape`` in 1..r."""
    cells = [(i, j) for i, row in enumerate(shape) for j in range(row)]
    out = []

    def rec(idx, filling):
        if idx == len(cells):
            w = [0] * r
            for v in filling.values():
                w[v] += 1
            out.append(tuple(w))
            return
        i, j = cells[idx]
        lo = 0
        if j > 0:
            lo = max(lo, filling[(i, j - 1)])
        if i > 0:
            lo = max(lo, filling[(i - 1, j)] + 1)
        for v in range(lo, r):
            filling[(i, j)] = v
            rec(idx + 1, filling)
            del filling[(i, j)]

    rec(0, {})
    return out


def gl_weights(lam: Sequence[int]) -> list:
    """Weights with multiplicity of the irreducible gl(r)-module of highest weight ``lam``."""
    r = len(lam)
    if r > 3 or r < 1:
        raise ValueError("gl(r) characters are supported for r <= 3")
    if any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError("highest weight is not dominant")
    shift = lam[-1]
    shape = [a - shift for a in lam if a - shift > 0]
    return [tuple(x + shift for x in w) for w in _ssyt_contents(shape, r)]


def schur_char(weight, N: int, vt: VarTable | None = None) -> TruncSeries:
    """Character of a small irreducible module as a truncated series.

    ``weight`` is an integer ``n`` for the (n+1)-dimensional sl(2)-module (the
    series lives in one coordinate ``phi``) or a dominant tuple for gl(r),
    ``r <= 3`` (coordinates ``x1..xr`` unless ``vt`` is given).
    """
    if isinstance(weight, int):
        if weight < 0:
            raise ValueError("sl(2) highest weight must be non-negative")
        vt = vt or VarTable(("phi",))
        acc = TruncSeries(vt, N)
        for j in range(weight + 1):
            acc = acc + exp_weight(LinearForm(vt, [weight - 2 * j] + [0] * (len(vt) - 1)), N)
        return acc
    lam = tuple(weight)
    vt = vt or VarTable(tuple("x%d" % (i + 1) for i in range(len(lam))))
    if len(vt) != len(lam):
        raise ValueError("table size does not match the rank")
    acc = TruncSeries(vt, N)
    for w in gl_weights(lam):
        acc = acc + exp_weight(LinearForm(vt, w), N)
    return acc


def _dominant(n: int, bound: int):
    for size in range(bound + 1):
        for lam in itertools.product(range(size + 1), repeat=n):
            if sum(lam) == size and all(a >= b for a, b in zip(lam, lam[1:])):
                yield lam


@dataclass
class Certificate:
    coefficients: dict  # dominant weight -> Fraction
    series: TruncSeries
    lowest: Poly


def prop14_certificate(d, f: Poly, search_bound: int) -> Certificate:
    """Write ``Q f`` as the lowest component of ``prod(1 - e^{-eps_i}) * sum c_lam ch L^lam``.

    Only ``vect(0|n)``, ``n <= 3``: its degree-zero part is ``gl(n)`` and the
    weights of the degree ``-1`` part are ``-eps_i``.
    """
    if d.family != "vect" or d.spec.ranks[0] > 3:
        raise ValueError("certificates are implemented for vect(0|n), n <= 3")
    f = d.reduce(f)
    if not weyl.is_invariant(d, f):
        raise ValueError("f is not W-invariant")
    if not f.is_homogeneous():
        raise ValueError("f must be homogeneous")
    vt = d.vartable
    n = len(vt)
    fd = max(f.degree(), 0)
    N = n + fd
    pref = TruncSeries.const(vt, N)
    for i in range(n):
        e = [0] * n
        e[i] = -1
        pref = pref * (1 - exp_weight(LinearForm(vt, e), N))
    lams = list(_dominant(n, search_bound))
    prods = [pref * schur_char(lam, N, vt) for lam in lams]
    target = Poly.const(vt, 1)
    for x in vt.names:
        target = target * Poly.var(vt, x)
    target = target * f
    keys = sorted({m for p in prods for m in p.body.terms} | set(target.terms))
    rows, rhs = [], []
    for m in keys:
        rows.append([p.body.terms.get(m, 0) for p in prods])
        rhs.append(target.terms.get(m, 0) if sum(m) == N else 0)
    try:
        cs = solve(rows, rhs)
    except ValueError:
        raise NotFound("no combination of characters with |lambda| <= %d" % search_bound) from None
    series = TruncSeries(vt, N)
    for c, p in zip(cs, prods):
        if c:
            series = series + p.scale(c)
    low = series.lowest()
    if low is None or low[1] != target:
        raise NotFound("verification failed")
    return Certificate({lam: c for lam, c in zip(lams, cs) if c}, series, low[1])
