"""Sparse multivariate polynomials with exact rational coefficients.

A :class:`Poly` maps exponent tuples to nonzero Fractions over a fixed
:class:`VarTable`.  Besides ring arithmetic this module carries the three
primitives the membership tests are built from: directional derivatives,
simultaneous substitution, and expansion in powers of a linear form.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .exactalg import as_rational, row_basis, subspace_intersection


class PolyError(ValueError):
    """Misuse of the polynomial API (mismatched tables, zero divisor...)."""


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__("%s at position %d" % (message, position))
        self.position = position


@dataclass(frozen=True)
class VarTable:
    names: tuple
    blocks: tuple = ()

    def __post_init__(self):
        if len(set(self.names)) != len(self.names):
            raise PolyError("duplicate coordinate names")
        if not self.blocks:
            object.__setattr__(self, "blocks", tuple(_guess_block(n) for n in self.names))
        if len(self.blocks) != len(self.names):
            raise PolyError("one block tag per coordinate")

    def __len__(self):
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise PolyError("unknown coordinate %r" % (name,)) from None

    def extend(self, *names: str) -> "VarTable":
        return VarTable(self.names + tuple(names))

    def drop(self, name: str) -> "VarTable":
        i = self.index(name)
        return VarTable(self.names[:i] + self.names[i + 1:], self.blocks[:i] + self.blocks[i + 1:])


def _guess_block(name: str) -> str:
    return "delta" if name.startswith("d") else "epsilon"


def _gen_key(mono):
    return (-sum(mono), tuple(-e for e in mono))


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> tuple:
    """All exponent tuples of the given total degree, graded-lex descending."""
    if nvars == 0:
        return ((),) if degree == 0 else ()
    out = []
    for first in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - first):
            out.append((first,) + rest)
    return tuple(out)


class Poly:
    __slots__ = ("vt", "terms", "_hash")

    def __init__(self, vt: VarTable, terms: Mapping | None = None):
        self.vt = vt
        clean = {}
        if terms:
            n = len(vt)
            for m, c in terms.items():
                if len(m) != n:
                    raise PolyError("monomial length does not match the table")
                c = as_rational(c)
                if c != 0:
                    clean[tuple(m)] = c
        self.terms = clean
        self._hash = None

    # construction -------------------------------------------------------
    @classmethod
    def zero(cls, vt):
        return cls(vt)

    @classmethod
    def const(cls, vt, c):
        return cls(vt, {(0,) * len(vt): c})

    @classmethod
    def var(cls, vt, name_or_index):
        i = name_or_index if isinstance(name_or_index, int) else vt.index(name_or_index)
        m = [0] * len(vt)
        m[i] = 1
        return cls(vt, {tuple(m): 1})

    @classmethod
    def _raw(cls, vt, terms):
        p = cls.__new__(cls)
        p.vt = vt
        p.terms = terms
        p._hash = None
        return p

    # inspection ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        return max((sum(m) for m in self.terms), default=-1)

    def is_homogeneous(self):
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_part(self, d):
        return Poly._raw(self.vt, {m: c for m, c in self.terms.items() if sum(m) == d})

    def coeff(self, mono):
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self):
        return self.terms.get((0,) * len(self.vt), Fraction(0))

    def uses(self, i: int) -> bool:
        return any(m[i] for m in self.terms)

    # arithmetic ---------------------------------------------------------
    def _check(self, other):
        if not isinstance(other, Poly):
            return Poly.const(self.vt, other)
        if other.vt != self.vt:
            raise PolyError("polynomials live over different coordinate tables")
        return other

    def __add__(self, other):
        other = self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Poly._raw(self.vt, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.vt, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._check(other))

    def __rsub__(self, other):
        return self._check(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        other = self._check(other)
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return Poly._raw(self.vt, out)

    def __rmul__(self, other):
        return self.scale(other)

    def scale(self, c):
        c = as_rational(c)
        if c == 0:
            return Poly(self.vt)
        return Poly._raw(self.vt, {m: v * c for m, v in self.terms.items()})

    def __truediv__(self, c):
        return self.scale(1 / as_rational(c))

    def __pow__(self, k: int):
        if k < 0:
            raise PolyError("negative power")
        result = Poly.const(self.vt, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vt == other.vt and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == Poly.const(self.vt, other).terms
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.vt, frozenset(self.terms.items())))
        return self._hash

    def __repr__(self):
        return "Poly(%s)" % format_poly(self)

    def __str__(self):
        return format_poly(self)

    # calculus -----------------------------------------------------------
    def partial(self, i: int) -> "Poly":
        out = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = list(m)
                mm[i] = e - 1
                out[tuple(mm)] = c * e
        return Poly._raw(self.vt, out)

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        pt = [as_rational(x) for x in point]
        for m, c in self.terms.items():
            v = c
            for x, e in zip(pt, m):
                if e:
                    v *= x ** e
            total += v
        return total


class LinearForm:
    """A homogeneous linear polynomial, kept as its coefficient vector."""

    __slots__ = ("vt", "coeffs")

    def __init__(self, vt: VarTable, coeffs: Sequence):
        if len(coeffs) != len(vt):
            raise PolyError("coefficient vector length does not match the table")
        self.vt = vt
        self.coeffs = tuple(as_rational(c) for c in coeffs)

    @classmethod
    def from_poly(cls, p: Poly) -> "LinearForm":
        n = len(p.vt)
        co = [Fraction(0)] * n
        for m, c in p.terms.items():
            if sum(m) != 1:
                raise PolyError("not a linear form: %s" % p)
            co[m.index(1)] = c
        return cls(p.vt, co)

    @classmethod
    def parse(cls, vt: VarTable, text: str) -> "LinearForm":
        return cls.from_poly(parse_poly(text, vt))

    def is_zero(self):
        return not any(self.coeffs)

    def to_poly(self) -> Poly:
        n = len(self.vt)
        terms = {}
        for i, c in enumerate(self.coeffs):
            if c:
                m = [0] * n
                m[i] = 1
                terms[tuple(m)] = c
        return Poly._raw(self.vt, terms)

    def __call__(self, vector: Sequence) -> Fraction:
        return sum((c * as_rational(v) for c, v in zip(self.coeffs, vector)), Fraction(0))

    def pivot(self) -> int:
        for i, c in enumerate(self.coeffs):
            if c:
                return i
        raise PolyError("zero linear form has no pivot")

    def __add__(self, other):
        return LinearForm(self.vt, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return LinearForm(self.vt, [-a for a in self.coeffs])

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = as_rational(c)
        return LinearForm(self.vt, [a * c for a in self.coeffs])

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __eq__(self, other):
        return isinstance(other, LinearForm) and self.vt == other.vt and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.vt, self.coeffs))

    def __repr__(self):
        return "LinearForm(%s)" % format_poly(self.to_poly())

    def __str__(self):
        return format_poly(self.to_poly())


# ----------------------------------------------------------------------------
# derivatives, substitution, division by powers of a linear form


def directional_derivative(p: Poly, h: Sequence) -> Poly:
    """``sum_i h_i dp/dx_i``."""
    if len(h) != len(p.vt):
        raise PolyError("direction has wrong length")
    out = Poly(p.vt)
    for i, hi in enumerate(h):
        hi = as_rational(hi)
        if hi:
            out = out + p.partial(i).scale(hi)
    return out


def _image(value, target: VarTable) -> Poly:
    if isinstance(value, Poly):
        if value.vt != target:
            raise PolyError("substitution value lives over another table")
        return value
    if isinstance(value, LinearForm):
        return _image(value.to_poly(), target)
    return Poly.const(target, value)


def substitute(p: Poly, assignments: Mapping, target: VarTable | None = None) -> Poly:
    """Simultaneous substitution of coordinates (by name or index).

    Values may be Polys or LinearForms over ``target`` (defaults to ``p``'s
    table) or scalars.  Coordinates not mentioned are sent to the coordinate
    of the same name in ``target``.
    """
    target = target or p.vt
    images = []
    keyed = {}
    for k, v in assignments.items():
        i = k if isinstance(k, int) else p.vt.index(k)
        keyed[i] = v
    for i, name in enumerate(p.vt.names):
        if i in keyed:
            images.append(_image(keyed[i], target))
        else:
            images.append(Poly.var(target, target.index(name)))
    return evaluate_at(p, images, target)


def evaluate_at(p: Poly, images: Sequence[Poly], target: VarTable) -> Poly:
    """Compose ``p`` with a list of polynomial images of its coordinates."""
    cache: dict = {}

    def power(i, e):
        key = (i, e)
        if key not in cache:
            cache[key] = images[i] ** e
        return cache[key]

    out: dict = {}
    one = (0,) * len(target)
    for m, c in p.terms.items():
        term = Poly._raw(target, {one: c})
        for i, e in enumerate(m):
            if e:
                term = term * power(i, e)
        for mm, cc in term.terms.items():
            v = out.get(mm, 0) + cc
            if v:
                out[mm] = v
            else:
                out.pop(mm, None)
    return Poly._raw(target, out)


def linear_division(p: Poly, ell: LinearForm, k: int = 1):
    """Expand ``p`` in powers of ``ell``.

    Returns ``(rs, tail)`` with ``p == sum(rs[i] * ell**i) + tail * ell**k``
    where no ``rs[i]`` involves the pivot coordinate of ``ell`` (its first
    nonzero coefficient).  ``p`` lies in the ideal ``(ell**k)`` iff all
    ``rs`` vanish.
    """
    if ell.vt != p.vt:
        raise PolyError("linear form lives over another table")
    if ell.is_zero():
        raise PolyError("cannot divide by the zero linear form")
    if k < 1:
        raise PolyError("order must be at least 1")
    piv = ell.pivot()
    a = ell.coeffs[piv]
    n = len(p.vt)
    step = [Fraction(0)] * n
    step[piv] = 1 / a
    # x_piv -> x_piv - ell/a puts us on the hyperplane ell = 0
    on_plane = Poly.var(p.vt, piv) - ell.to_poly().scale(1 / a)
    coeffs = []
    d = p
    top = max(p.degree(), 0)
    for i in range(top + 1):
        coeffs.append(substitute(d, {piv: on_plane}).scale(Fraction(1, math.factorial(i))))
        d = directional_derivative(d, step)
    rs = coeffs[:k] + [Poly(p.vt)] * max(0, k - len(coeffs))
    tail = Poly(p.vt)
    lp = ell.to_poly()
    for i in range(len(coeffs) - 1, k - 1, -1):
        tail = tail * lp + coeffs[i]
    return rs, tail


def divides(ell: LinearForm, p: Poly, k: int = 1) -> bool:
    rs, _ = linear_division(p, ell, k)
    return all(r.is_zero() for r in rs)


def exact_quotient(p: Poly, ell: LinearForm) -> Poly:
    rs, tail = linear_division(p, ell, 1)
    if not rs[0].is_zero():
        raise PolyError("%s is not divisible by %s" % (p, ell))
    return tail


# ----------------------------------------------------------------------------
# text format

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>[-+*^]))")


def _fmt_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else "%d/%d" % (c.numerator, c.denominator)


def format_poly(p: Poly) -> str:
    if not p.terms:
        return "0"
    parts = []
    for m in sorted(p.terms, key=_gen_key):
        c = p.terms[m]
        sign = "-" if c < 0 else "+"
        a = abs(c)
        factors = []
        for name, e in zip(p.vt.names, m):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        if not factors:
            body = _fmt_coeff(a)
        elif a == 1:
            body = "*".join(factors)
        else:
            body = _fmt_coeff(a) + "*" + "*".join(factors)
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


def parse_poly(text: str, vt: VarTable) -> Poly:
    """Parse ``"3/2*e1*d1 - e2^2 + 1"`` style text over ``vt``."""
    tokens = []
    pos = 0
    stripped = text.rstrip()
    while pos < len(stripped):
        m = _TOKEN.match(stripped, pos)
        if not m or m.end() == pos:
            raise ParseError("unexpected character %r" % stripped[pos:pos + 1], pos)
        kind = m.lastgroup
        start = m.start(kind)
        tokens.append((kind, m.group(kind), start))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    i = 0
    n = len(vt)
    result: dict = {}

    def peek():
        return tokens[i]

    def expect_factor():
        nonlocal i
        kind, val, at = tokens[i]
        if kind == "num":
            i += 1
            return Fraction(val), None
        if kind == "name":
            if val not in vt.names:
                raise ParseError("unknown coordinate %r" % val, at)
            i += 1
            e = 1
            if tokens[i][0] == "op" and tokens[i][1] == "^":
                i += 1
                k2, v2, a2 = tokens[i]
                if k2 != "num" or "/" in v2:
                    raise ParseError("expected integer exponent", a2)
                e = int(v2)
                i += 1
            return None, (vt.names.index(val), e)
        raise ParseError("expected a number or coordinate", at)

    sign = 1
    kind, val, at = peek()
    if kind == "end":
        raise ParseError("empty polynomial", at)
    if kind == "op" and val in "+-":
        sign = -1 if val == "-" else 1
        i += 1
    while True:
        coeff = Fraction(sign)
        mono = [0] * n
        while True:
            c, v = expect_factor()
            if c is not None:
                coeff *= c
            else:
                mono[v[0]] += v[1]
            kind, val, at = peek()
            if kind == "op" and val == "*":
                i += 1
                continue
            break
        key = tuple(mono)
        result[key] = result.get(key, 0) + coeff
        kind, val, at = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            sign = -1 if val == "-" else 1
            i += 1
            continue
        raise ParseError("expected '+' or '-'", at)
    return Poly(vt, result)


# ----------------------------------------------------------------------------
# graded subspaces


class GradedSubspace:
    """Span of homogeneous degree-``degree`` polynomials over ``vt``.

    The basis is stored in reduced row-echelon form relative to the
    graded-lex monomial list, so equal spans compare equal.
    """

    def __init__(self, vt: VarTable, degree: int, rows: Iterable[Sequence] = ()):
        self.vt = vt
        self.degree = degree
        self.ambient = monomials(len(vt), degree)
        rows = [list(r) for r in rows]
        self.basis = row_basis(rows, len(self.ambient)) if rows else []

    @classmethod
    def from_polys(cls, vt: VarTable, degree: int, polys: Iterable[Poly]) -> "GradedSubspace":
        amb = monomials(len(vt), degree)
        index = {m: i for i, m in enumerate(amb)}
        rows = []
        for p in polys:
            if p.vt != vt:
                raise PolyError("polynomial over another table")
            if p.is_zero():
                continue
            r = [Fraction(0)] * len(amb)
            for m, c in p.terms.items():
                if sum(m) != degree:
                    raise PolyError("polynomial %s is not homogeneous of degree %d" % (p, degree))
                r[index[m]] = c
            rows.append(r)
        return cls(vt, degree, rows)

    @classmethod
    def full(cls, vt, degree):
        n = len(monomials(len(vt), degree))
        return cls(vt, degree, [[int(i == j) for j in range(n)] for i in range(n)])

    @property
    def dim(self):
        return len(self.basis)

    def vector(self, p: Poly) -> list:
        index = {m: i for i, m in enumerate(self.ambient)}
        r = [Fraction(0)] * len(self.ambient)
        for m, c in p.terms.items():
            if m not in index:
                raise PolyError("polynomial is not homogeneous of degree %d" % self.degree)
            r[index[m]] = c
        return r

    def polys(self) -> list:
        return [Poly(self.vt, {m: c for m, c in zip(self.ambient, r) if c}) for r in self.basis]

    def contains(self, p: Poly) -> bool:
        if p.is_zero():
            return True
        if p.degree() != self.degree or not p.is_homogeneous():
            return False
        return len(row_basis(self.basis + [self.vector(p)], len(self.ambient))) == self.dim

    def intersect(self, *others: "GradedSubspace") -> "GradedSubspace":
        for o in others:
            if o.vt != self.vt or o.degree != self.degree:
                raise PolyError("subspaces live in different ambients")
        bases = [self.basis] + [o.basis for o in others]
        if any(not b for b in bases):
            return GradedSubspace(self.vt, self.degree)
        return GradedSubspace(self.vt, self.degree,
                              subspace_intersection(bases, len(self.ambient)))

    def __add__(self, other: "GradedSubspace") -> "GradedSubspace":
        return GradedSubspace(self.vt, self.degree, self.basis + other.basis)

    def issubset(self, other: "GradedSubspace") -> bool:
        return len(row_basis(other.basis + self.basis, len(self.ambient))) == other.dim

    def __eq__(self, other):
        return (isinstance(other, GradedSubspace) and self.vt == other.vt
                and self.degree == other.degree and self.basis == other.basis)

    def __repr__(self):
        return "GradedSubspace(degree=%d, dim=%d)" % (self.degree, self.dim)
