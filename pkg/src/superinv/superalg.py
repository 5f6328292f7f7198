"""Root data for the simple Lie superalgebras handled by the library.

Each catalog entry is built in the "full" weight coordinates of its standard
realisation (``e*`` for the orthogonal/general side, ``d*`` for the
symplectic/odd side, ``l*`` for the G(3) weights) and then reduced modulo
its quotient relation by eliminating the last coordinate of the relation.
All data on a :class:`RootDatum` (roots, Weyl generators, Cartan
directions) is expressed in the reduced coordinates.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .exactalg import as_rational, kernel_basis, solve_square
from .poly import LinearForm, Poly, PolyError, VarTable, substitute

FAMILIES = ("gl", "sl", "psl", "ospB", "ospD", "osp_alpha", "ag2", "ab3",
            "pe", "spe", "vect", "svect", "svect_tilde")

MAX_RANK = 4


class CatalogError(ValueError):
    """Unknown family, unsupported rank or malformed algebra string."""


@dataclass(frozen=True)
class AlgebraSpec:
    family: str
    ranks: tuple = ()
    alpha: Fraction | None = None

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise CatalogError("unknown family %r" % self.family)
        if any(r > MAX_RANK for r in self.ranks):
            raise CatalogError("rank outside the supported window (<= %d)" % MAX_RANK)
        if any(r < 0 for r in self.ranks):
            raise CatalogError("negative rank")
        if self.family == "osp_alpha":
            if self.alpha is None or self.alpha in (0, -1):
                raise CatalogError("osp_alpha needs alpha not in {0, -1}")

    def __str__(self):
        f = self.family
        if f in ("gl", "sl", "psl"):
            return "%s(%d|%d)" % (f, *self.ranks)
        if f == "ospB":
            m, n = self.ranks
            return "osp(%d|%d)" % (2 * m + 1, 2 * n)
        if f == "ospD":
            m, n = self.ranks
            return "osp(%d|%d)" % (2 * m, 2 * n)
        if f == "osp_alpha":
            a = self.alpha
            txt = str(a.numerator) if a.denominator == 1 else "%d/%d" % (a.numerator, a.denominator)
            return "osp_alpha(4|2,alpha=%s)" % txt
        if f in ("ag2", "ab3"):
            return f
        if f in ("pe", "spe"):
            return "%s(%d)" % (f, self.ranks[0])
        if f == "svect_tilde":
            return "svect~(0|%d)" % self.ranks[0]
        return "%s(0|%d)" % (f, self.ranks[0])


_SPEC_RE = re.compile(r"^\s*(?P<fam>[a-z][a-z0-9_~]*)\s*(?:\((?P<args>[^)]*)\))?\s*$")


def parse_spec(text: str) -> AlgebraSpec:
    """Parse strings such as ``gl(2|1)``, ``osp(4|2)``, ``osp_alpha(4|2,alpha=2/3)``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise CatalogError("cannot parse algebra %r" % text)
    fam, args = m.group("fam"), (m.group("args") or "").replace(" ", "")
    try:
        if fam in ("ag2", "ab3"):
            if args:
                raise CatalogError("%s takes no parameters" % fam)
            return AlgebraSpec(fam)
        if fam in ("gl", "sl", "psl"):
            a, b = (int(x) for x in args.split("|"))
            if fam == "sl" and (a + b < 3 or a == 0 or b == 0):
                raise CatalogError("sl(m|n) needs m, n >= 1 and m + n >= 3")
            if fam == "psl" and (a != b or a < 2):
                raise CatalogError("psl(n|n) needs n >= 2")
            if fam == "gl" and (a == 0 or b == 0):
                raise CatalogError("gl(m|n) needs m, n >= 1")
            return AlgebraSpec(fam, (a, b))
        if fam == "osp":
            a, b = (int(x) for x in args.split("|"))
            if b % 2 or b == 0:
                raise CatalogError("osp(M|N) needs N even and positive")
            if a % 2:
                return AlgebraSpec("ospB", ((a - 1) // 2, b // 2))
            if a == 0:
                raise CatalogError("osp(0|N) is not in the catalog")
            return AlgebraSpec("ospD", (a // 2, b // 2))
        if fam == "osp_alpha":
            dims, _, rest = args.replace(" ", "").partition(",")
            if rest.startswith("alpha="):
                rest = rest[len("alpha="):]
            if dims != "4|2" or not rest:
                raise CatalogError("expected osp_alpha(4|2,alpha=p/q)")
            return AlgebraSpec("osp_alpha", (), Fraction(rest))
        if fam in ("pe", "spe"):
            n = int(args)
            if fam == "pe" and n < 2:
                raise CatalogError("pe(n) needs n >= 2")
            if fam == "spe" and n < 3:
                raise CatalogError("spe(n) needs n >= 3")
            return AlgebraSpec(fam, (n,))
        if fam in ("vect", "svect", "svect~"):
            z, n = (int(x) for x in args.split("|"))
            if z != 0:
                raise CatalogError("only the purely odd vect(0|n) series is supported")
            if fam == "vect" and n < 2:
                raise CatalogError("vect(0|n) needs n >= 2")
            if fam != "vect" and n < 3:
                raise CatalogError("svect(0|n) needs n >= 3")
            if fam == "svect~":
                if n % 2:
                    raise CatalogError("svect~(0|n) needs n even")
                return AlgebraSpec("svect_tilde", (n,))
            return AlgebraSpec(fam, (n,))
    except CatalogError:
        raise
    except (ValueError, ZeroDivisionError) as exc:
        raise CatalogError("cannot parse algebra %r: %s" % (text, exc)) from None
    raise CatalogError("unknown family %r" % fam)


@dataclass(eq=False)
class RootDatum:
    spec: AlgebraSpec | None
    full: VarTable
    vartable: VarTable
    relations: list
    eliminated: dict
    even_roots: list
    odd_roots: list
    even_pos: list
    odd_pos: list
    odd_neg: list
    tilde_odd_pos: list
    nu: dict
    cartan_dirs: dict
    weyl_gens: list
    weights_odd: list
    translations: list = field(default_factory=list)
    invariant_form: Poly | None = None
    name: str = ""

    @property
    def family(self):
        return self.spec.family if self.spec else "toy"

    @property
    def rank(self):
        return len(self.vartable)

    def reduce(self, p: Poly) -> Poly:
        """Map a polynomial in full coordinates to the reduced ring."""
        if p.vt == self.vartable:
            return p
        if p.vt != self.full:
            raise PolyError("polynomial is not over this algebra's coordinates")
        return substitute(p, self.eliminated, self.vartable)

    def form(self, text_or_poly) -> LinearForm:
        if isinstance(text_or_poly, str):
            from .poly import parse_poly
            text_or_poly = parse_poly(text_or_poly, self.full)
        return LinearForm.from_poly(self.reduce(text_or_poly))

    def __repr__(self):
        return "RootDatum(%s)" % (self.name or self.family)


# ----------------------------------------------------------------------------
# helpers on full coordinates


def _vt(eps: Sequence[str], dels: Sequence[str]) -> VarTable:
    names = tuple(eps) + tuple(dels)
    return VarTable(names, tuple("epsilon" for _ in eps) + tuple("delta" for _ in dels))


def _lf(vt: VarTable, coeffs: dict) -> LinearForm:
    v = [Fraction(0)] * len(vt)
    for name, c in coeffs.items():
        v[vt.index(name)] += as_rational(c)
    return LinearForm(vt, v)


def _transposition(n: int, i: int, j: int):
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    m[i][i] = m[j][j] = 0
    m[i][j] = m[j][i] = 1
    return m


def _flip(n: int, idxs: Sequence[int]):
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for i in idxs:
        m[i][i] = -1
    return m


def _block_transpositions(vt: VarTable, names: Sequence[str]):
    idx = [vt.index(x) for x in names]
    return [_transposition(len(vt), a, b) for a, b in zip(idx, idx[1:])]


class _Builder:
    """Collects full-coordinate data and produces the reduced RootDatum."""

    def __init__(self, full: VarTable):
        self.full = full
        self.relations: list[LinearForm] = []
        self.even: list[tuple[LinearForm, bool]] = []
        self.odd: list[tuple[LinearForm, bool]] = []
        self.weyl_full: list = []
        self.form: Poly | None = None
        self.odd_dirs: dict = {}  # full odd root -> bracket direction (full values)
        self.translations_full: list = []
        self.vectorial = False

    def even_root(self, coeffs, positive):
        self.even.append((_lf(self.full, coeffs), positive))

    def odd_root(self, coeffs, positive, direction=None):
        lf = _lf(self.full, coeffs)
        self.odd.append((lf, positive))
        if direction is not None:
            self.odd_dirs[lf] = [as_rational(x) for x in direction]

    def pair(self, coeffs, parity, direction=None):
        """Add ``coeffs`` as a positive root and its negative."""
        neg = {k: -v for k, v in coeffs.items()}
        if parity == "even":
            self.even_root(coeffs, True)
            self.even_root(neg, False)
        else:
            self.odd_root(coeffs, True, direction)
            self.odd_root(neg, False, direction)

    def build(self, spec, name, nu_override=None) -> RootDatum:
        full = self.full
        # eliminate the last coordinate of each relation
        eliminated: dict = {}
        keep = list(full.names)
        for rel in self.relations:
            last = max(i for i, c in enumerate(rel.coeffs) if c)
            keep.remove(full.names[last])
        reduced = VarTable(tuple(keep), tuple(full.blocks[full.index(x)] for x in keep))
        for rel in self.relations:
            last = max(i for i, c in enumerate(rel.coeffs) if c)
            c = rel.coeffs[last]
            img = Poly(reduced)
            for i, a in enumerate(rel.coeffs):
                if a and i != last:
                    img = img + Poly.var(reduced, full.names[i]).scale(-a / c)
            eliminated[full.names[last]] = img
        if len(self.relations) > 1:
            raise CatalogError("at most one quotient relation is supported")

        def red(lf: LinearForm) -> LinearForm:
            return LinearForm.from_poly(substitute(lf.to_poly(), eliminated, reduced)) \
                if eliminated else LinearForm(reduced, lf.coeffs)

        def red_vec(v):
            for rel in self.relations:
                if rel(v) != 0:
                    raise CatalogError("direction %s violates the quotient relation" % (v,))
            return tuple(v[full.index(x)] for x in reduced.names)

        even = [(red(a), p) for a, p in self.even]
        odd = [(red(a), p) for a, p in self.odd]
        even = [(a, p) for a, p in even if not a.is_zero()]
        odd_full = [(a, p, f) for (a, p), (f, _) in zip(odd, self.odd) if not a.is_zero()]
        odd = [(a, p) for a, p, _ in odd_full]
        all_roots = {a for a, _ in even} | {a for a, _ in odd}
        odd_pos = [a for a, p in odd if p]
        odd_neg = [a for a, p in odd if not p]

        tilde: list[LinearForm] = []
        for a in odd_pos:
            if a in tilde or (-a) in tilde:
                continue
            if (-a) in odd_neg and a.scale(2) not in all_roots:
                tilde.append(a)

        nu = {}
        dirs = {}
        all_odd = [a for a, _ in odd]
        form_dirs = self.form is not None and not self.odd_dirs
        if form_dirs:
            rform = substitute(self.form, eliminated, reduced) if eliminated else \
                Poly(reduced, self.form.terms)
            n = len(reduced)
            gram = [[Fraction(0)] * n for _ in range(n)]
            for m, c in rform.terms.items():
                idx = [i for i, e in enumerate(m) for _ in range(e)]
                if len(idx) != 2:
                    raise CatalogError("invariant form is not quadratic")
                i, j = idx
                if i == j:
                    gram[i][i] += c
                else:
                    gram[i][j] += c / 2
                    gram[j][i] += c / 2
        for a in tilde:
            nu[a] = min(all_odd.count(a), all_odd.count(-a))
            if self.vectorial:
                eqs = [list(a.coeffs)]
                dirs[a] = [tuple(v) for v in kernel_basis(eqs, len(reduced))]
            elif form_dirs:
                dirs[a] = [tuple(solve_square(gram, list(a.coeffs)))]
            else:
                hs = []
                for ra, _, fa in odd_full:
                    if ra in (a, -a) and fa in self.odd_dirs:
                        h = red_vec(self.odd_dirs[fa])
                        if not any(_proportional(h, g) for g in hs):
                            hs.append(h)
                dirs[a] = hs
            if nu_override:
                nu[a] = nu_override
        weyl = []
        for g in self.weyl_full:
            weyl.append(_reduce_matrix(g, full, reduced, eliminated))
        translations = [red_vec(t) for t in self.translations_full]
        return RootDatum(
            spec=spec, full=full, vartable=reduced, relations=list(self.relations),
            eliminated=eliminated,
            even_roots=[a for a, _ in even], odd_roots=all_odd,
            even_pos=[a for a, p in even if p], odd_pos=odd_pos, odd_neg=odd_neg,
            tilde_odd_pos=tilde, nu=nu, cartan_dirs=dirs, weyl_gens=weyl,
            weights_odd=list(all_odd), translations=translations,
            invariant_form=(substitute(self.form, eliminated, reduced) if (self.form and eliminated)
                            else (Poly(reduced, self.form.terms) if self.form else None)),
            name=name)


def _proportional(u, v) -> bool:
    nz = next((i for i, x in enumerate(v) if x), None)
    if nz is None or u[nz] == 0:
        return False
    r = u[nz] / v[nz]
    return all(a == r * b for a, b in zip(u, v))


def _reduce_matrix(g, full: VarTable, reduced: VarTable, eliminated: dict):
    """Column ``i`` of the result is the image of reduced coordinate ``i``."""
    cols = []
    for name in reduced.names:
        i = full.index(name)
        img = Poly(full)
        for j in range(len(full)):
            if g[j][i]:
                img = img + Poly.var(full, j).scale(g[j][i])
        img = substitute(img, eliminated, reduced) if eliminated else Poly(reduced, img.terms)
        lf = LinearForm.from_poly(img) if not img.is_zero() else LinearForm(reduced, [0] * len(reduced))
        cols.append(lf.coeffs)
    n = len(reduced)
    m = [[cols[c][r] for c in range(n)] for r in range(n)]
    for row in m:
        for x in row:
            if x.denominator != 1:
                raise CatalogError("Weyl generator is not integral in reduced coordinates")
    return tuple(tuple(int(x) for x in row) for row in m)


# ----------------------------------------------------------------------------
# families


def _gl_like(spec: AlgebraSpec, a: int, b: int, relation: bool) -> _Builder:
    eps = ["e%d" % (i + 1) for i in range(a)]
    dels = ["d%d" % (j + 1) for j in range(b)]
    full = _vt(eps, dels)
    B = _Builder(full)
    n = len(full)
    for x, y in itertools.combinations(eps, 2):
        B.pair({x: 1, y: -1}, "even")
    for x, y in itertools.combinations(dels, 2):
        B.pair({x: 1, y: -1}, "even")
    for x in eps:
        for y in dels:
            h = [0] * n
            h[full.index(x)] = 1
            h[full.index(y)] = 1
            B.pair({x: 1, y: -1}, "odd", h)
    B.weyl_full = _block_transpositions(full, eps) + _block_transpositions(full, dels)
    B.form = sum((Poly.var(full, x) ** 2 for x in eps), Poly(full)) - \
        sum((Poly.var(full, y) ** 2 for y in dels), Poly(full))
    if relation:
        B.relations.append(_lf(full, {**{x: 1 for x in eps}, **{y: -1 for y in dels}}))
    return B


def _osp(spec: AlgebraSpec, m: int, n: int, odd_orth: bool) -> _Builder:
    eps = ["e%d" % (i + 1) for i in range(m)]
    dels = ["d%d" % (j + 1) for j in range(n)]
    full = _vt(eps, dels)
    B = _Builder(full)
    for x, y in itertools.combinations(eps, 2):
        B.pair({x: 1, y: -1}, "even")
        B.pair({x: 1, y: 1}, "even")
    for x, y in itertools.combinations(dels, 2):
        B.pair({x: 1, y: -1}, "even")
        B.pair({x: 1, y: 1}, "even")
    for y in dels:
        B.pair({y: 2}, "even")
    if odd_orth:
        for x in eps:
            B.pair({x: 1}, "even")
        for y in dels:
            B.pair({y: 1}, "odd")
    for x in eps:
        for y in dels:
            B.pair({x: 1, y: -1}, "odd")
            B.pair({x: 1, y: 1}, "odd")
    gens = _block_transpositions(full, eps) + _block_transpositions(full, dels)
    if dels:
        gens.append(_flip(len(full), [full.index(dels[0])]))
    if eps:
        if odd_orth:
            gens.append(_flip(len(full), [full.index(eps[0])]))
        elif m >= 2:
            gens.append(_flip(len(full), [full.index(eps[0]), full.index(eps[1])]))
    B.weyl_full = gens
    B.form = sum((Poly.var(full, x) ** 2 for x in eps), Poly(full)) - \
        sum((Poly.var(full, y) ** 2 for y in dels), Poly(full))
    return B


def osp_alpha_lambdas(alpha: Fraction):
    return (-(1 + alpha), Fraction(1), alpha)


def _osp_alpha(spec: AlgebraSpec) -> _Builder:
    full = _vt(["e1", "e2", "e3"], [])
    B = _Builder(full)
    for x in full.names:
        B.pair({x: 2}, "even")
    for s2, s3 in itertools.product((1, -1), repeat=2):
        B.pair({"e1": 1, "e2": s2, "e3": s3}, "odd")
    B.weyl_full = [_flip(3, [i]) for i in range(3)]
    lam = osp_alpha_lambdas(spec.alpha)
    B.form = sum((Poly.var(full, i) ** 2 * (1 / lam[i]) for i in range(3)), Poly(full))
    return B


def _ag2(spec: AlgebraSpec) -> _Builder:
    full = VarTable(("l1", "l2", "l3", "d1"), ("epsilon",) * 3 + ("delta",))
    B = _Builder(full)
    d = "d1"
    for r in ({"l2": 1}, {"l3": 1}, {"l1": -1}, {"l2": 1, "l1": -1},
              {"l3": 1, "l2": -1}, {"l3": 1, "l1": -1}, {d: 2}):
        B.pair(r, "even")
    for li in ("l1", "l2", "l3"):
        B.pair({li: 1, d: 1}, "odd")
        B.pair({li: -1, d: 1}, "odd")
    B.pair({d: 1}, "odd")
    B.relations.append(_lf(full, {"l1": 1, "l2": 1, "l3": 1}))
    B.weyl_full = [_transposition(4, 0, 1), _transposition(4, 1, 2),
                   _flip(4, [0, 1, 2]), _flip(4, [3])]
    lsq = sum((Poly.var(full, x) ** 2 for x in ("l1", "l2", "l3")), Poly(full))
    B.form = Poly.var(full, d) ** 2 * 3 - lsq * 2
    return B


def _ab3(spec: AlgebraSpec) -> _Builder:
    full = _vt(["e1", "e2", "e3"], ["d1"])
    B = _Builder(full)
    eps = ["e1", "e2", "e3"]
    for x in eps:
        B.pair({x: 1}, "even")
    for x, y in itertools.combinations(eps, 2):
        B.pair({x: 1, y: -1}, "even")
        B.pair({x: 1, y: 1}, "even")
    B.pair({"d1": 1}, "even")
    half = Fraction(1, 2)
    for s in itertools.product((1, -1), repeat=3):
        B.pair({"d1": half, "e1": s[0] * half, "e2": s[1] * half, "e3": s[2] * half}, "odd")
    B.weyl_full = _block_transpositions(full, eps) + [_flip(4, [0]), _flip(4, [3])]
    B.form = sum((Poly.var(full, x) ** 2 for x in eps), Poly(full)) * 3 - Poly.var(full, "d1") ** 2
    return B


def _pe(spec: AlgebraSpec, n: int, relation: bool) -> _Builder:
    eps = ["e%d" % (i + 1) for i in range(n)]
    full = _vt(eps, [])
    B = _Builder(full)
    for x, y in itertools.combinations(eps, 2):
        B.pair({x: 1, y: -1}, "even")
    for i, j in itertools.combinations(range(n), 2):
        h = [0] * n
        h[i], h[j] = -1, 1
        B.odd_root({eps[i]: 1, eps[j]: 1}, True, h)
        B.odd_root({eps[i]: -1, eps[j]: -1}, False, h)
    for x in eps:
        B.odd_root({x: 2}, True)
    B.weyl_full = _block_transpositions(full, eps)
    if relation:
        B.relations.append(_lf(full, {x: 1 for x in eps}))
    return B


def _vect(spec: AlgebraSpec, n: int, relation: bool) -> _Builder:
    eps = ["e%d" % (i + 1) for i in range(n)]
    full = _vt(eps, [])
    B = _Builder(full)
    B.vectorial = True
    # root vectors xi_I d_j: weight sum_{I} eps - eps_j, Z-degree |I| - 1
    for k in range(0, n + 1):
        for I in itertools.combinations(range(n), k):
            for j in range(n):
                w = {}
                for i in I:
                    w[eps[i]] = w.get(eps[i], 0) + 1
                w[eps[j]] = w.get(eps[j], 0) - 1
                w = {a: c for a, c in w.items() if c}
                if not w:
                    continue
                if relation and j in I:
                    # divergence kills one vector per weight of this shape
                    rest = [x for x in range(n) if x not in I or x == j]
                    if j == max(rest):
                        continue
                deg = k - 1
                if deg == 0:
                    positive = min(i for i, x in enumerate(eps) if w.get(x, 0) > 0) < \
                        min(i for i, x in enumerate(eps) if w.get(x, 0) < 0)
                else:
                    positive = deg > 0
                if (k + 1) % 2:
                    B.odd_root(w, positive)
                else:
                    B.even_root(w, positive)
    B.weyl_full = _block_transpositions(full, eps)
    if relation:
        B.relations.append(_lf(full, {x: 1 for x in eps}))
    return B


@lru_cache(maxsize=None)
def build(spec: AlgebraSpec) -> RootDatum:
    f = spec.family
    name = str(spec)
    if f == "gl":
        return _gl_like(spec, *spec.ranks, relation=False).build(spec, name)
    if f in ("sl", "psl"):
        a, b = spec.ranks
        B = _gl_like(spec, a, b, relation=True)
        if f == "psl":
            B.translations_full.append([1] * len(B.full))
        return B.build(spec, name)
    if f == "ospB":
        return _osp(spec, *spec.ranks, odd_orth=True).build(spec, name)
    if f == "ospD":
        if spec.ranks[0] < 1:
            raise CatalogError("osp(2m|2n) needs m >= 1")
        return _osp(spec, *spec.ranks, odd_orth=False).build(spec, name)
    if f == "osp_alpha":
        return _osp_alpha(spec).build(spec, name)
    if f == "ag2":
        return _ag2(spec).build(spec, name)
    if f == "ab3":
        return _ab3(spec).build(spec, name)
    if f == "pe":
        return _pe(spec, spec.ranks[0], relation=False).build(spec, name)
    if f == "spe":
        return _pe(spec, spec.ranks[0], relation=True).build(spec, name)
    if f == "vect":
        return _vect(spec, spec.ranks[0], relation=False).build(spec, name)
    if f in ("svect", "svect_tilde"):
        return _vect(spec, spec.ranks[0], relation=True).build(spec, name)
    raise CatalogError("unsupported family %r" % f)


def get(text: str) -> RootDatum:
    return build(parse_spec(text))


def tilde_R_plus(d: RootDatum) -> list:
    return list(d.tilde_odd_pos)


def nu(d: RootDatum, alpha: LinearForm) -> int:
    if alpha not in d.nu:
        raise CatalogError("%s is not a reduced positive odd root" % alpha)
    return d.nu[alpha]


def rank_two_toy(h1=(0, 1), h2=(0, 1)) -> RootDatum:
    """Commutative Cartan with a single root ``alpha = e1`` of multiplicity two.

    Models the small superalgebra with odd part ``span(v1, u1, v2, u2)`` and
    ``[u_i, v_i] = h_i``; both directions must be killed by ``alpha``.
    """
    vt = VarTable(("e1", "e2"))
    a = LinearForm(vt, (1, 0))
    for h in (h1, h2):
        if a(h) != 0:
            raise CatalogError("directions must lie in ker alpha")
    hs = [tuple(as_rational(x) for x in h1)]
    if not _proportional(tuple(as_rational(x) for x in h2), hs[0]):
        hs.append(tuple(as_rational(x) for x in h2))
    else:
        hs.append(hs[0])
    return RootDatum(spec=None, full=vt, vartable=vt, relations=[], eliminated={},
                     even_roots=[], odd_roots=[a, a, -a, -a], even_pos=[], odd_pos=[a, a],
                     odd_neg=[-a, -a], tilde_odd_pos=[a], nu={a: 2}, cartan_dirs={a: hs},
                     weyl_gens=[], weights_odd=[a, a, -a, -a], name="rank-2 toy")
