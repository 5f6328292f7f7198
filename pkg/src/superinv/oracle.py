"""Invariant polynomials computed directly from structure constants.

Small superalgebras are realised by supermatrices; brackets are
supercommutators and structure constants are read off by solving for
coordinates in the chosen basis.  The coadjoint action is extended to
``S(g*)`` (even coordinates commute, odd ones anticommute) as a
superderivation, and invariants are the joint kernel of the action of the
non-Cartan basis elements on the weight-zero even monomials.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from . import superalg
from .exactalg import inverse, kernel_basis, rref, solve, sparse_kernel
from .poly import GradedSubspace, Poly

ORACLE_CATALOG = ("gl(1|1)", "gl(2|1)", "gl(2|2)", "sl(2|1)", "osp(1|2)", "osp(2|2)", "pe(2)",
                  "vect(0|2)")
DEFAULT_CAP = 20000


class OracleError(ValueError):
    pass


class InjectivityViolation(RuntimeError):
    pass


@dataclass
class StructureConstants:
    name: str
    labels: list            # basis names
    parity: list            # 0 even, 1 odd
    brackets: dict          # (i, j) -> {k: c}
    cartan: list            # indices of the Cartan basis elements
    weight_map: list        # weight_map[k][i] = reduced coordinate i evaluated on cartan[k]
    matrices: list = field(default_factory=list, repr=False)

    @property
    def dim_even(self):
        return self.parity.count(0)

    @property
    def dim_odd(self):
        return self.parity.count(1)

    def __len__(self):
        return len(self.labels)

    def bracket(self, u: dict, v: dict) -> dict:
        out: dict = {}
        for i, a in u.items():
            for j, b in v.items():
                for k, c in self.brackets.get((i, j), {}).items():
                    out[k] = out.get(k, 0) + a * b * c
        return {k: c for k, c in out.items() if c}

    def weights(self) -> list:
        """Weight of each basis element as eigenvalues under ``ad`` of the Cartan basis."""
        out = []
        for a in range(len(self)):
            w = []
            for h in self.cartan:
                br = self.brackets.get((h, a), {})
                if any(k != a for k in br):
                    raise OracleError("basis element %s is not a weight vector" % self.labels[a])
                w.append(br.get(a, Fraction(0)))
            out.append(tuple(w))
        return out


# ----------------------------------------------------------------------------
# matrix realisations


def _zero(n):
    return [[Fraction(0)] * n for _ in range(n)]


def _unit(n, i, j, c=1):
    m = _zero(n)
    m[i][j] = Fraction(c)
    return m


def _add(*ms):
    n = len(ms[0])
    return [[sum((m[i][j] for m in ms), Fraction(0)) for j in range(n)] for i in range(n)]


def _matmul(a, b):
    n = len(a)
    return [[sum((a[i][k] * b[k][j] for k in range(n) if a[i][k]), Fraction(0))
             for j in range(n)] for i in range(n)]


def _supercommutator(a, pa, b, pb):
    ab, ba = _matmul(a, b), _matmul(b, a)
    s = -1 if pa and pb else 1
    return [[x - s * y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def _flatten(m):
    return [x for r in m for x in r]


def _from_matrices(name, labels, mats, parity, cartan, weight_map):
    cols = [_flatten(m) for m in mats]
    nent = len(cols[0])
    system = [[cols[b][e] for b in range(len(mats))] for e in range(nent)]
    if len(rref(system)[1]) != len(mats):
        raise OracleError("basis matrices are linearly dependent")
    brackets = {}
    for i, j in itertools.product(range(len(mats)), repeat=2):
        br = _supercommutator(mats[i], parity[i], mats[j], parity[j])
        try:
            coords = solve(system, _flatten(br))
        except ValueError:
            raise OracleError("[%s, %s] leaves the span" % (labels[i], labels[j])) from None
        nz = {k: c for k, c in enumerate(coords) if c}
        if nz:
            brackets[(i, j)] = nz
    return StructureConstants(name, labels, parity, brackets, cartan, weight_map, mats)


def _gl_like(m, n, traceless):
    size = m + n
    par = [0] * m + [1] * n
    labels, mats, parity = [], [], []
    for i, j in itertools.product(range(size), repeat=2):
        if i != j:
            labels.append("E%d%d" % (i + 1, j + 1))
            mats.append(_unit(size, i, j))
            parity.append(par[i] ^ par[j])
    if traceless:
        # H_i = E_ii + E_{last,last} for the even diagonal (sl(m|1) only)
        if n != 1:
            raise OracleError("traceless realisation implemented for sl(m|1)")
        diag = [_add(_unit(size, i, i), _unit(size, size - 1, size - 1)) for i in range(m)]
        dlabels = ["H%d" % (i + 1) for i in range(m)]
    else:
        diag = [_unit(size, i, i) for i in range(size)]
        dlabels = ["E%d%d" % (i + 1, i + 1) for i in range(size)]
    start = len(mats)
    labels += dlabels
    mats += diag
    parity += [0] * len(diag)
    cartan = list(range(start, len(mats)))
    return labels, mats, parity, cartan


def _values_on_diagonal(datum, mats, cartan, coords):
    """``weight_map[k][i]``: reduced coordinate ``i`` on ``cartan[k]``.

    ``coords`` maps each reduced coordinate name to a diagonal position.
    """
    return [[mats[h][coords[x]][coords[x]] for x in datum.vartable.names] for h in cartan]


def _osp(datum, size, par, gram, torus, name):
    """Solve ``B(Xu, v) + (-1)^{p(X)p(u)} B(u, Xv) = 0`` block by block."""
    entries = [(i, j) for i in range(size) for j in range(size)]
    labels, mats, parity = [], [], []
    blocks: dict = {}
    for i, j in entries:
        blocks.setdefault((par[i] ^ par[j], torus[i] - torus[j]), []).append((i, j))
    cartan = []
    for (p, w), ents in sorted(blocks.items()):
        eqs = []
        for u, v in itertools.product(range(size), repeat=2):
            row = []
            for (i, j) in ents:
                # X = E_ij:  B(Xu, v) = [j == u] gram[i][v];  B(u, Xv) = gram[u][i] [j == v]
                c = Fraction(0)
                if j == u:
                    c += gram[i][v]
                if j == v:
                    c += (-1 if p and par[u] else 1) * gram[u][i]
                row.append(c)
            if any(row):
                eqs.append(row)
        for vec in kernel_basis(eqs, len(ents)) if eqs else \
                [[int(a == b) for b in range(len(ents))] for a in range(len(ents))]:
            m = _zero(size)
            for (i, j), c in zip(ents, vec):
                m[i][j] = Fraction(c)
            if p == 0 and w == 0:
                cartan.append(len(mats))
            labels.append("X%d" % len(mats))
            mats.append(m)
            parity.append(p)
    return labels, mats, parity, cartan


def _grassmann_mul(a, b):
    """Product of Grassmann monomials (sorted tuples); returns (sign, monomial) or None."""
    if set(a) & set(b):
        return None
    seq = list(a) + list(b)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
                sign = -sign
    return sign, tuple(seq)


def _vect02():
    mons = [(), (0, 1), (0,), (1,)]  # even part first
    index = {m: i for i, m in enumerate(mons)}
    labels, mats, parity = [], [], []
    for f in [(), (0,), (1,), (0, 1)]:
        for i in range(2):
            m = _zero(4)
            for g in mons:
                if i not in g:
                    continue
                pos = g.index(i)
                rest = g[:pos] + g[pos + 1:]
                s = (-1) ** pos
                prod = _grassmann_mul(f, rest)
                if prod is None:
                    continue
                s2, out = prod
                m[index[out]][index[g]] += s * s2
            name = ("xi" + "".join(str(k + 1) for k in f) if f else "") + "d%d" % (i + 1)
            labels.append(name)
            mats.append(m)
            parity.append((len(f) + 1) % 2)
    cartan = [labels.index("xi1d1"), labels.index("xi2d2")]
    return labels, mats, parity, cartan


@lru_cache(maxsize=None)
def build_sc(spec: str) -> StructureConstants:
    key = str(superalg.parse_spec(spec))
    if key not in ORACLE_CATALOG:
        raise OracleError("%s is not in the oracle catalog %s" % (spec, ", ".join(ORACLE_CATALOG)))
    datum = superalg.get(key)
    if key.startswith("gl"):
        m, n = datum.spec.ranks
        labels, mats, parity, cartan = _gl_like(m, n, traceless=False)
        coords = {x: i for i, x in enumerate(datum.vartable.names)}
        wm = _values_on_diagonal(datum, mats, cartan, coords)
    elif key == "sl(2|1)":
        labels, mats, parity, cartan = _gl_like(2, 1, traceless=True)
        wm = _values_on_diagonal(datum, mats, cartan, {"e1": 0, "e2": 1})
    elif key == "osp(1|2)":
        gram = [[1, 0, 0], [0, 0, 1], [0, -1, 0]]
        labels, mats, parity, cartan = _osp(datum, 3, [0, 1, 1], gram, [0, 1, -1], key)
        wm = _values_on_diagonal(datum, mats, cartan, {"d1": 1})
    elif key == "osp(2|2)":
        gram = [[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, 0, 1], [0, 0, -1, 0]]
        labels, mats, parity, cartan = _osp(datum, 4, [0, 0, 1, 1], gram, [1, -1, 3, -3], key)
        wm = _values_on_diagonal(datum, mats, cartan, {"e1": 0, "d1": 2})
    elif key == "pe(2)":
        labels, mats, parity = [], [], []
        for i, j in itertools.product(range(2), repeat=2):
            labels.append("A%d%d" % (i + 1, j + 1))
            mats.append(_add(_unit(4, i, j), _unit(4, 2 + j, 2 + i, -1)))
            parity.append(0)
        for i, j in itertools.combinations_with_replacement(range(2), 2):
            labels.append("B%d%d" % (i + 1, j + 1))
            mats.append(_add(_unit(4, i, 2 + j), _unit(4, j, 2 + i)) if i != j else _unit(4, i, 2 + i))
            parity.append(1)
        labels.append("C12")
        mats.append(_add(_unit(4, 2, 1), _unit(4, 3, 0, -1)))
        parity.append(1)
        cartan = [labels.index("A11"), labels.index("A22")]
        wm = _values_on_diagonal(datum, mats, cartan, {"e1": 0, "e2": 1})
    else:  # vect(0|2)
        labels, mats, parity, cartan = _vect02()
        # eps_i is dual to xi_i d_i
        wm = [[Fraction(int(k == i)) for i in range(2)] for k in range(2)]
    return _from_matrices(key, labels, mats, parity, cartan, wm)


def jacobi_violations(sc: StructureConstants) -> list:
    """Triples failing ``[x,[y,z]] = [[x,y],z] + (-1)^{p(x)p(y)} [y,[x,z]]``."""
    bad = []
    n = len(sc)
    unit = [{i: Fraction(1)} for i in range(n)]
    for x, y, z in itertools.product(range(n), repeat=3):
        lhs = sc.bracket(unit[x], sc.bracket(unit[y], unit[z]))
        r1 = sc.bracket(sc.bracket(unit[x], unit[y]), unit[z])
        r2 = sc.bracket(unit[y], sc.bracket(unit[x], unit[z]))
        s = -1 if sc.parity[x] and sc.parity[y] else 1
        rhs = dict(r1)
        for k, c in r2.items():
            rhs[k] = rhs.get(k, 0) + s * c
        rhs = {k: c for k, c in rhs.items() if c}
        if lhs != rhs:
            bad.append((x, y, z))
    return bad


def skew_violations(sc: StructureConstants) -> list:
    bad = []
    n = len(sc)
    for i, j in itertools.product(range(n), repeat=2):
        s = -1 if sc.parity[i] and sc.parity[j] else 1
        a = sc.brackets.get((i, j), {})
        b = sc.brackets.get((j, i), {})
        if {k: -s * c for k, c in b.items()} != a:
            bad.append((i, j))
    return bad


# ----------------------------------------------------------------------------
# coadjoint action on super-polynomials


def _canonical(factors, parity):
    """Sort a factor list with Koszul signs; None if an odd factor repeats."""
    seq = list(factors)
    sign = 1
    for i in range(len(seq)):
        for j in range(len(seq) - 1 - i):
            if seq[j] > seq[j + 1]:
                if parity[seq[j]] and parity[seq[j + 1]]:
                    sign = -sign
                seq[j], seq[j + 1] = seq[j + 1], seq[j]
    for a, b in zip(seq, seq[1:]):
        if a == b and parity[a]:
            return None
    return sign, tuple(seq)


def act_on_coordinate(sc: StructureConstants, x: int, b: int) -> dict:
    """``x . c_b = -(-1)^{p(x)p(b)} sum_a C_{xa}^b c_a``."""
    s = -1 if sc.parity[x] and sc.parity[b] else 1
    out = {}
    for a in range(len(sc)):
        c = sc.brackets.get((x, a), {}).get(b)
        if c:
            out[a] = -s * c
    return out


def act_on_monomial(sc: StructureConstants, x: int, mono: tuple, _cache=None) -> dict:
    """Superderivation action of basis element ``x`` on a sorted factor tuple."""
    out: dict = {}
    px = sc.parity[x]
    passed = 0
    for k, b in enumerate(mono):
        sign = -1 if px and passed % 2 else 1
        img = _cache[b] if _cache is not None else act_on_coordinate(sc, x, b)
        for a, c in img.items():
            res = _canonical(mono[:k] + (a,) + mono[k + 1:], sc.parity)
            if res is None:
                continue
            s2, m = res
            out[m] = out.get(m, 0) + sign * s2 * c
        passed += sc.parity[b]
    return {m: c for m, c in out.items() if c}


def monomial_basis(sc: StructureConstants, d: int, weight_zero: bool = False,
                   even_only: bool = False, cap: int = DEFAULT_CAP) -> list:
    n = len(sc)
    w = sc.weights() if weight_zero else None
    out = []
    for combo in itertools.combinations_with_replacement(range(n), d):
        if any(a == b and sc.parity[a] for a, b in zip(combo, combo[1:])):
            continue
        if even_only and sum(sc.parity[a] for a in combo) % 2:
            continue
        if weight_zero and any(sum(w[a][k] for a in combo) for k in range(len(sc.cartan))):
            continue
        out.append(combo)
        if len(out) > cap:
            raise OracleError("space exceeds the cap of %d monomials" % cap)
    return out


def rho_matrix(sc: StructureConstants, x: int, d: int) -> dict:
    """Sparse matrix of ``x`` on all of ``S^d``: {(out, in): c}."""
    cache = {b: act_on_coordinate(sc, x, b) for b in range(len(sc))}
    mat = {}
    for m in monomial_basis(sc, d):
        for o, c in act_on_monomial(sc, x, m, cache).items():
            mat[(o, m)] = c
    return mat


def representation_violations(sc: StructureConstants, d: int) -> list:
    """Pairs with ``rho([x,y]) != rho(x)rho(y) - (-1)^{p(x)p(y)} rho(y)rho(x)`` on ``S^d``."""
    n = len(sc)
    mats = [rho_matrix(sc, x, d) for x in range(n)]

    def compose(a, b):
        by_in: dict = {}
        for (o, i), c in a.items():
            by_in.setdefault(i, []).append((o, c))
        out: dict = {}
        for (mid, i), c in b.items():
            for o, c2 in by_in.get(mid, ()):
                out[(o, i)] = out.get((o, i), 0) + c2 * c
        return {k: v for k, v in out.items() if v}

    bad = []
    for x, y in itertools.product(range(n), repeat=2):
        s = -1 if sc.parity[x] and sc.parity[y] else 1
        lhs: dict = {}
        for k, c in sc.brackets.get((x, y), {}).items():
            for key, v in mats[k].items():
                lhs[key] = lhs.get(key, 0) + c * v
        lhs = {k: v for k, v in lhs.items() if v}
        rhs = compose(mats[x], mats[y])
        for key, v in compose(mats[y], mats[x]).items():
            rhs[key] = rhs.get(key, 0) - s * v
        rhs = {k: v for k, v in rhs.items() if v}
        if lhs != rhs:
            bad.append((x, y))
    return bad


@dataclass
class InvariantSpace:
    sc: StructureConstants
    degree: int
    monomials: list
    basis: list  # coefficient vectors over ``monomials``

    @property
    def dim(self):
        return len(self.basis)


def coadjoint_invariants(spec: str, d: int, cap: int = DEFAULT_CAP) -> InvariantSpace:
    sc = build_sc(spec)
    mons = monomial_basis(sc, d, weight_zero=True, even_only=True, cap=cap)
    index = {m: i for i, m in enumerate(mons)}
    eqs: dict = {}
    cartan = set(sc.cartan)
    for x in range(len(sc)):
        if x in cartan:
            continue
        cache = {b: act_on_coordinate(sc, x, b) for b in range(len(sc))}
        for m in mons:
            for o, c in act_on_monomial(sc, x, m, cache).items():
                eqs.setdefault((x, o), {})[index[m]] = c
    basis = sparse_kernel(eqs.values(), len(mons))
    return InvariantSpace(sc, d, mons, basis)


def restrict_to_cartan(space: InvariantSpace) -> GradedSubspace:
    sc = space.sc
    datum = superalg.get(sc.name)
    vt = datum.vartable
    # c_{H_k} -> sum_i ((M^T)^{-1})_{k i} x_i  with M[k][i] = x_i(H_k)
    mt = [[sc.weight_map[k][i] for k in range(len(sc.cartan))] for i in range(len(vt))]
    inv = inverse(mt)
    images = {}
    for k, h in enumerate(sc.cartan):
        p = Poly(vt)
        for i in range(len(vt)):
            if inv[k][i]:
                p = p + Poly.var(vt, i).scale(inv[k][i])
        images[h] = p
    polys = []
    for vec in space.basis:
        acc = Poly(vt)
        for c, m in zip(vec, space.monomials):
            if c and all(a in images for a in m):
                term = Poly.const(vt, c)
                for a in m:
                    term = term * images[a]
                acc = acc + term
        polys.append(acc)
    out = GradedSubspace.from_polys(vt, space.degree, polys)
    if out.dim != space.dim:
        raise InjectivityViolation("restriction dropped dimension %d -> %d" % (space.dim, out.dim))
    return out


@dataclass
class OracleVerdict:
    algebra: str
    degree: int
    dim_invariants: int
    dim_restricted: int
    dim_membership: int
    matches_membership: bool

    def to_dict(self):
        return dict(self.__dict__)


def oracle_check(spec: str, d: int, cap: int = DEFAULT_CAP) -> OracleVerdict:
    from .membership import graded_basis
    space = coadjoint_invariants(spec, d, cap)
    res = restrict_to_cartan(space)
    datum = superalg.get(space.sc.name)
    gb = graded_basis(datum, d)
    return OracleVerdict(space.sc.name, d, space.dim, res.dim, gb.dim, res == gb)
