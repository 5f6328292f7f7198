"""Exact rational linear algebra.

Scalars are :class:`fractions.Fraction`; matrices are small dense row lists.
Everything here returns fresh objects and never mutates its arguments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

Rational = Fraction


def as_rational(x) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a canonical Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError("floating point values are not accepted: %r" % (x,))
    return Fraction(x)


@dataclass(frozen=True)
class QMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entries length does not match shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], cols: int | None = None) -> "QMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        flat = []
        for r in rows:
            if len(r) != cols:
                raise ValueError("ragged matrix")
            flat.extend(as_rational(x) for x in r)
        return cls(len(rows), cols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "QMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def tolist(self) -> list:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "QMatrix") -> "QMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        b = other.tolist()
        for r in self.tolist():
            out.append([sum((r[k] * b[k][j] for k in range(self.cols) if r[k]), Fraction(0))
                        for j in range(other.cols)])
        return QMatrix.from_rows(out, other.cols)

    def transpose(self) -> "QMatrix":
        return QMatrix.from_rows([[self[i, j] for i in range(self.rows)]
                                  for j in range(self.cols)], self.rows)


def _rows_of(m) -> tuple[list[list[Fraction]], int]:
    if isinstance(m, QMatrix):
        return m.tolist(), m.cols
    rows = [[as_rational(x) for x in r] for r in m]
    return rows, (len(rows[0]) if rows else 0)


def rref(m, cols: int | None = None) -> tuple[QMatrix, list[int]]:
    """Reduced row-echelon form and pivot columns.

    Zero rows are kept at the bottom so the shape is preserved.
    """
    rows, ncols = _rows_of(m)
    if cols is not None:
        ncols = cols
    a = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(a)
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        if piv != 1:
            a[r] = [x / piv for x in a[r]]
        pr = a[r]
        nz = [j for j in range(c, ncols) if pr[j] != 0]
        for i in range(nrows):
            if i != r:
                f = a[i][c]
                if f != 0:
                    ai = a[i]
                    for j in nz:
                        ai[j] -= f * pr[j]
        pivots.append(c)
        r += 1
    return QMatrix.from_rows(a, ncols) if a else QMatrix(0, ncols, ()), pivots


def rank(m) -> int:
    return len(rref(m)[1])


def row_basis(m, cols: int | None = None) -> list[list[Fraction]]:
    """Canonical (row-reduced, zero rows dropped) basis of the row space."""
    red, piv = rref(m, cols)
    return [red.row(i) for i in range(len(piv))]


def kernel_basis(m, cols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column (unit entry there)."""
    rows, ncols = _rows_of(m)
    if cols is not None:
        ncols = cols
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    red, piv = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in set(piv)]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, pc in enumerate(piv):
            v[pc] = -red[i, f]
        basis.append(v)
    return basis


def sparse_kernel(equations: Iterable[dict], ncols: int) -> list[list[Fraction]]:
    """Kernel of a system given as sparse rows ``{column: coefficient}``.

    Elimination is incremental, so large but very sparse systems (the coadjoint
    operators) stay cheap.
    """
    pivot_rows: dict[int, dict] = {}
    for eq in equations:
        row = {k: as_rational(v) for k, v in eq.items() if v != 0}
        # reduce against existing pivots until stable
        while row:
            hit = next((c for c in sorted(row) if c in pivot_rows), None)
            if hit is None:
                break
            f = row[hit]
            for c, v in pivot_rows[hit].items():
                nv = row.get(c, 0) - f * v
                if nv == 0:
                    row.pop(c, None)
                else:
                    row[c] = nv
        if not row:
            continue
        lead = min(row)
        inv = 1 / row[lead]
        row = {c: v * inv for c, v in row.items()}
        # back-substitute the new pivot into the old rows
        for pr in pivot_rows.values():
            f = pr.get(lead)
            if f:
                for c, v in row.items():
                    nv = pr.get(c, 0) - f * v
                    if nv == 0:
                        pr.pop(c, None)
                    else:
                        pr[c] = nv
        pivot_rows[lead] = row
    free = [c for c in range(ncols) if c not in pivot_rows]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for pc, pr in pivot_rows.items():
            if f in pr:
                v[pc] = -pr[f]
        basis.append(v)
    return basis


def solve(m, rhs: Sequence) -> list[Fraction]:
    """One exact solution of ``m x = rhs``; raises ``ValueError`` if inconsistent."""
    rows, ncols = _rows_of(m)
    aug = [r + [as_rational(b)] for r, b in zip(rows, rhs)]
    red, piv = rref(aug, ncols + 1)
    if ncols in piv:
        raise ValueError("inconsistent linear system")
    x = [Fraction(0)] * ncols
    for i, pc in enumerate(piv):
        x[pc] = red[i, ncols]
    return x


def solve_square(m, rhs: Sequence) -> list[Fraction]:
    """Unique solution of a square system; ``ValueError`` when singular."""
    rows, ncols = _rows_of(m)
    if len(rows) != ncols:
        raise ValueError("matrix is not square")
    if rank(rows) < ncols:
        raise ValueError("singular system")
    return solve(rows, rhs)


def inverse(m) -> list[list[Fraction]]:
    rows, n = _rows_of(m)
    aug = [r + [Fraction(int(i == j)) for j in range(n)] for i, r in enumerate(rows)]
    red, piv = rref(aug, 2 * n)
    if piv[:n] != list(range(n)) or len(piv) < n or piv[n - 1] != n - 1:
        raise ValueError("singular matrix")
    return [red.row(i)[n:] for i in range(n)]


def annihilator(basis: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Rows spanning the functionals that vanish on ``span(basis)``."""
    return kernel_basis(list(basis), ncols) if basis else \
        [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]


def subspace_intersection(bases: Sequence[Sequence[Sequence]], ncols: int) -> list[list[Fraction]]:
    """Canonical basis of the intersection of row spans sharing ``ncols`` columns.

    The intersection is the kernel of the stacked annihilators.
    """
    if not bases:
        raise ValueError("need at least one subspace")
    eqs: list[list[Fraction]] = []
    for b in bases:
        for r in b:
            if len(r) != ncols:
                raise ValueError("ambient dimension mismatch")
        eqs.extend(annihilator(b, ncols))
    if not eqs:
        return row_basis([[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)], ncols)
    ker = kernel_basis(eqs, ncols)
    return row_basis(ker, ncols) if ker else []
