"""Exact rational linear algebra.

Matrices are lists of rows of ``Fraction`` (ints are accepted on input).
The workhorse is :class:`EchelonBasis`, an incrementally maintained reduced
row echelon form whose rows are stored as ``{column: value}`` maps.  Since the
reduced row echelon form of a matrix is unique, feeding rows one at a time
yields the same result as a textbook sweep.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "EchelonBasis",
    "rref",
    "rank",
    "nullspace_basis",
    "nullspace_sparse",
    "in_span",
    "solve",
    "inverse",
    "matmul",
    "matvec",
    "identity",
    "zeros",
    "transpose",
    "mat_add",
    "mat_sub",
    "mat_scale",
    "is_zero_matrix",
    "to_sparse",
    "to_dense",
]


def _frac(x) -> Fraction:
    return x if isinstance(x, Fraction) else Fraction(x)


def to_sparse(vec: Sequence) -> dict:
    return {j: _frac(x) for j, x in enumerate(vec) if x}


def to_dense(vec: dict, n: int) -> list:
    out = [Fraction(0)] * n
    for j, x in vec.items():
        out[j] = x
    return out


class EchelonBasis:
    """Rows kept in reduced row echelon form, keyed by pivot column."""

    def __init__(self, ncols: int):
        self.ncols = ncols
        self.rows: dict[int, dict] = {}

    def __len__(self):
        return len(self.rows)

    @property
    def pivots(self) -> list[int]:
        return sorted(self.rows)

    def reduce(self, vec: dict) -> dict:
        """Residual of ``vec`` after eliminating every pivot column."""
        vec = dict(vec)
        for c in [c for c in vec if c in self.rows]:
            coef = vec.get(c)
            if not coef:
                continue
            for j, x in self.rows[c].items():
                y = vec.get(j, 0) - coef * x
                if y:
                    vec[j] = y
                else:
                    vec.pop(j, None)
        return vec

    def add(self, vec) -> bool:
        """Insert a row (dense or sparse); return whether it was independent."""
        if not isinstance(vec, dict):
            vec = to_sparse(vec)
        res = self.reduce(vec)
        if not res:
            return False
        p = min(res)
        inv = 1 / res[p]
        res = {j: x * inv for j, x in res.items()}
        for row in self.rows.values():
            coef = row.get(p)
            if coef:
                for j, x in res.items():
                    y = row.get(j, 0) - coef * x
                    if y:
                        row[j] = y
                    else:
                        del row[j]
        self.rows[p] = res
        return True

    def contains(self, vec) -> bool:
        if not isinstance(vec, dict):
            vec = to_sparse(vec)
        return not self.reduce(vec)

    def coordinates(self, vec) -> dict:
        """Coefficients on the basis rows (keyed by pivot); raises if outside the span."""
        if not isinstance(vec, dict):
            vec = to_sparse(vec)
        if self.reduce(vec):
            raise ValueError("vector is not in the span")
        return {p: vec[p] for p in self.rows if vec.get(p)}

    def dense_rows(self) -> list[list[Fraction]]:
        return [to_dense(self.rows[p], self.ncols) for p in self.pivots]

    def nullspace(self) -> list[dict]:
        """Sparse basis of ``{v : row . v == 0 for all rows}``."""
        pivots = self.rows
        out = []
        for f in range(self.ncols):
            if f in pivots:
                continue
            v = {f: Fraction(1)}
            for p, row in pivots.items():
                x = row.get(f)
                if x:
                    v[p] = -x
            out.append(v)
        return out


def _ncols(m: Sequence[Sequence]) -> int:
    if not m:
        return 0
    n = len(m[0])
    if any(len(r) != n for r in m):
        raise ValueError("ragged matrix")
    return n


def rref(m: Sequence[Sequence], ncols: int | None = None) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns.

    Zero rows are appended so the result has the shape of ``m``.
    """
    n = _ncols(m) if ncols is None else ncols
    eb = EchelonBasis(n)
    for row in m:
        eb.add(row)
    out = eb.dense_rows()
    out += [[Fraction(0)] * n for _ in range(len(m) - len(out))]
    return out, eb.pivots


def rank(m: Sequence[Sequence]) -> int:
    eb = EchelonBasis(_ncols(m))
    for row in m:
        eb.add(row)
    return len(eb)


def nullspace_sparse(rows: Iterable[dict], ncols: int) -> list[dict]:
    """Right kernel of a matrix given as sparse rows."""
    eb = EchelonBasis(ncols)
    for row in rows:
        eb.add(row)
    return eb.nullspace()


def nullspace_basis(m: Sequence[Sequence], ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the right kernel, one vector per free column."""
    n = _ncols(m) if ncols is None else ncols
    return [to_dense(v, n) for v in nullspace_sparse((to_sparse(r) for r in m), n)]


def in_span(v: Sequence, basis: Sequence[Sequence]) -> bool:
    for b in basis:
        if len(b) != len(v):
            raise ValueError("dimension mismatch")
    eb = EchelonBasis(len(v))
    for b in basis:
        eb.add(b)
    return eb.contains(v)


def solve(m: Sequence[Sequence], b: Sequence) -> list[Fraction] | None:
    """One solution of ``m x = b`` (free variables set to zero), or ``None``."""
    n = _ncols(m)
    if len(b) != len(m):
        raise ValueError("dimension mismatch")
    aug = [list(row) + [bi] for row, bi in zip(m, b)]
    red, pivots = rref(aug, n + 1)
    if n in pivots:
        return None
    x = [Fraction(0)] * n
    for row, p in zip(red, pivots):
        x[p] = row[n]
    return x


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def zeros(r: int, c: int) -> list[list[Fraction]]:
    return [[Fraction(0)] * c for _ in range(r)]


def inverse(m: Sequence[Sequence]) -> list[list[Fraction]]:
    n = len(m)
    if _ncols(m) != n:
        raise ValueError("matrix is not square")
    aug = [list(row) + ident for row, ident in zip(m, identity(n))]
    red, pivots = rref(aug, 2 * n)
    if pivots != list(range(n)):
        raise ZeroDivisionError("matrix is singular")
    return [row[n:] for row in red]


def transpose(m: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*m)] if m else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list[Fraction]]:
    if a and len(a[0]) != len(b):
        raise ValueError("dimension mismatch")
    bt = transpose(b)
    out = []
    for row in a:
        nz = [(k, x) for k, x in enumerate(row) if x]
        out.append([_frac(sum(x * col[k] for k, x in nz)) for col in bt])
    return out


def matvec(a: Sequence[Sequence], v: Sequence) -> list[Fraction]:
    return [_frac(sum(x * y for x, y in zip(row, v) if x)) for row in a]


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(c, a):
    c = _frac(c)
    return [[c * x for x in row] for row in a]


def is_zero_matrix(a) -> bool:
    return all(not x for row in a for x in row)
