"""Dual Specht modules for ``H_d^q`` as explicit rational matrices.

``S^λ`` is realized inside the permutation module on tabloids of shape ``λ``:
the left ideal of ``Q S_d`` generated by the Young symmetrizer of a tableau
``T`` is isomorphic to the submodule generated by the polytabloid
``e_T = sum_{σ in C_T} sgn(σ) {σT}``, and a basis is extracted from the orbit
of ``e_T`` by exact row reduction.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import (
    Multipartition,
    Partition,
    ResidueMultiset,
    enumerate_multipartitions,
    power_sum,
    residue_tuple,
)
from .errors import VerificationError
from .linalg import (
    EchelonBasis,
    identity,
    inverse,
    is_zero_matrix,
    mat_add,
    mat_scale,
    mat_sub,
    matmul,
    to_dense,
    transpose,
    zeros,
)
from .symgroup import Permutation, coset_factor, coset_representatives, reduced_word

__all__ = [
    "Representation",
    "specht_representation",
    "dualize",
    "affinize",
    "induce_product",
    "dual_specht",
    "central_character",
    "relation_failures",
    "act",
    "standard_tableaux_count",
]


@dataclass
class Representation:
    """Matrices for ``s_1..s_{d-1}`` and, once affinized, ``x_1..x_d``."""

    d: int
    dim: int
    s: list
    x: list | None = None
    params: tuple = field(default=())

    def word_matrix(self, word) -> list:
        out = identity(self.dim)
        for i in word:
            out = matmul(out, self.s[i - 1])
        return out

    def perm_matrix(self, w: Permutation) -> list:
        return self.word_matrix(reduced_word(w))

    def to_json(self) -> dict:
        def enc(m):
            return [[str(v) for v in row] for row in m]

        out = {"d": self.d, "dim": self.dim, "s": [enc(m) for m in self.s]}
        if self.x is not None:
            out["x"] = [enc(m) for m in self.x]
        return out


def _row_reading_tableau(shape: Partition) -> list[list[int]]:
    rows, n = [], 1
    for part in shape:
        rows.append(list(range(n, n + part)))
        n += part
    return rows


def _column_group(tableau):
    """All ``(images, sign)`` for permutations preserving the columns of ``tableau``."""
    d = sum(len(r) for r in tableau)
    ncols = len(tableau[0]) if tableau else 0
    columns = [[row[c] for row in tableau if c < len(row)] for c in range(ncols)]
    per_col = [list(itertools.permutations(col)) for col in columns]
    for choice in itertools.product(*per_col):
        images = list(range(1, d + 1))
        sign = 1
        for col, img in zip(columns, choice):
            for a, b in zip(col, img):
                images[a - 1] = b
            sign *= _perm_sign(col, img)
        yield images, sign


def _perm_sign(src, dst) -> int:
    pos = {v: i for i, v in enumerate(src)}
    seq = [pos[v] for v in dst]
    inv = sum(1 for i in range(len(seq)) for j in range(i + 1, len(seq)) if seq[i] > seq[j])
    return -1 if inv % 2 else 1


def _tabloids(shape: Partition, d: int) -> list[tuple]:
    out = []

    def rec(remaining, k, acc):
        if k == len(shape):
            out.append(tuple(acc))
            return
        for row in itertools.combinations(sorted(remaining), shape[k]):
            rec(remaining - set(row), k + 1, acc + [frozenset(row)])

    rec(set(range(1, d + 1)), 0, [])
    return out


@lru_cache(maxsize=None)
def specht_representation(shape) -> Representation:
    """Matrices of ``s_i`` on the Specht module ``S^λ`` (``S^(d)`` is trivial)."""
    shape = Partition.from_parts(shape)
    d = shape.size()
    if d == 0:
        return Representation(0, 1, [])
    tabloids = _tabloids(shape, d)
    index = {t: i for i, t in enumerate(tabloids)}
    tableau = _row_reading_tableau(shape)

    def act_tabloid(images, t):
        return tuple(frozenset(images[p - 1] for p in row) for row in t)

    base = tuple(frozenset(row) for row in tableau)
    polytabloid = {}
    for images, sign in _column_group(tableau):
        j = index[act_tabloid(images, base)]
        polytabloid[j] = polytabloid.get(j, 0) + sign
    polytabloid = {j: Fraction(v) for j, v in polytabloid.items() if v}

    simple = [Permutation.simple(d, i) for i in range(1, d)]

    def act_vec(w, vec):
        return {index[act_tabloid(w, tabloids[j])]: v for j, v in vec.items()}

    eb = EchelonBasis(len(tabloids))
    eb.add(polytabloid)
    queue = [polytabloid]
    while queue:
        v = queue.pop()
        for w in simple:
            u = act_vec(w, v)
            if eb.add(u):
                queue.append(u)

    pivots = eb.pivots
    basis = [eb.rows[p] for p in pivots]
    n = len(basis)
    mats = []
    for w in simple:
        m = zeros(n, n)
        for j, b in enumerate(basis):
            coords = eb.coordinates(act_vec(w, b))
            for i, p in enumerate(pivots):
                if p in coords:
                    m[i][j] = coords[p]
        mats.append(m)
    return Representation(d, n, mats)


def standard_tableaux_count(shape) -> int:
    """Number of standard tableaux, by removing the box holding the largest entry."""
    shape = tuple(Partition.from_parts(shape))

    @lru_cache(maxsize=None)
    def count(sh):
        if sum(sh) == 0:
            return 1
        total = 0
        for i, part in enumerate(sh):
            if part and (i + 1 == len(sh) or sh[i + 1] < part):
                total += count(sh[:i] + (part - 1,) + sh[i + 1:])
        return total

    return count(shape)


def dualize(rep: Representation) -> Representation:
    """Contragredient module: every ``s_i`` becomes the transpose of its inverse."""
    if rep.x is not None:
        raise ValueError("dualize expects a module for the symmetric group only")
    return Representation(rep.d, rep.dim, [transpose(inverse(m)) for m in rep.s])


def affinize(rep: Representation, q) -> Representation:
    """Extend to ``H_d`` with ``x_1 = q`` and ``x_{i+1} = s_i x_i s_i + s_i``."""
    if rep.x is not None:
        raise ValueError("representation is already affinized")
    q = Fraction(q)
    xs = []
    if rep.d:
        xs.append(mat_scale(q, identity(rep.dim)))
        for i in range(1, rep.d):
            s = rep.s[i - 1]
            xs.append(mat_add(matmul(matmul(s, xs[-1]), s), s))
    return Representation(rep.d, rep.dim, [list(m) for m in rep.s], xs, (q,))


def _kron(a, b):
    return [[x * y for x in ra for y in rb] for ra in a for rb in b]


def induce_product(m1: Representation, m2: Representation) -> Representation:
    """``H_d ⊗_{H_d1 ⊗ H_d2} (M1 ⊠ M2)`` on the basis ``{w ⊗ m}``, ``w`` minimal coset representatives."""
    if m1.x is None or m2.x is None:
        raise ValueError("both factors must be affinized")
    d1, d2 = m1.d, m2.d
    if d2 == 0:
        return Representation(m1.d, m1.dim, m1.s, m1.x, m1.params + m2.params)
    if d1 == 0:
        return Representation(m2.d, m2.dim, m2.s, m2.x, m1.params + m2.params)
    d = d1 + d2
    i1, i2 = identity(m1.dim), identity(m2.dim)
    t_s = [_kron(m, i2) for m in m1.s] + [None] + [_kron(i1, m) for m in m2.s]
    t_x = [_kron(m, i2) for m in m1.x] + [_kron(i1, m) for m in m2.x]
    dt = m1.dim * m2.dim

    def t_word(word):
        out = identity(dt)
        for j in word:
            out = matmul(out, t_s[j - 1])
        return out

    reps = coset_representatives(d1, d2)
    pos = {w: a for a, w in enumerate(reps)}
    n = len(reps) * dt

    def place(mat, block_row, block_col, target):
        for r in range(dt):
            for c in range(dt):
                if mat[r][c]:
                    target[block_row * dt + r][block_col * dt + c] += mat[r][c]

    s_full = []
    for i in range(1, d):
        si = Permutation.simple(d, i)
        m = zeros(n, n)
        for a, w in enumerate(reps):
            rep, v = coset_factor(si * w, d1)
            place(t_word(reduced_word(v)), pos[rep], a, m)
        s_full.append(m)

    cache = {}

    def x_block(k, a):
        """Columns of ``x_k`` on the block ``w_a ⊗ M1⊠M2`` (an ``n x dt`` matrix)."""
        if (k, a) in cache:
            return cache[(k, a)]
        w = reps[a]
        out = zeros(n, dt)
        if w.is_identity():
            for r in range(dt):
                for c in range(dt):
                    out[a * dt + r][c] = t_x[k - 1][r][c]
        else:
            i = reduced_word(w)[0]
            shorter = pos[Permutation.simple(d, i) * w]
            k2 = i + 1 if k == i else i if k == i + 1 else k
            out = matmul(s_full[i - 1], x_block(k2, shorter))
            eps = -1 if k == i else 1 if k == i + 1 else 0
            if eps:
                for r in range(dt):
                    out[shorter * dt + r][r] += eps
        cache[(k, a)] = out
        return out

    x_full = []
    for k in range(1, d + 1):
        cols = [x_block(k, a) for a in range(len(reps))]
        x_full.append([sum((blk[r] for blk in cols), []) for r in range(n)])
    return Representation(d, n, s_full, x_full, m1.params + m2.params)


def dual_specht(mp, q: Sequence) -> Representation:
    """``S^q_λ = S^{q_1}_{λ^(1)} ∘ ... ∘ S^{q_l}_{λ^(l)}``."""
    mp = Multipartition(mp)
    q = tuple(Fraction(v) for v in q)
    if len(q) != mp.level:
        raise ValueError("one parameter per component is required")
    out = Representation(0, 1, [], [], ())
    for comp, qr in zip(mp, q):
        if comp.size() == 0:
            continue
        out = induce_product(out, affinize(dualize(specht_representation(comp)), qr))
    out.params = q
    return out


def act(rep: Representation, element) -> list:
    """Matrix of a Hecke algebra element on ``rep``."""
    if rep.x is None:
        raise ValueError("representation has no x action")
    out = zeros(rep.dim, rep.dim)
    powers = {}
    for (alpha, w), c in element.terms.items():
        m = identity(rep.dim)
        for i, e in enumerate(alpha, start=1):
            if e:
                if (i, e) not in powers:
                    p = identity(rep.dim)
                    for _ in range(e):
                        p = matmul(p, rep.x[i - 1])
                    powers[(i, e)] = p
                m = matmul(m, powers[(i, e)])
        m = matmul(m, rep.perm_matrix(w))
        out = mat_add(out, mat_scale(c, m))
    return out


def _scalar_of(m) -> Fraction:
    n = len(m)
    c = m[0][0] if n else Fraction(0)
    for i in range(n):
        for j in range(n):
            if m[i][j] != (c if i == j else 0):
                raise VerificationError("matrix is not scalar")
    return c


def central_character(rep: Representation, q: Sequence | None = None) -> ResidueMultiset:
    """Residue multiset whose character matches the action of the power sums.

    Power sums ``p_1..p_d`` must act by scalars; the multiset is identified
    among the residue multisets of all multipartitions for the parameters ``q``.
    """
    if rep.x is None:
        raise ValueError("representation has no x action")
    q = tuple(rep.params if q is None else q)
    d = rep.d
    scalars = []
    for k in range(1, d + 1):
        total = zeros(rep.dim, rep.dim)
        for xm in rep.x:
            p = identity(rep.dim)
            for _ in range(k):
                p = matmul(p, xm)
            total = mat_add(total, p)
        scalars.append(_scalar_of(total))
    candidates = {residue_tuple(mp, q) for mp in enumerate_multipartitions(d, len(q))}
    hits = [c for c in candidates if all(power_sum(c, k) == s for k, s in enumerate(scalars, start=1))]
    if len(hits) != 1:
        raise VerificationError(f"power sums {scalars} match {len(hits)} residue multisets")
    return hits[0]


def relation_failures(rep: Representation, roots: Sequence | None = None) -> list[str]:
    """Names of defining relations of ``H_d`` (and ``f(x_1) = 0``) that fail."""
    fails = []
    d, s, x = rep.d, rep.s, rep.x
    one = identity(rep.dim)
    for i in range(d - 1):
        if matmul(s[i], s[i]) != one:
            fails.append(f"s{i + 1}^2 = 1")
        for j in range(i + 1, d - 1):
            if j == i + 1:
                lhs = matmul(matmul(s[i], s[j]), s[i])
                rhs = matmul(matmul(s[j], s[i]), s[j])
            else:
                lhs, rhs = matmul(s[i], s[j]), matmul(s[j], s[i])
            if lhs != rhs:
                fails.append(f"s{i + 1}, s{j + 1} relation")
    if x is None:
        return fails
    for i in range(d):
        for j in range(i + 1, d):
            if matmul(x[i], x[j]) != matmul(x[j], x[i]):
                fails.append(f"x{i + 1} x{j + 1} commute")
    for i in range(d - 1):
        lhs = matmul(s[i], x[i + 1])
        rhs = mat_add(matmul(x[i], s[i]), one)
        if lhs != rhs:
            fails.append(f"s{i + 1} x{i + 2} = x{i + 1} s{i + 1} + 1")
        for j in range(d):
            if j not in (i, i + 1) and matmul(s[i], x[j]) != matmul(x[j], s[i]):
                fails.append(f"s{i + 1} x{j + 1} commute")
    if roots is not None and d:
        m = one
        for qr in roots:
            m = matmul(m, mat_sub(x[0], mat_scale(qr, one)))
        if not is_zero_matrix(m):
            fails.append("f(x1) = 0")
    return fails
