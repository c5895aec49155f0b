"""Partitions, multipartitions and the residue combinatorics of blocks.

Canonical orders (fixed, because downstream matrices are indexed by them):

* partitions of ``d`` are listed reverse-lexicographically,
  ``(3), (2, 1), (1, 1, 1)``;
* ``l``-multipartitions are listed by their size vector
  ``(|λ1|, ..., |λl|)`` in reverse-lexicographic order, then component-wise
  in partition order;
* the set ``P_d(l)`` is listed by increasing size, reverse-lexicographically
  within each size.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from math import factorial
from typing import Iterable, Sequence

__all__ = [
    "Partition",
    "Multipartition",
    "ResidueMultiset",
    "enumerate_partitions",
    "enumerate_compositions",
    "enumerate_multipartitions",
    "enumerate_p_set",
    "in_p_set",
    "phi",
    "phi_inv",
    "residue_tuple",
    "basd_rank",
    "elementary_symmetric",
    "elementary_symmetric_shift_identity",
    "monomial_symmetric",
    "power_sum",
    "distinct_permutations",
    "sharp",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort, drop zeros, and wrap."""
        return cls(sorted((p for p in parts if p), reverse=True))

    def size(self) -> int:
        return sum(self)

    def length(self) -> int:
        return len(self)

    def div(self, l: int) -> "Partition":
        """The partition of floors ``λ_i // l`` (zero parts dropped)."""
        return Partition.from_parts(p // l for p in self)

    def padded(self, d: int) -> tuple[int, ...]:
        if len(self) > d:
            raise ValueError(f"{self} has more than {d} parts")
        return tuple(self) + (0,) * (d - len(self))

    def boxes(self):
        """Yield ``(row, col)`` for each box, 1-based."""
        for row, part in enumerate(self, start=1):
            for col in range(1, part + 1):
                yield row, col

    def __repr__(self):
        return "(" + ",".join(map(str, self)) + ")" if self else "∅"


class Multipartition(tuple):
    """An ``l``-tuple of partitions."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise ValueError("a multipartition needs level >= 1")
        return super().__new__(cls, comps)

    @property
    def level(self) -> int:
        return len(self)

    def size(self) -> int:
        return sum(c.size() for c in self)

    def __repr__(self):
        return "(" + "|".join(repr(c) for c in self) + ")"


class ResidueMultiset:
    """A multiset of rationals; equality is multiset equality."""

    __slots__ = ("entries",)

    def __init__(self, entries: Iterable):
        self.entries = tuple(sorted(Fraction(e) for e in entries))

    def __eq__(self, other):
        if not isinstance(other, ResidueMultiset):
            return NotImplemented
        return self.entries == other.entries

    def __hash__(self):
        return hash(self.entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __lt__(self, other):
        return self.entries < other.entries

    def __repr__(self):
        return "{" + ", ".join(str(e) for e in self.entries) + "}"


def _partitions_bounded(n: int, max_part: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def enumerate_partitions(d: int) -> list[Partition]:
    """All partitions of ``d`` in reverse-lexicographic order."""
    if d < 0:
        raise ValueError("d must be non-negative")
    return [Partition(p) for p in _partitions_bounded(d, d)]


def enumerate_compositions(d: int, l: int):
    """Weak compositions of ``d`` into ``l`` parts, reverse-lexicographic."""
    if l == 1:
        yield (d,)
        return
    for first in range(d, -1, -1):
        for rest in enumerate_compositions(d - first, l - 1):
            yield (first,) + rest


def enumerate_multipartitions(d: int, l: int) -> list[Multipartition]:
    """The set ``M_d(l)`` in canonical order."""
    if d < 0 or l < 1:
        raise ValueError("need d >= 0 and l >= 1")
    out = []
    for sizes in enumerate_compositions(d, l):
        for comps in itertools.product(*(enumerate_partitions(s) for s in sizes)):
            out.append(Multipartition(comps))
    return out


def in_p_set(mu: Sequence[int], d: int, l: int) -> bool:
    mu = Partition.from_parts(mu)
    return mu.length() + mu.div(l).size() <= d


def enumerate_p_set(d: int, l: int) -> list[Partition]:
    """Partitions ``λ`` with ``ℓ(λ) + |λ/l| <= d``."""
    if d < 0 or l < 1:
        raise ValueError("need d >= 0 and l >= 1")

    def rec(budget, max_part):
        yield ()
        for part in range(1, max_part + 1):
            cost = 1 + part // l
            if cost <= budget:
                for rest in rec(budget - cost, part):
                    yield (part,) + rest

    found = [Partition(p) for p in rec(d, max(l * d - 1, 0))]
    return sorted(found, key=lambda p: (p.size(), tuple(-x for x in p)))


def phi(mp: Multipartition) -> Partition:
    """The bijection ``M_d(l) -> P_d(l)``.

    Part ``a`` of the ``r``-th component (1-based) becomes ``(a-1)*l + r-1``.
    """
    l = mp.level
    parts = [(a - 1) * l + r for r, comp in enumerate(mp) for a in comp]
    return Partition.from_parts(parts)


def phi_inv(mu: Sequence[int], l: int, d: int) -> Multipartition:
    mu = Partition.from_parts(mu)
    if not in_p_set(mu, d, l):
        raise ValueError(f"{mu!r} is not in P_{d}({l})")
    padded = mu.padded(d - mu.div(l).size())
    comps = [[] for _ in range(l)]
    for m in padded:
        comps[m % l].append(m // l + 1)
    return Multipartition(Partition.from_parts(c) for c in comps)


def sharp(mp: Multipartition) -> int:
    """``d`` minus the number of parts of the first component equal to 1."""
    return mp.size() - sum(1 for a in mp[0] if a == 1)


def residue_tuple(mp: Multipartition, q: Sequence) -> ResidueMultiset:
    """Residues ``q_r + col - row`` over all boxes of every component."""
    if len(q) != mp.level:
        raise ValueError(f"level {mp.level} does not match {len(q)} parameters")
    return ResidueMultiset(
        Fraction(qr) + col - row
        for qr, comp in zip(q, mp)
        for row, col in comp.boxes()
    )


def basd_rank(d: int, l: int) -> int:
    """Rank of the centralizer algebra, summed over cycle types of ``S_d``."""
    total = Fraction(0)
    for lam in enumerate_partitions(d):
        mult = {}
        for a in lam:
            mult[a] = mult.get(a, 0) + 1
        term = Fraction(factorial(d))
        for a, r in mult.items():
            term /= factorial(r)
            term *= Fraction(l, a) ** r
        total += term
    if total.denominator != 1:
        raise ArithmeticError(f"non-integral rank {total} for d={d}, l={l}")
    return int(total)


def elementary_symmetric(values: Sequence, r: int) -> Fraction:
    """``e_r`` of the given values, via the product ``prod (1 + v t)``."""
    if r < 0:
        return Fraction(0)
    coeffs = [Fraction(1)]
    for v in values:
        v = Fraction(v)
        coeffs = [a + v * b for a, b in zip(coeffs + [Fraction(0)], [Fraction(0)] + coeffs)]
    return coeffs[r] if r < len(coeffs) else Fraction(0)


def elementary_symmetric_shift_identity(u_list: Sequence, u, r: int) -> bool:
    """Check ``e_r(u.., u+1) == e_r(u.., u) + sum_s (-1)^s e_{r-1-s}(u.., u) u^s``."""
    u = Fraction(u)
    base = list(u_list) + [u]
    lhs = elementary_symmetric(list(u_list) + [u + 1], r)
    rhs = elementary_symmetric(base, r) + sum(
        (-1) ** s * elementary_symmetric(base, r - 1 - s) * u ** s for s in range(r)
    )
    return lhs == rhs


def distinct_permutations(seq: Sequence) -> list[tuple]:
    """Distinct rearrangements of ``seq``, sorted."""
    return sorted(set(itertools.permutations(seq)))


def monomial_symmetric(values: Sequence, mu: Sequence[int]) -> Fraction:
    """Evaluate ``sum_{ν ~ μ} v_1^ν_1 ... v_d^ν_d`` with ``μ`` padded to ``len(values)``.

    Each distinct rearrangement is counted once.
    """
    values = [Fraction(v) for v in values]
    mu = Partition.from_parts(mu)
    total = Fraction(0)
    for nu in distinct_permutations(mu.padded(len(values))):
        term = Fraction(1)
        for v, e in zip(values, nu):
            term *= v ** e
        total += term
    return total


def power_sum(values: Sequence, k: int) -> Fraction:
    return sum((Fraction(v) ** k for v in values), Fraction(0))
