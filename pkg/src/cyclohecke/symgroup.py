"""Permutations of ``{1..d}`` in one-line notation, and cycles.

Products compose right to left: ``(v * w)(i) == v(w(i))``.  Under this
convention ``(1 2 3)(7 9 2 1) == (1 7 9 3)``, which is the reading used for
products of colored cycles elsewhere in the package.
"""

from __future__ import annotations

import itertools
from functools import lru_cache
from math import comb
from typing import Iterable, Sequence

__all__ = [
    "Permutation",
    "Cycle",
    "compose",
    "cycle_decomposition",
    "reduced_word",
    "coset_representatives",
    "coset_factor",
    "all_permutations",
    "all_cycles",
    "format_cycles",
]


class Permutation(tuple):
    """One-line notation ``(w(1), ..., w(d))``."""

    def __new__(cls, images: Iterable[int]):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        return super().__new__(cls, images)

    @classmethod
    def _trusted(cls, images):
        return tuple.__new__(cls, images)

    @classmethod
    def identity(cls, d: int) -> "Permutation":
        return cls._trusted(range(1, d + 1))

    @classmethod
    def transposition(cls, d: int, i: int, j: int) -> "Permutation":
        images = list(range(1, d + 1))
        images[i - 1], images[j - 1] = j, i
        return cls._trusted(images)

    @classmethod
    def simple(cls, d: int, i: int) -> "Permutation":
        """The basic transposition ``s_i = (i i+1)``."""
        if not 1 <= i < d:
            raise ValueError(f"s_{i} does not exist in S_{d}")
        return cls.transposition(d, i, i + 1)

    @classmethod
    def from_cycles(cls, d: int, cycles: Iterable[Sequence[int]]) -> "Permutation":
        """Product of the given cycles, rightmost applied first."""
        w = cls.identity(d)
        for c in cycles:
            w = w * Cycle(c).to_permutation(d)
        return w

    @property
    def degree(self) -> int:
        return len(self)

    def __call__(self, i: int) -> int:
        return tuple.__getitem__(self, i - 1)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, wi in enumerate(self, start=1):
            inv[wi - 1] = i
        return Permutation._trusted(inv)

    def length(self) -> int:
        """Inversion count."""
        return sum(1 for a, b in itertools.combinations(self, 2) if a > b)

    def is_identity(self) -> bool:
        return all(wi == i for i, wi in enumerate(self, start=1))

    def cycles(self) -> list["Cycle"]:
        return cycle_decomposition(self)

    def __repr__(self):
        return format_cycles(self)


def compose(v: Permutation, w: Permutation) -> Permutation:
    """``v ∘ w``: apply ``w`` first."""
    if len(v) != len(w):
        raise ValueError(f"degree mismatch: {len(v)} vs {len(w)}")
    return Permutation._trusted(tuple(v[wi - 1] for wi in w))


class Cycle:
    """A cycle ``(i1 i2 ... ia)``, stored rotated so the minimum comes first."""

    __slots__ = ("points",)

    def __init__(self, points: Sequence[int]):
        points = tuple(int(p) for p in points)
        if not points:
            raise ValueError("a cycle needs at least one point")
        if len(set(points)) != len(points):
            raise ValueError(f"repeated point in cycle {points}")
        k = points.index(min(points))
        self.points = points[k:] + points[:k]

    @property
    def support(self) -> frozenset:
        return frozenset(self.points)

    def __len__(self):
        return len(self.points)

    def __eq__(self, other):
        return isinstance(other, Cycle) and self.points == other.points

    def __hash__(self):
        return hash(self.points)

    def __lt__(self, other):
        return self.points < other.points

    def to_permutation(self, d: int) -> Permutation:
        images = list(range(1, d + 1))
        pts = self.points
        for a, b in zip(pts, pts[1:] + pts[:1]):
            images[a - 1] = b
        return Permutation._trusted(images)

    def conjugate(self, w: Permutation) -> "Cycle":
        return Cycle(w(p) for p in self.points)

    def __repr__(self):
        return "(" + " ".join(map(str, self.points)) + ")"


def cycle_decomposition(w: Permutation) -> list[Cycle]:
    """Disjoint cycles of ``w``, 1-cycles included, sorted by minimum."""
    seen = set()
    out = []
    for start in range(1, len(w) + 1):
        if start in seen:
            continue
        pts = [start]
        seen.add(start)
        nxt = w(start)
        while nxt != start:
            pts.append(nxt)
            seen.add(nxt)
            nxt = w(nxt)
        out.append(Cycle(pts))
    return out


def format_cycles(w: Permutation) -> str:
    """Cycle notation with 1-cycles dropped; the identity prints as ``()``."""
    nontrivial = [c for c in cycle_decomposition(w) if len(c) > 1]
    return "".join(map(repr, nontrivial)) or "()"


@lru_cache(maxsize=None)
def _reduced_word(w: tuple) -> tuple:
    images = list(w)
    word = []
    # bubble sort from the right: w = s_{i1} ... s_{ik}
    n = len(images)
    changed = True
    while changed:
        changed = False
        for i in range(n - 1):
            if images[i] > images[i + 1]:
                images[i], images[i + 1] = images[i + 1], images[i]
                word.append(i + 1)
                changed = True
    # images sorted by right-multiplying with s_i's: w s_{j1} ... s_{jk} = e
    return tuple(reversed(word))


def reduced_word(w: Permutation) -> list[int]:
    """Indices ``[i1, ..., ik]`` with ``w == s_i1 * ... * s_ik`` and ``k == w.length()``."""
    return list(_reduced_word(tuple(w)))


def coset_factor(w: Permutation, d1: int) -> tuple[Permutation, Permutation]:
    """Split ``w = rep * v`` with ``rep`` minimal in ``w (S_d1 x S_d2)``.

    ``v`` permutes ``{1..d1}`` and ``{d1+1..d}`` separately.
    """
    rep = Permutation._trusted(tuple(sorted(w[:d1])) + tuple(sorted(w[d1:])))
    return rep, rep.inverse() * w


def coset_representatives(d1: int, d2: int) -> list[Permutation]:
    """Minimal-length representatives of ``S_d / (S_d1 x S_d2)``.

    A representative is increasing on ``{1..d1}`` and on ``{d1+1..d}``; the
    list is ordered by length, then one-line notation.
    """
    d = d1 + d2
    reps = []
    for first in itertools.combinations(range(1, d + 1), d1):
        rest = [i for i in range(1, d + 1) if i not in first]
        reps.append(Permutation._trusted(first + tuple(rest)))
    assert len(reps) == comb(d, d1)
    return sorted(reps, key=lambda p: (p.length(), tuple(p)))


def all_permutations(d: int) -> list[Permutation]:
    """All of ``S_d`` in lexicographic one-line order."""
    return [Permutation._trusted(p) for p in itertools.permutations(range(1, d + 1))]


def all_cycles(d: int) -> list[Cycle]:
    """Every cycle in ``S_d`` (1-cycles included), each once."""
    out = []
    for a in range(1, d + 1):
        for subset in itertools.combinations(range(1, d + 1), a):
            head, rest = subset[0], subset[1:]
            for perm in itertools.permutations(rest):
                out.append(Cycle((head,) + perm))
    return out
