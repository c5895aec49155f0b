"""Common machinery for algebras with basis ``x^α · w``.

Both the twisted tensor product ``R_l[x] ⋊ R S_d`` and the cyclotomic Hecke
algebra have the basis ``{x^α w : 0 <= α_i < l, w in S_d}``; they differ only
in how products are straightened.  Elements store ``{(α, w): coefficient}``
with zero coefficients never kept.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import cached_property

from .errors import VerificationError
from .linalg import EchelonBasis
from .symgroup import Permutation, all_permutations

__all__ = ["BasisAlgebra", "Element", "add_into"]


def add_into(acc: dict, terms: dict, scale=1) -> dict:
    for k, v in terms.items():
        y = acc.get(k, 0) + scale * v
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


class Element:
    """Sparse linear combination of basis keys ``(α, w)``."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra: "BasisAlgebra", terms: dict | None = None):
        self.algebra = algebra
        self.terms = {k: Fraction(v) for k, v in (terms or {}).items() if v}

    def _wrap(self, terms):
        out = type(self).__new__(type(self))
        out.algebra = self.algebra
        out.terms = terms
        return out

    def _check(self, other):
        if other.algebra != self.algebra:
            raise ValueError(f"parameter mismatch: {self.algebra} vs {other.algebra}")

    def _coerce(self, other):
        if isinstance(other, Element):
            self._check(other)
            return other
        if isinstance(other, (int, Fraction)):
            return self.algebra.scalar(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(add_into(dict(self.terms), other.terms))

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._wrap(add_into(dict(self.terms), other.terms, -1))

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return self._wrap({k: -v for k, v in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return self._wrap({})
            return self._wrap({k: v * other for k, v in self.terms.items()})
        if isinstance(other, Element):
            self._check(other)
            return self.algebra.multiply(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative powers are not supported")
        out = self.algebra.one()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(other)
        if not isinstance(other, Element):
            return NotImplemented
        return self.algebra == other.algebra and self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Largest ``|α|`` over the stored terms (``-1`` for zero)."""
        return max((sum(a) for a, _ in self.terms), default=-1)

    def homogeneous_part(self, r: int):
        return self._wrap({k: v for k, v in self.terms.items() if sum(k[0]) == r})

    def sorted_terms(self, reverse: bool = False):
        return sorted(self.terms.items(), key=lambda kv: (kv[0][0], tuple(kv[0][1])), reverse=reverse)

    def to_vector(self) -> dict:
        index = self.algebra.index
        return {index[k]: v for k, v in self.terms.items()}

    def commutator(self, other):
        return self * other - other * self

    def to_json(self) -> dict:
        return {
            "terms": [
                {
                    "exps": list(a),
                    "perm": list(w),
                    "num": v.numerator,
                    "den": v.denominator,
                }
                for (a, w), v in self.sorted_terms()
            ]
        }


class BasisAlgebra:
    """Base class: parameters ``d`` and ``l`` and the ``x^α w`` basis."""

    element_class = Element

    def __init__(self, d: int, l: int):
        if d < 0 or l < 1:
            raise ValueError("need d >= 0 and l >= 1")
        self.d = d
        self.l = l
        self._identity = Permutation.identity(d)
        self._zero_exp = (0,) * d

    # subclasses supply multiply(), __eq__, __hash__

    @cached_property
    def basis_keys(self) -> list:
        """Canonical order: lexicographic on ``α``, then one-line ``w``."""
        exps = list(itertools.product(range(self.l), repeat=self.d))
        perms = all_permutations(self.d)
        return [(a, w) for a in exps for w in perms]

    @cached_property
    def index(self) -> dict:
        return {k: i for i, k in enumerate(self.basis_keys)}

    @property
    def dimension(self) -> int:
        return len(self.basis_keys)

    def element(self, terms: dict):
        return self.element_class(self, terms)

    def from_vector(self, vec: dict):
        keys = self.basis_keys
        return self.element({keys[i]: v for i, v in vec.items()})

    def zero(self):
        return self.element({})

    def scalar(self, c):
        return self.element({(self._zero_exp, self._identity): Fraction(c)})

    def one(self):
        return self.scalar(1)

    def monomial(self, alpha, w=None):
        w = self._identity if w is None else Permutation(w)
        return self.element({(tuple(alpha), w): 1})

    def perm(self, w):
        return self.monomial(self._zero_exp, w)

    def s(self, i: int):
        return self.perm(Permutation.simple(self.d, i))

    def basis_elements(self):
        return [self.element({k: 1}) for k in self.basis_keys]

    def generators(self):
        """``x_1, s_1, ..., s_{d-1}``; these generate the algebra."""
        if self.d == 0:
            return []
        return [self.x(1)] + [self.s(i) for i in range(1, self.d)]

    def commutant(self, gens) -> list:
        """Basis of ``{z : g z == z g for every g in gens}`` by exact elimination."""
        ncols = self.dimension
        gens = list(gens)
        rows: dict[tuple, dict] = {}
        for j, b in enumerate(self.basis_elements()):
            for k, g in enumerate(gens):
                c = g * b - b * g
                for i, v in c.to_vector().items():
                    rows.setdefault((k, i), {})[j] = v
        eb = EchelonBasis(ncols)
        for key in sorted(rows):
            eb.add(rows[key])
        return [self.from_vector(v) for v in eb.nullspace()]

    def span(self, elements) -> EchelonBasis:
        eb = EchelonBasis(self.dimension)
        for e in elements:
            eb.add(e.to_vector())
        return eb

    def same_span(self, first, second) -> bool:
        a, b = self.span(first), self.span(second)
        return len(a) == len(b) and all(a.contains(e.to_vector()) for e in second)

    def generated_subalgebra(self, gens) -> EchelonBasis:
        """Span of all products of ``gens`` (including the empty product)."""
        eb = EchelonBasis(self.dimension)
        one = self.one()
        eb.add(one.to_vector())
        queue = [one]
        while queue:
            b = queue.pop()
            for g in gens:
                p = g * b
                if eb.add(p.to_vector()):
                    queue.append(p)
        return eb

    def is_central(self, z) -> bool:
        return all((g * z - z * g).is_zero() for g in self.generators())

    def assert_central(self, z, label="element"):
        if not self.is_central(z):
            raise VerificationError(f"{label} is not central")
