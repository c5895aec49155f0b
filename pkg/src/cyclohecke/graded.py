"""The twisted tensor product ``R_l[x_1..x_d] ⋊ R S_d`` and its center.

Multiplication is ``(f ⊗ v)(g ⊗ w) = f (v·g) ⊗ vw`` with ``v·x_i = x_{v(i)}``
and ``x_i^l = 0``.  Colored cycles ``A^(r) = h_r(A) A`` span the centralizer
``Q_d`` of the polynomial part; their orbit sums ``z_d(λ)`` and the Murphy-type
elements ``m_d(μ)`` are two bases of the center.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .algebra import BasisAlgebra, Element, add_into
from .combinatorics import (
    Multipartition,
    Partition,
    distinct_permutations,
    enumerate_multipartitions,
    enumerate_p_set,
    in_p_set,
)
from .errors import VerificationError
from .symgroup import Cycle, Permutation, all_permutations, cycle_decomposition

__all__ = [
    "GradedAlgebra",
    "GradedElement",
    "ColoredCycle",
    "ColoredProduct",
    "colored_cycle_product",
    "cycle_type",
]


class GradedElement(Element):
    __slots__ = ()

    def to_text(self) -> str:
        """Render as ``c * x1^a1*...*xd^ad * (cycle)(cycle)`` terms, highest key first."""
        if not self.terms:
            return "0"
        pieces = []
        for (alpha, w), c in self.sorted_terms(reverse=True):
            mono = "*".join(
                f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(alpha, start=1) if e
            )
            parts = [p for p in (mono, "" if w.is_identity() else repr(w)) if p]
            mag = abs(c)
            if mag != 1 or not parts:
                parts.insert(0, str(mag))
            sign = "-" if c < 0 else "+"
            pieces.append((sign, " * ".join(parts)))
        first_sign, first = pieces[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return self.to_text()


@dataclass(frozen=True)
class ColoredCycle:
    """``A^(r) = h_r(A) A`` for a cycle ``A`` and a color ``0 <= r < l``."""

    cycle: Cycle
    color: int
    level: int

    def __post_init__(self):
        if not 0 <= self.color < self.level:
            raise ValueError(f"color {self.color} outside 0..{self.level - 1}")
        if not isinstance(self.cycle, Cycle):
            object.__setattr__(self, "cycle", Cycle(self.cycle))

    @property
    def support(self) -> frozenset:
        return self.cycle.support

    def is_trivial(self) -> bool:
        return len(self.cycle) == 1 and self.color == 0

    def __repr__(self):
        return f"{self.cycle!r}^({self.color})"


def _normalize(factors) -> tuple:
    return tuple(sorted((f for f in factors if not f.is_trivial()), key=lambda f: f.cycle))


@dataclass(frozen=True)
class ColoredProduct:
    """``scalar`` times a product of pairwise disjoint colored cycles.

    A zero scalar means the product vanished; ``factors`` is then empty.
    """

    scalar: Fraction
    factors: tuple

    @classmethod
    def make(cls, scalar, factors):
        scalar = Fraction(scalar)
        if not scalar:
            return cls(Fraction(0), ())
        return cls(scalar, _normalize(factors))

    def is_zero(self) -> bool:
        return not self.scalar

    def __repr__(self):
        if self.is_zero():
            return "0"
        body = "".join(map(repr, self.factors)) or "1"
        return body if self.scalar == 1 else f"{self.scalar}*{body}"


def colored_cycle_product(a: ColoredCycle, b: ColoredCycle) -> ColoredProduct:
    """Closed form for ``A^(r) B^(s)`` by the size ``c`` of ``A ∩ B``."""
    if a.level != b.level:
        raise ValueError("level mismatch")
    l = a.level
    common = a.support & b.support
    c = len(common)
    if c == 0:
        return ColoredProduct.make(1, (a, b))
    union = a.support | b.support
    d = max(union)
    ab = a.cycle.to_permutation(d) * b.cycle.to_permutation(d)
    if c == 1:
        r = a.color + b.color
        if r >= l:
            return ColoredProduct.make(0, ())
        start = next(iter(union))
        cyc = next(cy for cy in cycle_decomposition(ab) if start in cy.support)
        if cyc.support != union:
            raise AssertionError("product of cycles meeting once is not a single cycle")
        return ColoredProduct.make(1, (ColoredCycle(cyc, r, l),))
    if a.color or b.color:
        return ColoredProduct.make(0, ())
    if (c - 1) * (l - 1) >= l:
        # h_{(c-1)(l-1)}(A ∪ B) vanishes
        return ColoredProduct.make(0, ())
    factors = [ColoredCycle(cy, l - 1, l) for cy in cycle_decomposition(ab) if cy.points[0] in union]
    return ColoredProduct.make(Fraction(l) ** (c - 1), factors)


def cycle_type(factors, d: int, l: int) -> Multipartition:
    """Cycle type of a product of disjoint colored cycles, padded to size ``d``."""
    comps = [[] for _ in range(l)]
    covered = 0
    for f in factors:
        comps[f.color].append(len(f.cycle))
        covered += len(f.cycle)
    comps[0].extend([1] * (d - covered))
    return Multipartition(Partition.from_parts(c) for c in comps)


class GradedAlgebra(BasisAlgebra):
    """``R_l[x_1..x_d] ⋊ R S_d`` over the rationals."""

    element_class = GradedElement

    def __eq__(self, other):
        return type(other) is GradedAlgebra and (self.d, self.l) == (other.d, other.l)

    def __hash__(self):
        return hash(("graded", self.d, self.l))

    def __repr__(self):
        return f"GradedAlgebra(d={self.d}, l={self.l})"

    def x(self, i: int) -> GradedElement:
        if not 1 <= i <= self.d:
            raise IndexError(f"generator index out of range: x{i}")
        if self.l == 1:
            return self.zero()
        alpha = [0] * self.d
        alpha[i - 1] = 1
        return self.monomial(alpha)

    def _mul_keys(self, k1, k2):
        (a, v), (b, w) = k1, k2
        l = self.l
        out = list(a)
        for j, e in enumerate(b):
            if e:
                t = v[j] - 1
                out[t] += e
                if out[t] >= l:
                    return None
        return tuple(out), v * w

    def multiply(self, p: GradedElement, q: GradedElement) -> GradedElement:
        if p.algebra != self or q.algebra != self:
            raise ValueError("parameter mismatch")
        acc = {}
        for k1, c1 in p.terms.items():
            for k2, c2 in q.terms.items():
                k = self._mul_keys(k1, k2)
                if k is not None:
                    y = acc.get(k, 0) + c1 * c2
                    if y:
                        acc[k] = y
                    else:
                        del acc[k]
        return p._wrap(acc)

    # --- colored cycles -------------------------------------------------

    def _h_terms(self, r: int, points) -> dict:
        """``h_r(points)`` as ``{α: 1}``."""
        l = self.l
        if r >= l:
            return {}
        points = sorted(points)
        target = (len(points) - 1) * (l - 1) + r
        out = {}
        for exps in itertools.product(range(l), repeat=len(points)):
            if sum(exps) == target:
                alpha = [0] * self.d
                for p, e in zip(points, exps):
                    alpha[p - 1] = e
                out[tuple(alpha)] = Fraction(1)
        return out

    def h_poly(self, r: int, points) -> GradedElement:
        """Complete symmetric polynomial of degree ``(|I|-1)(l-1) + r`` in ``x_i, i in I``."""
        points = set(points)
        if not points or not points <= set(range(1, self.d + 1)):
            raise ValueError(f"index set must be a non-empty subset of 1..{self.d}")
        return self.element({(a, self._identity): c for a, c in self._h_terms(r, points).items()})

    def colored_cycle(self, points, color: int) -> ColoredCycle:
        cyc = Cycle(points)
        if max(cyc.points) > self.d:
            raise ValueError(f"cycle {cyc} is not in S_{self.d}")
        return ColoredCycle(cyc, color, self.l)

    def colored_cycle_element(self, cc: ColoredCycle) -> GradedElement:
        return self.disjoint_product_element((cc,))

    def disjoint_product_element(self, factors) -> GradedElement:
        """Realize ``A_1^(r_1) ... A_m^(r_m)`` for pairwise disjoint cycles."""
        poly = {self._zero_exp: Fraction(1)}
        w = self._identity
        seen = set()
        for f in factors:
            if f.level != self.l:
                raise ValueError("level mismatch")
            if seen & f.support:
                raise ValueError("colored cycles are not disjoint")
            seen |= f.support
            h = self._h_terms(f.color, f.support)
            poly = {
                tuple(x + y for x, y in zip(a, b)): ca * cb
                for a, ca in poly.items()
                for b, cb in h.items()
            }
            w = w * f.cycle.to_permutation(self.d)
        return self.element({(a, w): c for a, c in poly.items()})

    def product_element(self, prod: ColoredProduct) -> GradedElement:
        if prod.is_zero():
            return self.zero()
        return self.disjoint_product_element(prod.factors) * prod.scalar

    def disjoint_products(self):
        """Every product of disjoint colored cycles, each once (normalized factors)."""
        out = []
        for w in all_permutations(self.d):
            cycles = cycle_decomposition(w)
            for colors in itertools.product(range(self.l), repeat=len(cycles)):
                out.append(_normalize(ColoredCycle(c, r, self.l) for c, r in zip(cycles, colors)))
        return out

    def colored_expansion(self, z: GradedElement) -> dict:
        """Coefficients of ``z`` on products of disjoint colored cycles.

        Raises :class:`VerificationError` when ``z`` is outside their span.
        """
        l = self.l
        coeffs = {}
        for (alpha, w), c in z.terms.items():
            factors = []
            for cyc in cycle_decomposition(w):
                r = sum(alpha[p - 1] for p in cyc.points) - (len(cyc) - 1) * (l - 1)
                if not 0 <= r < l:
                    raise VerificationError(f"term {alpha},{w!r} has no colored-cycle reading")
                factors.append(ColoredCycle(cyc, r, l))
            key = _normalize(factors)
            if key in coeffs and coeffs[key] != c:
                raise VerificationError("coefficients differ within one colored product")
            coeffs[key] = c
        rebuilt = self.zero()
        for key, c in coeffs.items():
            rebuilt = rebuilt + self.disjoint_product_element(key) * c
        if rebuilt != z:
            raise VerificationError("element is not a combination of colored products")
        return coeffs

    # --- center bases ---------------------------------------------------

    def class_sum(self, mp: Multipartition) -> GradedElement:
        """``z_d(λ)``: sum of all disjoint colored-cycle products of type ``mp``."""
        mp = Multipartition(mp)
        if mp.level != self.l or mp.size() != self.d:
            raise ValueError(f"{mp!r} is not in M_{self.d}({self.l})")
        wanted = {}
        for r, comp in enumerate(mp):
            for a in comp:
                wanted.setdefault(a, []).append(r)
        acc = {}
        for w in all_permutations(self.d):
            cycles = cycle_decomposition(w)
            by_len = {}
            for cyc in cycles:
                by_len.setdefault(len(cyc), []).append(cyc)
            if sorted((a, len(cs)) for a, cs in by_len.items()) != sorted(
                (a, len(rs)) for a, rs in wanted.items()
            ):
                continue
            choices = [
                [list(zip(by_len[a], colors)) for colors in distinct_permutations(wanted[a])]
                for a in sorted(by_len)
            ]
            for pick in itertools.product(*choices):
                factors = [ColoredCycle(c, r, self.l) for group in pick for c, r in group]
                add_into(acc, self.disjoint_product_element(factors).terms)
        return self.element(acc)

    def class_sum_cycles(self, a: int, r: int) -> GradedElement:
        """``z_d(a^(r))``: the sum of ``A^(r)`` over all ``a``-cycles ``A``."""
        acc = {}
        for subset in itertools.combinations(range(1, self.d + 1), a):
            for tail in itertools.permutations(subset[1:]):
                cc = ColoredCycle(Cycle((subset[0],) + tail), r, self.l)
                add_into(acc, self.colored_cycle_element(cc).terms)
        return self.element(acc)

    def z_expansion(self, z: GradedElement) -> dict:
        """Coefficients of a central ``z`` on the class sums ``z_d(λ)``."""
        by_type = {}
        for key, c in self.colored_expansion(z).items():
            t = cycle_type(key, self.d, self.l)
            if by_type.setdefault(t, c) != c:
                raise VerificationError(f"coefficient not constant on the orbit of type {t!r}")
        rebuilt = self.zero()
        for t, c in by_type.items():
            rebuilt = rebuilt + self.class_sum(t) * c
        if rebuilt != z:
            raise VerificationError("element is not a combination of class sums")
        return by_type

    def y_element(self, i: int, k: int) -> GradedElement:
        """Colored Jucys-Murphy type element ``y_i(k)``."""
        if not 1 <= i <= self.d:
            raise IndexError(f"index {i} out of range")
        a, r = divmod(k, self.l)
        a += 1
        acc = {}
        for tail in itertools.permutations(range(1, i), a - 1):
            cc = ColoredCycle(Cycle(tail + (i,)), r, self.l)
            add_into(acc, self.colored_cycle_element(cc).terms)
        return self.element(acc)

    def murphy_element(self, mu) -> GradedElement:
        """``m_d(μ) = sum_{ν ~ μ} y_1(ν_1) ... y_d(ν_d)``."""
        mu = Partition.from_parts(mu)
        if not in_p_set(mu, self.d, self.l):
            raise ValueError(f"{mu!r} is not in P_{self.d}({self.l})")
        total = self.zero()
        for nu in distinct_permutations(mu.padded(self.d)):
            term = self.one()
            for i, k in enumerate(nu, start=1):
                term = term * self.y_element(i, k)
            total = total + term
        return total

    def centralizer_basis(self) -> list:
        """Brute-force basis of ``Q_d``, the centralizer of the polynomial part."""
        if self.l == 1:
            return self.commutant([])
        return self.commutant([self.x(i) for i in range(1, self.d + 1)])

    def center_basis_bruteforce(self) -> list:
        return self.commutant(self.generators())

    def class_sums(self) -> dict:
        return {mp: self.class_sum(mp) for mp in enumerate_multipartitions(self.d, self.l)}

    def murphy_basis(self) -> dict:
        return {mu: self.murphy_element(mu) for mu in enumerate_p_set(self.d, self.l)}


@lru_cache(maxsize=None)
def graded_algebra(d: int, l: int) -> GradedAlgebra:
    """Shared instance per ``(d, l)`` so cached bases are reused."""
    return GradedAlgebra(d, l)
