"""Degenerate cyclotomic Hecke algebras ``H_d^f`` in PBW normal form.

Every element is kept as a combination of ``x^α w`` with ``α_i < l``.  Products
are straightened with

* ``s_i x^γ = x^{s_i γ} s_i + ∂_i(x^γ)``, where ``∂_i f = (f - s_i f)/(x_{i+1} - x_i)``
  (the closed form of ``s_i x_{i+1} = x_i s_i + 1`` and ``s_i x_j = x_j s_i``);
* ``x_1^l = -c_1 x_1^{l-1} - ... - c_l`` and, inductively,
  ``x_{i+1}^l = s_i x_i^l s_i + sum_t x_i^t x_{i+1}^{l-1-t} s_i``.

Each replacement of ``x_i^l`` strictly lowers the filtration degree, so the
mutual recursion between the two rules terminates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .algebra import BasisAlgebra, Element, add_into
from .combinatorics import (
    Partition,
    distinct_permutations,
    enumerate_multipartitions,
    enumerate_p_set,
)
from .errors import VerificationError
from .graded import GradedAlgebra, GradedElement, graded_algebra
from .symgroup import Permutation, reduced_word

__all__ = ["CyclotomicSpec", "HeckeAlgebra", "HeckeElement", "from_roots", "hecke_algebra"]


def _parse_rational(s) -> Fraction:
    return Fraction(str(s).strip())


@dataclass(frozen=True)
class CyclotomicSpec:
    """Rank ``d`` and the monic ``f(x) = x^l + c_1 x^{l-1} + ... + c_l``."""

    d: int
    coeffs: tuple
    roots: tuple | None = None

    def __post_init__(self):
        coeffs = tuple(Fraction(c) for c in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if not coeffs:
            raise ValueError("f must have degree l >= 1")
        if self.d < 0:
            raise ValueError("d must be non-negative")
        if self.roots is not None:
            roots = tuple(Fraction(q) for q in self.roots)
            object.__setattr__(self, "roots", roots)
            if _expand_roots(roots) != coeffs:
                raise ValueError("roots do not reproduce the coefficients")

    @property
    def l(self) -> int:
        return len(self.coeffs)

    @classmethod
    def from_roots(cls, roots: Sequence, d: int) -> "CyclotomicSpec":
        roots = tuple(Fraction(q) for q in roots)
        return cls(d, _expand_roots(roots), roots)

    @classmethod
    def from_coeffs(cls, coeffs: Sequence, d: int) -> "CyclotomicSpec":
        return cls(d, tuple(Fraction(c) for c in coeffs))

    def f(self, x):
        """Evaluate ``f`` at ``x`` by Horner's rule (works for numbers and matrices' scalars)."""
        val = Fraction(1)
        for c in self.coeffs:
            val = val * x + c
        return val

    def to_json(self) -> dict:
        out = {"d": self.d, "l": self.l, "coeffs": [str(c) for c in self.coeffs]}
        if self.roots is not None:
            out["roots"] = [str(q) for q in self.roots]
        return out

    def __str__(self):
        if self.roots is not None:
            return f"d={self.d}, roots=({', '.join(map(str, self.roots))})"
        return f"d={self.d}, coeffs=({', '.join(map(str, self.coeffs))})"


def _expand_roots(roots) -> tuple:
    poly = [Fraction(1)]  # highest degree first
    for q in roots:
        poly = [a - q * b for a, b in zip(poly + [Fraction(0)], [Fraction(0)] + poly)]
    return tuple(poly[1:])


def from_roots(q: Sequence, d: int) -> CyclotomicSpec:
    return CyclotomicSpec.from_roots(q, d)


class HeckeElement(Element):
    __slots__ = ()

    @property
    def spec(self) -> CyclotomicSpec:
        return self.algebra.spec

    def filtration_degree(self) -> int:
        return self.degree()

    def gr_component(self, r: int) -> GradedElement:
        return self.algebra.gr_component(self, r)

    def to_text(self) -> str:
        """Normal form as text, e.g. ``x1*s1 + 1``.

        Permutations are written as reduced words in the ``s_i`` so that the
        output parses back to the same element.
        """
        if not self.terms:
            return "0"
        pieces = []
        for (alpha, w), c in self.sorted_terms(reverse=True):
            factors = [f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in enumerate(alpha, start=1) if e]
            factors += [f"s{i}" for i in reduced_word(w)]
            mag = abs(c)
            if mag != 1 or not factors:
                factors.insert(0, str(mag))
            pieces.append(("-" if c < 0 else "+", "*".join(factors)))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def to_json(self) -> dict:
        out = super().to_json()
        out["spec"] = self.spec.to_json()
        return out

    def __repr__(self):
        return self.to_text()


class HeckeAlgebra(BasisAlgebra):
    """``H_d^f`` over the rationals, with memoized straightening."""

    element_class = HeckeElement

    def __init__(self, spec: CyclotomicSpec):
        super().__init__(spec.d, spec.l)
        self.spec = spec
        self._s_cache = {}
        self._perm_cache = {}
        self._x_cache = {}
        self._xmono_cache = {}
        self._xl_cache = {}

    def __eq__(self, other):
        return type(other) is HeckeAlgebra and self.spec == other.spec

    def __hash__(self):
        return hash(("hecke", self.spec))

    def __repr__(self):
        return f"HeckeAlgebra({self.spec})"

    @property
    def graded(self) -> GradedAlgebra:
        return graded_algebra(self.d, self.l)

    # --- straightening on single keys -----------------------------------

    def _s_on_key(self, i: int, key) -> dict:
        """``s_i · x^γ u`` in normal form."""
        hit = self._s_cache.get((i, key))
        if hit is not None:
            return hit
        gamma, u = key
        a, b = gamma[i - 1], gamma[i]
        swapped = list(gamma)
        swapped[i - 1], swapped[i] = b, a
        out = {(tuple(swapped), Permutation.simple(self.d, i) * u): Fraction(1)}
        # divided difference of x_i^a x_{i+1}^b, exponents stay below l
        if a != b:
            lo, gap = min(a, b), abs(a - b)
            sign = 1 if b > a else -1
            for t in range(gap):
                alpha = list(gamma)
                if b > a:
                    alpha[i - 1], alpha[i] = lo + gap - 1 - t, lo + t
                else:
                    alpha[i - 1], alpha[i] = lo + t, lo + gap - 1 - t
                add_into(out, {(tuple(alpha), u): Fraction(sign)})
        self._s_cache[(i, key)] = out
        return out

    def _apply_s(self, i: int, terms: dict) -> dict:
        acc = {}
        for key, c in terms.items():
            add_into(acc, self._s_on_key(i, key), c)
        return acc

    def _perm_on_key(self, w: Permutation, key) -> dict:
        """``w · x^β v`` by applying a reduced word of ``w`` right to left."""
        if w.is_identity():
            return {key: Fraction(1)}
        hit = self._perm_cache.get((w, key))
        if hit is not None:
            return hit
        first = reduced_word(w)[0]
        rest = Permutation.simple(self.d, first) * w
        out = self._apply_s(first, self._perm_on_key(rest, key))
        self._perm_cache[(w, key)] = out
        return out

    def _xl_normal_form(self, i: int) -> dict:
        """Normal form of ``x_i^l``."""
        hit = self._xl_cache.get(i)
        if hit is not None:
            return hit
        l, d = self.l, self.d
        e = self._identity
        if i == 1:
            out = {}
            for k, c in enumerate(self.spec.coeffs, start=1):
                alpha = [0] * d
                alpha[0] = l - k
                add_into(out, {(tuple(alpha), e): -c})
        else:
            si = Permutation.simple(d, i - 1)
            prev = {(a, w * si): c for (a, w), c in self._xl_normal_form(i - 1).items()}
            out = self._apply_s(i - 1, prev)
            for t in range(l):
                alpha = [0] * d
                alpha[i - 2], alpha[i - 1] = t, l - 1 - t
                add_into(out, {(tuple(alpha), si): Fraction(1)})
        self._xl_cache[i] = out
        return out

    def _x_on_key(self, i: int, key) -> dict:
        """``x_i · x^γ u`` in normal form."""
        gamma, u = key
        if gamma[i - 1] + 1 < self.l:
            alpha = list(gamma)
            alpha[i - 1] += 1
            return {(tuple(alpha), u): Fraction(1)}
        hit = self._x_cache.get((i, key))
        if hit is not None:
            return hit
        rest = list(gamma)
        rest[i - 1] = 0
        rest = tuple(rest)
        out = {}
        for (delta, v), c in self._xl_normal_form(i).items():
            add_into(out, self._xmono_on_key(rest, (delta, v * u)), c)
        self._x_cache[(i, key)] = out
        return out

    def _apply_x(self, i: int, terms: dict) -> dict:
        acc = {}
        for key, c in terms.items():
            add_into(acc, self._x_on_key(i, key), c)
        return acc

    def _xmono_on_key(self, alpha, key) -> dict:
        """``x^α · x^δ v`` in normal form."""
        delta, v = key
        if all(a + b < self.l for a, b in zip(alpha, delta)):
            return {(tuple(a + b for a, b in zip(alpha, delta)), v): Fraction(1)}
        hit = self._xmono_cache.get((alpha, key))
        if hit is not None:
            return hit
        # absorb the exponents that fit, then push the rest one variable at a time
        base = tuple(min(a + b, self.l - 1) for a, b in zip(alpha, delta))
        left = [a + b - m for a, b, m in zip(alpha, delta, base)]
        out = {(base, v): Fraction(1)}
        for i, e in enumerate(left, start=1):
            for _ in range(e):
                out = self._apply_x(i, out)
        self._xmono_cache[(alpha, key)] = out
        return out

    # --- public arithmetic ----------------------------------------------

    def multiply(self, p: HeckeElement, q: HeckeElement) -> HeckeElement:
        if p.algebra != self or q.algebra != self:
            raise ValueError("spec mismatch")
        acc = {}
        for (alpha, w), c1 in p.terms.items():
            for key2, c2 in q.terms.items():
                for key3, c3 in self._perm_on_key(w, key2).items():
                    add_into(acc, self._xmono_on_key(alpha, key3), c1 * c2 * c3)
        return p._wrap(acc)

    def x(self, i: int) -> HeckeElement:
        if not 1 <= i <= self.d:
            raise IndexError(f"generator index out of range: x{i}")
        return self.reduce_high_power(i, 1)

    def reduce_high_power(self, i: int, k: int) -> HeckeElement:
        """Normal form of ``x_i^k``."""
        if not 1 <= i <= self.d:
            raise IndexError(f"generator index out of range: x{i}")
        alpha = [0] * self.d
        alpha[i - 1] = k
        return self.xmonomial(alpha)

    def xmonomial(self, alpha) -> HeckeElement:
        """Normal form of ``x_1^α_1 ... x_d^α_d`` for arbitrary exponents."""
        return self.element(self._xmono_on_key(tuple(alpha), (self._zero_exp, self._identity)))

    def p_element(self, mu) -> HeckeElement:
        """``p_d(μ) = sum over distinct rearrangements ν of μ of x^ν``."""
        mu = Partition.from_parts(mu)
        acc = {}
        for nu in distinct_permutations(mu.padded(self.d)):
            add_into(acc, self._xmono_on_key(nu, (self._zero_exp, self._identity)))
        return self.element(acc)

    def power_sum(self, r: int) -> HeckeElement:
        return self.p_element((r,))

    def p_basis(self) -> dict:
        return {mu: self.p_element(mu) for mu in enumerate_p_set(self.d, self.l)}

    # --- filtration -----------------------------------------------------

    def gr_component(self, z: HeckeElement, r: int) -> GradedElement:
        """Image of ``z`` in ``F_r / F_{r-1}`` inside the graded algebra.

        ``r`` may exceed the filtration degree (the image is then zero);
        ``r`` below it is an error since ``z`` is not in ``F_r``.
        """
        top = z.degree()
        if r < top:
            raise ValueError(f"element has filtration degree {top} > {r}")
        g = self.graded
        return g.element({k: v for k, v in z.terms.items() if sum(k[0]) == r})

    def to_graded(self, z: HeckeElement) -> GradedElement:
        """Top-degree image ``gr z``."""
        return self.gr_component(z, max(z.degree(), 0))

    # --- center ---------------------------------------------------------

    def center_basis_bruteforce(self, check: bool = True) -> list:
        """Commutant of ``x_1, s_1, ..., s_{d-1}``.

        With ``check`` the dimension is compared with the number of
        ``l``-multipartitions and the span with that of the ``p_d(μ)``.
        """
        basis = self.commutant(self.generators())
        if check:
            expected = len(enumerate_multipartitions(self.d, self.l))
            if len(basis) != expected:
                raise VerificationError(f"center has dimension {len(basis)}, expected {expected}")
            if not self.same_span(basis, list(self.p_basis().values())):
                raise VerificationError("p_d(μ) do not span the computed center")
        return basis

    def power_sum_generation_check(self) -> bool:
        """Do ``p_d((r))``, ``1 <= r <= d``, generate the brute-force center?"""
        center = self.center_basis_bruteforce(check=False)
        sub = self.generated_subalgebra([self.power_sum(r) for r in range(1, self.d + 1)])
        return len(sub) == len(center) and all(sub.contains(z.to_vector()) for z in center)


@lru_cache(maxsize=None)
def hecke_algebra(spec: CyclotomicSpec) -> HeckeAlgebra:
    """Shared instance per spec so straightening caches are reused."""
    return HeckeAlgebra(spec)
