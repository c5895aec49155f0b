"""Blocks of ``H_d^q``: central characters, block idempotents, block centers.

Central characters are evaluations ``χ(i): f(x_1..x_d) -> f(i_1..i_d)`` of
symmetric polynomials at residue multisets.  Block idempotents are found by
interpolation on the center basis ``{p_d(μ)}``: a solution of
``χ(j)(b) = δ_ij`` is an idempotent up to an element of the radical of the
center, and the iteration ``e -> 3e^2 - 2e^3`` removes that error in finitely
many steps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .combinatorics import (
    Multipartition,
    ResidueMultiset,
    enumerate_multipartitions,
    enumerate_p_set,
    monomial_symmetric,
    residue_tuple,
)
from .errors import VerificationError
from .hecke import CyclotomicSpec, HeckeElement, hecke_algebra
from .linalg import EchelonBasis, rank, solve

__all__ = [
    "BlockDescriptor",
    "enumerate_blocks",
    "chi_evaluate",
    "character_matrix",
    "block_idempotents",
    "block_center_dimensions",
    "radical_check",
]


@dataclass
class BlockDescriptor:
    residues: ResidueMultiset
    fiber: list
    idempotent: HeckeElement | None = None
    center_dimension: int | None = None
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "residues": [str(r) for r in self.residues],
            "fiber": [[list(c) for c in mp] for mp in self.fiber],
            "center_dim": self.center_dimension,
            "idempotent_terms": None if self.idempotent is None else self.idempotent.to_json()["terms"],
        }


def _roots(spec: CyclotomicSpec) -> tuple:
    if spec.roots is None:
        raise ValueError("block computations need f given by its roots")
    return spec.roots


def enumerate_blocks(spec: CyclotomicSpec) -> list[BlockDescriptor]:
    """Distinct residue multisets of all multipartitions, with their fibers."""
    q = _roots(spec)
    fibers: dict = {}
    for mp in enumerate_multipartitions(spec.d, spec.l):
        fibers.setdefault(residue_tuple(mp, q), []).append(mp)
    return [BlockDescriptor(i, fibers[i]) for i in sorted(fibers)]


def chi_evaluate(i: ResidueMultiset, mu) -> Fraction:
    """``χ(i)(p_d(μ))``, the monomial symmetric polynomial ``μ`` at the entries of ``i``."""
    if len(tuple(p for p in mu if p)) > len(i):
        raise ValueError("partition has more parts than the multiset has entries")
    return monomial_symmetric(list(i), mu)


def character_matrix(blocks, d: int, l: int) -> list:
    """Rows: block classes; columns: ``χ(i)(p_d(μ))`` over ``μ in P_d(l)``."""
    mus = enumerate_p_set(d, l)
    return [[chi_evaluate(b.residues, mu) for mu in mus] for b in blocks]


def _refine(e: HeckeElement, limit: int) -> HeckeElement:
    for _ in range(limit):
        e2 = e * e
        if e2 == e:
            return e
        e = e2 * 3 - e2 * e * 2
    raise VerificationError("idempotent refinement did not converge")


def block_idempotents(spec: CyclotomicSpec) -> list[BlockDescriptor]:
    """Blocks with their idempotents, checked to be a complete orthogonal central family."""
    blocks = enumerate_blocks(spec)
    alg = hecke_algebra(spec)
    mus = enumerate_p_set(spec.d, spec.l)
    basis = [alg.p_element(mu) for mu in mus]
    chars = character_matrix(blocks, spec.d, spec.l)
    if rank(chars) != len(blocks):
        raise VerificationError("central characters are not independent on the center")
    for k, b in enumerate(blocks):
        target = [Fraction(int(j == k)) for j in range(len(blocks))]
        coeffs = solve(chars, target)
        if coeffs is None:
            raise VerificationError("interpolation system is inconsistent")
        e = alg.zero()
        for c, z in zip(coeffs, basis):
            if c:
                e = e + z * c
        b.idempotent = _refine(e, limit=2 * len(mus) + 2)

    total = alg.zero()
    for k, b in enumerate(blocks):
        alg.assert_central(b.idempotent, f"idempotent of block {b.residues}")
        total = total + b.idempotent
        for other in blocks[k + 1:]:
            if not (b.idempotent * other.idempotent).is_zero():
                raise VerificationError(f"idempotents of {b.residues} and {other.residues} are not orthogonal")
    if total != alg.one():
        raise VerificationError("block idempotents do not sum to 1")
    return blocks


def block_center_dimensions(spec: CyclotomicSpec, blocks=None) -> dict:
    """``dim b(i) Z`` from the brute-force center, checked against the fiber sizes."""
    if blocks is None:
        blocks = block_idempotents(spec)
    alg = hecke_algebra(spec)
    center = alg.center_basis_bruteforce(check=False)
    out = {}
    for b in blocks:
        eb = EchelonBasis(alg.dimension)
        for z in center:
            eb.add((b.idempotent * z).to_vector())
        b.center_dimension = len(eb)
        if len(eb) != len(b.fiber):
            raise VerificationError(
                f"block {b.residues}: center dimension {len(eb)} but {len(b.fiber)} multipartitions"
            )
        out[b.residues] = len(eb)
    if sum(out.values()) != len(center):
        raise VerificationError("block centers do not add up to the center")
    return out


def radical_check(spec: CyclotomicSpec, blocks=None) -> None:
    """Check that ``χ(i)`` is the only character of ``b(i) Z``.

    For every ``z = b(i) p_d(μ)`` the element ``z - χ(i)(p_d(μ)) b(i)`` must be
    nilpotent, so no central character outside ``{χ(i)}`` exists.
    """
    if blocks is None:
        blocks = block_idempotents(spec)
    alg = hecke_algebra(spec)
    for b in blocks:
        bound = len(b.fiber)
        for mu in enumerate_p_set(spec.d, spec.l):
            u = b.idempotent * alg.p_element(mu) - b.idempotent * chi_evaluate(b.residues, mu)
            if not (u ** bound).is_zero():
                raise VerificationError(f"p_d({mu!r}) has a second eigenvalue on block {b.residues}")


def fiber_of(mp: Multipartition, q) -> ResidueMultiset:
    return residue_tuple(Multipartition(mp), q)
