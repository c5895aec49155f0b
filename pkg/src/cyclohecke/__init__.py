"""Exact arithmetic for degenerate cyclotomic Hecke algebras and their centers."""

from .combinatorics import (
    Multipartition,
    Partition,
    ResidueMultiset,
    enumerate_multipartitions,
    enumerate_p_set,
    enumerate_partitions,
    phi,
    phi_inv,
    residue_tuple,
)
from .errors import VerificationError
from .graded import ColoredCycle, GradedAlgebra, GradedElement, colored_cycle_product, graded_algebra
from .hecke import CyclotomicSpec, HeckeAlgebra, HeckeElement, from_roots, hecke_algebra
from .symgroup import Cycle, Permutation

__all__ = [
    "ColoredCycle",
    "Cycle",
    "CyclotomicSpec",
    "GradedAlgebra",
    "GradedElement",
    "HeckeAlgebra",
    "HeckeElement",
    "Multipartition",
    "Partition",
    "Permutation",
    "ResidueMultiset",
    "VerificationError",
    "colored_cycle_product",
    "enumerate_multipartitions",
    "enumerate_p_set",
    "enumerate_partitions",
    "from_roots",
    "graded_algebra",
    "hecke_algebra",
    "phi",
    "phi_inv",
    "residue_tuple",
]
