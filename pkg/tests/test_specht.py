from fractions import Fraction
from math import comb

import pytest

from cyclohecke.combinatorics import (
    Multipartition,
    ResidueMultiset,
    enumerate_multipartitions,
    enumerate_partitions,
    residue_tuple,
)
from cyclohecke.errors import VerificationError
from cyclohecke.linalg import identity, matmul
from cyclohecke.specht import (
    Representation,
    affinize,
    central_character,
    dual_specht,
    dualize,
    induce_product,
    relation_failures,
    specht_representation,
    standard_tableaux_count,
)
from cyclohecke.symgroup import all_permutations

from oracles import hook_length_count


def trace(m):
    return sum(m[i][i] for i in range(len(m)))


@pytest.mark.parametrize("d", range(1, 7))
def test_dimensions_are_standard_tableau_counts(d):
    for lam in enumerate_partitions(d):
        rep = specht_representation(lam)
        assert rep.dim == standard_tableaux_count(lam) == hook_length_count(lam)
        assert relation_failures(rep) == []


def test_trivial_and_sign():
    for d in (1, 2, 3, 4):
        triv = specht_representation((d,))
        sign = specht_representation((1,) * d)
        assert triv.dim == sign.dim == 1
        assert all(m == [[1]] for m in triv.s)
        assert all(m == [[-1]] for m in sign.s)
    assert specht_representation((2, 1)).dim == 2


@pytest.mark.parametrize("d", [2, 3, 4])
def test_characters_are_irreducible_and_distinct(d):
    """Orthogonality: <chi, chi> = 1 and different shapes are orthogonal."""
    perms = all_permutations(d)
    chars = {}
    for lam in enumerate_partitions(d):
        rep = specht_representation(lam)
        chars[lam] = [trace(rep.perm_matrix(w)) for w in perms]
    order = len(perms)
    for a in chars:
        for b in chars:
            inner = sum(x * y for x, y in zip(chars[a], chars[b])) / order
            assert inner == (1 if a == b else 0)


@pytest.mark.parametrize("d", [2, 3, 4])
def test_dual_preserves_characters(d):
    for lam in enumerate_partitions(d):
        rep = specht_representation(lam)
        dual = dualize(rep)
        for w in all_permutations(d):
            assert trace(rep.perm_matrix(w)) == trace(dual.perm_matrix(w))
        assert dualize(dual).s == rep.s


def test_dual_of_trivial_and_refusal_on_affine():
    triv = specht_representation((3,))
    assert dualize(triv).s == triv.s
    with pytest.raises(ValueError):
        dualize(affinize(triv, 0))
    with pytest.raises(ValueError):
        affinize(affinize(triv, 0), 1)


def test_affinize_trivial_and_sign():
    q = Fraction(3, 2)
    for d in (1, 2, 3, 4):
        triv = affinize(specht_representation((d,)), q)
        sign = affinize(specht_representation((1,) * d), q)
        for i in range(1, d + 1):
            assert triv.x[i - 1] == [[q + i - 1]]
            assert sign.x[i - 1] == [[q - i + 1]]
    assert affinize(specht_representation((1,)), 7).x == [[[7]]]


def test_affinized_modules_satisfy_relations():
    for d in (2, 3, 4):
        for lam in enumerate_partitions(d):
            assert relation_failures(affinize(dualize(specht_representation(lam)), 2)) == []


def test_induction_dimensions_and_relations():
    for a in enumerate_partitions(2):
        for b in enumerate_partitions(2):
            m1 = affinize(dualize(specht_representation(a)), 0)
            m2 = affinize(dualize(specht_representation(b)), 5)
            prod = induce_product(m1, m2)
            assert prod.dim == comb(4, 2) * m1.dim * m2.dim
            assert relation_failures(prod) == []
    one = affinize(specht_representation((1,)), 1)
    two = affinize(specht_representation((1,)), 2)
    assert induce_product(one, two).dim == 2
    empty = Representation(0, 1, [], [])
    assert induce_product(one, empty).x == one.x
    with pytest.raises(ValueError):
        induce_product(specht_representation((1,)), two)


def test_dual_specht_small():
    rep = dual_specht(Multipartition([(1,), ()]), (4, 9))
    assert rep.dim == 1 and rep.x == [[[4]]]
    rep = dual_specht(Multipartition([(1,), (1,)]), (0, 0))
    assert central_character(rep) == ResidueMultiset([0, 0])
    with pytest.raises(ValueError):
        dual_specht(Multipartition([(1,), (1,)]), (0,))


@pytest.mark.parametrize("d,l", [(d, l) for d in (1, 2, 3) for l in (1, 2)])
@pytest.mark.parametrize("kind", ["zero", "equal", "distinct", "gap"])
def test_dual_specht_relations_and_characters(d, l, kind):
    q = {
        "zero": (0,) * l,
        "equal": (1,) * l,
        "distinct": tuple(range(l)),
        "gap": (0,) * (l - 1) + (2,),
    }[kind]
    for mp in enumerate_multipartitions(d, l):
        rep = dual_specht(mp, q)
        assert relation_failures(rep, q) == []
        assert central_character(rep) == residue_tuple(mp, q)


def test_residue_diagram_example():
    rep = affinize(dualize(specht_representation((4, 2, 1))), 5)
    assert rep.dim == 35
    assert central_character(rep, (5,)) == ResidueMultiset([5, 6, 7, 8, 4, 5, 3])


def test_trivial_module_character():
    for d in (1, 2, 3, 4):
        rep = affinize(specht_representation((d,)), 3)
        assert central_character(rep, (3,)) == ResidueMultiset(range(3, 3 + d))


def test_concatenation_of_central_characters():
    cases = [((2,), (1,), 0, 3), ((1, 1), (2,), 1, 1), ((2, 1), (1,), 0, 0)]
    for a, b, qa, qb in cases:
        m1 = affinize(dualize(specht_representation(a)), qa)
        m2 = affinize(dualize(specht_representation(b)), qb)
        prod = induce_product(m1, m2)
        union = ResidueMultiset(list(central_character(m1, (qa,))) + list(central_character(m2, (qb,))))
        assert central_character(prod, (qa, qb)) == union


def test_central_character_rejects_mixed_modules():
    # the regular module of S_2 at level one has two different characters
    s = [[0, 1], [1, 0]]
    rep = affinize(Representation(2, 2, [[[Fraction(v) for v in row] for row in s]]), 0)
    assert relation_failures(rep) == []
    with pytest.raises(VerificationError):
        central_character(rep, (0,))


def test_relation_checker_detects_breakage():
    rep = affinize(dualize(specht_representation((2, 1))), 0)
    rep.x[1] = matmul(rep.x[1], identity(rep.dim))
    rep.x[1][0][0] += 1
    assert relation_failures(rep)
