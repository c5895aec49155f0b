from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclohecke.combinatorics import (
    Multipartition,
    Partition,
    ResidueMultiset,
    basd_rank,
    distinct_permutations,
    elementary_symmetric,
    elementary_symmetric_shift_identity,
    enumerate_multipartitions,
    enumerate_p_set,
    enumerate_partitions,
    in_p_set,
    monomial_symmetric,
    phi,
    phi_inv,
    residue_tuple,
    sharp,
)

from oracles import contents, elementary_symmetric_bruteforce, multipartition_count, partition_count


def P(*parts):
    return Partition(parts)


def MP(*comps):
    return Multipartition(comps)


def test_partition_rejects_bad_input():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, 0))


def test_enumerate_partitions_small():
    assert enumerate_partitions(0) == [P()]
    assert enumerate_partitions(3) == [P(3), P(2, 1), P(1, 1, 1)]
    assert len(enumerate_partitions(5)) == 7


@pytest.mark.parametrize("d", range(0, 11))
def test_partition_counts_match_recurrence(d):
    parts = enumerate_partitions(d)
    assert len(parts) == partition_count(d)
    assert len(set(parts)) == len(parts)
    assert all(p.size() == d for p in parts)


@pytest.mark.parametrize("d,l", [(d, l) for d in range(0, 6) for l in range(1, 4)])
def test_multipartitions_and_p_set_sizes(d, l):
    mps = enumerate_multipartitions(d, l)
    assert len(mps) == len(set(mps)) == multipartition_count(d, l)
    assert all(mp.level == l and mp.size() == d for mp in mps)
    ps = enumerate_p_set(d, l)
    assert len(ps) == len(set(ps)) == len(mps)
    assert all(in_p_set(mu, d, l) for mu in ps)


def test_multipartition_examples():
    assert enumerate_multipartitions(0, 3) == [MP((), (), ())]
    assert set(enumerate_multipartitions(2, 2)) == {
        MP((2,), ()),
        MP((1, 1), ()),
        MP((1,), (1,)),
        MP((), (2,)),
        MP((), (1, 1)),
    }
    assert len(enumerate_multipartitions(3, 2)) == 10


def test_p_set_examples():
    assert enumerate_p_set(0, 2) == [P()]
    assert set(enumerate_p_set(2, 2)) == {P(), P(1), P(2), P(3), P(1, 1)}


def test_p_set_membership_by_brute_force():
    d, l = 3, 2
    found = set()
    for n in range(0, 3 * l * d):
        for lam in enumerate_partitions(n):
            if len(lam) + sum(p // l for p in lam) <= d:
                found.add(lam)
    assert found == set(enumerate_p_set(d, l))


def test_phi_examples():
    assert phi(MP((2,), (1,))) == P(2, 1)
    assert phi(MP((), ())) == P()


@pytest.mark.parametrize("d,l", [(d, l) for d in range(0, 6) for l in range(1, 4)])
def test_phi_is_a_bijection(d, l):
    mps = enumerate_multipartitions(d, l)
    images = [phi(mp) for mp in mps]
    assert len(set(images)) == len(mps)
    assert set(images) == set(enumerate_p_set(d, l))
    for mp, mu in zip(mps, images):
        assert phi_inv(mu, l, d) == mp


def test_phi_inv_rejects_outside_p_set():
    with pytest.raises(ValueError):
        phi_inv(P(5), 2, 2)


def test_sharp():
    assert sharp(MP((1, 1), ())) == 0
    assert sharp(MP((2, 1), (1,))) == 3
    assert sharp(MP((), (1, 1))) == 2


def test_residue_examples():
    assert residue_tuple(MP((4, 2, 1)), (5,)) == ResidueMultiset([5, 6, 7, 8, 4, 5, 3])
    assert residue_tuple(MP((1,)), (0,)) == ResidueMultiset([0])
    assert residue_tuple(MP((1,), (1,)), (0, 0)) == ResidueMultiset([0, 0])
    with pytest.raises(ValueError):
        residue_tuple(MP((1,)), (0, 0))


def test_residues_are_contents_shifted():
    for lam in enumerate_partitions(6):
        got = residue_tuple(MP(lam), (Fraction(1, 3),))
        assert list(got) == contents(lam, Fraction(1, 3))


def test_residue_multiset_is_unordered():
    assert ResidueMultiset([1, 0, 1]) == ResidueMultiset([1, 1, 0])
    assert ResidueMultiset([1, 0]) != ResidueMultiset([1, 1])
    assert len({ResidueMultiset([2, 1]), ResidueMultiset([1, 2])}) == 1


def test_basd_rank_examples():
    assert basd_rank(0, 4) == 1
    assert basd_rank(1, 3) == 3
    assert basd_rank(2, 2) == 6
    # level one gives the group algebra
    assert [basd_rank(d, 1) for d in range(6)] == [1, 1, 2, 6, 24, 120]


@given(st.integers(0, 7), st.integers(1, 6))
def test_basd_rank_is_integral(d, l):
    assert isinstance(basd_rank(d, l), int)


def test_distinct_permutations():
    assert distinct_permutations((1, 1, 0)) == [(0, 1, 1), (1, 0, 1), (1, 1, 0)]


def test_monomial_symmetric_counts_each_rearrangement_once():
    assert monomial_symmetric([2, 3], ()) == 1
    assert monomial_symmetric([0, 1], (1,)) == 1
    assert monomial_symmetric([0, -1], (2, 1)) == 0
    assert monomial_symmetric([1, 1, 1], (1, 1)) == 3
    assert monomial_symmetric([2, 5], (1, 1)) == 10


fractions = st.fractions(min_value=-5, max_value=5, max_denominator=6)


@given(st.lists(fractions, max_size=5), st.integers(0, 6))
def test_elementary_symmetric_matches_bruteforce(values, r):
    assert elementary_symmetric(values, r) == elementary_symmetric_bruteforce(values, r)


def test_shift_identity_examples():
    assert elementary_symmetric_shift_identity([], 0, 0)
    assert elementary_symmetric_shift_identity([], 5, 1)


@settings(max_examples=200)
@given(st.lists(fractions, max_size=4), fractions, st.integers(0, 5))
def test_shift_identity_holds(values, u, r):
    assert elementary_symmetric_shift_identity(values, u, r)


@given(st.lists(st.integers(0, 4), max_size=4), st.permutations(range(3)))
def test_residues_ignore_component_relabelling_of_equal_parameters(parts, order):
    comps = [Partition.from_parts(parts), Partition.from_parts(parts[:2]), Partition()]
    mp = Multipartition(comps)
    shuffled = Multipartition([comps[i] for i in order])
    assert residue_tuple(mp, (1, 1, 1)) == residue_tuple(shuffled, (1, 1, 1))
