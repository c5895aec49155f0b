import itertools
from math import comb, factorial

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cyclohecke.symgroup import (
    Cycle,
    Permutation,
    all_cycles,
    all_permutations,
    compose,
    coset_factor,
    coset_representatives,
    cycle_decomposition,
    format_cycles,
    reduced_word,
)

from oracles import compose as compose_oracle


def perms(d):
    return st.permutations(list(range(1, d + 1))).map(Permutation)


def test_rejects_non_permutations():
    with pytest.raises(ValueError):
        Permutation((1, 1))
    with pytest.raises(ValueError):
        Permutation((0, 1))


def test_composition_is_right_to_left():
    a = Permutation.from_cycles(9, [(1, 2, 3)])
    b = Permutation.from_cycles(9, [(7, 9, 2)])
    assert format_cycles(a * b) == "(1 2 7 9 3)"
    c = Permutation.from_cycles(9, [(7, 9, 2, 1)])
    assert format_cycles(a * c) == "(1 7 9 3)"


def test_compose_checks_degree():
    with pytest.raises(ValueError):
        compose(Permutation.identity(2), Permutation.identity(3))


@given(perms(5), perms(5))
def test_product_matches_oracle(v, w):
    assert tuple(v * w) == compose_oracle(v, w)


@given(perms(5), perms(5), perms(5))
def test_group_axioms(u, v, w):
    e = Permutation.identity(5)
    assert (u * v) * w == u * (v * w)
    assert u * e == e * u == u
    assert u * u.inverse() == e


@given(perms(6))
def test_cycle_decomposition_rebuilds(w):
    cycles = cycle_decomposition(w)
    assert sorted(p for c in cycles for p in c.points) == list(range(1, 7))
    rebuilt = Permutation.identity(6)
    for c in cycles:
        rebuilt = rebuilt * c.to_permutation(6)
    assert rebuilt == w


@given(perms(6))
def test_reduced_word(w):
    word = reduced_word(w)
    assert len(word) == w.length()
    out = Permutation.identity(6)
    for i in word:
        out = out * Permutation.simple(6, i)
    assert out == w


def test_length_is_inversion_count():
    for w in all_permutations(4):
        inv = sum(1 for i, j in itertools.combinations(range(4), 2) if w[i] > w[j])
        assert w.length() == inv


def test_cycle_normalization():
    assert Cycle((3, 1, 2)) == Cycle((1, 2, 3))
    assert Cycle((3, 1, 2)).points == (1, 2, 3)
    assert Cycle((2, 1)) == Cycle((1, 2))
    with pytest.raises(ValueError):
        Cycle((1, 1))


def test_format_identity():
    assert format_cycles(Permutation.identity(3)) == "()"
    assert repr(Permutation((2, 1, 3))) == "(1 2)"


def test_all_cycles_count():
    # number of cycles in S_d: sum over a of C(d, a) (a-1)!
    for d in range(1, 6):
        assert len(all_cycles(d)) == len(set(all_cycles(d))) == sum(comb(d, a) * factorial(a - 1) for a in range(1, d + 1))


@pytest.mark.parametrize("d1,d2", [(0, 3), (1, 2), (2, 2), (2, 3), (3, 1)])
def test_coset_representatives(d1, d2):
    reps = coset_representatives(d1, d2)
    assert len(reps) == comb(d1 + d2, d1)
    seen = set()
    for w in all_permutations(d1 + d2):
        rep, v = coset_factor(w, d1)
        assert rep in reps
        assert rep * v == w
        assert set(v[:d1]) == set(range(1, d1 + 1))
        assert rep.length() + v.length() == w.length()
        seen.add(rep)
    assert seen == set(reps)
