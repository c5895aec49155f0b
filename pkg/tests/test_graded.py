import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cyclohecke.combinatorics import (
    Multipartition,
    Partition,
    basd_rank,
    enumerate_multipartitions,
    enumerate_p_set,
    phi,
    sharp,
)
from cyclohecke.errors import VerificationError
from cyclohecke.graded import (
    ColoredCycle,
    ColoredProduct,
    GradedAlgebra,
    colored_cycle_product,
    cycle_type,
    graded_algebra,
)
from cyclohecke.symgroup import Cycle, Permutation, all_cycles

from oracles import conjugacy_class_sums


def cc(points, r, l):
    return ColoredCycle(Cycle(points), r, l)


def random_element(g: GradedAlgebra, data):
    keys = data.draw(st.lists(st.sampled_from(g.basis_keys), max_size=4))
    coeffs = data.draw(st.lists(st.integers(-3, 3), min_size=len(keys), max_size=len(keys)))
    return g.element(dict(zip(keys, coeffs)))


# --- multiplication ---------------------------------------------------------

def test_twisted_multiplication_example():
    g = GradedAlgebra(2, 3)
    s1 = g.s(1)
    x1 = g.x(1)
    assert (x1 * s1) * x1 == g.monomial((1, 1), (2, 1))
    assert s1 * x1 == g.x(2) * s1


@pytest.mark.parametrize("l", [1, 2, 3])
def test_truncation(l):
    g = GradedAlgebra(2, l)
    assert (g.x(1) ** l).is_zero()
    if l > 1:
        assert not (g.x(1) ** (l - 1)).is_zero()


def test_parameter_mismatch():
    with pytest.raises(ValueError):
        GradedAlgebra(2, 2).one() * GradedAlgebra(2, 3).one()


@settings(max_examples=100, deadline=None)
@given(st.sampled_from([(2, 2), (3, 2), (3, 3), (2, 3)]), st.data())
def test_associativity_and_unit(params, data):
    g = graded_algebra(*params)
    a, b, c = (random_element(g, data) for _ in range(3))
    assert (a * b) * c == a * (b * c)
    assert a * g.one() == g.one() * a == a
    assert (a + b) * c == a * c + b * c


def test_text_rendering():
    g = GradedAlgebra(2, 2)
    z = g.x(1) * g.s(1) * 3 - g.one()
    assert z.to_text() == "3 * x1 * (1 2) - 1"


# --- colored cycles -----------------------------------------------------------

def test_h_poly_examples():
    g = GradedAlgebra(3, 2)
    assert g.h_poly(0, {1, 2}) == g.x(1) + g.x(2)
    assert g.h_poly(2, {1, 2}).is_zero()
    g3 = GradedAlgebra(3, 3)
    assert g3.h_poly(2, {1, 2, 3}) == g3.monomial((2, 2, 2))
    with pytest.raises(ValueError):
        g.h_poly(0, set())


def test_colored_cycle_elements():
    g = GradedAlgebra(3, 3)
    for i in (1, 2, 3):
        for r in range(3):
            assert g.colored_cycle_element(cc((i,), r, 3)) == g.x(i) ** r
    g2 = GradedAlgebra(2, 2)
    assert g2.colored_cycle_element(cc((1, 2), 0, 2)) == (g2.x(1) + g2.x(2)) * g2.s(1)
    with pytest.raises(ValueError):
        cc((1, 2), 2, 2)


def test_worked_products():
    a = cc((1, 2, 3), 4, 6)
    assert colored_cycle_product(a, cc((7, 9, 2), 1, 6)) == ColoredProduct.make(1, [cc((1, 2, 7, 9, 3), 5, 6)])
    assert colored_cycle_product(a, cc((7, 9, 2, 1), 1, 6)).is_zero()
    for l in (2, 3, 4):
        got = colored_cycle_product(cc((1, 2, 3), 0, l), cc((7, 9, 2, 1), 0, l))
        assert got == ColoredProduct.make(l, [cc((1, 7, 9, 3), l - 1, l), cc((2,), l - 1, l)])


def test_worked_products_by_multiplication():
    g = GradedAlgebra(9, 6)
    a, b = cc((1, 2, 3), 4, 6), cc((7, 9, 2), 1, 6)
    lhs = g.colored_cycle_element(a) * g.colored_cycle_element(b)
    assert lhs == g.colored_cycle_element(cc((1, 2, 7, 9, 3), 5, 6))


@pytest.mark.parametrize("d,l", [(d, l) for d in (2, 3, 4) for l in (1, 2, 3)])
def test_closed_form_products_exhaustive(d, l):
    g = graded_algebra(d, l)
    elems = {cc(c.points, r, l): None for c in all_cycles(d) for r in range(l)}
    for a in elems:
        elems[a] = g.colored_cycle_element(a)
    for a, b in itertools.product(elems, repeat=2):
        assert g.product_element(colored_cycle_product(a, b)) == elems[a] * elems[b], (a, b)


@pytest.mark.parametrize("l", [1, 2, 3])
def test_h_products_exhaustive(l):
    g = GradedAlgebra(4, l)
    subsets = [s for k in range(1, 5) for s in itertools.combinations(range(1, 5), k)]
    for I, J in itertools.product(subsets, repeat=2):
        c = len(set(I) & set(J))
        if c == 0:
            continue
        for r, s in itertools.product(range(l), repeat=2):
            expected = g.h_poly(r + s + (c - 1) * (l - 1), set(I) | set(J)) * Fraction(l) ** (c - 1)
            assert g.h_poly(r, I) * g.h_poly(s, J) == expected


def test_colored_expansion_round_trip_and_rejection():
    g = GradedAlgebra(3, 2)
    z = g.colored_cycle_element(cc((1, 2), 1, 2)) * 2 + g.colored_cycle_element(cc((1, 3, 2), 0, 2))
    exp = g.colored_expansion(z)
    assert exp == {(cc((1, 2), 1, 2),): 2, (cc((1, 3, 2), 0, 2),): 1}
    with pytest.raises(VerificationError):
        g.colored_expansion(g.x(1) * g.s(1))


def test_cycle_type():
    f = [cc((1, 2), 1, 2), cc((3,), 1, 2)]
    assert cycle_type(f, 4, 2) == Multipartition([(1,), (2, 1)])


# --- centralizer and center ---------------------------------------------------

@pytest.mark.parametrize("d,l", [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)] + [(4, 2)])
def test_centralizer_dimension_and_membership(d, l):
    g = graded_algebra(d, l)
    basis = g.centralizer_basis()
    assert len(basis) == basd_rank(d, l)
    span = g.span(basis)
    for prod in g.disjoint_products():
        assert span.contains(g.disjoint_product_element(prod).to_vector())
    assert len(g.disjoint_products()) == basd_rank(d, l)


def test_centralizer_small_examples():
    assert len(graded_algebra(1, 4).centralizer_basis()) == 4
    assert len(graded_algebra(2, 2).centralizer_basis()) == 6


def test_center_small_examples():
    g = graded_algebra(1, 3)
    assert g.same_span(g.center_basis_bruteforce(), [g.one(), g.x(1), g.x(1) ** 2])
    assert len(graded_algebra(2, 2).center_basis_bruteforce()) == 5


@pytest.mark.parametrize("d,count", [(1, 1), (2, 2), (3, 3), (4, 5), (5, 7)])
def test_level_one_center(d, count):
    assert len(graded_algebra(d, 1).center_basis_bruteforce()) == count


def test_class_sum_examples():
    g = graded_algebra(2, 2)
    assert g.class_sum(Multipartition([(1, 1), ()])) == g.one()
    assert g.class_sum(Multipartition([(), (2,)])) == g.monomial((1, 1), (2, 1))
    with pytest.raises(ValueError):
        g.class_sum(Multipartition([(1,), ()]))


@pytest.mark.parametrize("d", [1, 2, 3, 4])
def test_level_one_class_sums_are_conjugacy_class_sums(d):
    g = graded_algebra(d, 1)
    ours = {frozenset(z.terms) for z in g.class_sums().values()}
    zero = (0,) * d
    oracle = {frozenset((zero, Permutation(p)) for p in cls) for cls in conjugacy_class_sums(d)}
    assert ours == oracle


@pytest.mark.parametrize("d,l", [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)])
def test_class_sums_and_murphy_elements_are_bases(d, l):
    g = graded_algebra(d, l)
    center = g.center_basis_bruteforce()
    sums = list(g.class_sums().values())
    murphy = list(g.murphy_basis().values())
    for z in sums + murphy:
        assert g.is_central(z)
    assert len(g.span(sums)) == len(sums) == len(center)
    assert len(g.span(murphy)) == len(murphy) == len(center)
    assert g.same_span(sums, center) and g.same_span(murphy, center)


@pytest.mark.parametrize("d,l", [(d, l) for d in (1, 2, 3) for l in (1, 2, 3)])
def test_murphy_to_class_sums_is_unitriangular(d, l):
    g = graded_algebra(d, l)
    for mp in enumerate_multipartitions(d, l):
        coeffs = g.z_expansion(g.murphy_element(phi(mp)))
        assert coeffs[mp] == 1
        assert all(sharp(o) < sharp(mp) for o, c in coeffs.items() if o != mp and c)


def test_y_element_examples():
    l = 3
    g = graded_algebra(3, l)
    for i in (1, 2, 3):
        for r in range(l):
            assert g.y_element(i, r) == g.x(i) ** r
        assert g.y_element(i, i * l).is_zero()
        assert g.y_element(i, i * l + 1).is_zero()
    assert g.y_element(2, l) == g.colored_cycle_element(cc((1, 2), 0, l))


def test_murphy_element_examples():
    g = graded_algebra(2, 2)
    assert g.murphy_element(Partition()) == g.one()
    g1 = graded_algebra(1, 3)
    for r in range(3):
        assert g1.murphy_element(Partition.from_parts([r])) == g1.x(1) ** r
    with pytest.raises(ValueError):
        g.murphy_element(Partition((5,)))


def _support_ok(expansion, i, bound, l):
    for key in expansion:
        support = set().union(*(f.support for f in key)) | ({i} if l == 1 else set())
        assert all(f.color == l - 1 for f in key)
        assert i in support and support <= set(range(1, i + 1)) and len(support) <= bound


@pytest.mark.parametrize("l", [1, 2, 3])
def test_powers_of_colored_jucys_murphy_elements(l):
    g = graded_algebra(3, l)
    for i, p in itertools.product((1, 2, 3), (1, 2, 3)):
        diff = g.y_element(i, l) ** p - g.y_element(i, p * l)
        _support_ok(g.colored_expansion(diff), i, p, l)


@pytest.mark.parametrize("d,l", [(2, 2), (3, 2), (2, 3)])
def test_single_cycle_class_sums_generate_center(d, l):
    g = graded_algebra(d, l)
    gens = [g.class_sum_cycles(a, r) for a in range(1, d + 1) for r in range(l)]
    sub = g.generated_subalgebra(gens)
    center = g.center_basis_bruteforce()
    assert len(sub) == len(center)
    assert all(sub.contains(z.to_vector()) for z in center)
