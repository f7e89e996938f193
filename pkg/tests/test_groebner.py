"""Groebner bases over GF(p), saturations and the smoothness certificate."""

import pytest
from sympy.polys.groebnertools import spoly

from algebra.matrix import rank
from algebra.poly import HomogeneousPoly, monomials_of_degree
from algebra.primefield import PrimeField

from groebner.ideal import Ideal, groebner_basis, is_unit
from groebner.saturation import (
    base_locus_outside,
    certify_smooth_outside,
    points_ideal,
    quotient_by_power,
    saturation,
)

FIELD = PrimeField(101)
METHODS = ["buchberger", "f5b"]


def linear(*coeffs):
    return HomogeneousPoly.linear(FIELD, coeffs)


def form(terms):
    return HomogeneousPoly(FIELD, terms)


X, Y, Z = linear(1, 0, 0), linear(0, 1, 0), linear(0, 0, 1)
NODE = form({(0, 2, 1): 1, (2, 0, 1): -1, (3, 0, 0): -1})


def assert_s_pairs_reduce_to_zero(basis):
    elements = basis.elements
    for i, g in enumerate(elements):
        for h in elements[i + 1 :]:
            assert not spoly(g, h, basis.ring).rem(elements)


def random_form(field, rng, degree):
    return HomogeneousPoly(field, {e: rng.randrange(field.p) for e in monomials_of_degree(degree)}, degree)


def in_degree_part(f, generators):
    """f in I_d, decided by the rank of the degree-d Macaulay matrix of I."""
    field = f.ring
    columns = monomials_of_degree(f.degree)
    rows = []
    for g in generators:
        for m in monomials_of_degree(f.degree - g.degree):
            shifted = HomogeneousPoly.monomial(field, m) * g
            rows.append([shifted.coefficient(c) for c in columns])
    with_f = rows + [[f.coefficient(c) for c in columns]]
    return rank(with_f, field) == rank(rows, field)


@pytest.mark.parametrize("method", METHODS)
def test_basis_is_reduced_and_closed(method):
    ideal = Ideal.generated_by([NODE, X * Y - Z * Z])
    basis = groebner_basis(ideal, method)
    assert basis.satisfies_criterion()
    assert_s_pairs_reduce_to_zero(basis)
    for g in ideal.generators:
        assert basis.contains(g)


def test_membership():
    basis = groebner_basis(Ideal.generated_by([X - Y, Y - Z]))
    assert basis.contains(X - Z)
    assert not basis.contains(X + Z)


def test_unit_ideal():
    assert is_unit(Ideal.generated_by([X, X - 1]))
    assert not is_unit(Ideal.generated_by([X, Y]))


def test_quotient_drops_the_extra_factor():
    ideal = Ideal.generated_by([X * Z, Y * Z])
    quotient = groebner_basis(quotient_by_power(ideal, Z))
    assert quotient.contains(X) and quotient.contains(Y)
    assert not quotient.contains(Z)


def test_saturating_the_irrelevant_ideal_away():
    ideal = Ideal.generated_by([X * X, X * Y, X * Z])
    by = Ideal.generated_by([X, Y, Z])
    assert groebner_basis(saturation(ideal, by)).contains(X)


def test_points_ideal_contains_the_joining_line():
    ideal = points_ideal([(1, 0, 0), (0, 1, 0)], FIELD)
    basis = groebner_basis(ideal)
    assert basis.contains(Z)
    assert not basis.contains(X)


def test_points_ideal_rejects_duplicates():
    with pytest.raises(ValueError):
        points_ideal([(1, 0, 0), (2, 0, 0)], FIELD)


@pytest.mark.parametrize("method", METHODS)
def test_node_is_the_only_singularity(method):
    assert certify_smooth_outside(NODE, [(0, 0, 1)], method).smooth_outside
    assert not certify_smooth_outside(NODE, [], method).smooth_outside


def test_smooth_conic():
    conic = form({(2, 0, 0): 1, (0, 2, 0): 1, (0, 0, 2): -1})
    certificate = certify_smooth_outside(conic, [])
    assert certificate.smooth_outside
    assert certificate.excluded == []


def test_zero_form_is_rejected():
    with pytest.raises(ValueError):
        certify_smooth_outside(HomogeneousPoly(FIELD, {}, 3), [])


def test_base_locus():
    assert base_locus_outside([X, Y], [(0, 0, 1)])
    assert not base_locus_outside([X * Y, X * Z], [(1, 0, 0)])


@pytest.mark.parametrize("method", METHODS)
def test_membership_matches_the_macaulay_matrix(method, rng, gf101):
    for _ in range(50):
        generators = [random_form(gf101, rng, rng.randint(1, 2)) for _ in range(rng.randint(1, 3))]
        generators = [g for g in generators if not g.is_zero()]
        if not generators:
            continue
        basis = groebner_basis(Ideal.generated_by(generators), method)
        assert_s_pairs_reduce_to_zero(basis)
        combination = sum(
            (random_form(gf101, rng, 3 - g.degree) * g for g in generators), HomogeneousPoly(gf101, {}, 3)
        )
        for f in (combination, random_form(gf101, rng, 3)):
            assert basis.contains(f) == in_degree_part(f, generators)


def test_derived_bases_pass_the_s_pair_test():
    ideal = Ideal.generated_by([X * Z, Y * Z])
    for basis in (
        groebner_basis(quotient_by_power(ideal, Z)),
        groebner_basis(saturation(Ideal.generated_by([X * X, X * Y]), Ideal.generated_by([X, Y, Z]))),
        groebner_basis(points_ideal([(1, 0, 0), (0, 1, 0), (0, 0, 1)], FIELD)),
    ):
        assert_s_pairs_reduce_to_zero(basis)
