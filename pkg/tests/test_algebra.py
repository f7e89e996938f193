"""Tower arithmetic, the reduction maps, exact linear algebra and plane forms."""

import pytest
from sympy import Matrix, Rational, isprime

from algebra.conic import ConicParametrization
from algebra.hom import (
    PrimeSearchError,
    RationalReduction,
    TowerEmbeddingError,
    admits_embedding,
    embed_tower,
    find_good_prime,
    sqrt_minus_three,
    sqrt_mod_p,
)
from algebra.matrix import bareiss_determinant, nullspace, rank, signed_minor_kernel, solve
from algebra.poly import HomogeneousPoly, InvalidPointError, Polynomial, partial_derivative
from algebra.primefield import PrimeField
from algebra.resultant import resultant
from algebra.rings import QQ_FIELD, TOWER, ring_from_tag
from algebra.tower import ALPHA, BETA, DELTA, ONE, ZERO, TowerElement, multiplication_matrix, tower_inverse
from algebra.univariate import binary_form_is_squarefree, derivative, gcd, is_squarefree, poly_divmod, roots_mod_p


def _sympy(q):
    return Rational(int(q.numerator), int(q.denominator))


# tower


def test_generator_relations():
    assert ALPHA * ALPHA == 17
    assert BETA * BETA == 21 + 5 * ALPHA
    assert DELTA * DELTA == 5 + ALPHA


def test_ring_axioms_on_random_pairs(rng):
    for _ in range(1000):
        a, b, c = (TowerElement.random(rng, 9) for _ in range(3))
        assert a * b == b * a
        assert (a + b) * c == a * c + b * c
        assert a - a == ZERO
        assert a * ONE == a
        assert (a * b) * c == a * (b * c)


def test_inverse_matches_independent_solve(rng):
    for _ in range(5):
        a = TowerElement.random(rng)
        inverse = tower_inverse(a)
        assert a * inverse == ONE
        oracle = Matrix([[_sympy(v) for v in row] for row in multiplication_matrix(a)]).LUsolve(
            Matrix([1, 0, 0, 0, 0, 0, 0, 0])
        )
        assert [_sympy(c) for c in inverse.coords] == list(oracle)


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        tower_inverse(ZERO)
    with pytest.raises(ZeroDivisionError):
        ONE / 0


def test_encode_decode_preserves_element(rng):
    a = TowerElement.random(rng)
    assert TOWER.decode(TOWER.encode(a)) == a


# reduction maps


def test_published_embedding():
    hom = embed_tower(30047, (1, 0, 1))
    assert hom.images == (20452, 6941, 27962)


def test_hom_is_multiplicative_and_additive(hom, rng):
    for _ in range(1000):
        a, b = TowerElement.random(rng, 9), TowerElement.random(rng, 9)
        assert hom(a * b) == hom(a) * hom(b)
        assert hom(a + b) == hom(a) + hom(b)


def test_branch_bits_pick_negatives():
    plain = embed_tower(30047, (0, 0, 0))
    flipped = embed_tower(30047, (1, 0, 0))
    assert flipped.r_alpha == 30047 - plain.r_alpha


@pytest.mark.parametrize("p", [9, 2, 3])
def test_embedding_rejects_bad_primes(p):
    with pytest.raises(TowerEmbeddingError):
        embed_tower(p)


def test_embedding_rejects_bad_bits():
    with pytest.raises(TowerEmbeddingError):
        embed_tower(30047, (1, 2, 0))


def test_sqrt_mod_p_against_euler_criterion():
    p = 101
    for n in range(1, p):
        root = sqrt_mod_p(n, p)
        euler = pow(n, (p - 1) // 2, p)
        if root is None:
            assert euler == p - 1
        else:
            assert root * root % p == n
            assert root <= (p - 1) // 2
            assert euler == 1


def _embeds_by_brute_force(p):
    squares = {}
    for r in range(p):
        squares.setdefault(r * r % p, []).append(r)
    for a in squares.get(17 % p, []):
        if (21 + 5 * a) % p in squares and (5 + a) % p in squares:
            return True
    return False


def test_find_good_prime_matches_scan():
    p = 3
    while not (isprime(p) and _embeds_by_brute_force(p)):
        p += 2
    assert find_good_prime(3) == p
    assert admits_embedding(p)


def test_find_good_prime_respects_cap():
    with pytest.raises(PrimeSearchError):
        find_good_prime(100, cap=50)


def test_sqrt_minus_three():
    r = sqrt_minus_three(10009)
    assert (r * r + 3) % 10009 == 0


def test_rational_reduction():
    reduction = RationalReduction(101)
    assert reduction(QQ_FIELD.convert(Rational(1, 2))) * 2 == 1


# linear algebra


def test_bareiss_determinant_over_rationals():
    rows = [[QQ_FIELD(v) for v in row] for row in ([2, 1, 0], [1, 3, 1], [0, 1, 4])]
    assert bareiss_determinant(rows, QQ_FIELD) == 18


def test_nullspace_and_rank(gf101):
    rows = [[gf101(v) for v in row] for row in ([1, 2, 3], [2, 4, 6])]
    assert rank(rows, gf101) == 1
    kernel = nullspace(rows, gf101)
    assert len(kernel) == 2
    for vector in kernel:
        assert sum((a * b for a, b in zip(rows[0], vector)), gf101.zero) == 0


def test_solve_reports_inconsistency():
    rows = [[QQ_FIELD(1), QQ_FIELD(1)], [QQ_FIELD(1), QQ_FIELD(1)]]
    assert solve(rows, [QQ_FIELD(1), QQ_FIELD(2)], QQ_FIELD) is None
    assert solve(rows, [QQ_FIELD(1), QQ_FIELD(1)], QQ_FIELD) is not None


def test_signed_minors_span_the_kernel(rng):
    rows = [[QQ_FIELD(rng.randint(-5, 5)) for _ in range(4)] for _ in range(3)]
    vector = signed_minor_kernel(rows, QQ_FIELD)
    for row in rows:
        assert sum((a * b for a, b in zip(row, vector)), QQ_FIELD.zero) == 0


# forms


def test_euler_identity_on_shipped_forms(asset_store):
    for name in asset_store.names():
        F = asset_store.form(name)
        total = Polynomial.zero(F.ring)
        for v in range(3):
            total = total + Polynomial.variable(F.ring, v) * partial_derivative(F, v)
        assert total == F.scale(F.ring.convert(F.degree)), name


def test_origin_is_not_a_point(gf101):
    F = HomogeneousPoly.linear(gf101, [1, 2, 3])
    with pytest.raises(InvalidPointError):
        F.evaluate((0, 0, 0))


def test_mixed_degrees_are_rejected():
    with pytest.raises(ValueError):
        HomogeneousPoly(QQ_FIELD, {(1, 0, 0): 1, (2, 0, 0): 1})


def test_map_coefficients_commutes_with_evaluation(hom, rng):
    F = HomogeneousPoly(TOWER, {(2, 0, 0): ALPHA, (1, 1, 0): BETA, (0, 0, 2): DELTA}, 2)
    point = tuple(TowerElement.random(rng, 5) for _ in range(3))
    reduced = F.map_coefficients(hom, hom.codomain)
    assert reduced.evaluate(hom.map_point(point)) == hom(F.evaluate(point))


def test_divides(gf101):
    x, y = HomogeneousPoly.linear(gf101, [1, 0, 0]), HomogeneousPoly.linear(gf101, [0, 1, 0])
    assert x.divides(x * y)
    assert not (x + y).divides(x * y)


def test_resultant_vanishes_on_common_roots():
    x = Polynomial.variable(QQ_FIELD, 0)
    y = Polynomial.variable(QQ_FIELD, 1)
    z = Polynomial.variable(QQ_FIELD, 2)
    R = resultant(x * x - y * z, x - y, 0)
    # x = y is a common root exactly when y^2 = yz
    assert R.evaluate((0, 2, 2)) == 0
    assert R.evaluate((0, 1, 3)) != 0


def test_ring_tags():
    assert ring_from_tag("tower") == TOWER
    assert ring_from_tag({"fp": 7}) == PrimeField(7)
    with pytest.raises(ValueError):
        ring_from_tag("complex")


# conic and binary forms


def test_conic_points_and_tangents_lie_on_implicit_conic():
    gamma = ConicParametrization.specialized(QQ_FIELD, QQ_FIELD(3), QQ_FIELD(2))
    conic = gamma.implicit_conic()
    for s, t in ((0, 1), (1, 0), (1, 1), (-1, 1)):
        point = gamma.point(s, t)
        assert conic.vanishes_at(point)
        line = gamma.tangent_line(s, t)
        assert sum((a * b for a, b in zip(line, point)), QQ_FIELD.zero) == 0


def test_composition_has_double_degree():
    gamma = ConicParametrization.specialized(QQ_FIELD, QQ_FIELD(3), QQ_FIELD(2))
    cubic = HomogeneousPoly(QQ_FIELD, {(3, 0, 0): 1, (0, 1, 2): -4}, 3)
    assert gamma.compose(cubic).degree == 6


def test_univariate_roots_and_gcd(gf101):
    # (w - 2)^2 (w - 5)
    coeffs = [gf101(c) for c in (-20, 24, -9, 1)]
    roots, irrational = roots_mod_p(coeffs, gf101)
    assert sorted(roots) == [(2, 2), (5, 1)]
    assert irrational == 0
    assert gcd(coeffs, [gf101(-2), gf101(1)], gf101) == [gf101(-2), gf101(1)]


def test_univariate_division_and_derivative(gf101):
    coeffs = [gf101(c) for c in (-20, 24, -9, 1)]
    quotient, remainder = poly_divmod(coeffs, [gf101(-2), gf101(1)], gf101)
    assert quotient == [gf101(c) for c in (10, -7, 1)]
    assert remainder == []
    assert derivative(coeffs, gf101) == [gf101(c) for c in (24, -18, 3)]
    assert not is_squarefree(coeffs, gf101)
    assert is_squarefree(quotient, gf101)
    with pytest.raises(ZeroDivisionError):
        poly_divmod(coeffs, [gf101(0)], gf101)


def test_univariate_over_the_rationals():
    q = QQ_FIELD
    assert gcd([q(-2), q(0), q(2)], [q(-3), q(3)], q) == [q(-1), q(1)]
    # (w - 1)^2 (w + 1)
    assert not is_squarefree([q(1), q(-1), q(-1), q(1)], q)
    assert is_squarefree([q(-1), q(0), q(1)], q)
    assert gcd([], [], q) == []


def test_univariate_needs_a_prime_field_or_the_rationals():
    with pytest.raises(TypeError):
        gcd([ALPHA, ONE], [ONE, ONE], TOWER)


def test_squarefree_binary_forms(gf101):
    assert binary_form_is_squarefree([gf101(c) for c in (0, 1, 0)], gf101)
    assert not binary_form_is_squarefree([gf101(c) for c in (1, 2, 1)], gf101)
