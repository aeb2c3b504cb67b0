import random
from fractions import Fraction

import pytest

from oracles import element_order_mod, laplace_det
from twtorsion.algebra import (
    CyclotomicField,
    FieldMismatch,
    FieldScalar,
    GaloisMap,
    LaurentPoly,
    PolyMatrix,
    PrimeField,
    Q,
    RatFn,
    cyclotomic_embed,
    det_poly_matrix,
    equal_up_to_unit,
    parse_field,
    reduce_mod_p,
    width,
)
from twtorsion.algebra import matrix as mx

F3, F5 = PrimeField(3), PrimeField(5)
K3, K4 = CyclotomicField(3), CyclotomicField(4)


def lp(f, coeffs, low=0):
    return LaurentPoly.from_ints(f, coeffs, low)


# -- fields -------------------------------------------------------------------
def test_prime_field_rejects_composite():
    with pytest.raises(ValueError):
        PrimeField(6)


def test_prime_field_residues_in_range():
    f = PrimeField(7)
    assert f.from_int(-1) == 6
    assert f.mul(3, 5) == 1
    assert f.inv(3) == 5


def test_cyclotomic_reduction_uses_minimal_polynomial():
    z = K3.zeta()
    # z^2 = -1 - z
    assert K3.mul(z, z) == K3.from_coefficients([-1, -1])
    assert K3.degree == 2


def test_cyclotomic_inverse():
    a = K3.from_coefficients([Fraction(2), Fraction(-3)])
    assert K3.mul(a, K3.inv(a)) == K3.one


def test_zero_has_no_inverse():
    with pytest.raises(ZeroDivisionError):
        F5.inv(0)
    with pytest.raises(ZeroDivisionError):
        K3.inv(K3.zero)


def test_parse_field_variants():
    assert parse_field("Q") == Q
    assert parse_field("Q(zeta_5)") == CyclotomicField(5)
    assert parse_field("F7") == parse_field("F_7") == parse_field("GF(7)") == PrimeField(7)
    with pytest.raises(ValueError):
        parse_field("R")


def test_root_of_unity_in_f5_has_order_4():
    g = F5.root_of_unity(4)
    assert g == 2
    assert element_order_mod(g, 5) == 4


def test_root_of_unity_missing_in_prime_field():
    with pytest.raises(ValueError):
        PrimeField(7).root_of_unity(4)


def test_field_scalar_operators_and_mismatch():
    a, b = F5.element(2), F5.element(4)
    assert (a * b).value == 3
    assert (a / b).value == 3
    assert (-a).value == 3
    with pytest.raises(FieldMismatch):
        a + PrimeField(7).element(1)
    assert isinstance(a + 1, FieldScalar)


# -- width ----------------------------------------------------------------------
def test_width_examples():
    t3_t = lp(Q, [0, 1, 0, 1])
    assert width(t3_t) == 2
    assert width(LaurentPoly.zero(Q)) == 0
    assert width(0) == 0
    assert width(RatFn(lp(Q, [-1, 0, 1]), lp(Q, [-1, 1]))) == 1


def test_width_of_negative_exponents():
    assert width(lp(Q, [1, 0, 0, 2], low=-2)) == 3


# -- Laurent arithmetic -----------------------------------------------------------
def test_product_over_q_zeta_3():
    assert lp(K3, [1, 1]) * lp(K3, [-1, 1]) == lp(K3, [-1, 0, 1])


def test_additive_inverse_gives_canonical_zero():
    s = lp(Q, [1, 1]) + lp(Q, [-1, -1])
    assert s.is_zero() and s.coeffs == () and s.low == 0


def test_square_over_f3():
    assert lp(F3, [2, 1]) * lp(F3, [2, 1]) == lp(F3, [4, 4, 1]) == lp(F3, [1, 1, 1])


def test_field_mismatch_in_polynomials():
    with pytest.raises(FieldMismatch):
        lp(F3, [1]) + lp(F5, [1])


def test_exact_division_and_gcd():
    a = lp(Q, [-1, 0, 1])
    b = lp(Q, [-1, 1])
    assert a.divexact(b) == lp(Q, [1, 1])
    with pytest.raises(ArithmeticError):
        lp(Q, [1, 0, 1]).divexact(b)
    assert a.gcd(lp(Q, [1, 2, 1])) == lp(Q, [1, 1])


def test_ratfn_canonical_denominator():
    r = RatFn(lp(Q, [-1, 0, 1], low=2), lp(Q, [-2, 2], low=-1)).reduced()
    assert r.den.low == 0 and r.den.trailing != 0
    assert r.den.leading == Q.one
    assert r.width() == 1


def test_equal_up_to_unit():
    a = lp(Q, [1, -1, 1])
    assert equal_up_to_unit(a, a.shift(3).scale(Q.from_int(-5)))
    assert not equal_up_to_unit(a, lp(Q, [1, 1, 1]))


# -- reduction mod p ----------------------------------------------------------------
def test_reduce_mod_p_examples():
    assert reduce_mod_p(lp(Q, [3, 2, 6]), 3) == LaurentPoly.from_ints(F3, [0, 2])
    assert reduce_mod_p(lp(Q, [1, -1, 1]), 5) == LaurentPoly.from_ints(F5, [1, 4, 1])
    x = lp(Q, [0, 1, 0, 5])
    y = reduce_mod_p(x, 5)
    assert (x.width(), y.width()) == (2, 0)
    assert y == LaurentPoly.monomial(F5, 1)


def test_reduce_mod_p_rejects_fractions_and_irrationals():
    with pytest.raises(ValueError):
        reduce_mod_p(LaurentPoly.from_dict(Q, {0: Fraction(1, 2)}), 3)
    with pytest.raises(ValueError):
        reduce_mod_p(LaurentPoly(K3, [K3.zeta()]), 3)
    with pytest.raises(TypeError):
        reduce_mod_p(lp(F5, [1]), 3)


# -- determinants ----------------------------------------------------------------------
def test_det_examples():
    assert det_poly_matrix(PolyMatrix.identity(Q, 3)) == LaurentPoly.one(Q)
    t = LaurentPoly.monomial(Q, 1)
    one = LaurentPoly.one(Q)
    assert det_poly_matrix(PolyMatrix(Q, [[t, one], [one, t]])) == lp(Q, [-1, 0, 1])


def test_det_non_square_rejected():
    with pytest.raises(ValueError):
        det_poly_matrix(PolyMatrix(Q, [[LaurentPoly.one(Q), LaurentPoly.one(Q)]]))


def _random_poly(rng, f, max_width=2):
    low = rng.randint(-2, 2)
    return LaurentPoly.from_ints(f, [rng.randint(-3, 3) for _ in range(rng.randint(0, max_width + 1))], low)


def _laplace(m: PolyMatrix):
    f = m.field
    return laplace_det([list(r) for r in m.rows], lambda a, b: a + b, lambda a, b: a * b, lambda a: -a,
                       LaurentPoly.zero(f), LaurentPoly.one(f))


@pytest.mark.parametrize("field", [F5, K3])
def test_det_random_4x4_matches_laplace(field):
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 4)
        m = PolyMatrix(field, [[_random_poly(rng, field) for _ in range(n)] for _ in range(n)])
        expect = _laplace(m)
        assert det_poly_matrix(m) == expect
        assert det_poly_matrix(m, pivoting="first") == expect


def test_scalar_det_and_inverse():
    a = mx.from_ints(Q, [[2, 1], [7, 4]])
    assert mx.det(Q, a) == Q.one
    assert mx.matmul(Q, a, mx.inverse(Q, a)) == mx.identity(Q, 2)


# -- Galois maps ----------------------------------------------------------------------
def test_galois_identity():
    a = K4.from_coefficients([3, -2])
    assert cyclotomic_embed(1, 4)(a) == a


def test_galois_n4_j3_conjugates():
    one_plus_z = K4.from_coefficients([1, 1])
    assert cyclotomic_embed(3, 4)(one_plus_z) == K4.from_coefficients([1, -1])


def test_galois_n3_fixes_trace():
    z = K3.zeta()
    s = K3.add(z, K3.mul(z, z))
    assert s == K3.from_int(-1)
    assert cyclotomic_embed(2, 3)(s) == s


def test_galois_rejects_non_units():
    with pytest.raises(ValueError):
        cyclotomic_embed(0, 5)
    with pytest.raises(ValueError):
        cyclotomic_embed(2, 4)


def test_galois_on_polynomials_is_multiplicative():
    g = GaloisMap(2, 5)
    K = g.field
    a = LaurentPoly(K, [K.zeta(1), K.one, K.zeta(3)])
    b = LaurentPoly(K, [K.zeta(2), K.from_int(2)], low=-1)
    assert g(a * b) == g(a) * g(b)
