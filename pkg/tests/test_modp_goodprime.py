import random

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import cyclotomic_zero_free
from twtorsion.algebra import CyclotomicField, LaurentPoly, Q
from twtorsion.groups import Character, CohomClass, Presentation
from twtorsion.representations import RepresentationError, augmentation_rep, char_rep, restrict, trivial_rep
from twtorsion.torsion import (
    SearchExhausted,
    bad_primes,
    find_good_prime,
    modp_compare,
    parse_multivariate,
    torsion,
)
from twtorsion.torsion.goodprime import divisible_by_cyclotomic_prime, primitive_positive_vectors, project

TREFOIL = Presentation.parse("a b", ["a b a B A B"])
TH = CohomClass((1, 1))


# -- mod p ------------------------------------------------------------------------
def test_leading_coefficient_five_is_bad_at_five():
    x = LaurentPoly.from_ints(Q, [1, 0, 5])
    assert bad_primes(x) == frozenset({5})
    assert bad_primes(x, LaurentPoly.from_ints(Q, [6, 1])) == frozenset({2, 3, 5})


def test_empty_prime_list_gives_empty_table():
    v = restrict(augmentation_rep(3), Character(3, (1, 1)), TREFOIL)
    table = modp_compare(TREFOIL, TH, v, [])
    assert table.rows == ()


def test_non_integral_rep_rejected():
    v = char_rep(Character(3, (1, 1)), CyclotomicField(3), TREFOIL)
    with pytest.raises(RepresentationError):
        modp_compare(TREFOIL, TH, v, [5])


def test_composite_modulus_rejected():
    v = restrict(augmentation_rep(3), Character(3, (1, 1)), TREFOIL)
    with pytest.raises(ValueError):
        modp_compare(TREFOIL, TH, v, [4])


@pytest.mark.parametrize("n", [3, 5])
def test_trefoil_augmentation_stable_outside_bad_set(n):
    v = restrict(augmentation_rep(n), Character(n, (1, 1)), TREFOIL)
    primes = list(sympy.primerange(2, 30))
    table = modp_compare(TREFOIL, TH, v, primes)
    assert table.width == torsion(TREFOIL, TH, restrict(augmentation_rep(n, CyclotomicField(n)),
                                                     Character(n, (1, 1)), TREFOIL)).width
    assert table.stable_outside_bad()
    for row in table.rows:
        if not row.bad:
            assert row.reduced_width == table.width


def test_bad_prime_can_change_width():
    # numerator t^-3 + 2 t^-2 loses its top term mod 2
    p = Presentation.parse("a b", ["B A A b b A b b"])
    table = modp_compare(p, TH, trivial_rep(p), [2, 3, 5])
    assert table.bad_primes == frozenset({2})
    assert [(r.prime, r.direct_width, r.agrees) for r in table.rows] == [(2, -1, False), (3, 0, True), (5, 0, True)]


# -- good prime -------------------------------------------------------------------
def test_t_minus_one_takes_q_two():
    g = find_good_prime([{(1,): 1, (0,): -1}])
    assert (g.psi, g.q) == ((1,), 2)


def test_phi3_skips_three_only_if_needed():
    phi3 = {(0,): 1, (1,): 1, (2,): 1}
    assert divisible_by_cyclotomic_prime({0: 1, 1: 1, 2: 1}, 3)
    assert find_good_prime([phi3]).q == 2
    # with Phi_2 also present, 2 and 3 are both excluded
    assert find_good_prime([phi3, {(0,): 1, (1,): 1}]).q == 5


def test_x_minus_y_skips_degenerate_projection():
    g = find_good_prime([{(1, 0): 1, (0, 1): -1}])
    assert g.psi == (1, 2)
    assert g.projections == ({1: 1, 2: -1},)


def test_zero_input_rejected():
    with pytest.raises(ValueError):
        find_good_prime([{}])
    with pytest.raises(ValueError):
        find_good_prime([])


def test_search_bounds_reported():
    # 1 + t + ... + t^(q-1) products: forbid every q up to a small bound
    polys = [{tuple([k]): 1 for k in range(q)} for q in (2, 3, 5, 7)]
    with pytest.raises(SearchExhausted):
        find_good_prime(polys, q_bound=7)
    assert find_good_prime(polys).q == 11


def test_primitive_vector_order():
    vs = list(primitive_positive_vectors(2, 3))
    assert vs == [(1, 1), (1, 2), (2, 1), (1, 3), (2, 3), (3, 1), (3, 2)]


def test_projection_collects_terms():
    assert project({(1, 0): 1, (0, 1): -1}, (1, 1)) == {}


def test_parse_multivariate():
    poly, names = parse_multivariate("3*x^2*y^-1 - y + 1")
    assert names == ("x", "y")
    assert poly == {(2, -1): 3, (0, 1): -1, (0, 0): 1}
    with pytest.raises(ValueError):
        parse_multivariate("x/2")
    with pytest.raises(ValueError):
        parse_multivariate("x^y")
    with pytest.raises(ValueError):
        parse_multivariate("x + z", variables=["x"])


def _random_poly(rng):
    k = rng.randint(1, 3)
    terms = {}
    for _ in range(rng.randint(1, 6)):
        e = tuple(rng.randint(0, 6) for _ in range(k))
        terms[e] = rng.randint(-5, 5)
    terms = {e: c for e, c in terms.items() if c}
    return terms or {tuple([0] * k): 1}


def test_good_prime_confirmed_by_resultant():
    rng = random.Random(8)
    for _ in range(20):
        polys = [_random_poly(rng)]
        g = find_good_prime(polys)
        for proj in g.projections:
            assert cyclotomic_zero_free(proj, g.q)
        # q is the smallest such prime
        for q in sympy.primerange(2, g.q):
            assert not all(cyclotomic_zero_free(proj, q) for proj in g.projections)


@settings(max_examples=300, deadline=None)
@given(st.dictionaries(st.integers(-4, 8), st.integers(-6, 6), min_size=1, max_size=6),
       st.sampled_from([2, 3, 5, 7, 11]))
def test_fold_test_matches_resultant(poly, q):
    poly = {e: c for e, c in poly.items() if c}
    if not poly:
        return
    assert divisible_by_cyclotomic_prime(poly, q) == (not cyclotomic_zero_free(poly, q))
