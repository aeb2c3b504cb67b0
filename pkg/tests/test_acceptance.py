"""End-to-end acceptance checks, one test per criterion.

Each test prints a PASS/FAIL line; the lines are repeated in the terminal
summary under "acceptance criteria".
"""
import random
from pathlib import Path

import sympy

import test_properties as props
from oracles import T, alexander_two_generator, cyclotomic_zero_free, poly_width
from twtorsion.algebra import CyclotomicField, PrimeField
from twtorsion.graph import graph_torsion, en_norm, random_graph_structure, verify_detection
from twtorsion.groups import (
    Character,
    CohomClass,
    CosetTable,
    Presentation,
    enumerate_characters,
    reidemeister_schreier,
)
from twtorsion.io import parse_job
from twtorsion.representations import augmentation_rep, char_rep, induce, restrict, trivial_rep
from twtorsion.torsion import bound_report, find_good_prime, modp_compare, torsion

JOBS = Path(__file__).resolve().parent.parent / "jobs"
TH = CohomClass((1, 1))


def _knot(name):
    job = parse_job((JOBS / name).read_text())
    return job.presentation(), job.cohom_class(), job.reference[0]


def _sympy_numerator(tau):
    num, _ = tau.normalized()
    return sum(int(c[0]) * T ** i for i, c in enumerate(num.coeffs))


def test_criterion_1_trefoil(criterion):
    with criterion(1, "trefoil width 1 with trivial rep, detects genus-1 norm", 1.0):
        p, theta, norm = _knot("trefoil.job")
        tau = torsion(p, theta, trivial_rep(p))
        delta = alexander_two_generator("abaBAB")
        assert sympy.expand(_sympy_numerator(tau) ** 2 - delta.as_expr() ** 2) == 0
        assert tau.width == poly_width(delta) - 1 == 1 == 2 * 1 - 1
        assert bound_report(tau, 1, norm).detected


def test_criterion_2_figure_eight(criterion):
    with criterion(2, "figure-eight width 1 with trivial rep", 1.0):
        p, theta, norm = _knot("figure_eight.job")
        tau = torsion(p, theta, trivial_rep(p))
        assert sympy.expand(_sympy_numerator(tau) ** 2 - (T**2 - 3 * T + 1) ** 2) == 0
        assert tau.width == 1
        assert bound_report(tau, 1, norm).detected


def _three_primes_prime_to(n):
    return [q for q in (2, 3, 5, 7, 11, 13) if n % q][:3]


def test_criterion_3_graph_manifolds_detect(criterion):
    with criterion(3, "200 random graph structures x n in {2,3,5,7} x 4 fields detect", 30.0):
        rng = random.Random(2024)
        structures = [random_graph_structure(rng, 2) for _ in range(200)]
        reps = {n: [augmentation_rep(n, CyclotomicField(n))] +
                   [augmentation_rep(n, PrimeField(q)) for q in _three_primes_prime_to(n)]
                for n in (2, 3, 5, 7)}
        cases = 0
        for g in structures:
            assert len(g.vertices) <= 6
            for n, ws in reps.items():
                gn = g.with_alpha({v.name: rng.randint(1, n - 1) for v in g.vertices})
                for w in ws:
                    assert verify_detection(gn, w)
                    assert graph_torsion(gn, w, check=False).width == w.dim * en_norm(gn)
                    cases += 1
        assert cases == 200 * 4 * 4


def test_criterion_4_augmentation_decomposition(criterion):
    with criterion(4, "augmentation width = sum of character widths (trefoil, figure-eight; n=3,5)", 10.0):
        for name in ("trefoil.job", "figure_eight.job"):
            p, theta, _ = _knot(name)
            for n in (3, 5):
                K = CyclotomicField(n)
                alpha = Character(n, (1, 1))
                whole = torsion(p, theta, restrict(augmentation_rep(n, K), alpha, p)).width
                parts = [torsion(p, theta, char_rep(alpha, K, p, j)).width for j in range(1, n)]
                assert whole == sum(parts)


def _independent_bad_primes(tau):
    out = set()
    for poly in (tau.numerator, tau.denominator):
        coeffs = [int(c[0]) for c in poly.coeffs]
        sp = sympy.Poly(list(reversed(coeffs)), T)
        for c in (sp.LC(), sp.TC()):
            out.update(sympy.factorint(int(c)))
    return frozenset(out)


def test_criterion_5_modp_stability(criterion):
    with criterion(5, "trefoil augmentation widths over F_q match char 0 outside the bad set, q <= 50", 20.0):
        p = Presentation.parse("a b", ["a b a B A B"])
        primes = list(sympy.primerange(2, 51))
        for n in (3, 5):
            v = restrict(augmentation_rep(n), Character(n, (1, 1)), p)
            table = modp_compare(p, TH, v, primes)
            assert table.bad_primes == _independent_bad_primes(table.char0)
            assert [r.prime for r in table.rows] == primes
            for row in table.rows:
                if not row.bad:
                    assert row.direct_width == table.width
                    assert row.reduced_width == table.width


def test_criterion_6_cover_invariance(criterion):
    with criterion(6, "trefoil index-2 and index-3 covers agree with induced representations", 10.0):
        p = Presentation.parse("a b", ["a b a B A B"])
        for n in (2, 3):
            cover = reidemeister_schreier(p, CosetTable.from_character(p, Character(n, (1, 1))))
            sub = cover.presentation
            chars = [c for c in enumerate_characters(sub, 3) if any(c.values)]
            fixtures = [trivial_rep(sub), char_rep(chars[0], CyclotomicField(3), sub)]
            for v in fixtures:
                up = torsion(sub, cover.pullback(TH), v)
                down = torsion(p, TH, induce(v, cover))
                assert up.acyclic and up.width == down.width


def _random_laurent(rng):
    k = rng.randint(1, 3)
    poly = {}
    for _ in range(rng.randint(1, 8)):
        e = tuple(rng.randint(-3, 3) for _ in range(k))
        poly[e] = poly.get(e, 0) + rng.choice([c for c in range(-9, 10) if c])
    poly = {e: c for e, c in poly.items() if c}
    return poly or {(0,) * k: 1}


def test_criterion_7_good_prime(criterion):
    with criterion(7, "find_good_prime on 50 random Laurent polynomials, resultant-confirmed", 10.0):
        rng = random.Random(77)
        for _ in range(50):
            poly = _random_laurent(rng)
            g = find_good_prime([poly])
            (proj,) = g.projections
            assert proj
            assert cyclotomic_zero_free(proj, g.q)


PROPERTY_SUITES = [
    props.test_fox_fundamental_identity,
    props.test_twisted_hom_is_multiplicative,
    props.test_det_matches_cofactor_f5,
    props.test_det_matches_cofactor_q_zeta3,
    props.test_scalar_det_matches_cofactor_q_zeta3,
    props.test_prime_field_axioms,
    props.test_cyclotomic_field_axioms,
    props.test_width_is_additive,
]


def test_criterion_8_property_suites(criterion):
    with criterion(8, "property suites, 1000 randomized cases each", 600.0):
        for suite in PROPERTY_SUITES:
            assert suite.hypothesis.inner_test  # a hypothesis-driven test
            suite()
