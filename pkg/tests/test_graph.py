import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from twtorsion.algebra import CyclotomicField, LaurentPoly, PrimeField, Q
from twtorsion.algebra import matrix as mx
from twtorsion.graph import (
    GraphError,
    GraphStructure,
    PreconditionError,
    Vertex,
    block_factor,
    en_norm,
    graph_torsion,
    random_graph_structure,
    reversed_charpoly,
    seifert_nonvanishing,
    substitute_power,
    validate_graph,
    verify_detection,
)
from twtorsion.groups import Character, CohomClass, Presentation
from twtorsion.representations import CyclicRepresentation, augmentation_rep, restrict, trivial_rep
from twtorsion.torsion import torsion

K3 = CyclotomicField(3)


def block(name="u", side="+", chi=-1, boundary=3, m=1, alpha=1):
    return Vertex(name, side, chi, boundary, m, alpha)


# -- validation -------------------------------------------------------------------
def test_pair_of_pants_block_is_valid():
    g = GraphStructure((block(),))
    assert validate_graph(g) is g
    assert g.external_slots() == (("u", 0), ("u", 1), ("u", 2))


def test_same_side_edge_rejected():
    g = GraphStructure((block("u"), block("v")), ((("u", 0), ("v", 0)),))
    with pytest.raises(GraphError, match="bipartite"):
        validate_graph(g)


def test_zero_euler_characteristic_rejected():
    with pytest.raises(GraphError, match="negative Euler"):
        validate_graph(GraphStructure((block(chi=0, boundary=2),)))


@pytest.mark.parametrize("edges, msg", [
    (((("u", 3), ("v", 0)),), "no boundary slot"),
    (((("u", 0), ("v", 0)), (("u", 0), ("v", 1))), "already used"),
    (((("u", 0), ("w", 0)),), "unknown vertex"),
])
def test_slot_errors(edges, msg):
    g = GraphStructure((block("u"), block("v", side="-")), edges)
    with pytest.raises(GraphError, match=msg):
        validate_graph(g)


def test_impossible_surface_rejected():
    with pytest.raises(GraphError):
        validate_graph(GraphStructure((block(chi=-1, boundary=2),)))
    with pytest.raises(GraphError):
        validate_graph(GraphStructure((block(side="*"),)))
    with pytest.raises(GraphError):
        validate_graph(GraphStructure(()))


def test_genus_from_chi_and_boundary():
    assert block(chi=-1, boundary=3).genus == 0
    assert block(chi=-2, boundary=0).genus == 2


# -- characters and norms -----------------------------------------------------------
def test_seifert_nonvanishing_examples():
    g = GraphStructure((block(alpha=1), block("v", "-", alpha=1)))
    assert seifert_nonvanishing(g, 5)
    assert not seifert_nonvanishing(g.with_alpha({"v": 0}), 5)
    assert not seifert_nonvanishing(g.with_alpha({"v": 5}), 5)


def test_en_norm_examples():
    assert en_norm(GraphStructure((block(),))) == 1
    assert en_norm(GraphStructure((block(m=2), block("v", "-", m=3)))) == 5
    assert en_norm(GraphStructure((block(m=0), block("v", "-", m=0)))) == 0
    assert en_norm(GraphStructure((block(chi=-2, boundary=2, m=-3),))) == 6


# -- factors -------------------------------------------------------------------------
def test_augmentation_three_factor():
    w = augmentation_rep(3, K3)
    f = block_factor(w, 1, 1)
    assert f == LaurentPoly.from_ints(K3, [1, 1, 1])
    r = graph_torsion(GraphStructure((block(),)), w)
    assert r.width == 2 and r.verdict is True


def test_one_dimensional_factor_with_m_two():
    w = CyclicRepresentation(3, K3, ((K3.zeta(),),))
    f = block_factor(w, 2, 1)
    assert f == LaurentPoly.from_dict(K3, {0: K3.one, 2: K3.neg(K3.zeta())})
    assert f.width() == 2


def test_zero_pairing_block_contributes_nothing():
    w = augmentation_rep(5, CyclotomicField(5))
    f = block_factor(w, 0, 2)
    assert f.width() == 0 and not f.is_zero()
    g = GraphStructure((block(m=0), block("v", "-", m=2)))
    assert graph_torsion(g, w).width == 4 * 2


def test_substitute_power_negative():
    p = LaurentPoly.from_ints(Q, [1, 2])
    assert substitute_power(p, -3) == LaurentPoly.from_dict(Q, {0: Q.one, -3: Q.from_int(2)})


def test_reported_exponent_and_value():
    w = augmentation_rep(3, K3)
    r = graph_torsion(GraphStructure((block(chi=-2, boundary=2),)), w)
    fac = r.factors[0]
    assert (fac.chi, fac.exponent) == (-2, 2)
    assert r.value() == LaurentPoly.from_ints(K3, [1, 1, 1]) ** 2


def test_trivial_rep_has_vanishing_factor():
    w = CyclicRepresentation(3, Q, ((Q.one,),))
    r = graph_torsion(GraphStructure((block(),)), w)
    assert r.vanishing == () and r.width == 1 and r.verdict is None
    r = graph_torsion(GraphStructure((block(m=0),)), w)
    assert r.vanishing == ("u",) and r.width is None and r.verdict is None
    with pytest.raises(PreconditionError):
        r.value()
    with pytest.raises(PreconditionError):
        verify_detection(GraphStructure((block(),)), w)


def test_zero_fibre_value_is_precondition_failure():
    g = GraphStructure((block(alpha=0),))
    with pytest.raises(PreconditionError, match="vanishes"):
        verify_detection(g, augmentation_rep(3, K3))


def test_two_block_fixture():
    g = GraphStructure((block("u", "+", -1, 3, 2, 1), block("v", "-", -2, 2, -1, 2)),
                       ((("u", 0), ("v", 0)), (("u", 1), ("v", 1))))
    w = augmentation_rep(5, PrimeField(11))
    r = graph_torsion(g, w)
    assert (r.width, r.norm, r.verdict) == (16, 4, True)
    assert verify_detection(g, w)


# -- identities -----------------------------------------------------------------------
def _random_invertible(rng, f, d):
    while True:
        a = mx.from_ints(f, [[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)])
        if not f.is_zero(mx.det(f, a)):
            return a


@pytest.mark.parametrize("field", [PrimeField(7), K3, Q])
def test_factor_width_is_dim_times_m(field):
    rng = random.Random(13)
    for _ in range(30):
        d = rng.randint(1, 4)
        a = _random_invertible(rng, field, d)
        m = rng.randint(-5, 5)
        p = substitute_power(reversed_charpoly(field, a), m)
        assert p.width() == d * abs(m)


@pytest.mark.parametrize("n", [3, 5, 7])
def test_augmentation_vs_character_sum(n):
    K = CyclotomicField(n)
    rng = random.Random(n)
    for _ in range(10):
        g = random_graph_structure(rng, n)
        whole = graph_torsion(g, augmentation_rep(n, K)).width
        parts = sum(graph_torsion(g, CyclicRepresentation(n, K, ((K.zeta(j),),))).width for j in range(1, n))
        assert whole == parts


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 10**6), st.sampled_from([2, 3, 5]))
def test_random_structures_detect(seed, n):
    g = random_graph_structure(random.Random(seed), n)
    assert verify_detection(g, augmentation_rep(n, CyclotomicField(n)))


# -- agreement with the presentation engine ------------------------------------------------
def test_pair_of_pants_times_circle_matches_engine():
    p = Presentation.parse("a b t", ["a t A T", "b t B T"])
    for n, m in ((3, 1), (5, 2), (3, -1)):
        K = CyclotomicField(n)
        v = restrict(augmentation_rep(n, K), Character(n, (0, 0, 1)), p)
        eng = torsion(p, CohomClass((0, 0, m)), v).width
        gr = graph_torsion(GraphStructure((block(m=m, alpha=1),)), augmentation_rep(n, K)).width
        assert eng == gr == (n - 1) * abs(m)


def test_genus_two_times_circle_matches_engine():
    p = Presentation.parse("a b c d t", ["a t A T", "b t B T", "c t C T", "d t D T", "a b A B c d C D"])
    v = restrict(augmentation_rep(3, K3), Character(3, (0, 0, 0, 0, 1)), p)
    eng = torsion(p, CohomClass((0, 0, 0, 0, 1)), v, dual={i: (i + 1,) for i in range(4)} | {4: (5,)})
    gr = graph_torsion(GraphStructure((block(chi=-2, boundary=0),)), augmentation_rep(3, K3))
    assert eng.width == gr.width == 4


def test_trivial_rep_on_pair_of_pants_times_circle():
    p = Presentation.parse("a b t", ["a t A T", "b t B T"])
    assert torsion(p, CohomClass((0, 0, 1)), trivial_rep(p)).width == 1
