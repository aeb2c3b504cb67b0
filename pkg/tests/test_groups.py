import random

import pytest
import sympy

from oracles import T, fox_abelian, smith_invariants
from twtorsion.groups import (
    Character,
    CohomClass,
    CohomologyError,
    CosetTable,
    CosetTableError,
    Presentation,
    PresentationError,
    enumerate_characters,
    eval_class,
    fox_derivative,
    free_reduce,
    h1_smith,
    parse_word,
    reidemeister_schreier,
)
from twtorsion.groups.abelian import smith_normal_form

TREFOIL = Presentation.parse("a b", ["a b a B A B"])


def test_free_reduce_examples():
    assert free_reduce((1, -1, 2)) == (2,)
    assert free_reduce(()) == ()
    assert free_reduce((1, 2, -2, 1)) == (1, 1)


def test_parse_word_formats():
    gens = ("a", "b")
    assert parse_word("a b A B", gens) == (1, 2, -1, -2)
    assert parse_word("abAB", gens) == (1, 2, -1, -2)
    assert parse_word("a^2 b^-1", gens) == (1, 1, -2)
    assert parse_word("1", gens) == ()


def test_parse_word_reports_column():
    with pytest.raises(PresentationError) as err:
        parse_word("a b c", ("a", "b"))
    assert err.value.column == 4


def test_presentation_rejects_uppercase_generator():
    with pytest.raises(PresentationError):
        Presentation.parse("A b", [])


def test_relators_kept_unreduced():
    p = Presentation.parse("a", ["a A a"])
    assert p.relators == ((1, -1, 1),)


def test_eval_class_examples():
    th = CohomClass((1, 1))
    assert eval_class(th, parse_word("a b a B", ("a", "b"))) == 2
    assert eval_class(th, TREFOIL.relators[0]) == 0
    assert eval_class(CohomClass((2,)), (-1,)) == -2


def test_cohom_class_names_offending_relator():
    with pytest.raises(CohomologyError) as err:
        CohomClass((1, 2)).check(TREFOIL)
    assert err.value.relator == 0
    assert "a b a B A B" in str(err.value)


def test_fox_derivative_rules():
    assert fox_derivative((1, 2), 0) == {(): 1}
    assert fox_derivative((-1,), 0) == {(-1,): -1}


def test_fox_trefoil_matches_hand_computation():
    r = TREFOIL.relators[0]
    d = fox_derivative(r, 0)
    assert d == {(): 1, (1, 2): 1, (1, 2, 1, -2, -1): -1}
    # abelianised at a, b -> t
    ab = sum(c * T ** sum(1 if x > 0 else -1 for x in w) for w, c in d.items())
    assert sympy.expand(ab - (1 - T + T**2)) == 0
    assert sympy.expand(ab - fox_abelian("abaBAB", "a", {"a": T, "b": T})) == 0


def test_h1_examples():
    assert (h1_smith(TREFOIL).rank, h1_smith(TREFOIL).torsion) == (1, ())
    z5 = h1_smith(Presentation.parse("a", ["a^5"]))
    assert (z5.rank, z5.torsion) == (0, (5,))
    free = h1_smith(Presentation.parse("a b", []))
    assert (free.rank, free.torsion) == (2, ())


def test_smith_form_matches_sympy_and_transforms():
    rng = random.Random(5)
    for _ in range(40):
        m, n = rng.randint(1, 4), rng.randint(1, 4)
        a = [[rng.randint(-6, 6) for _ in range(n)] for _ in range(m)]
        s, u, v = smith_normal_form(a)
        assert (sympy.Matrix(u) * sympy.Matrix(a) * sympy.Matrix(v)).tolist() == s
        assert abs(sympy.Matrix(u).det()) == 1 and abs(sympy.Matrix(v).det()) == 1
        diag = [s[i][i] for i in range(min(m, n)) if s[i][i]]
        assert all(diag[i + 1] % diag[i] == 0 for i in range(len(diag) - 1))
        if any(any(r) for r in a):
            assert diag == smith_invariants(a)


def test_enumerate_characters_examples():
    chars = enumerate_characters(TREFOIL, 5)
    assert len(chars) == 5
    assert all(c.values[0] == c.values[1] for c in chars)
    assert [c.values for c in enumerate_characters(Presentation.parse("a", ["a a"]), 3)] == [(0,)]
    assert len(enumerate_characters(Presentation.parse("a b", []), 2)) == 4


def test_enumerated_characters_are_homomorphisms():
    p = Presentation.parse("a b c", ["a b A B", "c^6", "a^2 c^3"])
    for n in (2, 3, 4, 6):
        chars = enumerate_characters(p, n)
        assert len(set(chars)) == len(chars)
        for c in chars:
            c.check(p)
        brute = {vals for vals in __import__("itertools").product(range(n), repeat=3)
                 if all(Character(n, vals)(r) == 0 for r in p.relators)}
        assert {c.values for c in chars} == brute


def test_character_check_rejects_non_homomorphism():
    with pytest.raises(ValueError):
        Character(3, (1, 2)).check(TREFOIL)


# -- cosets and Reidemeister-Schreier ---------------------------------------------
def test_index_one_round_trip():
    sp = reidemeister_schreier(TREFOIL, CosetTable.trivial(TREFOIL))
    assert sp.presentation.ngens == 2 and sp.presentation.nrels == 1
    assert sp.presentation.relators == TREFOIL.relators
    assert sp.pullback(CohomClass((1, 1))).values == (1, 1)


def test_three_cycle_on_free_cyclic_group():
    p = Presentation.parse("a", [])
    table = CosetTable(3, ((1, 2, 0),))
    sp = reidemeister_schreier(p, table)
    assert sp.presentation.ngens == 1
    assert sp.schreier_words == ((1, 1, 1),)
    assert sp.pullback(CohomClass((2,))).values == (6,)


def test_trefoil_index_two_cover_counts():
    table = CosetTable.from_character(TREFOIL, Character(2, (1, 1)))
    sp = reidemeister_schreier(TREFOIL, table)
    assert (sp.presentation.ngens, sp.presentation.nrels) == (3, 2)


def test_schreier_generator_count_formula():
    for n in (2, 3, 4, 5):
        sp = reidemeister_schreier(TREFOIL, CosetTable.from_character(TREFOIL, Character(n, (1, 1))))
        assert sp.presentation.ngens == n * (2 - 1) + 1
        assert sp.presentation.nrels == n


def test_invalid_coset_table_rejected():
    with pytest.raises(CosetTableError):
        CosetTable(2, ((0, 0),))
    bad = CosetTable(2, ((1, 0), (0, 1)))
    with pytest.raises(CosetTableError):
        reidemeister_schreier(TREFOIL, bad)


def test_cover_homology_matches_independent_smith_form():
    p = Presentation.parse("a b", ["a b a B A B"])
    for n in (2, 3, 4):
        sp = reidemeister_schreier(p, CosetTable.from_character(p, Character(n, (1, 1))))
        sub = sp.presentation
        h = h1_smith(sub)
        rows = sub.abelianized()
        facs = smith_invariants(rows)
        assert h.rank == sub.ngens - len(facs)
        assert h.torsion == tuple(d for d in facs if d > 1)


def test_rewritten_relators_evaluate_to_original_words():
    sp = reidemeister_schreier(TREFOIL, CosetTable.from_character(TREFOIL, Character(3, (1, 1))))
    for k, r in enumerate(sp.presentation.relators):
        original = sum((sp.schreier_words[abs(x) - 1] if x > 0 else
                        tuple(-y for y in reversed(sp.schreier_words[-x - 1])) for x in r), ())
        coset = k % sp.index
        conj = sp.transversal[coset] + TREFOIL.relators[0] + tuple(-y for y in reversed(sp.transversal[coset]))
        assert free_reduce(original) == free_reduce(conj)
