"""Twisting by characters and augmentation modules; checking on covers."""
from twtorsion import (
    Character, CohomClass, CosetTable, CyclotomicField, Presentation,
    augmentation_rep, char_rep, induce, reidemeister_schreier, restrict, trivial_rep,
)
from twtorsion.torsion import torsion

trefoil = Presentation.parse("a b", ["a b a B A B"])
theta = CohomClass((1, 1))

# alpha: pi -> Z/5 sends both generators to 1.
n = 5
K = CyclotomicField(n)
alpha = Character(n, (1, 1))

# The augmentation module of K[Z/5] splits into the four nontrivial characters,
# so its torsion width is the sum of theirs.
aug = restrict(augmentation_rep(n, K), alpha, trefoil)
whole = torsion(trefoil, theta, aug)
parts = [torsion(trefoil, theta, char_rep(alpha, K, trefoil, j)).width for j in range(1, n)]
print("augmentation width", whole.width, "= sum of", parts)
print(f"bound on the norm: {whole.width}/{aug.dim}")

# The kernel of a character to Z/3 gives an index-3 subgroup.  Its presentation
# comes from Reidemeister-Schreier; torsion upstairs equals torsion of the
# induced representation downstairs.
cover = reidemeister_schreier(trefoil, CosetTable.from_character(trefoil, Character(3, (1, 1))))
sub = cover.presentation
print("cover:", sub.ngens, "generators,", sub.nrels, "relators")
up = torsion(sub, cover.pullback(theta), trivial_rep(sub))
down = torsion(trefoil, theta, induce(trivial_rep(sub), cover))
print("width on cover", up.width, "| width of induced rep", down.width)
