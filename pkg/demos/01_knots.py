"""Torsion of knot groups and the genus bound they give."""
from twtorsion import CohomClass, Presentation, trivial_rep
from twtorsion.torsion import bound_report, torsion

# Trefoil: <a, b | aba = bab>.  Uppercase letters are inverses.
trefoil = Presentation.parse("a b", ["a b a B A B"])
theta = CohomClass((1, 1))           # abelianization onto Z

tau = torsion(trefoil, theta, trivial_rep(trefoil))
num, den = tau.normalized()
print("trefoil tau =", num, "/", den)  # Alexander polynomial over t - 1
print("width:", tau.width)

# The width bounds the Thurston norm from below; for a knot the norm is 2g - 1.
report = bound_report(tau, 1, reference_norm=1)
print("lower bound", report.bound, "detected:", report.detected)

# Figure-eight knot, same story with Delta = t^2 - 3t + 1.
fig8 = Presentation.parse("x y", ["X y x Y x y X Y x Y"])
tau8 = torsion(fig8, theta, trivial_rep(fig8))
print("figure-eight tau =", *tau8.normalized(), "width", tau8.width)

# The unknot exterior has free fundamental group on one generator.
unknot = Presentation.parse("a", [])
print("unknot width:", torsion(unknot, CohomClass((1,)), trivial_rep(unknot)).width)
