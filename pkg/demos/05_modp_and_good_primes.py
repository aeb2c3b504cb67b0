"""Reducing torsion mod p, and choosing a prime that avoids cyclotomic zeros."""
import sympy

from twtorsion import Character, CohomClass, Presentation, augmentation_rep, restrict, trivial_rep
from twtorsion.torsion import find_good_prime, modp_compare, parse_multivariate

theta = CohomClass((1, 1))

# Integral augmentation module on the trefoil: all extremal coefficients are
# units, so every prime is good and the width never drops.
trefoil = Presentation.parse("a b", ["a b a B A B"])
v = restrict(augmentation_rep(3), Character(3, (1, 1)), trefoil)
table = modp_compare(trefoil, theta, v, list(sympy.primerange(2, 30)))
print("char 0 width", table.width, "bad primes", sorted(table.bad_primes))

# Here the numerator t^-3 + 2 t^-2 has top coefficient 2, and mod 2 the width drops.
p = Presentation.parse("a b", ["B A A b b A b b"])
table = modp_compare(p, theta, trivial_rep(p), [2, 3, 5])
print("char 0 width", table.width, "bad primes", sorted(table.bad_primes))
for row in table.rows:
    print(f"  p={row.prime} width={row.direct_width} agrees={row.agrees}")

# Project several-variable polynomials to one variable and pick q.
poly, names = parse_multivariate("x - y")
g = find_good_prime([poly])
print("x - y: psi", g.psi, "q", g.q, "alpha", g.alpha)
phi3, _ = parse_multivariate("t^2 + t + 1")
print("Phi_3: q =", find_good_prime([phi3]).q)
