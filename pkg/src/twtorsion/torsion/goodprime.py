"""Choose a projection Z^k -> Z and a prime q keeping polynomials off primitive q-th roots of unity.

Multivariable integer Laurent polynomials are dicts ``{exponent tuple: int}``.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from math import gcd

import sympy


class SearchExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class GoodPrime:
    psi: tuple[int, ...]
    q: int
    projections: tuple[dict, ...]  # {exponent: coefficient} of each Psi(p_i)

    @property
    def alpha(self) -> tuple[int, ...]:
        """The character F -> Z/q, Psi reduced mod q."""
        return tuple(v % self.q for v in self.psi)


def project(poly: dict, psi) -> dict:
    """Psi(p): substitute t^(psi . e) for the monomial with exponent e."""
    out: dict = {}
    for e, c in poly.items():
        k = sum(a * b for a, b in zip(psi, e))
        out[k] = out.get(k, 0) + c
    return {k: c for k, c in out.items() if c}


def divisible_by_cyclotomic_prime(poly: dict, q: int) -> bool:
    """True iff Phi_q divides the single-variable Laurent polynomial ``poly``.

    Modulo Phi_q = 1 + t + ... + t^(q-1) we have t^q = 1, so folding the
    exponents mod q gives a vector that is a multiple of (1, ..., 1) exactly
    when Phi_q divides.
    """
    folded = [0] * q
    for e, c in poly.items():
        folded[e % q] += c
    return len(set(folded)) == 1


def primitive_positive_vectors(k: int, max_norm: int):
    """Vectors in Z_{>0}^k with gcd 1, by increasing max-norm, then lexicographically."""
    if k == 0:
        yield ()
        return
    for m in range(1, max_norm + 1):
        for v in itertools.product(range(1, m + 1), repeat=k):
            if max(v) == m and gcd(*v) == 1:
                yield v


def find_good_prime(polys, psi_bound: int = 20, q_bound: int = 10_000) -> GoodPrime:
    """Return (Psi, q) with every Psi(p_i) nonzero and not divisible by Phi_q."""
    polys = [{tuple(e): c for e, c in p.items() if c} for p in polys]
    if not polys:
        raise ValueError("need at least one polynomial")
    if any(not p for p in polys):
        raise ValueError("all polynomials must be nonzero")
    nvars = {len(e) for p in polys for e in p}
    if len(nvars) != 1:
        raise ValueError("polynomials must share one set of variables")
    k = nvars.pop()
    for psi in primitive_positive_vectors(k, psi_bound):
        proj = [project(p, psi) for p in polys]
        if all(proj):
            break
    else:
        raise SearchExhausted(f"no projection with max-norm <= {psi_bound} keeps all polynomials nonzero")
    q = 2
    while q <= q_bound:
        if not any(divisible_by_cyclotomic_prime(p, q) for p in proj):
            return GoodPrime(tuple(psi), q, tuple(proj))
        q = sympy.nextprime(q)
    raise SearchExhausted(f"no prime q <= {q_bound} works for Psi = {psi}")


_TERM_VAR = re.compile(r"[A-Za-z_]\w*")


def parse_multivariate(text: str, variables=None) -> tuple[dict, tuple[str, ...]]:
    """Parse e.g. ``"3*x^2*y^-1 - y + 1"`` into ``{(2, -1): 3, (0, 1): -1, (0, 0): 1}``.

    Variables default to the sorted names that occur.  Coefficients and
    exponents must be integers.
    """
    names = sorted(set(_TERM_VAR.findall(text))) if variables is None else list(variables)
    syms = tuple(sympy.Symbol(n) for n in names)
    local = dict(zip(names, syms))
    try:
        expr = sympy.sympify(text.replace("^", "**"), locals=local)
    except (sympy.SympifyError, SyntaxError, TypeError) as exc:
        raise ValueError(f"cannot parse polynomial {text!r}: {exc}") from None
    stray = expr.free_symbols - set(syms)
    if stray:
        raise ValueError(f"unknown variables {sorted(map(str, stray))}")
    out: dict = {}
    for term in sympy.Add.make_args(sympy.expand(expr)):
        coeff, mono = term.as_coeff_Mul()
        if not coeff.is_Integer:
            raise ValueError(f"coefficient {coeff} is not an integer")
        powers = mono.as_powers_dict() if mono != 1 else {}
        exps = []
        for s in syms:
            e = powers.get(s, 0)
            if not sympy.sympify(e).is_Integer:
                raise ValueError(f"exponent {e} of {s} is not an integer")
            exps.append(int(e))
        extra = set(powers) - set(syms)
        if extra:
            raise ValueError(f"term {term} is not a Laurent monomial")
        key = tuple(exps)
        out[key] = out.get(key, 0) + int(coeff)
    return {e: c for e, c in out.items() if c}, tuple(names)


__all__ = [
    "GoodPrime",
    "SearchExhausted",
    "divisible_by_cyclotomic_prime",
    "find_good_prime",
    "parse_multivariate",
    "primitive_positive_vectors",
    "project",
]
