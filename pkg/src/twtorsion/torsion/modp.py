"""Compare torsion widths in characteristic zero with those over F_p."""
from __future__ import annotations

from dataclasses import dataclass

import sympy

from ..algebra.fields import Q, is_prime
from ..algebra.laurent import LaurentPoly, reduce_mod_p
from ..groups.presentation import CohomClass, Presentation
from ..representations import Representation, RepresentationError
from .engine import TorsionValue, WorkCounter, torsion


@dataclass(frozen=True)
class ModpRow:
    prime: int
    bad: bool
    reduced_width: int | None  # width of (x mod p)/(y mod p); None if y vanishes mod p
    direct_width: int          # width of tau recomputed over F_p
    agrees: bool               # direct_width == characteristic-zero width


@dataclass(frozen=True)
class ModpTable:
    char0: TorsionValue
    width: int
    bad_primes: frozenset
    rows: tuple[ModpRow, ...]

    def stable_outside_bad(self) -> bool:
        return all(r.agrees for r in self.rows if not r.bad)


def extremal_coefficients(x: LaurentPoly) -> tuple[int, ...]:
    if x.is_zero():
        return ()
    f = x.field
    ends = (x.trailing, x.leading)
    if not all(f.is_rational_integer(c) for c in ends):
        raise ValueError("extremal coefficients are not rational integers")
    return tuple(int(c[0]) for c in ends)


def bad_primes(*polys: LaurentPoly) -> frozenset:
    """Primes dividing a top or bottom coefficient of any of ``polys``."""
    out = set()
    for poly in polys:
        for c in extremal_coefficients(poly):
            out.update(sympy.primefactors(c))
    return frozenset(out)


def modp_compare(p: Presentation, theta: CohomClass, rep: Representation, primes,
                 counter: WorkCounter | None = None, **kw) -> ModpTable:
    """Width of tau over Q versus over F_q for each q in ``primes``.

    ``rep`` must carry an integral witness; the characteristic-zero value is
    computed over Q from the integer matrices.
    """
    if not rep.integral:
        raise RepresentationError("mod-p comparison needs an integral representation")
    base = rep if rep.field == Q else rep.with_field(Q)
    tau = torsion(p, theta, base, counter=counter, **kw)
    bad = bad_primes(tau.numerator, tau.denominator) if tau.acyclic else frozenset()
    rows = []
    for q in primes:
        if not is_prime(q):
            raise ValueError(f"{q} is not prime")
        if tau.acyclic:
            xq, yq = reduce_mod_p(tau.numerator, q), reduce_mod_p(tau.denominator, q)
            reduced = None if yq.is_zero() else (0 if xq.is_zero() else xq.width() - yq.width())
        else:
            reduced = 0
        direct = torsion(p, theta, rep.reduce_mod(q), counter=counter, **kw).width
        rows.append(ModpRow(q, q in bad, reduced, direct, direct == tau.width))
    return ModpTable(tau, tau.width, bad, tuple(rows))

