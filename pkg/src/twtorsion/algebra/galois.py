from __future__ import annotations

from dataclasses import dataclass

from .fields import CyclotomicField, FieldScalar
from .laurent import LaurentPoly
from .matrix import PolyMatrix


@dataclass(frozen=True)
class GaloisMap:
    """The ring automorphism of Q(zeta_n) fixing Q with zeta -> zeta^j."""

    j: int
    n: int

    @property
    def field(self) -> CyclotomicField:
        return CyclotomicField(self.n)

    def raw(self, a):
        return self.field.galois(a, self.j)

    def __call__(self, x):
        f = self.field
        if isinstance(x, FieldScalar):
            if x.field != f:
                raise ValueError(f"expected an element of {f.name}")
            return FieldScalar(f, self.raw(x.value))
        if isinstance(x, LaurentPoly):
            return x.map_coefficients(self.raw, f)
        if isinstance(x, PolyMatrix):
            return x.map_entries(self)
        if isinstance(x, tuple) and x and isinstance(x[0], tuple):
            return tuple(tuple(self.raw(c) for c in row) for row in x)
        return self.raw(x)


def cyclotomic_embed(j: int, n: int) -> GaloisMap:
    """Galois substitution zeta_n -> zeta_n^j on Q(zeta_n).

    ``j`` must be a unit mod ``n``; in particular ``j = 0 mod n`` is refused
    for ``n > 1``.
    """
    from math import gcd

    if n < 1:
        raise ValueError("n must be positive")
    if gcd(j, n) != 1:
        raise ValueError(f"zeta -> zeta^{j} is not a ring automorphism of Q(zeta_{n})")
    return GaloisMap(j % n if n > 1 else 1, n)
