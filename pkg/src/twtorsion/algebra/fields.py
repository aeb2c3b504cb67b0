"""Exact coefficient fields: prime fields F_q and cyclotomic fields Q(zeta_n).

A field object is a small immutable descriptor that knows how to do arithmetic
on *raw* values.  Raw values are plain ints for ``PrimeField`` and tuples of
``Fraction`` (coefficients on the power basis 1, z, ..., z^(phi-1)) for
``CyclotomicField``.  Polynomials and matrices store raw values directly;
``FieldScalar`` is the user-facing wrapper with operator overloading.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd

import sympy


class FieldMismatch(ValueError):
    """Operands live over different fields."""


def is_prime(q: int) -> bool:
    return q >= 2 and bool(sympy.isprime(q))


@dataclass(frozen=True)
class PrimeField:
    q: int

    kind = "prime"

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValueError(f"F_q needs a prime modulus, got {self.q}")

    # -- descriptors -----------------------------------------------------
    @property
    def name(self) -> str:
        return f"F{self.q}"

    @property
    def characteristic(self) -> int:
        return self.q

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    # -- raw arithmetic --------------------------------------------------
    def add(self, a, b):
        return (a + b) % self.q

    def sub(self, a, b):
        return (a - b) % self.q

    def neg(self, a):
        return (-a) % self.q

    def mul(self, a, b):
        return (a * b) % self.q

    def inv(self, a):
        if a % self.q == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        return pow(a, -1, self.q)

    def is_zero(self, a) -> bool:
        return a == 0

    def from_int(self, k: int):
        return k % self.q

    def from_fraction(self, x: Fraction):
        x = Fraction(x)
        return self.mul(self.from_int(x.numerator), self.inv(self.from_int(x.denominator)))

    def convolve(self, a, b):
        """Coefficient lists of a product of two polynomials."""
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        q = self.q
        return [c % q for c in out]

    def pow(self, a, k: int):
        if k < 0:
            return pow(self.inv(a), -k, self.q)
        return pow(a, k, self.q)

    def root_of_unity(self, n: int):
        """Smallest residue of multiplicative order exactly ``n``."""
        if n < 1 or (self.q - 1) % n:
            raise ValueError(f"{self.name} has no element of order {n}")
        factors = sympy.primefactors(n)
        for r in range(1, self.q):
            if pow(r, n, self.q) == 1 and all(pow(r, n // p, self.q) != 1 for p in factors):
                return r
        raise AssertionError("unreachable: cyclic group of units")

    def format(self, a) -> str:
        return str(a)

    def parse(self, text: str):
        return self.from_fraction(Fraction(text.strip()))

    def element(self, x) -> "FieldScalar":
        return FieldScalar(self, self.coerce(x))

    def coerce(self, x):
        if isinstance(x, FieldScalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field.name} vs {self.name}")
            return x.value
        if isinstance(x, int):
            return self.from_int(x)
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def is_rational_integer(self, a) -> bool:
        return False

    def __str__(self):
        return self.name


@dataclass(frozen=True)
class CyclotomicField:
    """Q(zeta_n) realised as Q[z]/(Phi_n(z)).

    ``CyclotomicField(1)`` is the rational field Q.
    """

    n: int

    kind = "cyclotomic"

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("cyclotomic order must be positive")

    @cached_property
    def modulus(self) -> tuple[int, ...]:
        """Coefficients of Phi_n, lowest degree first."""
        z = sympy.Symbol("z")
        poly = sympy.Poly(sympy.cyclotomic_poly(self.n, z), z)
        return tuple(int(c) for c in reversed(poly.all_coeffs()))

    @cached_property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @cached_property
    def _powers(self) -> tuple[tuple[int, ...], ...]:
        # z^k reduced mod Phi_n, for 0 <= k < n
        phi = self.degree
        mod = self.modulus
        cur = [0] * phi
        cur[0] = 1
        out = []
        for _ in range(self.n):
            out.append(tuple(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                cur = [c - top * m for c, m in zip(cur, mod)]
        return tuple(out)

    @property
    def name(self) -> str:
        return "Q" if self.n == 1 else f"Q(zeta_{self.n})"

    @property
    def characteristic(self) -> int:
        return 0

    @cached_property
    def zero(self):
        return (Fraction(0),) * self.degree

    @cached_property
    def one(self):
        return (Fraction(1),) + (Fraction(0),) * (self.degree - 1)

    def zeta(self, k: int = 1):
        return tuple(Fraction(c) for c in self._powers[k % self.n])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x for x in a)

    def _reduce(self, coeffs):
        phi = self.degree
        out = list(coeffs[:phi]) + [Fraction(0)] * max(0, phi - len(coeffs))
        for k in range(phi, len(coeffs)):
            c = coeffs[k]
            if c:
                for i, p in enumerate(self._powers[k % self.n]):
                    if p:
                        out[i] += c * p
        return tuple(out)

    def mul(self, a, b):
        ia = [(i, x) for i, x in enumerate(a) if x]
        if not ia:
            return self.zero
        ib = [(j, y) for j, y in enumerate(b) if y]
        if not ib:
            return self.zero
        if len(ia) == 1 and ia[0][0] == 0:
            x = ia[0][1]
            return tuple(x * y for y in b)
        if len(ib) == 1 and ib[0][0] == 0:
            y = ib[0][1]
            return tuple(x * y for x in a)
        prod = [Fraction(0)] * (2 * self.degree - 1)
        for i, x in ia:
            for j, y in ib:
                prod[i + j] += x * y
        return self._reduce(prod)

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError(f"0 has no inverse in {self.name}")
        nz = [i for i, x in enumerate(a) if x]
        if nz == [0]:
            return (1 / a[0],) + a[1:]
        # extended Euclid in Q[z] against Phi_n
        _, s, _ = _qpoly_xgcd(list(a), [Fraction(c) for c in self.modulus])
        return self._reduce(s)

    def is_zero(self, a) -> bool:
        return not any(a)

    def from_int(self, k: int):
        return (Fraction(k),) + (Fraction(0),) * (self.degree - 1)

    def from_fraction(self, x):
        return (Fraction(x),) + (Fraction(0),) * (self.degree - 1)

    def from_coefficients(self, coeffs):
        """Element sum_i coeffs[i] z^i; any length, reduced mod Phi_n."""
        return self._reduce([Fraction(c) for c in coeffs])

    def convolve(self, a, b):
        out = [self.zero] * (len(a) + len(b) - 1)
        add, mul, is_zero = self.add, self.mul, self.is_zero
        for i, x in enumerate(a):
            if is_zero(x):
                continue
            for j, y in enumerate(b):
                if not is_zero(y):
                    out[i + j] = add(out[i + j], mul(x, y))
        return out

    def pow(self, a, k: int):
        if k < 0:
            a, k = self.inv(a), -k
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def root_of_unity(self, n: int):
        if n < 1 or self.n % n:
            raise ValueError(f"{self.name} has no primitive {n}-th root of unity in its z-powers")
        return self.zeta(self.n // n)

    def galois(self, a, j: int):
        """Image of ``a`` under the automorphism z -> z^j."""
        if gcd(j, self.n) != 1:
            raise ValueError(f"z -> z^{j} is not an automorphism of {self.name}")
        out = [Fraction(0)] * self.degree
        for i, c in enumerate(a):
            if c:
                for k, p in enumerate(self._powers[(i * j) % self.n]):
                    if p:
                        out[k] += c * p
        return tuple(out)

    def is_rational_integer(self, a) -> bool:
        return all(x == 0 for x in a[1:]) and a[0].denominator == 1

    def format(self, a) -> str:
        if not any(a[1:]):
            return str(a[0])
        return "(" + ",".join(str(x) for x in a) + ")"

    def parse(self, text: str):
        text = text.strip()
        if text.startswith("("):
            parts = text.strip("()").split(",")
            return self.from_coefficients(Fraction(p) for p in parts)
        return self.from_fraction(Fraction(text))

    def element(self, x) -> "FieldScalar":
        return FieldScalar(self, self.coerce(x))

    def coerce(self, x):
        if isinstance(x, FieldScalar):
            if x.field != self:
                raise FieldMismatch(f"{x.field.name} vs {self.name}")
            return x.value
        if isinstance(x, (int, Fraction)):
            return self.from_fraction(x)
        raise TypeError(f"cannot coerce {x!r} into {self.name}")

    def __str__(self):
        return self.name


Field = PrimeField | CyclotomicField

Q = CyclotomicField(1)

_FIELD_RE = re.compile(
    r"^(?:(?P<q>Q)|Q\(zeta_?(?P<n>\d+)\)|(?:F_?|GF\()(?P<p>\d+)\)?)$"
)


def parse_field(text: str) -> Field:
    """Parse ``Q``, ``Q(zeta_5)``, ``F7``, ``F_7`` or ``GF(7)``."""
    m = _FIELD_RE.match(text.strip())
    if not m:
        raise ValueError(f"unrecognised field {text!r}")
    if m.group("q"):
        return Q
    if m.group("n"):
        return CyclotomicField(int(m.group("n")))
    return PrimeField(int(m.group("p")))


def _qpoly_trim(a):
    while a and a[-1] == 0:
        a.pop()
    return a


def _qpoly_divmod(a, b):
    a = _qpoly_trim(list(a))
    b = _qpoly_trim(list(b))
    if len(a) < len(b):
        return [], a
    quot = [Fraction(0)] * (len(a) - len(b) + 1)
    lead = b[-1]
    while len(a) >= len(b) and a:
        c = a[-1] / lead
        shift = len(a) - len(b)
        quot[shift] = c
        for i, y in enumerate(b):
            a[shift + i] -= c * y
        _qpoly_trim(a)
    return quot, a


def _qpoly_mul(a, b):
    if not a or not b:
        return []
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _qpoly_sub(a, b):
    n = max(len(a), len(b))
    a = list(a) + [Fraction(0)] * (n - len(a))
    b = list(b) + [Fraction(0)] * (n - len(b))
    return _qpoly_trim([x - y for x, y in zip(a, b)])


def _qpoly_xgcd(a, b):
    """Return (g, s, t) with s*a + t*b = g, g monic."""
    r0, r1 = _qpoly_trim(list(a)), _qpoly_trim(list(b))
    s0, s1 = [Fraction(1)], []
    t0, t1 = [], [Fraction(1)]
    while r1:
        q, r = _qpoly_divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, _qpoly_sub(s0, _qpoly_mul(q, s1))
        t0, t1 = t1, _qpoly_sub(t0, _qpoly_mul(q, t1))
    lead = r0[-1]
    return [c / lead for c in r0], [c / lead for c in s0], [c / lead for c in t0]


class FieldScalar:
    """An element of F_q or Q(zeta_n)."""

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _other(self, other):
        return self.field.coerce(other)

    def __add__(self, other):
        return FieldScalar(self.field, self.field.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return FieldScalar(self.field, self.field.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return FieldScalar(self.field, self.field.sub(self._other(other), self.value))

    def __mul__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __truediv__(self, other):
        return FieldScalar(self.field, self.field.mul(self.value, self.field.inv(self._other(other))))

    def __rtruediv__(self, other):
        return FieldScalar(self.field, self.field.mul(self._other(other), self.field.inv(self.value)))

    def __neg__(self):
        return FieldScalar(self.field, self.field.neg(self.value))

    def __pow__(self, k: int):
        return FieldScalar(self.field, self.field.pow(self.value, k))

    def inverse(self) -> "FieldScalar":
        return FieldScalar(self.field, self.field.inv(self.value))

    def is_zero(self) -> bool:
        return self.field.is_zero(self.value)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        try:
            return self.value == self._other(other)
        except (TypeError, FieldMismatch):
            return NotImplemented

    def __hash__(self):
        return hash((self.field, self.value))

    def __repr__(self):
        return f"{self.field.name}:{self.field.format(self.value)}"

    def __str__(self):
        return self.field.format(self.value)
