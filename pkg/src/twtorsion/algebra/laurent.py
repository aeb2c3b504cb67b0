"""Laurent polynomials K[t, 1/t], rational functions K(t) and the width function."""
from __future__ import annotations

from fractions import Fraction

from .fields import CyclotomicField, Field, FieldMismatch, FieldScalar, PrimeField


class LaurentPoly:
    """Dense Laurent polynomial ``sum_i coeffs[i] * t^(low + i)``.

    Canonical form: the first and last stored coefficients are nonzero; the
    zero polynomial has ``coeffs == ()`` and ``low == 0``.  Instances are
    immutable.
    """

    __slots__ = ("field", "low", "coeffs", "_hash")

    def __init__(self, field: Field, coeffs=(), low: int = 0):
        coeffs = list(coeffs)
        is_zero = field.is_zero
        start = 0
        while start < len(coeffs) and is_zero(coeffs[start]):
            start += 1
        end = len(coeffs)
        while end > start and is_zero(coeffs[end - 1]):
            end -= 1
        self.field = field
        self.coeffs = tuple(coeffs[start:end])
        self.low = low + start if self.coeffs else 0
        self._hash = None

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, field: Field) -> "LaurentPoly":
        return cls(field)

    @classmethod
    def one(cls, field: Field) -> "LaurentPoly":
        return cls(field, [field.one])

    @classmethod
    def monomial(cls, field: Field, exponent: int, coeff=None) -> "LaurentPoly":
        return cls(field, [field.one if coeff is None else coeff], exponent)

    @classmethod
    def from_dict(cls, field: Field, terms: dict) -> "LaurentPoly":
        """Build from ``{exponent: coefficient}``; coefficients may be ints,
        Fractions, FieldScalars or raw values."""
        if not terms:
            return cls(field)
        lo, hi = min(terms), max(terms)
        coeffs = [field.zero] * (hi - lo + 1)
        for e, c in terms.items():
            coeffs[e - lo] = _coerce_raw(field, c)
        return cls(field, coeffs, lo)

    @classmethod
    def from_ints(cls, field: Field, coeffs, low: int = 0) -> "LaurentPoly":
        return cls(field, [field.from_int(c) for c in coeffs], low)

    # -- inspection ------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @property
    def high(self) -> int:
        """Highest exponent ``l`` (lowest exponent is ``low``)."""
        if not self.coeffs:
            raise ValueError("zero polynomial has no degree")
        return self.low + len(self.coeffs) - 1

    def width(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else 0

    def terms(self) -> dict:
        """``{exponent: raw coefficient}`` over nonzero coefficients."""
        z = self.field.is_zero
        return {self.low + i: c for i, c in enumerate(self.coeffs) if not z(c)}

    def coefficient(self, e: int) -> FieldScalar:
        i = e - self.low
        if 0 <= i < len(self.coeffs):
            return FieldScalar(self.field, self.coeffs[i])
        return FieldScalar(self.field, self.field.zero)

    @property
    def leading(self):
        return self.coeffs[-1]

    @property
    def trailing(self):
        return self.coeffs[0]

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    # -- arithmetic ------------------------------------------------------
    def _check(self, other: "LaurentPoly"):
        if other.field != self.field:
            raise FieldMismatch(f"{self.field.name} vs {other.field.name}")

    def _lift(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            self._check(other)
            return other
        return LaurentPoly(self.field, [_coerce_raw(self.field, other)])

    def __add__(self, other):
        other = self._lift(other)
        if not other.coeffs:
            return self
        if not self.coeffs:
            return other
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        f = self.field
        out = [f.zero] * (hi - lo + 1)
        for i, c in enumerate(self.coeffs):
            out[self.low - lo + i] = c
        for i, c in enumerate(other.coeffs):
            k = other.low - lo + i
            out[k] = f.add(out[k], c)
        return LaurentPoly(f, out, lo)

    __radd__ = __add__

    def __neg__(self):
        f = self.field
        return LaurentPoly(f, [f.neg(c) for c in self.coeffs], self.low)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        if not self.coeffs or not other.coeffs:
            return LaurentPoly(self.field)
        return LaurentPoly(self.field, self.field.convolve(self.coeffs, other.coeffs),
                           self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if not self.is_monomial():
                raise ValueError("only monomials are invertible in K[t^{+-1}]")
            f = self.field
            return LaurentPoly(f, [f.pow(self.coeffs[0], k)], self.low * k)
        result = LaurentPoly.one(self.field)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "LaurentPoly":
        """Multiply by a scalar (raw value, int or FieldScalar)."""
        c = _coerce_raw(self.field, c)
        f = self.field
        return LaurentPoly(f, [f.mul(c, x) for x in self.coeffs], self.low)

    def shift(self, k: int) -> "LaurentPoly":
        """Multiply by ``t^k``."""
        if not self.coeffs:
            return self
        p = LaurentPoly.__new__(LaurentPoly)
        p.field, p.coeffs, p.low, p._hash = self.field, self.coeffs, self.low + k, None
        return p

    def divmod_poly(self, other: "LaurentPoly"):
        """Euclidean division of ordinary polynomials (nonnegative exponents)."""
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if self.coeffs and self.low < 0 or other.low < 0:
            raise ValueError("divmod_poly needs ordinary polynomials")
        f = self.field
        a = [f.zero] * self.low + list(self.coeffs) if self.coeffs else []
        b = [f.zero] * other.low + list(other.coeffs)
        q, r = _poly_divmod(f, a, b)
        return LaurentPoly(f, q), LaurentPoly(f, r)

    def divexact(self, other: "LaurentPoly") -> "LaurentPoly":
        """Exact quotient in K[t^{+-1}]; raises if ``other`` does not divide."""
        self._check(other)
        if not other.coeffs:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self.coeffs:
            return self
        f = self.field
        q, r = _poly_divmod(f, list(self.coeffs), list(other.coeffs))
        if any(not f.is_zero(c) for c in r):
            raise ArithmeticError("inexact division")
        return LaurentPoly(f, q, self.low - other.low)

    def monic(self) -> "LaurentPoly":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.coeffs[-1]))

    def normalized(self) -> "LaurentPoly":
        """Shift to nonzero constant term and make monic: unit-class representative."""
        if not self.coeffs:
            return self
        return self.shift(-self.low).monic()

    def gcd(self, other: "LaurentPoly") -> "LaurentPoly":
        """Monic gcd, as an ordinary polynomial with nonzero constant term."""
        self._check(other)
        a = self.shift(-self.low) if self.coeffs else self
        b = other.shift(-other.low) if other.coeffs else other
        while b.coeffs:
            _, r = a.divmod_poly(b)
            a, b = b, r
        return a.monic()

    def map_coefficients(self, fn, field: Field) -> "LaurentPoly":
        """Apply a coefficient map (raw -> raw) landing in ``field``."""
        return LaurentPoly(field, [fn(c) for c in self.coeffs], self.low)

    def __call__(self, x):
        """Evaluate at a scalar (raw value or FieldScalar)."""
        f = self.field
        x = _coerce_raw(f, x)
        if not self.coeffs:
            return FieldScalar(f, f.zero)
        acc = f.zero
        for c in reversed(self.coeffs):
            acc = f.add(f.mul(acc, x), c)
        return FieldScalar(f, f.mul(acc, f.pow(x, self.low)))

    # -- comparison / display -------------------------------------------
    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return self.field == other.field and self.low == other.low and self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction, FieldScalar)):
            try:
                return self == self._lift(other)
            except (TypeError, FieldMismatch):
                return NotImplemented
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.field, self.low, self.coeffs))
        return self._hash

    def __repr__(self):
        return f"LaurentPoly[{self.field.name}]({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        f = self.field
        parts = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if f.is_zero(c):
                continue
            e = self.low + i
            cs = f.format(c)
            mono = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            if not mono:
                parts.append(cs)
            elif cs == "1":
                parts.append(mono)
            elif cs == "-1":
                parts.append("-" + mono)
            else:
                parts.append(f"{cs}*{mono}")
        return " + ".join(parts).replace("+ -", "- ")


def _coerce_raw(field: Field, c):
    if isinstance(c, (int, Fraction, FieldScalar)):
        return field.coerce(c)
    return c


def _poly_divmod(f: Field, a: list, b: list):
    """Divide coefficient lists (lowest degree first); b has nonzero lead."""
    if len(a) < len(b):
        return [], a
    a = list(a)
    inv_lead = f.inv(b[-1])
    nb = len(b)
    q = [f.zero] * (len(a) - nb + 1)
    for k in range(len(a) - nb, -1, -1):
        c = a[k + nb - 1]
        if f.is_zero(c):
            continue
        c = f.mul(c, inv_lead)
        q[k] = c
        for i, y in enumerate(b):
            if not f.is_zero(y):
                a[k + i] = f.sub(a[k + i], f.mul(c, y))
    return q, a[: nb - 1]


class RatFn:
    """Element of K(t) as numerator / denominator.

    Canonical form: the denominator is an ordinary monic polynomial with
    nonzero constant term.  Common factors are removed only by ``reduced()``.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: LaurentPoly, den: LaurentPoly | None = None):
        if den is None:
            den = LaurentPoly.one(num.field)
        num._check(den)
        if den.is_zero():
            raise ZeroDivisionError("denominator must be nonzero")
        lead_inv = den.field.inv(den.leading)
        self.num = num.shift(-den.low).scale(lead_inv)
        self.den = den.shift(-den.low).scale(lead_inv)

    @property
    def field(self) -> Field:
        return self.num.field

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def width(self) -> int:
        if self.num.is_zero():
            return 0
        return self.num.width() - self.den.width()

    def reduced(self) -> "RatFn":
        g = self.num.gcd(self.den) if self.num.coeffs else self.den
        if self.num.is_zero():
            return RatFn(self.num, LaurentPoly.one(self.field))
        return RatFn(self.num.divexact(g), self.den.divexact(g))

    def _lift(self, other) -> "RatFn":
        if isinstance(other, RatFn):
            return other
        if isinstance(other, LaurentPoly):
            return RatFn(other)
        return RatFn(LaurentPoly(self.field, [_coerce_raw(self.field, other)]))

    def __mul__(self, other):
        other = self._lift(other)
        return RatFn(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        return RatFn(self.num * other.den, self.den * other.num)

    def __add__(self, other):
        other = self._lift(other)
        return RatFn(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RatFn(-self.num, self.den)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __eq__(self, other):
        if isinstance(other, (RatFn, LaurentPoly, int, Fraction, FieldScalar)):
            other = self._lift(other)
            return self.num * other.den == other.num * self.den
        return NotImplemented

    def __hash__(self):
        r = self.reduced()
        return hash((r.num, r.den))

    def __repr__(self):
        return f"RatFn[{self.field.name}](({self.num}) / ({self.den}))"


def width(x) -> int:
    """Width of a Laurent polynomial or rational function.

    For ``p = sum_{i=k}^{l} a_i t^i`` with ``a_k, a_l != 0`` this is ``l - k``;
    quotients subtract; the zero polynomial has width 0.
    """
    if isinstance(x, (LaurentPoly, RatFn)):
        return x.width()
    if x == 0:
        return 0
    raise TypeError(f"width is defined for Laurent polynomials and rational functions, not {type(x)}")


def reduce_mod_p(x: LaurentPoly, p: int) -> LaurentPoly:
    """Coefficientwise reduction Z[t^{+-1}] -> F_p[t^{+-1}]."""
    if not isinstance(x.field, CyclotomicField):
        raise TypeError("reduce_mod_p expects a characteristic-zero polynomial")
    f = x.field
    for c in x.coeffs:
        if not f.is_rational_integer(c):
            raise ValueError(f"coefficient {f.format(c)} is not a rational integer")
    target = PrimeField(p)
    return LaurentPoly(target, [int(c[0]) % p for c in x.coeffs], x.low)


def equal_up_to_unit(a: LaurentPoly, b: LaurentPoly) -> bool:
    """True iff ``a = c * t^k * b`` for a nonzero scalar c and integer k."""
    a._check(b)
    if a.is_zero() or b.is_zero():
        return a.is_zero() and b.is_zero()
    return a.normalized() == b.normalized()
