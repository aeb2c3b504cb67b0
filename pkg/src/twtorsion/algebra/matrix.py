"""Matrices over K (raw nested tuples) and over K[t, 1/t] (``PolyMatrix``)."""
from __future__ import annotations

from .fields import Field, FieldMismatch
from .laurent import LaurentPoly

# Scalar matrices are tuples of row tuples of raw field values.  Row-vector
# convention throughout: a right action v -> v * M, so M(uv) = M(u) M(v).


def identity(field: Field, n: int):
    z, o = field.zero, field.one
    return tuple(tuple(o if i == j else z for j in range(n)) for i in range(n))


def zeros(field: Field, rows: int, cols: int):
    return tuple((field.zero,) * cols for _ in range(rows))


def from_ints(field: Field, rows):
    return tuple(tuple(field.from_int(x) for x in row) for row in rows)


def matmul(field: Field, a, b):
    if not a:
        return ()
    n, m = len(b), len(b[0]) if b else 0
    add, mul, is_zero = field.add, field.mul, field.is_zero
    out = []
    for row in a:
        acc = [field.zero] * m
        for k in range(n):
            x = row[k]
            if is_zero(x):
                continue
            bk = b[k]
            for j in range(m):
                y = bk[j]
                if not is_zero(y):
                    acc[j] = add(acc[j], mul(x, y))
        out.append(tuple(acc))
    return tuple(out)


def matadd(field: Field, a, b):
    return tuple(tuple(field.add(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matsub(field: Field, a, b):
    return tuple(tuple(field.sub(x, y) for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def matscale(field: Field, c, a):
    return tuple(tuple(field.mul(c, x) for x in row) for row in a)


def matpow(field: Field, a, k: int):
    if k < 0:
        a, k = inverse(field, a), -k
    result = identity(field, len(a))
    while k:
        if k & 1:
            result = matmul(field, result, a)
        a = matmul(field, a, a)
        k >>= 1
    return result


def _eliminate(field: Field, a, rhs=None):
    """Gaussian elimination; returns (det, reduced rhs or None)."""
    n = len(a)
    m = [list(r) for r in a]
    r = [list(x) for x in rhs] if rhs is not None else None
    det = field.one
    for k in range(n):
        piv = next((i for i in range(k, n) if not field.is_zero(m[i][k])), None)
        if piv is None:
            return field.zero, None
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            if r is not None:
                r[k], r[piv] = r[piv], r[k]
            det = field.neg(det)
        pk = m[k][k]
        det = field.mul(det, pk)
        inv = field.inv(pk)
        m[k] = [field.mul(inv, x) for x in m[k]]
        if r is not None:
            r[k] = [field.mul(inv, x) for x in r[k]]
        for i in range(n):
            if i == k or field.is_zero(m[i][k]):
                continue
            c = m[i][k]
            m[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(m[i], m[k])]
            if r is not None:
                r[i] = [field.sub(x, field.mul(c, y)) for x, y in zip(r[i], r[k])]
    return det, r


def det(field: Field, a):
    if not a:
        return field.one
    return _eliminate(field, a)[0]


def inverse(field: Field, a):
    d, r = _eliminate(field, a, identity(field, len(a)))
    if r is None:
        raise ZeroDivisionError("singular matrix")
    return tuple(tuple(row) for row in r)


def block_diagonal(field: Field, blocks):
    n = sum(len(b) for b in blocks)
    out = [[field.zero] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(r) for r in out)


def is_integral(field: Field, a) -> bool:
    return all(field.is_rational_integer(x) for row in a for x in row)


class PolyMatrix:
    """Rectangular matrix with ``LaurentPoly`` entries over one field."""

    __slots__ = ("field", "rows")

    def __init__(self, field: Field, rows):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        for r in rows:
            for e in r:
                if e.field != field:
                    raise FieldMismatch(f"{e.field.name} entry in {field.name} matrix")
        self.field = field
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @property
    def shape(self):
        return self.nrows, self.ncols

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]

    @classmethod
    def identity(cls, field: Field, n: int) -> "PolyMatrix":
        one, zero = LaurentPoly.one(field), LaurentPoly.zero(field)
        return cls(field, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, field: Field, rows: int, cols: int) -> "PolyMatrix":
        zero = LaurentPoly.zero(field)
        return cls(field, [[zero] * cols for _ in range(rows)])

    @classmethod
    def from_scalar(cls, field: Field, a, exponent: int = 0) -> "PolyMatrix":
        """``t^exponent * A`` for a raw scalar matrix A."""
        return cls(field, [[LaurentPoly(field, [x], exponent) for x in row] for row in a])

    @classmethod
    def from_terms(cls, field: Field, terms: dict, size: int) -> "PolyMatrix":
        """``sum_e t^e * terms[e]`` for raw scalar ``size x size`` matrices."""
        out = []
        for i in range(size):
            row = []
            for j in range(size):
                row.append(LaurentPoly.from_dict(field, {e: m[i][j] for e, m in terms.items()}))
            out.append(row)
        return cls(field, out)

    @classmethod
    def blocks(cls, field: Field, grid, block_rows: int, block_cols: int) -> "PolyMatrix":
        """Assemble from a grid of PolyMatrix blocks (each block_rows x block_cols)."""
        out = []
        for brow in grid:
            for i in range(block_rows):
                row = []
                for blk in brow:
                    row.extend(blk.rows[i] if block_cols else ())
                out.append(row)
        return cls(field, out)

    def __add__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, [[x + y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __sub__(self, other: "PolyMatrix") -> "PolyMatrix":
        if other.shape != self.shape:
            raise ValueError("shape mismatch")
        return PolyMatrix(self.field, [[x - y for x, y in zip(a, b)] for a, b in zip(self.rows, other.rows)])

    def __neg__(self):
        return PolyMatrix(self.field, [[-x for x in r] for r in self.rows])

    def __matmul__(self, other: "PolyMatrix") -> "PolyMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        zero = LaurentPoly.zero(self.field)
        out = []
        for r in self.rows:
            row = []
            for j in range(other.ncols):
                acc = zero
                for k, x in enumerate(r):
                    if x.coeffs:
                        y = other.rows[k][j]
                        if y.coeffs:
                            acc = acc + x * y
                row.append(acc)
            out.append(row)
        return PolyMatrix(self.field, out)

    def __eq__(self, other):
        return isinstance(other, PolyMatrix) and self.field == other.field and self.rows == other.rows

    def __hash__(self):
        return hash((self.field, self.rows))

    def delete(self, rows=(), cols=()) -> "PolyMatrix":
        rows, cols = set(rows), set(cols)
        return PolyMatrix(self.field, [[x for j, x in enumerate(r) if j not in cols]
                                       for i, r in enumerate(self.rows) if i not in rows])

    def map_entries(self, fn, field: Field | None = None) -> "PolyMatrix":
        return PolyMatrix(field or self.field, [[fn(x) for x in r] for r in self.rows])

    def det(self, pivoting: str = "min-width") -> LaurentPoly:
        return det_poly_matrix(self, pivoting)

    def __repr__(self):
        body = "; ".join(", ".join(str(x) for x in r) for r in self.rows)
        return f"PolyMatrix[{self.field.name}]([{body}])"


def det_poly_matrix(m: PolyMatrix, pivoting: str = "min-width") -> LaurentPoly:
    """Exact determinant by fraction-free (Bareiss) elimination.

    Each row is first multiplied by a power of t so that all entries are
    ordinary polynomials; the shifts are undone at the end.  ``pivoting`` is
    ``"min-width"`` (smallest nonzero entry in the column) or ``"first"``.
    """
    n = m.nrows
    if n != m.ncols:
        raise ValueError(f"determinant of a non-square {m.nrows}x{m.ncols} matrix")
    field = m.field
    if n == 0:
        return LaurentPoly.one(field)
    shift = 0
    a = []
    for r in m.rows:
        lows = [x.low for x in r if x.coeffs]
        if not lows:
            return LaurentPoly.zero(field)
        s = min(lows)
        shift += s
        a.append([x.shift(-s) for x in r])
    sign = 1
    prev = LaurentPoly.one(field)
    for k in range(n - 1):
        cands = [i for i in range(k, n) if a[i][k].coeffs]
        if not cands:
            return LaurentPoly.zero(field)
        piv = cands[0] if pivoting == "first" else min(cands, key=lambda i: (len(a[i][k].coeffs), i))
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            sign = -sign
        pk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                v = pk * ri[j]
                if aik.coeffs and rk[j].coeffs:
                    v = v - aik * rk[j]
                ri[j] = v.divexact(prev) if k else v
            ri[k] = LaurentPoly.zero(field)
        prev = pk
    d = a[n - 1][n - 1]
    if sign < 0:
        d = -d
    return d.shift(shift)
