"""Representations factoring through finite groups, and the twisted map Phi.

Conventions: representations are right actions on row vectors, so the matrix
of a word is the product of its letters' matrices in order,
``rho(uv) = rho(u) rho(v)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .algebra import matrix as mx
from .algebra.fields import CyclotomicField, Field, FieldMismatch, PrimeField, Q
from .algebra.matrix import PolyMatrix
from .groups.abelian import Character
from .groups.cosets import SchreierPresentation
from .groups.presentation import CohomClass, Presentation, eval_class


class RepresentationError(ValueError):
    pass


@dataclass(frozen=True)
class CyclicRepresentation:
    """A representation W of Z/n given by the matrix of the generator g."""

    n: int
    field: Field
    matrix: tuple
    provenance: tuple[str, ...] = ()
    integral: bool = False

    def __post_init__(self):
        if self.integral and not mx.is_integral(self.field, self.matrix):
            raise RepresentationError("integral witness with non-integer entries")
        if mx.matpow(self.field, self.matrix, self.n) != mx.identity(self.field, self.dim):
            raise RepresentationError(f"generator matrix does not have order dividing {self.n}")

    @property
    def dim(self) -> int:
        return len(self.matrix)

    def power(self, k: int):
        return _matpow_cached(self.field, self.matrix, k % self.n)

    def with_field(self, field: Field) -> "CyclicRepresentation":
        """Base change of an integral representation."""
        if not self.integral:
            raise RepresentationError("only integral representations can change field")
        ints = [[_as_int(self.field, x) for x in row] for row in self.matrix]
        return CyclicRepresentation(self.n, field, mx.from_ints(field, ints),
                                    self.provenance + (f"base-change({field.name})",),
                                    isinstance(field, CyclotomicField))


@lru_cache(maxsize=4096)
def _matpow_cached(field, matrix, k):
    return mx.matpow(field, matrix, k)


def _as_int(field: Field, x) -> int:
    if isinstance(field, PrimeField):
        raise RepresentationError("entries over F_q carry no integer lift")
    if not field.is_rational_integer(x):
        raise RepresentationError(f"entry {field.format(x)} is not an integer")
    return int(x[0])


def cyclic_character(n: int, field: Field, j: int = 1) -> CyclicRepresentation:
    """The 1-dimensional representation g -> zeta_n^j (rho_j of Z/n)."""
    root = field.root_of_unity(n)
    return CyclicRepresentation(n, field, ((field.pow(root, j),),), (f"character(n={n}, j={j}, {field.name})",))


def augmentation_rep(n: int, field: Field = Q) -> CyclicRepresentation:
    """Augmentation ideal of K[Z/n] on the basis b_i = g^i - 1, i = 1..n-1.

    b_i * g = g^(i+1) - g = b_(i+1) - b_1, with b_n = 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    d = n - 1
    rows = []
    for i in range(1, n):
        row = [0] * d
        row[0] -= 1
        if i + 1 < n:
            row[i] += 1
        rows.append(row)
    return CyclicRepresentation(n, field, mx.from_ints(field, rows),
                                (f"augmentation(n={n}, {field.name})",), isinstance(field, CyclotomicField))


@lru_cache(maxsize=1024)
def is_good(w: CyclicRepresentation) -> bool:
    """True iff 1 - g^k is invertible on W for every k = 1..n-1."""
    if w.n < 2:
        return True
    f = w.field
    ident = mx.identity(f, w.dim)
    for k in range(1, w.n):
        if f.is_zero(mx.det(f, mx.matsub(f, ident, w.power(k)))):
            return False
    return True


@dataclass(frozen=True)
class Representation:
    """A representation of pi = <generators | relators> over a field K."""

    presentation: Presentation
    field: Field
    dim: int
    images: tuple
    provenance: tuple[str, ...] = ()
    integral: bool = False

    def __post_init__(self):
        f = self.field
        if len(self.images) != self.presentation.ngens:
            raise RepresentationError("one matrix per generator required")
        for m in self.images:
            if len(m) != self.dim or any(len(r) != self.dim for r in m):
                raise RepresentationError(f"matrices must be {self.dim}x{self.dim}")
            if f.is_zero(mx.det(f, m)):
                raise RepresentationError("generator matrix is not invertible")
        if self.integral and not all(mx.is_integral(f, m) for m in self.images):
            raise RepresentationError("integral witness with non-integer entries")
        ident = mx.identity(f, self.dim)
        for k, r in enumerate(self.presentation.relators):
            if self.word_matrix(r) != ident:
                raise RepresentationError(
                    f"relator {k} ({self.presentation.format_word(r)}) does not act trivially")

    @property
    def inverses(self):
        cached = self.__dict__.get("_inverses")
        if cached is None:
            cached = tuple(mx.inverse(self.field, m) for m in self.images)
            object.__setattr__(self, "_inverses", cached)
        return cached

    def word_matrix(self, w):
        f = self.field
        out = mx.identity(f, self.dim)
        invs = None
        for x in w:
            if x > 0:
                out = mx.matmul(f, out, self.images[x - 1])
            else:
                if invs is None:
                    invs = self.inverses
                out = mx.matmul(f, out, invs[-x - 1])
        return out

    def reduce_mod(self, p: int) -> "Representation":
        """V^p = F_p (x) W for an integral representation."""
        if not self.integral:
            raise RepresentationError("mod-p reduction needs an integral representation")
        f = PrimeField(p)
        images = tuple(mx.from_ints(f, [[_as_int(self.field, x) for x in r] for r in m]) for m in self.images)
        return Representation(self.presentation, f, self.dim, images,
                              self.provenance + (f"reduce-mod({p})",), False)

    def with_field(self, field: Field) -> "Representation":
        if not self.integral:
            raise RepresentationError("only integral representations can change field")
        images = tuple(mx.from_ints(field, [[_as_int(self.field, x) for x in r] for r in m]) for m in self.images)
        return Representation(self.presentation, field, self.dim, images,
                              self.provenance + (f"base-change({field.name})",),
                              isinstance(field, CyclotomicField))


def trivial_rep(p: Presentation, field: Field = Q, dim: int = 1) -> Representation:
    ident = mx.identity(field, dim)
    return Representation(p, field, dim, (ident,) * p.ngens, (f"trivial(dim={dim}, {field.name})",),
                          isinstance(field, CyclotomicField))


def restrict(w: CyclicRepresentation, alpha: Character, p: Presentation) -> Representation:
    """res_alpha W: generator x acts as W(g^alpha(x))."""
    if alpha.n != w.n:
        raise RepresentationError(f"character to Z/{alpha.n} cannot restrict a Z/{w.n} representation")
    alpha.check(p)
    images = tuple(w.power(v) for v in alpha.values)
    prov = w.provenance + (f"restrict(alpha={list(alpha.values)} mod {alpha.n})",)
    return Representation(p, w.field, w.dim, images, prov, w.integral)


def char_rep(alpha: Character, field: Field, p: Presentation, j: int = 1) -> Representation:
    """C^alpha (or rho_j o alpha): x -> zeta_n^(j alpha(x)).

    Over F_q the root of unity is the smallest residue of order n.
    """
    return restrict(cyclic_character(alpha.n, field, j), alpha, p)


def direct_sum(a: Representation, b: Representation) -> Representation:
    if a.field != b.field:
        raise FieldMismatch(f"{a.field.name} vs {b.field.name}")
    if a.presentation != b.presentation:
        raise RepresentationError("summands must represent the same presentation")
    images = tuple(mx.block_diagonal(a.field, [x, y]) for x, y in zip(a.images, b.images))
    prov = (f"direct-sum[{' > '.join(a.provenance)} ; {' > '.join(b.provenance)}]",)
    return Representation(a.presentation, a.field, a.dim + b.dim, images, prov, a.integral and b.integral)


def induce(v: Representation, cover: SchreierPresentation) -> Representation:
    """ind V = V (x)_{Z[H]} Z[pi] on the basis {v (x) g_i}.

    Block (i, j) of x's matrix is V(h) where g_i x = h g_j.
    """
    if v.presentation != cover.presentation:
        raise RepresentationError("V must be a representation of the cover's presentation")
    f = v.field
    m, d = cover.index, v.dim
    ident = mx.identity(f, d)
    images = []
    for g in range(cover.base.ngens):
        big = [[f.zero] * (m * d) for _ in range(m * d)]
        for i in range(m):
            j = cover.table.perms[g][i]
            s = cover.symbol[(i, g)]
            block = ident if s is None else v.images[s]
            for a in range(d):
                for b in range(d):
                    big[i * d + a][j * d + b] = block[a][b]
        images.append(tuple(tuple(r) for r in big))
    prov = v.provenance + (f"induce(index={m})",)
    return Representation(cover.base, f, m * d, tuple(images), prov, v.integral)


@dataclass(frozen=True)
class TwistedHom:
    """Phi(g) = t^<theta, g> rho(g): Z[pi] -> matrices over K[t^{+-1}]."""

    rep: Representation
    theta: CohomClass

    @property
    def field(self) -> Field:
        return self.rep.field

    def __call__(self, w) -> PolyMatrix:
        return PolyMatrix.from_scalar(self.field, self.rep.word_matrix(w), eval_class(self.theta, w))

    def linear(self, combo: dict) -> PolyMatrix:
        """Additive extension to a Z[F]-combination {word: int}."""
        f, d = self.field, self.rep.dim
        terms: dict = {}
        for w, c in combo.items():
            e = eval_class(self.theta, w)
            m = mx.matscale(f, f.from_int(c), self.rep.word_matrix(w))
            terms[e] = mx.matadd(f, terms[e], m) if e in terms else m
        return PolyMatrix.from_terms(f, terms, d)

    def fox_jacobian(self) -> list[list[PolyMatrix]]:
        """Blocks Phi(d r_i / d x_j), computed by one pass over each relator."""
        f, d = self.field, self.rep.dim
        p = self.rep.presentation
        images, invs = self.rep.images, self.rep.inverses
        vals = self.theta.values
        grid = []
        for r in p.relators:
            cols: list[dict] = [dict() for _ in range(p.ngens)]
            prefix = mx.identity(f, d)
            e = 0
            for x in r:
                g = abs(x) - 1
                if x > 0:
                    acc = cols[g]
                    acc[e] = mx.matadd(f, acc[e], prefix) if e in acc else prefix
                    prefix = mx.matmul(f, prefix, images[g])
                    e += vals[g]
                else:
                    prefix = mx.matmul(f, prefix, invs[g])
                    e -= vals[g]
                    neg = mx.matscale(f, f.neg(f.one), prefix)
                    acc = cols[g]
                    acc[e] = mx.matadd(f, acc[e], neg) if e in acc else neg
            grid.append([PolyMatrix.from_terms(f, c, d) for c in cols])
        return grid

    def generator_minus_one(self, g: int) -> PolyMatrix:
        """Phi(x_g - 1) = t^theta(x_g) rho(x_g) - I."""
        f, d = self.field, self.rep.dim
        return PolyMatrix.from_terms(f, {self.theta.values[g]: self.rep.images[g]}, d) - PolyMatrix.identity(f, d)

    def word_minus_one(self, w) -> PolyMatrix:
        return self(w) - PolyMatrix.identity(self.field, self.rep.dim)


def twist(phi: TwistedHom, w) -> PolyMatrix:
    return phi(w)


def twist_linear(phi: TwistedHom, combo: dict) -> PolyMatrix:
    return phi.linear(combo)


def zero_rep(p: Presentation, field: Field = Q) -> Representation:
    return Representation(p, field, 0, ((),) * p.ngens, ("zero",), True)
