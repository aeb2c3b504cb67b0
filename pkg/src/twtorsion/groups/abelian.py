"""Smith normal form over Z, first homology, and characters to Z/n."""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

from .presentation import Presentation
from .words import Word


def smith_normal_form(a):
    """Return ``(S, U, V)`` with ``S = U A V`` diagonal, d_1 | d_2 | ..., d_i >= 0.

    ``U`` and ``V`` are unimodular.  All matrices are lists of int lists.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    s = [list(r) for r in a]
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in s:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        s[dst] = [x + k * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + k * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, k):
        for r in s:
            r[dst] += k * r[src]
        for r in v:
            r[dst] += k * r[src]

    for t in range(min(m, n)):
        nz = [(abs(s[i][j]), i, j) for i in range(t, m) for j in range(t, n) if s[i][j]]
        if not nz:
            break
        _, i0, j0 = min(nz)
        swap_rows(t, i0)
        swap_cols(t, j0)
        while True:
            changed = False
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // s[t][t]))
                    if s[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // s[t][t]))
                    if s[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if s[i][j] % s[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return s, u, v


@dataclass(frozen=True)
class H1:
    """H_1 = Z^rank + sum_i Z/torsion[i]; ``coords[g]`` is the image of
    generator g: first one entry per torsion factor (mod d_i), then ``rank``
    free entries."""

    rank: int
    torsion: tuple[int, ...]
    coords: tuple[tuple[int, ...], ...]

    def __str__(self):
        parts = ["Z^%d" % self.rank if self.rank > 1 else "Z"] if self.rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def h1_smith(p: Presentation) -> H1:
    a = p.abelianized()
    g = p.ngens
    if not a:
        a_diag, v = [], [[int(i == j) for j in range(g)] for i in range(g)]
    else:
        s, _, v = smith_normal_form(a)
        a_diag = [s[i][i] for i in range(min(len(s), g))]
    diag = a_diag + [0] * (g - len(a_diag))
    tors_idx = [i for i, d in enumerate(diag) if d > 1]
    free_idx = [i for i, d in enumerate(diag) if d == 0]
    coords = []
    for j in range(g):
        row = v[j]
        coords.append(tuple(row[i] % diag[i] for i in tors_idx) + tuple(row[i] for i in free_idx))
    return H1(len(free_idx), tuple(diag[i] for i in tors_idx), tuple(coords))


@dataclass(frozen=True)
class Character:
    """A homomorphism pi -> Z/n, stored by its values on generators (mod n)."""

    n: int
    values: tuple[int, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("modulus must be positive")
        object.__setattr__(self, "values", tuple(v % self.n for v in self.values))

    def __call__(self, w: Word) -> int:
        vals = self.values
        return sum(vals[x - 1] if x > 0 else -vals[-x - 1] for x in w) % self.n

    def is_trivial(self) -> bool:
        return not any(self.values)

    def scaled(self, j: int) -> "Character":
        """rho_j o alpha: multiply values by j."""
        return Character(self.n, tuple(j * v for v in self.values))

    def check(self, p: Presentation) -> "Character":
        if len(self.values) != p.ngens:
            raise ValueError(f"character has {len(self.values)} values for {p.ngens} generators")
        for k, r in enumerate(p.relators):
            if self(r):
                raise ValueError(f"character is not a homomorphism: relator {k} ({p.format_word(r)}) "
                                 f"maps to {self(r)} mod {self.n}")
        return self

    def image_size(self) -> int:
        g = self.n
        for v in self.values:
            g = gcd(g, v)
        return self.n // g


def enumerate_characters(p: Presentation, n: int) -> list[Character]:
    """All homomorphisms pi -> Z/n, via H_1; sorted, trivial one first."""
    if n < 1:
        raise ValueError("n must be positive")
    h = h1_smith(p)
    choices = []
    for d in h.torsion:
        step = n // gcd(d, n)
        choices.append(range(0, n, step))
    choices += [range(n)] * h.rank
    seen = set()
    for combo in itertools.product(*choices):
        vals = tuple(sum(c * x for c, x in zip(combo, coord)) % n for coord in h.coords)
        seen.add(vals)
    return [Character(n, v) for v in sorted(seen)]
