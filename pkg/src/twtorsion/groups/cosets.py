"""Coset tables and Reidemeister-Schreier presentations of finite-index subgroups."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .abelian import Character
from .presentation import CohomClass, Presentation
from .words import Word, inverse


class CosetTableError(ValueError):
    pass


@dataclass(frozen=True)
class CosetTable:
    """Right action of the generators on cosets ``0..index-1`` (coset 0 = H).

    ``perms[g][i]`` is the coset ``i . x_g``.
    """

    index: int
    perms: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "perms", tuple(tuple(p) for p in self.perms))
        for g, p in enumerate(self.perms):
            if sorted(p) != list(range(self.index)):
                raise CosetTableError(f"generator {g} does not act by a permutation of {self.index} cosets")

    def act(self, coset: int, w) -> int:
        for x in w:
            if x > 0:
                coset = self.perms[x - 1][coset]
            else:
                coset = self.perms[-x - 1].index(coset)
        return coset

    def validate(self, p: Presentation) -> "CosetTable":
        if len(self.perms) != p.ngens:
            raise CosetTableError(f"table has {len(self.perms)} generators, presentation {p.ngens}")
        for k, r in enumerate(p.relators):
            for c in range(self.index):
                if self.act(c, r) != c:
                    raise CosetTableError(
                        f"relator {k} ({p.format_word(r)}) moves coset {c}; not a valid action")
        return self

    @classmethod
    def trivial(cls, p: Presentation) -> "CosetTable":
        return cls(1, tuple((0,) for _ in range(p.ngens)))

    @classmethod
    def from_character(cls, p: Presentation, alpha: Character) -> "CosetTable":
        """Cosets of ker(alpha), labelled by the image in Z/n in BFS order."""
        alpha.check(p)
        labels = [0]
        seen = {0}
        queue = deque([0])
        while queue:
            c = queue.popleft()
            for v in alpha.values:
                for d in (v, -v):
                    e = (c + d) % alpha.n
                    if e not in seen:
                        seen.add(e)
                        labels.append(e)
                        queue.append(e)
        pos = {lab: i for i, lab in enumerate(labels)}
        perms = tuple(tuple(pos[(lab + v) % alpha.n] for lab in labels) for v in alpha.values)
        return cls(len(labels), perms)


@dataclass(frozen=True)
class SchreierPresentation:
    """Result of Reidemeister-Schreier rewriting.

    - ``presentation``: the subgroup's presentation on Schreier generators
    - ``transversal[i]``: coset representative word for coset i (original gens)
    - ``symbol[(i, g)]``: index of the Schreier generator ``rep_i x_g rep_{i.x_g}^-1``,
      or None when that element is trivial (tree edge)
    - ``schreier_words[k]``: Schreier generator k as a word in original generators
    """

    base: Presentation
    table: CosetTable
    presentation: Presentation
    transversal: tuple[Word, ...]
    symbol: dict
    schreier_words: tuple[Word, ...]

    @property
    def index(self) -> int:
        return self.table.index

    def rewrite(self, coset: int, w) -> tuple[Word, int]:
        """Rewrite ``rep_coset * w`` as (Schreier word) * rep_end; return (word, end)."""
        out = []
        perms = self.table.perms
        for x in w:
            if x > 0:
                g = x - 1
                s = self.symbol[(coset, g)]
                if s is not None:
                    out.append(s + 1)
                coset = perms[g][coset]
            else:
                g = -x - 1
                prev = perms[g].index(coset)
                s = self.symbol[(prev, g)]
                if s is not None:
                    out.append(-(s + 1))
                coset = prev
        return tuple(out), coset

    def pullback(self, theta: CohomClass) -> CohomClass:
        """p^* theta on the Schreier generators."""
        return CohomClass(tuple(theta(w) for w in self.schreier_words))


def reidemeister_schreier(p: Presentation, table: CosetTable) -> SchreierPresentation:
    """Subgroup presentation of the stabiliser of coset 0.

    The transversal comes from a breadth-first spanning tree from coset 0,
    generators in order, x_g before x_g^-1.
    """
    table.validate(p)
    m = table.index
    perms = table.perms
    inv_perms = [[0] * m for _ in perms]
    for g, perm in enumerate(perms):
        for i, j in enumerate(perm):
            inv_perms[g][j] = i
    rep: list = [None] * m
    rep[0] = ()
    tree = set()  # (coset, g) pairs whose Schreier element is trivial
    queue = deque([0])
    while queue:
        c = queue.popleft()
        for g in range(p.ngens):
            d = perms[g][c]
            if rep[d] is None:
                rep[d] = rep[c] + (g + 1,)
                tree.add((c, g))
                queue.append(d)
            d = inv_perms[g][c]
            if rep[d] is None:
                rep[d] = rep[c] + (-(g + 1),)
                tree.add((d, g))
                queue.append(d)
    if any(r is None for r in rep):
        raise CosetTableError("coset graph is not connected (table is not transitive)")
    symbol = {}
    words = []
    names = []
    for c in range(m):
        for g in range(p.ngens):
            if (c, g) in tree:
                symbol[(c, g)] = None
            else:
                symbol[(c, g)] = len(words)
                words.append(rep[c] + (g + 1,) + inverse(rep[perms[g][c]]))
                names.append(f"{p.generators[g]}_{c}")
    sp = SchreierPresentation(p, table, Presentation(tuple(names), ()), tuple(rep), symbol, tuple(words))
    relators = []
    for r in p.relators:
        for c in range(m):
            w, end = sp.rewrite(c, r)
            assert end == c
            relators.append(w)
    sub = Presentation(tuple(names), tuple(relators))
    return SchreierPresentation(p, table, sub, tuple(rep), symbol, tuple(words))
