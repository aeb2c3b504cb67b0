from __future__ import annotations

import re
from dataclasses import dataclass

from .words import Word, free_reduce


class PresentationError(ValueError):
    """Malformed presentation or word; ``column`` is a 0-based offset when known."""

    def __init__(self, message: str, column: int | None = None):
        super().__init__(message)
        self.column = column


class CohomologyError(ValueError):
    """An integer class that does not vanish on some relator."""

    def __init__(self, message: str, relator: int):
        super().__init__(message)
        self.relator = relator


_NAME = re.compile(r"[a-z][a-z0-9_]*")
_TOKEN = re.compile(r"(?P<name>[A-Za-z][A-Za-z0-9_]*)(?:\^(?P<exp>-?\d+))?|(?P<one>1)")


@dataclass(frozen=True)
class Presentation:
    """Finite presentation <generators | relators>.

    Relators are kept exactly as given (unreduced); reduce on demand with
    ``free_reduce``.
    """

    generators: tuple[str, ...]
    relators: tuple[Word, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        object.__setattr__(self, "relators", tuple(tuple(r) for r in self.relators))
        if len(set(self.generators)) != len(self.generators):
            raise PresentationError("duplicate generator names")
        ng = len(self.generators)
        for k, r in enumerate(self.relators):
            for x in r:
                if x == 0 or abs(x) > ng:
                    raise PresentationError(f"relator {k} references unknown generator index {x}")

    @classmethod
    def parse(cls, generators, relators) -> "Presentation":
        if isinstance(generators, str):
            generators = generators.split()
        for g in generators:
            if not _NAME.fullmatch(g):
                raise PresentationError(f"generator name {g!r} must start lowercase (uppercase denotes inverse)")
        gens = tuple(generators)
        return cls(gens, tuple(parse_word(r, gens) for r in relators))

    @property
    def ngens(self) -> int:
        return len(self.generators)

    @property
    def nrels(self) -> int:
        return len(self.relators)

    @property
    def deficiency(self) -> int:
        return self.ngens - self.nrels

    def format_word(self, w) -> str:
        return format_word(w, self.generators)

    def abelianized(self) -> list[list[int]]:
        """Relator matrix: rows = relators, columns = exponent sums."""
        rows = []
        for r in self.relators:
            row = [0] * self.ngens
            for x in r:
                row[abs(x) - 1] += 1 if x > 0 else -1
            rows.append(row)
        return rows

    def __str__(self):
        rels = ", ".join(self.format_word(r) for r in self.relators)
        return f"<{' '.join(self.generators)} | {rels}>"


def parse_word(text: str, generators) -> Word:
    """Parse ``"a b A B"``, ``"abAB"`` (single-letter names) or ``"a^2 b^-1"``.

    An uppercase token is the inverse of its lowercase generator.
    """
    index = {g: i + 1 for i, g in enumerate(generators)}
    out: list[int] = []
    text_s = text.strip()
    if text_s in ("", "1"):
        return ()
    single = all(len(g) == 1 for g in generators)
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace() or text[pos] == "*":
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m:
            raise PresentationError(f"unexpected character {text[pos]!r}", pos)
        if m.group("one"):
            pos = m.end()
            continue
        name, exp = m.group("name"), m.group("exp")
        pieces = [(name, pos)]
        if single and len(name) > 1 and name not in index and name.lower() not in index:
            pieces = [(c, pos + i) for i, c in enumerate(name)]
        for j, (tok, col) in enumerate(pieces):
            if tok in index:
                g = index[tok]
            elif tok.lower() in index and tok != tok.lower():
                g = -index[tok.lower()]
            else:
                raise PresentationError(f"unknown generator {tok!r}", col)
            k = int(exp) if exp is not None and j == len(pieces) - 1 else 1
            out.extend([g] * k if k >= 0 else [-g] * (-k))
        pos = m.end()
    return tuple(out)


def format_word(w, generators) -> str:
    if not w:
        return "1"
    return " ".join(generators[x - 1] if x > 0 else generators[-x - 1].upper() for x in w)


@dataclass(frozen=True)
class CohomClass:
    """theta in H^1(N; Z) = Hom(pi_1 N, Z), stored as its values on generators."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))

    def __call__(self, w) -> int:
        return eval_class(self, w)

    def check(self, p: Presentation) -> "CohomClass":
        if len(self.values) != p.ngens:
            raise CohomologyError(f"class has {len(self.values)} values for {p.ngens} generators", -1)
        for k, r in enumerate(p.relators):
            v = eval_class(self, r)
            if v:
                raise CohomologyError(
                    f"class does not vanish on relator {k} ({p.format_word(r)}): value {v}", k)
        return self

    def is_zero(self) -> bool:
        return not any(self.values)


def eval_class(theta: CohomClass, w) -> int:
    vals = theta.values
    return sum(vals[x - 1] if x > 0 else -vals[-x - 1] for x in w)


def reduced_relators(p: Presentation):
    return tuple(free_reduce(r) for r in p.relators)
