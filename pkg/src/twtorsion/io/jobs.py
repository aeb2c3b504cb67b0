"""Line-oriented job files.

Example::

    twtorsion-job v1
    kind: presentation
    generators: a b
    relator: a b a B A B
    theta: a=1 b=1
    rep: augmentation n=3 alpha=1,1 field=Q(zeta_3)
    reference: 1 | genus 1 from knot tables

Graph jobs use ``kind: graph`` with ``vertex:`` and ``edge:`` lines instead of
generators and relators.  ``#`` starts a comment.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from ..algebra.fields import Field, parse_field
from ..graph import GraphError, GraphStructure, Vertex, validate_graph
from ..groups.abelian import Character
from ..groups.cosets import CosetTable, reidemeister_schreier
from ..groups.presentation import (
    CohomClass,
    CohomologyError,
    Presentation,
    PresentationError,
    parse_word,
)
from ..representations import (
    CyclicRepresentation,
    Representation,
    RepresentationError,
    augmentation_rep,
    char_rep,
    cyclic_character,
    induce,
    restrict,
    trivial_rep,
)

HEADER = "twtorsion-job v1"
KEYS = ("kind", "generators", "relator", "theta", "rep", "hint", "dual", "reference", "search",
        "vertex", "edge")
REPEATABLE = {"relator", "dual", "vertex", "edge"}
REP_KINDS = ("trivial", "character", "augmentation", "induced")


class JobError(ValueError):
    """Input error with a 1-based line and column."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.message, self.line, self.column = message, line, column
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {column}" if column is not None else "") + ": "
        super().__init__(where + message)


@dataclass(frozen=True)
class RepSpec:
    kind: str
    n: int = 1
    field: str = "Q"
    alpha: tuple[int, ...] | None = None
    j: int = 1
    dim: int = 1
    inner_n: int | None = None
    inner_alpha: tuple[int, ...] | None = None

    def field_obj(self) -> Field:
        return parse_field(self.field)

    def format(self) -> str:
        parts = [self.kind]
        if self.kind != "trivial":
            parts.append(f"n={self.n}")
        if self.alpha is not None:
            parts.append("alpha=" + ",".join(map(str, self.alpha)))
        if self.j != 1:
            parts.append(f"j={self.j}")
        if self.dim != 1:
            parts.append(f"dim={self.dim}")
        if self.inner_n is not None:
            parts.append(f"inner_n={self.inner_n}")
            parts.append("inner_alpha=" + ",".join(map(str, self.inner_alpha)))
        parts.append(f"field={self.field}")
        return " ".join(parts)


@dataclass(frozen=True)
class SearchSpec:
    n_max: int = 5
    primes: tuple[int, ...] = ()
    max_units: int | None = None
    seconds: float | None = None

    def format(self) -> str:
        parts = [f"n_max={self.n_max}"]
        if self.primes:
            parts.append("primes=" + ",".join(map(str, self.primes)))
        if self.max_units is not None:
            parts.append(f"max_units={self.max_units}")
        if self.seconds is not None:
            parts.append(f"seconds={self.seconds:g}")
        return " ".join(parts)


@dataclass(frozen=True)
class JobSpec:
    kind: str
    generators: tuple[str, ...] = ()
    relators: tuple[str, ...] = ()
    theta: tuple[int, ...] | None = None
    rep: RepSpec | None = None
    hint: tuple[str, int] | None = None          # (generator g, relator index h)
    dual: tuple[tuple[int, str], ...] = ()      # relator index -> word text
    reference: tuple[int, str] | None = None    # (norm, source note)
    search: SearchSpec | None = None
    vertices: tuple[Vertex, ...] = ()
    edges: tuple = ()
    source: str = field(default="", compare=False)

    # -- derived objects --------------------------------------------------
    def presentation(self) -> Presentation:
        return Presentation.parse(self.generators, self.relators)

    def cohom_class(self) -> CohomClass:
        return CohomClass(self.theta)

    def graph(self) -> GraphStructure:
        return GraphStructure(self.vertices, self.edges)

    def dual_map(self, p: Presentation) -> dict | None:
        if not self.dual:
            return None
        return {k: parse_word(w, p.generators) for k, w in self.dual}

    def torsion_options(self, p: Presentation) -> dict:
        """Keyword arguments for the torsion engine."""
        kw = {}
        if p.deficiency == 0:
            d = self.dual_map(p)
            if d is not None:
                kw["dual"] = d
            if self.hint is not None:
                kw["g"] = p.generators.index(self.hint[0])
                kw["h"] = self.hint[1]
        return kw


# -- parsing -----------------------------------------------------------------
def _split_pairs(text: str, line: int, col0: int) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    for tok in text.split():
        pos = text.index(tok, pos)
        if "=" not in tok:
            raise JobError(f"expected key=value, got {tok!r}", line, col0 + pos + 1)
        k, v = tok.split("=", 1)
        out.append((k, v, col0 + pos + 1))
        pos += len(tok)
    return out


def _int(v: str, line: int, col: int) -> int:
    try:
        return int(v)
    except ValueError:
        raise JobError(f"expected an integer, got {v!r}", line, col) from None


def _ints(v: str, line: int, col: int) -> tuple[int, ...]:
    return tuple(_int(x, line, col) for x in v.split(",") if x != "")


def _parse_rep(text: str, line: int, col0: int) -> RepSpec:
    words = text.split(None, 1)
    if not words:
        raise JobError("empty representation spec", line, col0)
    kind = words[0]
    if kind not in REP_KINDS:
        raise JobError(f"unknown representation kind {kind!r}; expected one of {', '.join(REP_KINDS)}",
                       line, col0)
    rest = words[1] if len(words) > 1 else ""
    opts: dict = {}
    known = {"n", "field", "alpha", "j", "dim", "inner_n", "inner_alpha"}
    for k, v, c in _split_pairs(rest, line, col0 + len(text) - len(rest)):
        if k not in known:
            raise JobError(f"unknown representation option {k!r}", line, c)
        if k == "field":
            try:
                opts[k] = parse_field(v).name
            except ValueError as exc:
                raise JobError(str(exc), line, c) from None
        elif k in ("alpha", "inner_alpha"):
            opts[k] = _ints(v, line, c)
        else:
            opts[k] = _int(v, line, c)
    if kind != "trivial" and "n" not in opts:
        raise JobError(f"{kind} representation needs n=", line, col0)
    n = opts.get("n", 1)
    if n < 1:
        raise JobError("n must be positive", line, col0)
    default_field = "Q" if kind == "trivial" else (f"Q(zeta_{n})" if n > 1 else "Q")
    if kind in ("induced",) and "alpha" not in opts:
        raise JobError("induced representation needs alpha= (the quotient character)", line, col0)
    if ("inner_n" in opts) != ("inner_alpha" in opts):
        raise JobError("inner_n and inner_alpha go together", line, col0)
    if kind == "induced" and "inner_n" in opts and "field" not in opts:
        default_field = f"Q(zeta_{opts['inner_n']})" if opts["inner_n"] > 1 else "Q"
    return RepSpec(kind, n, opts.get("field", default_field), opts.get("alpha"), opts.get("j", 1),
                   opts.get("dim", 1), opts.get("inner_n"), opts.get("inner_alpha"))


def _parse_vertex(text: str, line: int, col0: int) -> Vertex:
    words = text.split(None, 1)
    if not words:
        raise JobError("vertex needs a name", line, col0)
    name = words[0]
    rest = words[1] if len(words) > 1 else ""
    opts = {}
    for k, v, c in _split_pairs(rest, line, col0 + len(text) - len(rest)):
        if k not in ("side", "chi", "boundary", "m", "alpha"):
            raise JobError(f"unknown vertex option {k!r}", line, c)
        opts[k] = v if k == "side" else _int(v, line, c)
    for req in ("side", "chi", "boundary", "m"):
        if req not in opts:
            raise JobError(f"vertex {name} needs {req}=", line, col0)
    return Vertex(name, opts["side"], opts["chi"], opts["boundary"], opts["m"], opts.get("alpha", 0))


def _parse_slot(tok: str, line: int, col: int) -> tuple[str, int]:
    if ":" not in tok:
        raise JobError(f"slot must look like vertex:index, got {tok!r}", line, col)
    name, idx = tok.rsplit(":", 1)
    return name, _int(idx, line, col)


def parse_job(text: str) -> JobSpec:
    """Parse and validate a job file; errors carry line and column."""
    lines = text.splitlines()
    first = next(((i, ln) for i, ln in enumerate(lines) if ln.strip() and not ln.lstrip().startswith("#")), None)
    if first is None or first[1].strip() != HEADER:
        raise JobError(f"first line must be {HEADER!r}", (first[0] + 1) if first else 1, 1)
    seen: dict = {}
    entries: dict = {k: [] for k in KEYS}
    for i in range(first[0] + 1, len(lines)):
        raw = lines[i]
        body = raw.split("#", 1)[0].rstrip()
        if not body.strip():
            continue
        lineno = i + 1
        if ":" not in body:
            raise JobError("expected 'key: value'", lineno, len(raw) - len(raw.lstrip()) + 1)
        key, value = body.split(":", 1)
        kcol = len(key) - len(key.lstrip()) + 1
        key = key.strip()
        if key not in KEYS:
            raise JobError(f"unknown key {key!r}", lineno, kcol)
        if key in seen and key not in REPEATABLE:
            raise JobError(f"duplicate key {key!r} (first on line {seen[key]})", lineno, kcol)
        seen.setdefault(key, lineno)
        vcol = len(body) - len(value) + (len(value) - len(value.lstrip())) + 1
        entries[key].append((value.strip(), lineno, vcol))

    def one(key):
        return entries[key][0] if entries[key] else None

    kind_e = one("kind")
    if kind_e is None:
        raise JobError("missing key 'kind'", first[0] + 1)
    kind = kind_e[0]
    if kind not in ("presentation", "graph"):
        raise JobError(f"kind must be 'presentation' or 'graph', got {kind!r}", kind_e[1], kind_e[2])

    rep = _parse_rep(*one("rep")) if one("rep") else None
    reference = None
    if one("reference"):
        v, ln, c = one("reference")
        num, _, note = v.partition("|")
        norm = _int(num.strip(), ln, c)
        if norm < 0:
            raise JobError("reference norm must be nonnegative", ln, c)
        reference = (norm, note.strip())
    search = None
    if one("search"):
        v, ln, c = one("search")
        opts = {}
        for k, val, cc in _split_pairs(v, ln, c):
            if k == "n_max":
                opts[k] = _int(val, ln, cc)
            elif k == "primes":
                opts[k] = _ints(val, ln, cc)
            elif k == "max_units":
                opts[k] = _int(val, ln, cc)
            elif k == "seconds":
                try:
                    opts[k] = float(val)
                except ValueError:
                    raise JobError(f"expected a number, got {val!r}", ln, cc) from None
            else:
                raise JobError(f"unknown search option {k!r}", ln, cc)
        search = SearchSpec(**opts)

    if kind == "graph":
        for key in ("generators", "relator", "theta", "hint", "dual"):
            if entries[key]:
                _, ln, c = entries[key][0]
                raise JobError(f"key {key!r} is not allowed in graph jobs", ln, c)
        vertices = tuple(_parse_vertex(*e) for e in entries["vertex"])
        edges = []
        for v, ln, c in entries["edge"]:
            toks = v.split()
            if len(toks) != 2:
                raise JobError("edge needs two slots", ln, c)
            edges.append((_parse_slot(toks[0], ln, c), _parse_slot(toks[1], ln, c)))
        job = JobSpec(kind, rep=rep, reference=reference, search=search, vertices=vertices,
                      edges=tuple(edges), source=text)
        try:
            validate_graph(job.graph())
        except GraphError as exc:
            ln = entries["vertex"][0][1] if entries["vertex"] else kind_e[1]
            raise JobError(str(exc), ln) from None
        return job

    for key in ("vertex", "edge"):
        if entries[key]:
            _, ln, c = entries[key][0]
            raise JobError(f"key {key!r} is only allowed in graph jobs", ln, c)
    gens_e = one("generators")
    if gens_e is None:
        raise JobError("missing key 'generators'")
    gens = tuple(gens_e[0].split())
    try:
        Presentation.parse(gens, [])
    except PresentationError as exc:
        raise JobError(str(exc), gens_e[1], gens_e[2]) from None
    relators = []
    for v, ln, c in entries["relator"]:
        try:
            parse_word(v, gens)
        except PresentationError as exc:
            raise JobError(str(exc), ln, c + (exc.column or 0)) from None
        relators.append(" ".join(v.split()))
    p = Presentation.parse(gens, relators)
    theta = None
    if one("theta"):
        v, ln, c = one("theta")
        vals = {}
        for k, val, cc in _split_pairs(v, ln, c):
            if k not in gens:
                raise JobError(f"theta assigns unknown generator {k!r}", ln, cc)
            vals[k] = _int(val, ln, cc)
        theta = tuple(vals.get(g, 0) for g in gens)
        try:
            CohomClass(theta).check(p)
        except CohomologyError as exc:
            rl = entries["relator"][exc.relator][1] if exc.relator >= 0 else ln
            raise JobError(f"theta is not a homomorphism to Z: {exc}", rl, 1) from None
    hint = None
    if one("hint"):
        v, ln, c = one("hint")
        opts = dict((k, (val, cc)) for k, val, cc in _split_pairs(v, ln, c))
        if set(opts) != {"g", "h"}:
            raise JobError("hint needs exactly g=<generator> h=<relator index>", ln, c)
        if opts["g"][0] not in gens:
            raise JobError(f"unknown generator {opts['g'][0]!r}", ln, opts["g"][1])
        h = _int(opts["h"][0], ln, opts["h"][1])
        if not 0 <= h < len(relators):
            raise JobError(f"relator index {h} out of range", ln, opts["h"][1])
        hint = (opts["g"][0], h)
    dual = []
    for v, ln, c in entries["dual"]:
        idx, eq, word = v.partition("=")
        if not eq:
            raise JobError("dual needs <relator index> = <word>", ln, c)
        k = _int(idx.strip(), ln, c)
        if not 0 <= k < len(relators):
            raise JobError(f"relator index {k} out of range", ln, c)
        try:
            parse_word(word, gens)
        except PresentationError as exc:
            raise JobError(str(exc), ln, c) from None
        dual.append((k, " ".join(word.split())))
    return JobSpec(kind, gens, tuple(relators), theta, rep, hint, tuple(dual), reference, search,
                   source=text)


def format_job(job: JobSpec) -> str:
    """Canonical text; ``format_job(parse_job(format_job(j))) == format_job(j)``."""
    out = [HEADER, f"kind: {job.kind}"]
    if job.kind == "presentation":
        out.append("generators: " + " ".join(job.generators))
        out += [f"relator: {r}" for r in job.relators]
        if job.theta is not None:
            out.append("theta: " + " ".join(f"{g}={v}" for g, v in zip(job.generators, job.theta)))
    else:
        for v in job.vertices:
            out.append(f"vertex: {v.name} side={v.side} chi={v.chi} boundary={v.boundary} m={v.m} alpha={v.alpha}")
        for (a, i), (b, j) in job.edges:
            out.append(f"edge: {a}:{i} {b}:{j}")
    if job.rep is not None:
        out.append("rep: " + job.rep.format())
    if job.hint is not None:
        out.append(f"hint: g={job.hint[0]} h={job.hint[1]}")
    out += [f"dual: {k} = {w}" for k, w in job.dual]
    if job.reference is not None:
        note = f" | {job.reference[1]}" if job.reference[1] else ""
        out.append(f"reference: {job.reference[0]}{note}")
    if job.search is not None:
        out.append("search: " + job.search.format())
    return "\n".join(out) + "\n"


# -- building representations -------------------------------------------------
def build_representation(spec: RepSpec, p: Presentation) -> Representation:
    f = spec.field_obj()
    if spec.kind == "trivial":
        return trivial_rep(p, f, spec.dim)
    alpha = Character(spec.n, spec.alpha if spec.alpha is not None else (1,) * p.ngens)
    try:
        alpha.check(p)
    except ValueError as exc:
        raise RepresentationError(str(exc)) from None
    if spec.kind == "character":
        return char_rep(alpha, f, p, spec.j)
    if spec.kind == "augmentation":
        return restrict(augmentation_rep(spec.n, f), alpha, p)
    cover = reidemeister_schreier(p, CosetTable.from_character(p, alpha))
    sub = cover.presentation
    if spec.inner_n is None:
        inner = trivial_rep(sub, f, spec.dim)
    else:
        inner = char_rep(Character(spec.inner_n, spec.inner_alpha), f, sub, spec.j)
    return induce(inner, cover)


def build_cyclic(spec: RepSpec) -> CyclicRepresentation:
    """The Z/n representation W used by graph jobs."""
    f = spec.field_obj()
    if spec.kind == "augmentation":
        return augmentation_rep(spec.n, f)
    if spec.kind == "character":
        return cyclic_character(spec.n, f, spec.j)
    raise RepresentationError(f"graph jobs need an augmentation or character representation, not {spec.kind}")
