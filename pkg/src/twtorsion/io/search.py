"""Search over cyclic representations for the best width/dim bound."""
from __future__ import annotations

import time
from dataclasses import dataclass, replace
from fractions import Fraction
from math import gcd

from ..algebra.fields import parse_field
from ..groups.abelian import enumerate_characters
from ..torsion.engine import BudgetExhausted, WorkCounter, torsion
from .certificates import TorsionCertificate, certificate_from_value
from .jobs import JobError, JobSpec, RepSpec, SearchSpec, build_representation


@dataclass(frozen=True)
class SearchRow:
    n: int
    alpha: tuple[int, ...]
    rep: RepSpec
    field_rank: int           # 0 for characteristic zero, then requested primes in order
    dim: int
    width: int
    acyclic: bool
    bound: Fraction
    inequality_holds: bool | None

    @property
    def label(self) -> str:
        return self.rep.format()

    def key(self):
        return (-self.bound, self.n, self.dim, self.field_rank)


@dataclass(frozen=True)
class SearchResult:
    best: TorsionCertificate | None
    best_row: SearchRow | None
    rows: tuple[SearchRow, ...]
    exhausted: bool
    reason: str = ""
    work_units: int = 0

    def sound(self) -> bool:
        return all(r.inequality_holds is not False for r in self.rows)


def candidate_reps(job: JobSpec, spec: SearchSpec):
    """(n, alpha, field rank, RepSpec) in the fixed search order.

    n = 1 gives the trivial representation.  For n >= 2 and each character
    onto Z/n: the character over Q(zeta_n), the augmentation module over
    Q(zeta_n), then the augmentation module over each requested F_q with q
    prime to n.
    """
    p = job.presentation()
    yield 1, (0,) * p.ngens, 0, RepSpec("trivial")
    for n in range(2, spec.n_max + 1):
        cyc = parse_field(f"Q(zeta_{n})").name
        for alpha in enumerate_characters(p, n):
            if alpha.image_size() != n:
                continue
            vals = alpha.values
            yield n, vals, 0, RepSpec("character", n, cyc, vals)
            yield n, vals, 0, RepSpec("augmentation", n, cyc, vals)
            for rank, q in enumerate(spec.primes, start=1):
                if gcd(q, n) == 1:
                    yield n, vals, rank, RepSpec("augmentation", n, f"F{q}", vals)


def run_search(job: JobSpec, spec: SearchSpec | None = None, clock=time.monotonic) -> SearchResult:
    """Evaluate every candidate in order; keep the best width/dim.

    Ties go to smaller n, then smaller dimension, then field order.  When the
    work-unit or wall-clock budget runs out, the rows computed so far are
    returned with ``exhausted`` set.
    """
    if job.kind != "presentation":
        raise JobError("search needs a presentation job")
    if job.theta is None:
        raise JobError("search needs theta")
    spec = spec or job.search or SearchSpec()
    p = job.presentation()
    theta = job.cohom_class()
    opts = job.torsion_options(p)
    counter = WorkCounter(spec.max_units)
    deadline = None if spec.seconds is None else clock() + spec.seconds
    ref = job.reference[0] if job.reference else None
    rows: list[SearchRow] = []
    values: dict = {}
    exhausted, reason = False, ""
    for n, alpha, rank, rs in candidate_reps(job, spec):
        if deadline is not None and clock() > deadline:
            exhausted, reason = True, f"wall-clock budget of {spec.seconds:g}s exhausted"
            break
        v = build_representation(rs, p)
        try:
            tau = torsion(p, theta, v, counter=counter, **opts)
        except BudgetExhausted as exc:
            exhausted, reason = True, str(exc)
            break
        bound = Fraction(tau.width, v.dim)
        ok = None if ref is None else v.dim * ref >= tau.width
        row = SearchRow(n, alpha, rs, rank, v.dim, tau.width, tau.acyclic, bound, ok)
        rows.append(row)
        values[len(rows) - 1] = (tau, v.provenance)
    if not rows:
        return SearchResult(None, None, (), exhausted, reason, counter.count)
    best_i = min(range(len(rows)), key=lambda i: rows[i].key())
    tau, prov = values[best_i]
    best_job = replace(job, rep=rows[best_i].rep, search=None)
    cert = certificate_from_value(best_job, tau, prov)
    return SearchResult(cert, rows[best_i], tuple(rows), exhausted, reason, counter.count)


def format_table(result: SearchResult) -> str:
    head = f"{'n':>3} {'dim':>4} {'width':>6} {'bound':>7}  ok  representation"
    lines = [head]
    for r in result.rows:
        ok = "-" if r.inequality_holds is None else ("yes" if r.inequality_holds else "NO")
        lines.append(f"{r.n:>3} {r.dim:>4} {r.width:>6} {str(r.bound):>7} {ok:>3}  {r.label}")
    if result.exhausted:
        lines.append(f"# partial table: {result.reason}")
    return "\n".join(lines) + "\n"
