"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 precondition failure (non-acyclic or
degenerate input, non-good representation), 3 budget exhausted.
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import replace

import sympy

from .. import __version__
from ..graph import PreconditionError, graph_torsion, verify_detection
from ..groups.abelian import Character
from ..groups.cosets import CosetTable, CosetTableError, reidemeister_schreier
from ..groups.presentation import CohomologyError, PresentationError
from ..representations import RepresentationError, char_rep, induce, trivial_rep
from ..torsion.engine import BudgetExhausted, TorsionError, torsion
from ..torsion.goodprime import SearchExhausted, find_good_prime, parse_multivariate
from ..torsion.modp import modp_compare
from .certificates import CertificateError, certify, emit_certificate, parse_certificate, verify_certificate
from .jobs import JobError, SearchSpec, build_cyclic, build_representation, parse_job
from .search import format_table, run_search

OK, INPUT_ERROR, PRECONDITION, BUDGET = 0, 1, 2, 3


class Failure(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _read(path: str) -> str:
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise Failure(INPUT_ERROR, f"cannot read {path}: {exc.strerror}") from None


def _load_job(path: str):
    try:
        return parse_job(_read(path))
    except JobError as exc:
        raise Failure(INPUT_ERROR, f"{path}: {exc}") from None


def _write(text: str, path: str | None):
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def cmd_torsion(args) -> int:
    job = _load_job(args.job)
    if job.kind != "presentation":
        raise Failure(INPUT_ERROR, "torsion needs a presentation job; use 'graph' for graph structures")
    cert = certify(job)
    _write(emit_certificate(cert), args.out)
    if not cert.acyclic:
        print("torsion is zero: the determinant formula degenerates for every admissible choice",
              file=sys.stderr)
        return PRECONDITION
    return OK


def cmd_search(args) -> int:
    job = _load_job(args.job)
    spec = job.search or SearchSpec()
    changes = {}
    if args.n_max is not None:
        changes["n_max"] = args.n_max
    if args.primes is not None:
        changes["primes"] = _ints(args.primes)
    if args.max_units is not None:
        changes["max_units"] = args.max_units
    if args.seconds is not None:
        changes["seconds"] = args.seconds
    spec = replace(spec, **changes)
    result = run_search(job, spec)
    sys.stdout.write(format_table(result))
    if result.best is not None:
        print()
        _write(emit_certificate(result.best), args.out)
    return BUDGET if result.exhausted else OK


def cmd_graph(args) -> int:
    job = _load_job(args.job)
    if job.kind != "graph":
        raise Failure(INPUT_ERROR, "graph needs a job with kind: graph")
    if job.rep is None:
        raise Failure(INPUT_ERROR, "graph job needs rep: augmentation ... or rep: character ...")
    w = build_cyclic(job.rep)
    report = graph_torsion(job.graph(), w)
    if report.vanishing:
        print(f"block factors vanish at {', '.join(report.vanishing)}; no torsion reported", file=sys.stderr)
        return PRECONDITION
    _write(emit_certificate(certify(job)), args.out)
    ok = verify_detection(job.graph(), w)
    print(f"detection: width {report.width} {'=' if ok else '!='} dim {w.dim} * norm {report.norm}")
    return OK if ok else PRECONDITION


def cmd_modp(args) -> int:
    job = _load_job(args.job)
    if job.rep is None or job.theta is None:
        raise Failure(INPUT_ERROR, "modp needs theta and rep in the job")
    p = job.presentation()
    v = build_representation(job.rep, p)
    primes = _ints(args.primes) if args.primes else tuple(sympy.primerange(2, args.up_to + 1))
    table = modp_compare(p, job.cohom_class(), v, primes, **job.torsion_options(p))
    bad = ",".join(map(str, sorted(table.bad_primes))) or "none"
    print(f"characteristic-zero width: {table.width}")
    print(f"bad primes: {bad}")
    print(f"{'p':>5} {'bad':>4} {'reduced':>8} {'direct':>7}  agrees")
    for r in table.rows:
        red = "-" if r.reduced_width is None else str(r.reduced_width)
        print(f"{r.prime:>5} {'yes' if r.bad else 'no':>4} {red:>8} {r.direct_width:>7}  "
              f"{'yes' if r.agrees else 'no'}")
    return OK if table.stable_outside_bad() else PRECONDITION


def cmd_goodprime(args) -> int:
    names = tuple(args.vars.split(",")) if args.vars else None
    if names is None:
        found = set()
        for text in args.polys:
            found.update(parse_multivariate(text)[1])
        names = tuple(sorted(found))
    polys = []
    for text in args.polys:
        poly, _ = parse_multivariate(text, names)
        if not poly:
            raise Failure(INPUT_ERROR, f"polynomial {text!r} is zero")
        polys.append(poly)
    res = find_good_prime(polys, args.psi_bound, args.q_bound)
    print(f"variables: {' '.join(names)}")
    print(f"psi: {' '.join(map(str, res.psi))}")
    print(f"q: {res.q}")
    print(f"alpha: {' '.join(map(str, res.alpha))}")
    for text, proj in zip(args.polys, res.projections):
        terms = " ".join(f"t^{e}:{c}" for e, c in sorted(proj.items()))
        print(f"projection: {text} -> {terms}")
    return OK


def cmd_cover(args) -> int:
    job = _load_job(args.job)
    rs = job.rep
    if rs is None or rs.kind != "induced" or job.theta is None:
        raise Failure(INPUT_ERROR, "cover needs theta and rep: induced n=... alpha=... in the job")
    p = job.presentation()
    theta = job.cohom_class()
    alpha = Character(rs.n, rs.alpha).check(p)
    cover = reidemeister_schreier(p, CosetTable.from_character(p, alpha))
    sub = cover.presentation
    f = rs.field_obj()
    inner = trivial_rep(sub, f, rs.dim) if rs.inner_n is None else \
        char_rep(Character(rs.inner_n, rs.inner_alpha), f, sub, rs.j)
    up = torsion(sub, cover.pullback(theta), inner)
    down = torsion(p, theta, induce(inner, cover))
    print(f"cover: index {cover.index}, {sub.ngens} generators, {sub.nrels} relators")
    print(f"pulled-back theta: {' '.join(map(str, cover.pullback(theta).values))}")
    print(f"width on cover: {up.width}")
    print(f"width of induced representation on base: {down.width}")
    same = up.width == down.width
    print(f"agree: {'yes' if same else 'no'}")
    return OK if same else PRECONDITION


def cmd_verify(args) -> int:
    try:
        cert = parse_certificate(_read(args.certificate))
    except CertificateError as exc:
        raise Failure(INPUT_ERROR, f"{args.certificate}: {exc}") from None
    problems = verify_certificate(cert)
    for msg in problems:
        print(f"mismatch: {msg}")
    if not problems:
        print("certificate verified")
    return OK if not problems else PRECONDITION


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="twtorsion", description="Twisted torsion and Thurston norm bounds.")
    ap.add_argument("--version", action="version", version=f"twtorsion {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    s = sub.add_parser("torsion", help="torsion of one representation; prints a certificate")
    s.add_argument("job")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_torsion)

    s = sub.add_parser("search", help="search cyclic representations for the best bound")
    s.add_argument("job")
    s.add_argument("--n-max", type=int)
    s.add_argument("--primes", help="comma-separated primes for augmentation modules over F_q")
    s.add_argument("--max-units", type=int, help="budget in determinant evaluations")
    s.add_argument("--seconds", type=float, help="wall-clock budget")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_search)

    s = sub.add_parser("graph", help="product-formula torsion of a graph structure")
    s.add_argument("job")
    s.add_argument("-o", "--out")
    s.set_defaults(func=cmd_graph)

    s = sub.add_parser("modp", help="compare widths over Q and over F_p")
    s.add_argument("job")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--primes")
    g.add_argument("--up-to", type=int, default=50)
    s.set_defaults(func=cmd_modp)

    s = sub.add_parser("goodprime", help="projection and prime avoiding cyclotomic zeros")
    s.add_argument("polys", nargs="+", help="integer Laurent polynomials, e.g. 'x - y + 1'")
    s.add_argument("--vars", help="comma-separated variable order")
    s.add_argument("--psi-bound", type=int, default=20)
    s.add_argument("--q-bound", type=int, default=10_000)
    s.set_defaults(func=cmd_goodprime)

    s = sub.add_parser("cover", help="compare torsion on a cyclic cover with the induced representation")
    s.add_argument("job")
    s.set_defaults(func=cmd_cover)

    s = sub.add_parser("verify", help="recompute a certificate")
    s.add_argument("certificate")
    s.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Failure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (JobError, PresentationError, CohomologyError, CosetTableError, RepresentationError,
            CertificateError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (TorsionError, PreconditionError) as exc:
        print(f"precondition failure: {exc}", file=sys.stderr)
        return PRECONDITION
    except (BudgetExhausted, SearchExhausted) as exc:
        print(f"budget exhausted: {exc}", file=sys.stderr)
        return BUDGET
    except ValueError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
