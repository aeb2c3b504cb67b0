"""Certificates: canonical text records of a torsion computation that can be re-checked."""
from __future__ import annotations

import hashlib
from dataclasses import dataclass, replace
from fractions import Fraction

from .. import __version__
from ..graph import graph_torsion
from ..torsion.engine import TorsionError, TorsionValue, bound_report, torsion
from .jobs import JobError, JobSpec, build_cyclic, build_representation, format_job, parse_job

HEADER = "twtorsion-certificate v1"
ENGINE = f"twtorsion {__version__}"


class CertificateError(ValueError):
    pass


def _terms(poly) -> tuple[tuple[int, str], ...]:
    """Nonzero coefficients, lowest exponent first, as (exponent, text)."""
    f = poly.field
    return tuple((e, f.format(c)) for e, c in sorted(poly.terms().items()))


def _format_terms(terms) -> str:
    return " ".join(f"t^{e}:{c}" for e, c in terms) if terms else "0"


def _parse_terms(text: str) -> tuple[tuple[int, str], ...]:
    if text.strip() == "0":
        return ()
    out = []
    for tok in text.split():
        if not tok.startswith("t^") or ":" not in tok:
            raise CertificateError(f"bad coefficient term {tok!r}")
        e, c = tok[2:].split(":", 1)
        out.append((int(e), c))
    return tuple(out)


@dataclass(frozen=True)
class TorsionCertificate:
    kind: str
    input_text: str                  # canonical job text this certificate answers
    input_sha256: str
    provenance: tuple[str, ...]
    field: str
    acyclic: bool
    numerator: tuple = ()            # ((exponent, coefficient text), ...)
    denominator: tuple = ()
    factors: tuple = ()              # graph jobs: ((vertex, exponent, terms), ...)
    width: int = 0
    dim: int = 0
    bound: Fraction = Fraction(0)
    integer_bound: int = 0
    en_norm: int | None = None
    reference: tuple[int, str] | None = None
    verdict: str | None = None
    engine: str = ENGINE

    def job(self) -> JobSpec:
        return parse_job(self.input_text)


def _verdict(width: int, dim: int, reference) -> str | None:
    if reference is None:
        return None
    norm = reference[0]
    if dim * norm == width:
        return "detected"
    if dim * norm > width:
        return "bound-only"
    return "inequality-violated"


def sha256(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def certify(job: JobSpec, counter=None) -> TorsionCertificate:
    """Run one torsion computation described by ``job`` and record it."""
    if job.rep is None:
        raise JobError("job has no representation (rep: ...)")
    canon = format_job(replace(job, search=None))
    if job.kind == "graph":
        w = build_cyclic(job.rep)
        rep = graph_torsion(job.graph(), w)
        if rep.vanishing:
            raise TorsionError(f"block factors vanish at {', '.join(rep.vanishing)}; representation not good")
        factors = tuple((fac.vertex, fac.exponent, _terms(fac.polynomial)) for fac in rep.factors)
        b = bound_report(rep.width, w.dim, job.reference[0] if job.reference else None)
        return TorsionCertificate("graph", canon, sha256(canon), w.provenance, w.field.name, True,
                                  factors=factors, width=rep.width, dim=w.dim, bound=b.bound,
                                  integer_bound=b.integer_bound, en_norm=rep.norm, reference=job.reference,
                                  verdict=_verdict(rep.width, w.dim, job.reference))
    if job.theta is None:
        raise JobError("presentation job has no theta")
    p = job.presentation()
    v = build_representation(job.rep, p)
    tau = torsion(p, job.cohom_class(), v, counter=counter, **job.torsion_options(p))
    return certificate_from_value(job, tau, v.provenance)


def certificate_from_value(job: JobSpec, tau: TorsionValue, provenance) -> TorsionCertificate:
    canon = format_job(replace(job, search=None))
    num, den = tau.normalized()
    b = bound_report(tau, tau.dim, job.reference[0] if job.reference else None)
    return TorsionCertificate("presentation", canon, sha256(canon), tuple(provenance), tau.field.name,
                              tau.acyclic, _terms(num), _terms(den), (), tau.width, tau.dim, b.bound,
                              b.integer_bound, None, job.reference, _verdict(tau.width, tau.dim, job.reference))


def emit_certificate(c: TorsionCertificate) -> str:
    out = [HEADER, f"engine: {c.engine}", f"kind: {c.kind}", f"input-sha256: {c.input_sha256}"]
    out += [f"input: {ln}" for ln in c.input_text.splitlines()]
    out += [f"provenance: {p}" for p in c.provenance]
    out.append(f"field: {c.field}")
    out.append(f"acyclic: {'yes' if c.acyclic else 'no'}")
    if c.kind == "graph":
        for name, e, terms in c.factors:
            out.append(f"factor: {name} exponent={e} {_format_terms(terms)}")
        out.append(f"en-norm: {c.en_norm}")
    else:
        out.append(f"numerator: {_format_terms(c.numerator)}")
        out.append(f"denominator: {_format_terms(c.denominator)}")
    out.append(f"width: {c.width}")
    out.append(f"dim: {c.dim}")
    out.append(f"bound: {c.bound}")
    out.append(f"integer-bound: {c.integer_bound}")
    if c.reference is not None:
        note = f" | {c.reference[1]}" if c.reference[1] else ""
        out.append(f"reference: {c.reference[0]}{note}")
        out.append(f"verdict: {c.verdict}")
    return "\n".join(out) + "\n"


def parse_certificate(text: str) -> TorsionCertificate:
    lines = text.splitlines()
    if not lines or lines[0].strip() != HEADER:
        raise CertificateError(f"first line must be {HEADER!r}")
    data: dict = {"input": [], "provenance": [], "factor": []}
    for ln in lines[1:]:
        if not ln.strip():
            continue
        key, sep, value = ln.partition(": ")
        if not sep:
            key, value = ln.rstrip(":"), ""
        if key in data and isinstance(data[key], list):
            data[key].append(value)
        elif key in data:
            raise CertificateError(f"duplicate field {key!r}")
        else:
            data[key] = value
    try:
        factors = []
        for fline in data["factor"]:
            name, exp, rest = (fline.split(None, 2) + [""])[:3]
            factors.append((name, int(exp.split("=", 1)[1]), _parse_terms(rest)))
        reference = None
        if "reference" in data:
            num, _, note = data["reference"].partition("|")
            reference = (int(num.strip()), note.strip())
        input_text = "\n".join(data["input"]) + "\n"
        return TorsionCertificate(
            kind=data["kind"],
            input_text=input_text,
            input_sha256=data["input-sha256"],
            provenance=tuple(data["provenance"]),
            field=data["field"],
            acyclic=data["acyclic"] == "yes",
            numerator=_parse_terms(data["numerator"]) if "numerator" in data else (),
            denominator=_parse_terms(data["denominator"]) if "denominator" in data else (),
            factors=tuple(factors),
            width=int(data["width"]),
            dim=int(data["dim"]),
            bound=Fraction(data["bound"]),
            integer_bound=int(data["integer-bound"]),
            en_norm=int(data["en-norm"]) if "en-norm" in data else None,
            reference=reference,
            verdict=data.get("verdict"),
            engine=data["engine"],
        )
    except KeyError as exc:
        raise CertificateError(f"missing field {exc.args[0]!r}") from None
    except ValueError as exc:
        raise CertificateError(str(exc)) from None


def verify_certificate(c: TorsionCertificate) -> list[str]:
    """Recompute from the embedded input; return a list of discrepancies (empty if valid)."""
    problems = []
    if sha256(c.input_text) != c.input_sha256:
        problems.append("input hash does not match the embedded input")
    fresh = certify(c.job())
    for name in ("width", "dim", "bound", "integer_bound", "numerator", "denominator", "factors",
                 "en_norm", "verdict", "acyclic", "field"):
        if getattr(fresh, name) != getattr(c, name):
            problems.append(f"{name}: certificate has {getattr(c, name)!r}, recomputed {getattr(fresh, name)!r}")
    if c.reference is not None and c.dim * c.reference[0] < c.width:
        problems.append("width exceeds dim * reference norm")
    return problems
