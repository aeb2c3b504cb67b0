"""Twisted Reidemeister torsion from a presentation by the determinant formula."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from ..algebra.fields import Field
from ..algebra.laurent import LaurentPoly, RatFn, equal_up_to_unit
from ..algebra.matrix import PolyMatrix, det_poly_matrix
from ..groups.presentation import CohomClass, Presentation
from ..representations import Representation, TwistedHom, direct_sum

UNIT_NOTE = "defined up to multiplication by +-t^k det(rho(g)), g in pi"


class TorsionError(ValueError):
    """Input does not meet the preconditions of the determinant formula."""


class WorkCounter:
    """Counts determinant evaluations; raises ``BudgetExhausted`` past a limit."""

    def __init__(self, limit: int | None = None):
        self.limit = limit
        self.count = 0

    def tick(self, k: int = 1):
        self.count += k
        if self.limit is not None and self.count > self.limit:
            raise BudgetExhausted(f"work budget of {self.limit} determinant evaluations exhausted")


class BudgetExhausted(RuntimeError):
    pass


@dataclass(frozen=True)
class TorsionValue:
    """tau = numerator / denominator, or the zero convention when not acyclic.

    ``numerator`` and ``denominator`` are the raw determinants x(t), y(t)
    of the formula; ``normalized()`` gives the reporting representative.
    """

    numerator: LaurentPoly
    denominator: LaurentPoly
    acyclic: bool
    dim: int
    column: int | None = None
    row: int | None = None
    column_widths: tuple = ()
    note: str = UNIT_NOTE

    @property
    def field(self) -> Field:
        return self.numerator.field

    @property
    def width(self) -> int:
        if not self.acyclic or self.numerator.is_zero():
            return 0
        return self.numerator.width() - self.denominator.width()

    @property
    def value(self) -> RatFn:
        return RatFn(self.numerator, self.denominator)

    def is_zero(self) -> bool:
        return not self.acyclic

    def normalized(self) -> tuple[LaurentPoly, LaurentPoly]:
        """Shift both to nonzero constant term; scale so den(0) = 1."""
        if not self.acyclic:
            return self.numerator, LaurentPoly.one(self.field)
        num = self.numerator.shift(-self.numerator.low)
        den = self.denominator.shift(-self.denominator.low)
        c = self.field.inv(den.trailing)
        return num.scale(c), den.scale(c)

    @classmethod
    def zero(cls, f: Field, dim: int, **kw) -> "TorsionValue":
        return cls(LaurentPoly.zero(f), LaurentPoly.one(f), False, dim, **kw)


def _assemble(grid, d: int, skip_row=None, skip_col=None) -> PolyMatrix | None:
    rows = []
    for i, brow in enumerate(grid):
        if i == skip_row:
            continue
        for a in range(d):
            row = []
            for j, blk in enumerate(brow):
                if j != skip_col:
                    row.extend(blk.rows[a])
            rows.append(row)
    return rows


def _det(f: Field, rows, counter: WorkCounter | None) -> LaurentPoly:
    if counter is not None:
        counter.tick()
    return det_poly_matrix(PolyMatrix(f, rows))


def torsion_deficiency_one(p: Presentation, theta: CohomClass, rep: Representation,
                           all_columns: bool = True, counter: WorkCounter | None = None) -> TorsionValue:
    """tau = det Phi(Jacobian without column j) / det Phi(x_j - 1).

    j runs over generators with det Phi(x_j - 1) != 0.  With ``all_columns``
    every admissible j is evaluated and their widths must agree.
    """
    if p.deficiency != 1:
        raise TorsionError(f"deficiency-one formula needs #relators = #generators - 1, got {p.nrels}/{p.ngens}")
    if rep.presentation != p:
        raise TorsionError("representation belongs to a different presentation")
    theta.check(p)
    f, d = rep.field, rep.dim
    phi = TwistedHom(rep, theta)
    grid = phi.fox_jacobian()
    results = []
    for j in range(p.ngens):
        den = _det(f, phi.generator_minus_one(j).rows, counter)
        if den.is_zero():
            continue
        num = _det(f, _assemble(grid, d, skip_col=j), counter)
        results.append((j, num, den))
        if not all_columns:
            break
    if not results:
        return TorsionValue.zero(f, d)
    zero_flags = {num.is_zero() for _, num, _ in results}
    if len(zero_flags) > 1:
        raise AssertionError("column independence violated: some admissible columns give tau = 0")
    j, num, den = results[0]
    if num.is_zero():
        return TorsionValue.zero(f, d, column=j)
    widths = tuple((jj, n.width() - dd.width()) for jj, n, dd in results)
    if len({w for _, w in widths}) > 1:
        raise AssertionError(f"column independence violated: widths {widths}")
    return TorsionValue(num, den, True, d, column=j, column_widths=widths)


def torsion_closed(p: Presentation, theta: CohomClass, rep: Representation,
                   g: int | None = None, h: int | None = None, dual: dict | None = None,
                   counter: WorkCounter | None = None) -> TorsionValue:
    """tau = det Phi(B) * det Phi(1 - g)^-1 * det Phi(1 - h)^-1 for balanced presentations.

    ``dual`` maps a relator index to the word h whose 3-cell boundary entry is
    1 - h; B deletes the column of generator g and that relator's row.  The
    default pairs relator i with generator i.  ``g``/``h`` fix the choice
    (h is a relator index); otherwise pairs with nonzero theta-values are
    tried in order.
    """
    if p.deficiency != 0:
        raise TorsionError(f"closed formula needs #relators = #generators, got {p.nrels}/{p.ngens}")
    if rep.presentation != p:
        raise TorsionError("representation belongs to a different presentation")
    theta.check(p)
    if dual is None:
        dual = {i: (i + 1,) for i in range(p.nrels)}
    f, d = rep.field, rep.dim
    phi = TwistedHom(rep, theta)
    gs = [g] if g is not None else [j for j in range(p.ngens) if theta.values[j]]
    hs = [h] if h is not None else [i for i in sorted(dual) if theta(dual[i])]
    one = PolyMatrix.identity(f, d)
    grid = None
    for gj in gs:
        den_g = _det(f, (one - phi((gj + 1,))).rows, counter)
        if den_g.is_zero():
            continue
        for row in hs:
            den_h = _det(f, (one - phi(dual[row])).rows, counter)
            if den_h.is_zero():
                continue
            if grid is None:
                grid = phi.fox_jacobian()
            num = _det(f, _assemble(grid, d, skip_row=row, skip_col=gj), counter)
            if num.is_zero():
                return TorsionValue.zero(f, d, column=gj, row=row)
            return TorsionValue(num, den_g * den_h, True, d, column=gj, row=row)
    return TorsionValue.zero(f, d)


def torsion(p: Presentation, theta: CohomClass, rep: Representation, **kw) -> TorsionValue:
    """Dispatch on deficiency (1: boundary formula, 0: closed formula)."""
    if p.deficiency == 1:
        return torsion_deficiency_one(p, theta, rep, **kw)
    if p.deficiency == 0:
        return torsion_closed(p, theta, rep, **kw)
    raise TorsionError(f"unsupported deficiency {p.deficiency}")


@dataclass(frozen=True)
class BoundReport:
    dim: int
    width: int
    bound: Fraction
    integer_bound: int
    reference_norm: int | None = None
    detected: bool | None = None
    inequality_holds: bool | None = None
    extra: dict = field(default_factory=dict, compare=False)


def bound_report(tau: TorsionValue | int, rep: Representation | int,
                 reference_norm: int | None = None) -> BoundReport:
    """Lower bound width/dim on the Thurston norm; detection iff dim * norm = width.

    ``tau`` may be a torsion value or a bare width.
    """
    dim = rep if isinstance(rep, int) else rep.dim
    w = tau if isinstance(tau, int) else tau.width
    bound = Fraction(w, dim) if dim else Fraction(0)
    ibound = max(0, math.ceil(bound))
    if reference_norm is None:
        return BoundReport(dim, w, bound, ibound)
    return BoundReport(dim, w, bound, ibound, reference_norm,
                       dim * reference_norm == w, dim * reference_norm >= w)


def multiplicativity_check(p: Presentation, theta: CohomClass, a: Representation, b: Representation,
                           **kw) -> bool:
    """tau(A + B) = tau(A) tau(B) up to units, and widths add."""
    tab = torsion(p, theta, direct_sum(a, b), **kw)
    ta = torsion(p, theta, a, **kw)
    tb = torsion(p, theta, b, **kw)
    if tab.is_zero() or ta.is_zero() or tb.is_zero():
        return tab.is_zero() == (ta.is_zero() or tb.is_zero())
    if tab.width != ta.width + tb.width:
        return False
    lhs = tab.numerator * ta.denominator * tb.denominator
    rhs = ta.numerator * tb.numerator * tab.denominator
    return equal_up_to_unit(lhs, rhs)
