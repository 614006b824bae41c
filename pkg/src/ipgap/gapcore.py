"""Worst-case gap between integer programs and their linear relaxations.

For a matrix A and cost c, every right-hand side b defines an integer
program over the fiber {z >= 0 integer : Az = b} and a relaxation over the
same polyhedron without integrality.  The gap of the instance is the
supremum of IP(b) - LP(b) over all feasible b.  It is computed here
without touching any b at all: the non-optimal monomial ideal is
decomposed into irreducible components, each component contributes the
value of one small linear program over the lattice coefficients, and the
gap is the largest contribution.  A witness right-hand side attaining the
gap is reconstructed from the winning component's optimum and re-checked
exactly before it is reported.

Everything also works for a plain lattice in place of ker(A): fibers are
then residue classes z + L, which is the strictly wider setting (finite
index lattices are kernels of no integer matrix).
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import floor
from typing import NamedTuple

from . import lp
from .errors import BadParameter, UnboundedAux, UnboundedProgram, WitnessMismatch
from .exactmath import IntMatrix, LatticeBasis, kernel_lattice
from .monomial import (
    IrreducibleComponent,
    MonomialIdeal,
    irreducible_decomposition,
)
from .toric import (
    GroebnerBasis,
    TermOrder,
    buchberger,
    ip_optimum,
    lattice_ideal_generators,
    non_optimal_ideal,
)


def _as_order(cost, tiebreak: str) -> TermOrder:
    if isinstance(cost, TermOrder):
        return cost
    return TermOrder(cost, tiebreak)


@dataclass(frozen=True)
class GapInstance:
    """Everything the gap computation derives from one (A, c) or (L, c).

    matrix is None for instances given directly by a lattice.  lattice
    columns generate the fibers' difference set; groebner is the reduced
    basis under the cost-refined order, ideal the non-optimal monomial
    ideal, components its irredundant irreducible decomposition (empty
    exactly when the ideal is zero).
    """

    matrix: IntMatrix | None
    lattice: LatticeBasis
    cost: tuple[Fraction, ...]
    groebner: GroebnerBasis
    ideal: MonomialIdeal
    components: tuple[IrreducibleComponent, ...]

    @classmethod
    def from_matrix(cls, a: IntMatrix, cost, tiebreak: str = "grevlex") -> "GapInstance":
        if not isinstance(a, IntMatrix):
            a = IntMatrix(a)
        return cls._build(a, kernel_lattice(a), cost, tiebreak)

    @classmethod
    def from_lattice(cls, l: LatticeBasis, cost, tiebreak: str = "grevlex") -> "GapInstance":
        if not isinstance(l, IntMatrix):
            l = IntMatrix(l)
        return cls._build(None, l, cost, tiebreak)

    @classmethod
    def _build(cls, a, lattice, cost, tiebreak) -> "GapInstance":
        order = _as_order(cost, tiebreak)
        n = lattice.nrows
        if order.nvars is not None and order.nvars != n:
            raise BadParameter("cost length does not match the variable count")
        gens = lattice_ideal_generators(lattice)
        gb = buchberger(gens, order)
        ideal = non_optimal_ideal(gb) if gb.elements else MonomialIdeal(n)
        comps = () if ideal.is_zero else irreducible_decomposition(ideal)
        return cls(a, lattice, order.cost, gb, ideal, comps)

    @property
    def nvars(self) -> int:
        return self.lattice.nrows


class ComponentGap(NamedTuple):
    component: IrreducibleComponent
    value: Fraction
    aux_optimum: tuple[Fraction, ...]


@dataclass(frozen=True)
class GapReport:
    """Result of a gap computation.

    per_component parallels the instance's component list; gap is the
    maximum value; winner is the first component attaining it in the
    canonical component order and attaining lists all of them; witness_z
    is a nonnegative integer point whose program exhibits the gap;
    schrijver_bound is the a-priori bound n D(A) sum|c_i| when a matrix
    is available, None for pure lattice instances.
    """

    per_component: tuple[ComponentGap, ...]
    gap: Fraction
    winner: IrreducibleComponent | None
    attaining: tuple[IrreducibleComponent, ...]
    witness_z: tuple[int, ...]
    schrijver_bound: Fraction | None


def gap_value(
    comp: IrreducibleComponent, inst: GapInstance, *, cost=None
) -> tuple[Fraction, tuple[Fraction, ...]]:
    """Gap contribution of one irreducible component, with its optimum.

    The component's corner u and support tau define the program
        max  sum_{i in tau} c_i u_i - c.v
        over v congruent to u modulo the lattice, v_i >= 0 for i in tau.
    Writing v = u - Bt over the lattice coefficients t turns it into
        max  (B^T c).t  subject to (row i of B).t <= u_i for i in tau,
    a program in only rank-many free variables.  Returns the exact value
    and the attaining v.  cost overrides the instance's cost row, for
    callers probing other points of the same cone.
    """
    cols = inst.lattice.columns()
    m = len(cols)
    n = inst.nvars
    u = comp.bound
    c = inst.cost if cost is None else tuple(Fraction(x) for x in cost)
    if m == 0:
        return Fraction(0), tuple(Fraction(x) for x in u)
    w = tuple(
        sum((c[i] * cols[k][i] for i in range(n)), Fraction(0)) for k in range(m)
    )
    prob = lp.LPProblem(
        objective=w,
        sense="max",
        ub=tuple(
            (tuple(Fraction(cols[k][i]) for k in range(m)), Fraction(u[i]))
            for i in comp.support
        ),
        free=(True,) * m,
    )
    sol = lp.solve(prob)
    if sol.status == lp.UNBOUNDED:
        raise UnboundedAux(
            f"auxiliary program unbounded for the component on support "
            f"{comp.support}; the instance violates the boundedness precondition"
        )
    t = sol.x
    v = tuple(
        Fraction(u[i]) - sum((Fraction(cols[k][i]) * t[k] for k in range(m)), Fraction(0))
        for i in range(n)
    )
    return sol.value, v


def _relaxation_value(inst: GapInstance, z) -> Fraction:
    """min c.v over v >= 0 congruent to z modulo the lattice's real span."""
    cols = inst.lattice.columns()
    m = len(cols)
    n = inst.nvars
    c = inst.cost
    base = sum((c[i] * z[i] for i in range(n)), Fraction(0))
    if m == 0:
        return base
    w = tuple(
        sum((c[i] * cols[k][i] for i in range(n)), Fraction(0)) for k in range(m)
    )
    prob = lp.LPProblem(
        objective=w,
        sense="min",
        ub=tuple(
            (tuple(Fraction(-cols[k][i]) for k in range(m)), Fraction(z[i]))
            for i in range(n)
        ),
        free=(True,) * m,
    )
    sol = lp.solve(prob)
    if sol.status != lp.OPTIMAL:
        raise UnboundedProgram("relaxation unbounded below; preconditions violated")
    return base + sol.value


def _integer_value(inst: GapInstance, z) -> Fraction:
    opt = ip_optimum(inst.groebner, z)
    return sum((ci * zi for ci, zi in zip(inst.cost, opt)), Fraction(0))


def gap_witness(report: GapReport, inst: GapInstance) -> tuple[int, ...]:
    """A nonnegative integer point whose program attains the reported gap.

    Rounds the winning component's optimum v* up coordinatewise to kill
    negative entries (z = u + v' with v'_i = max(0, -floor(v*_i))) and
    verifies IP(z) - LP(z) = gap by an independent exact solve of both
    sides; any disagreement is an internal error, never silent.
    """
    if report.winner is None:
        return (0,) * inst.nvars
    entry = next(e for e in report.per_component if e.component == report.winner)
    u = entry.component.bound
    vprime = tuple(max(0, -floor(v)) for v in entry.aux_optimum)
    z = tuple(int(a) + b for a, b in zip(u, vprime))
    achieved = _integer_value(inst, z) - _relaxation_value(inst, z)
    if achieved != report.gap:
        raise WitnessMismatch(
            f"constructed witness attains {achieved}, expected {report.gap}"
        )
    return z


def _assemble_report(inst: GapInstance, bound: Fraction | None) -> GapReport:
    if not inst.components:
        report = GapReport((), Fraction(0), None, (), (0,) * inst.nvars, bound)
        return report
    per = tuple(
        ComponentGap(comp, *gap_value(comp, inst)) for comp in inst.components
    )
    best = max(e.value for e in per)
    attaining = tuple(e.component for e in per if e.value == best)
    report = GapReport(per, best, attaining[0], attaining, (), bound)
    witness = gap_witness(report, inst)
    return dataclasses.replace(report, witness_z=witness)


def gap(a, c, tiebreak: str = "grevlex") -> GapReport:
    """The integer programming gap of (A, c): worst case over all b.

    Equals the maximum gap value over the irreducible components of the
    non-optimal ideal; zero (with an empty component list) when that
    ideal is zero.
    """
    inst = GapInstance.from_matrix(a, c, tiebreak)
    return _assemble_report(inst, schrijver_bound(inst.matrix, inst.cost))


def gap_lattice(l, c, tiebreak: str = "grevlex") -> GapReport:
    """The lattice programming gap: fibers are residue classes z + L."""
    inst = GapInstance.from_lattice(l, c, tiebreak)
    return _assemble_report(inst, None)


def gap_report(inst: GapInstance) -> GapReport:
    """Report for an already-built instance (matrix or lattice flavored)."""
    bound = (
        schrijver_bound(inst.matrix, inst.cost) if inst.matrix is not None else None
    )
    return _assemble_report(inst, bound)


def schrijver_bound(a: IntMatrix, c) -> Fraction:
    """A-priori bound n D(A) sum|c_i|, D(A) the largest maximal minor.

    Maximal minors are taken at the matrix's rank, on a maximal set of
    linearly independent rows: redundant rows change neither the fibers
    nor the gap, and the bound is only valid for a full-row-rank
    presentation.
    """
    if not isinstance(a, IntMatrix):
        a = IntMatrix(a)
    c = tuple(Fraction(x) for x in c)
    if len(c) != a.ncols:
        raise BadParameter("cost length does not match the column count")
    r = a.rank()
    total = sum((abs(x) for x in c), Fraction(0))
    if r == 0:
        return Fraction(0)
    kept: list = []
    for row in a.rows:
        trial = kept + [row]
        if IntMatrix(trial, a.ncols).rank() == len(trial):
            kept.append(row)
        if len(kept) == r:
            break
    d = 0
    for cols in combinations(range(a.ncols), r):
        sub = IntMatrix([[row[j] for j in cols] for row in kept], r)
        d = max(d, abs(sub.det()))
    return a.ncols * d * total
