"""Cost-space structure of the gap: cones, subdivision, exploration.

The reduced basis, hence the non-optimal ideal, is constant on full
dimensional cones of cost space.  On one such cone the gap is the maximum
of finitely many linear forms, one per irreducible component, so the cone
subdivides into full-dimensional pieces on which a single component wins
and the gap function is linear.  This module computes the cone of a
basis, that subdivision, point evaluations, and walks cone to cone by
reflecting interior points across facets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm

from . import lp
from .errors import (
    BadParameter,
    DegenerateCone,
    MathDomainError,
    TrivialInstance,
    VerificationError,
)
from .exactmath import IntMatrix, kernel_lattice
from .gapcore import GapInstance, gap_report, gap_value
from .monomial import IrreducibleComponent
from .toric import (
    GroebnerBasis,
    TermOrder,
    buchberger,
    is_generic,
    lattice_ideal_generators,
)


def _primitive(v) -> tuple[int, ...]:
    fr = [Fraction(x) for x in v]
    mult = lcm(*(f.denominator for f in fr)) if fr else 1
    ints = [int(f * mult) for f in fr]
    g = gcd(*ints) if any(ints) else 1
    return tuple(x // max(g, 1) for x in ints)


@dataclass(frozen=True)
class Cone:
    """Intersection of half-spaces {c : h.c >= 0}, h integral primitive."""

    nvars: int
    inequalities: tuple[tuple[int, ...], ...]

    def __init__(self, nvars: int, inequalities=()):
        rows = []
        for h in inequalities:
            h = _primitive(h)
            if len(h) != nvars:
                raise BadParameter("inequality length does not match dimension")
            if any(h) and h not in rows:
                rows.append(h)
        object.__setattr__(self, "nvars", int(nvars))
        object.__setattr__(self, "inequalities", tuple(sorted(rows)))

    def contains(self, c) -> bool:
        c = tuple(Fraction(x) for x in c)
        return all(
            sum((hi * ci for hi, ci in zip(h, c)), Fraction(0)) >= 0
            for h in self.inequalities
        )

    def interior_point(self) -> tuple[Fraction, ...] | None:
        """A canonical point with every inequality strict, or None.

        Minimizes the l1 norm subject to h.c >= 1; the scaled system is
        feasible exactly when the cone is full dimensional.
        """
        return _strict_point(self.nvars, self.inequalities)


def _strict_point(n, rows) -> tuple[Fraction, ...] | None:
    if not rows:
        return (Fraction(0),) * n
    # variables (c, s): minimize sum s with -s <= c <= s and h.c >= 1
    zero_n = (Fraction(0),) * n
    obj = zero_n + (Fraction(1),) * n
    ub = []
    for h in rows:
        ub.append((tuple(Fraction(-x) for x in h) + zero_n, Fraction(-1)))
    for i in range(n):
        e = [Fraction(0)] * (2 * n)
        e[i], e[n + i] = Fraction(1), Fraction(-1)
        ub.append((tuple(e), Fraction(0)))
        e = [Fraction(0)] * (2 * n)
        e[i], e[n + i] = Fraction(-1), Fraction(-1)
        ub.append((tuple(e), Fraction(0)))
    prob = lp.LPProblem(
        objective=obj,
        sense="min",
        ub=tuple(ub),
        free=(True,) * n + (False,) * n,
    )
    sol = lp.solve(prob)
    if sol.status != lp.OPTIMAL:
        return None
    return sol.x[:n]


@dataclass(frozen=True)
class GapFanPiece:
    """Sub-cone of a Groebner cone where one component's form is maximal."""

    cone: Cone
    winner: IrreducibleComponent
    linear_form: tuple[Fraction, ...]


def groebner_cone(gb: GroebnerBasis) -> Cone:
    """Closure of the costs reproducing this marked reduced basis."""
    n = gb.nvars
    if n is None:
        raise BadParameter("cannot size the cone of an empty basis without costs")
    return Cone(n, (g.vector() for g in gb.elements))


def _component_form(inst: GapInstance, comp, cost) -> tuple[Fraction, ...]:
    _, v = gap_value(comp, inst, cost=cost)
    return tuple(Fraction(u) - vi for u, vi in zip(comp.bound, v))


def gap_fan_subdivide(inst: GapInstance) -> list[GapFanPiece]:
    """Split the instance's Groebner cone by which component wins.

    Every component's auxiliary optimum is computed once at the cone's
    canonical interior point, giving a linear form; the full-dimensional
    regions of the resulting max-of-linear-forms envelope are the pieces.
    Linearity of each component's value is re-verified at the instance's
    own cost, so a vertex jump inside the cone cannot pass silently.
    """
    if not inst.components:
        raise TrivialInstance("the non-optimal ideal is zero; nothing to subdivide")
    cone = groebner_cone(inst.groebner)
    center = cone.interior_point()
    if center is None:
        raise DegenerateCone("the Groebner cone has empty interior")
    forms = []
    for comp in inst.components:
        form = _component_form(inst, comp, center)
        value_here, _ = gap_value(comp, inst)
        linear_here = sum(
            (fi * ci for fi, ci in zip(form, inst.cost)), Fraction(0)
        )
        if value_here != linear_here:
            raise VerificationError(
                f"auxiliary optimum of the component on support {comp.support} "
                "moves within the cone; its gap value is not linear here"
            )
        forms.append((comp, form))
    distinct = []
    for comp, form in forms:
        if form not in (f for _, f in distinct):
            distinct.append((comp, form))
    pieces = []
    for comp, form in distinct:
        dominance = [
            tuple(a - b for a, b in zip(form, other))
            for _, other in distinct
            if other != form
        ]
        region = cone.inequalities + tuple(_primitive(d) for d in dominance)
        if _strict_point(inst.nvars, region) is None:
            continue
        pieces.append(GapFanPiece(Cone(inst.nvars, region), comp, form))
    return pieces


def gap_function_eval(a, c, tiebreak: str = "grevlex"):
    """Gap at one cost, with the fan piece that explains it.

    Returns (value, piece) where value is the exact gap and piece is the
    first subdivision piece whose closed cone contains c; on a piece's
    interior value = piece.linear_form . c.
    """
    inst = GapInstance.from_matrix(a, c, tiebreak)
    report = gap_report(inst)
    pieces = gap_fan_subdivide(inst)
    for piece in pieces:
        if piece.cone.contains(inst.cost):
            return report.gap, piece
    raise DegenerateCone("no piece contains the instance's own cost")


def _scaled_integer(v) -> tuple[int, ...]:
    fr = [Fraction(x) for x in v]
    mult = lcm(*(f.denominator for f in fr)) if fr else 1
    return tuple(int(f * mult) for f in fr)


def explore_cones(a, seeds, budget: int = 200) -> list[tuple[GroebnerBasis, Cone]]:
    """Discover distinct marked bases by reflecting across cone facets.

    Runs the basis computation at every seed, then repeatedly takes a
    discovered cone's interior point and pushes it across each facet
    (progressively further when the first landing spot is degenerate),
    recomputing at each new cost.  budget caps the exploration runs after
    the seeds.  Complete exactly when the walk closes; callers asserting
    completeness must know their fan.
    """
    a = a if isinstance(a, IntMatrix) else IntMatrix(a)
    gens = lattice_ideal_generators(kernel_lattice(a))
    found: dict = {}
    queue: list = []

    def register(gb: GroebnerBasis):
        key = tuple((g.plus, g.minus) for g in gb.elements)
        if key not in found:
            found[key] = (gb, groebner_cone(gb))
            queue.append(key)
        return key

    for seed in seeds:
        gb = buchberger(gens, TermOrder(seed, "grevlex"))
        if not is_generic(gb):
            raise BadParameter(f"seed cost {tuple(seed)} is not generic")
        register(gb)

    runs = 0
    while queue:
        key = queue.pop(0)
        gb, cone = found[key]
        center = cone.interior_point()
        if center is None:
            continue
        p = _scaled_integer(center)
        for h in cone.inequalities:
            hh = sum(x * x for x in h)
            hp = sum(x * y for x, y in zip(h, p))
            for k in (2, 3, 4, 5, 6):
                if runs >= budget:
                    return _sorted_cones(found)
                cand = tuple(hh * pi - k * hp * hi for pi, hi in zip(p, h))
                if not any(cand):
                    continue
                runs += 1
                try:
                    nxt = buchberger(gens, TermOrder(cand, "grevlex"))
                except MathDomainError:
                    continue
                if not is_generic(nxt):
                    continue
                if register(nxt) != key:
                    break
    return _sorted_cones(found)


def _sorted_cones(found) -> list[tuple[GroebnerBasis, Cone]]:
    return [found[k] for k in sorted(found)]
