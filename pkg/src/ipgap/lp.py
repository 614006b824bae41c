"""Exact rational linear programming by two-phase primal simplex.

All arithmetic is fractions.Fraction; there is no floating point anywhere,
so optima, duals and infeasibility/unboundedness verdicts are exact.  Bland's
smallest-index rule is used for both the entering and the leaving choice,
which guarantees termination and makes every run byte-reproducible.

The solver is written for the small dense problems this package produces
(auxiliary programs over a lattice basis, relaxations of table problems,
cone interior searches); it is not a general-purpose LP code.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import BadParameter, EmptyFiber, UnboundedProgram

Vec = tuple[Fraction, ...]

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"


def _fracvec(v) -> Vec:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class LPProblem:
    """min or max of objective.x subject to eq rows, ub rows and signs.

    eq rows are pairs (row, rhs) meaning row.x == rhs; ub rows mean
    row.x <= rhs.  free[i] marks variable i as unrestricted in sign;
    everything else is >= 0.  There are no other bound forms: callers shift
    or split variables themselves if they need them.
    """

    objective: Vec
    sense: str = "min"
    eq: tuple[tuple[Vec, Fraction], ...] = ()
    ub: tuple[tuple[Vec, Fraction], ...] = ()
    free: tuple[bool, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "objective", _fracvec(self.objective))
        if self.sense not in ("min", "max"):
            raise BadParameter(f"sense must be min or max, got {self.sense!r}")
        n = len(self.objective)
        object.__setattr__(
            self, "eq", tuple((_fracvec(r), Fraction(b)) for r, b in self.eq)
        )
        object.__setattr__(
            self, "ub", tuple((_fracvec(r), Fraction(b)) for r, b in self.ub)
        )
        for r, _ in self.eq + self.ub:
            if len(r) != n:
                raise BadParameter("constraint row length disagrees with objective")
        fr = tuple(bool(f) for f in self.free) if self.free else (False,) * n
        if len(fr) != n:
            raise BadParameter("free flag length disagrees with objective")
        object.__setattr__(self, "free", fr)

    @property
    def nvars(self) -> int:
        return len(self.objective)


@dataclass(frozen=True)
class LPSolution:
    """Outcome of solve().

    x and value refer to the caller's variables and sense.  dual holds one
    multiplier per constraint row of the problem (eq rows first, then ub
    rows) for the minimization reading of the problem; certificate() exposes
    the standard-form data the multipliers verify against.
    """

    status: str
    value: Fraction | None = None
    x: Vec | None = None
    dual: Vec | None = None
    _std: tuple | None = field(default=None, repr=False, compare=False)

    def certificate(self):
        """Return (a, b, c, y, xstd) in standard form: min c.x, a.x=b, x>=0.

        At optimality these satisfy a.xstd == b, xstd >= 0, y.b == c.xstd,
        and componentwise c - y.a >= 0.  None unless status is optimal.
        """
        return self._std


def _pivot(rows, obj, r, j):
    pr = rows[r]
    inv = Fraction(1) / pr[j]
    rows[r] = [x * inv for x in pr]
    pr = rows[r]
    for i, row in enumerate(rows):
        if i != r and row[j]:
            f = row[j]
            rows[i] = [a - f * p for a, p in zip(row, pr)]
    if obj[j]:
        f = obj[j]
        obj[:] = [a - f * p for a, p in zip(obj, pr)]


def _run_simplex(rows, obj, basis, eligible):
    """Minimize until reduced costs on eligible columns are nonnegative.

    Returns True on optimality, False on unboundedness.  obj is the reduced
    cost row (last entry: minus the current value); rows carry the rhs in
    their last entry.  Bland's rule throughout.
    """
    rhs = len(obj) - 1
    while True:
        enter = next((j for j in eligible if obj[j] < 0), None)
        if enter is None:
            return True
        leave = None
        best = None
        for i, row in enumerate(rows):
            a = row[enter]
            if a > 0:
                ratio = row[rhs] / a
                if best is None or ratio < best or (ratio == best and basis[i] < basis[leave]):
                    best = ratio
                    leave = i
        if leave is None:
            return False
        _pivot(rows, obj, leave, enter)
        basis[leave] = enter


def solve(problem: LPProblem) -> LPSolution:
    """Solve exactly; statuses optimal / infeasible / unbounded."""
    n = problem.nvars
    minimize = problem.sense == "min"
    c0 = list(problem.objective if minimize else tuple(-x for x in problem.objective))

    # column layout: for each variable a plus column, then for each free
    # variable a minus column, then one slack per ub row
    plus = list(range(n))
    minus = {}
    ncol = n
    for i in range(n):
        if problem.free[i]:
            minus[i] = ncol
            ncol += 1
    slack = {}
    for k in range(len(problem.ub)):
        slack[k] = ncol
        ncol += 1

    c = [Fraction(0)] * ncol
    for i in range(n):
        c[plus[i]] = Fraction(c0[i])
        if i in minus:
            c[minus[i]] = -Fraction(c0[i])

    arows = []
    brhs = []
    for r, b in problem.eq:
        row = [Fraction(0)] * ncol
        for i, a in enumerate(r):
            row[plus[i]] = a
            if i in minus:
                row[minus[i]] = -a
        arows.append(row)
        brhs.append(Fraction(b))
    for k, (r, b) in enumerate(problem.ub):
        row = [Fraction(0)] * ncol
        for i, a in enumerate(r):
            row[plus[i]] = a
            if i in minus:
                row[minus[i]] = -a
        row[slack[k]] = Fraction(1)
        arows.append(row)
        brhs.append(Fraction(b))

    m = len(arows)
    flipped = []
    for i in range(m):
        if brhs[i] < 0:
            arows[i] = [-x for x in arows[i]]
            brhs[i] = -brhs[i]
            flipped.append(True)
        else:
            flipped.append(False)

    # tableau with one artificial column per row; artificials double as the
    # B-inverse tracker that the dual is read from at the end
    T = ncol + m + 1
    rows = []
    for i in range(m):
        row = arows[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [brhs[i]]
        rows.append(row)
    basis = [ncol + i for i in range(m)]

    # phase 1: minimize the sum of artificials
    obj = [Fraction(0)] * T
    for j in range(ncol, ncol + m):
        obj[j] = Fraction(1)
    for row in rows:
        obj = [a - b for a, b in zip(obj, row)]
    eligible = list(range(ncol))
    _run_simplex(rows, obj, basis, eligible)
    if -obj[T - 1] != 0:
        return LPSolution(status=INFEASIBLE)

    # drive leftover artificials out of the basis; rows that cannot pivot
    # are redundant originals and get dropped
    drop = []
    for i in range(m):
        if basis[i] >= ncol:
            j = next((j for j in range(ncol) if rows[i][j] != 0), None)
            if j is None:
                drop.append(i)
            else:
                _pivot(rows, obj, i, j)
                basis[i] = j
    if drop:
        rows = [row for i, row in enumerate(rows) if i not in drop]
        basis = [bv for i, bv in enumerate(basis) if i not in drop]

    # phase 2: the real objective, artificial columns frozen out
    obj = c + [Fraction(0)] * m + [Fraction(0)]
    for i, bv in enumerate(basis):
        if obj[bv]:
            f = obj[bv]
            obj = [a - f * p for a, p in zip(obj, rows[i])]
    ok = _run_simplex(rows, obj, basis, eligible)
    if not ok:
        return LPSolution(status=UNBOUNDED)

    xstd = [Fraction(0)] * ncol
    for i, bv in enumerate(basis):
        if bv < ncol:
            xstd[bv] = rows[i][T - 1]
    x = []
    for i in range(n):
        xi = xstd[plus[i]]
        if i in minus:
            xi -= xstd[minus[i]]
        x.append(xi)
    value = sum(ci * xi for ci, xi in zip(c0, x)) if n else Fraction(0)

    # dual per standard row: minus the reduced cost at that row's artificial
    # column (artificial cost is 0 in phase 2); dropped rows carry 0
    ystd_kept = [-obj[ncol + i] for i in range(m)]
    ystd = []
    kept = [i for i in range(m) if i not in drop]
    pos = {orig: k for k, orig in enumerate(kept)}
    for i in range(m):
        ystd.append(ystd_kept[i] if i in pos else Fraction(0))
    # undo the sign flips so multipliers refer to the rows as entered
    dual = tuple(-y if flipped[i] else y for i, y in enumerate(ystd))

    std = (
        [r[:ncol] for r in (arows)],
        list(brhs),
        list(c),
        list(ystd),
        list(xstd),
    )
    return LPSolution(
        status=OPTIMAL,
        value=value if minimize else -value,
        x=tuple(x),
        dual=dual,
        _std=std,
    )


def lp_value(a, b, c) -> LPSolution:
    """Solve the relaxation min{c.x : a.x = b, x >= 0} exactly.

    a is an IntMatrix (or row iterable), b and c plain sequences.  Returns
    the full LPSolution; statuses cover infeasible and unbounded outcomes.
    """
    rows = a.rows if hasattr(a, "rows") else tuple(tuple(r) for r in a)
    prob = LPProblem(
        objective=_fracvec(c),
        sense="min",
        eq=tuple((_fracvec(r), Fraction(x)) for r, x in zip(rows, b)),
    )
    return solve(prob)


def relaxation_value(a, b, c) -> Fraction:
    """lp_value for callers that require an optimum to exist.

    Raises EmptyFiber when infeasible, UnboundedProgram when unbounded.
    """
    sol = lp_value(a, b, c)
    if sol.status == INFEASIBLE:
        raise EmptyFiber("relaxation is infeasible for this right-hand side")
    if sol.status == UNBOUNDED:
        raise UnboundedProgram("relaxation is unbounded below")
    return sol.value
