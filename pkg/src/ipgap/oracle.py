"""Brute-force verification path, kept independent of the algebraic route.

Nothing here touches Groebner bases or monomial ideals: fibers are
enumerated by bounding every coordinate with an exact LP and filtering the
resulting integer box, and programs are solved by exhaustion.  Slower by
orders of magnitude, but each answer is checkable by hand, which is the
point: the main pipeline is tested against these functions.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product
from math import floor, prod

import numpy as np

from . import lp
from .errors import BadParameter, EmptyFiber, FiberCapExceeded, InfiniteFiber
from .exactmath import IntMatrix

DEFAULT_POINT_CAP = 10_000_000

_CHUNK = 1 << 18


def _as_matrix(a) -> IntMatrix:
    return a if isinstance(a, IntMatrix) else IntMatrix(a)


def _coordinate_bounds(a: IntMatrix, b) -> list[int] | None:
    """Exact per-coordinate maxima over the fiber polytope, or None if empty."""
    n = a.ncols
    eq = tuple(
        (tuple(Fraction(x) for x in row), Fraction(bi)) for row, bi in zip(a.rows, b)
    )
    bounds = []
    for i in range(n):
        obj = tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
        sol = lp.solve(lp.LPProblem(objective=obj, sense="max", eq=eq))
        if sol.status == lp.INFEASIBLE:
            return None
        if sol.status == lp.UNBOUNDED:
            raise InfiniteFiber(
                f"coordinate {i} is unbounded on the fiber; enumeration impossible"
            )
        bounds.append(floor(sol.value))
    return bounds


def enumerate_fiber(a, b, cap: int = DEFAULT_POINT_CAP) -> list[tuple[int, ...]]:
    """All nonnegative integer points z with A z = b, lexicographically.

    The box defined by the per-coordinate LP maxima is scanned in chunks
    and filtered exactly; a box larger than cap points aborts instead of
    grinding.
    """
    a = _as_matrix(a)
    b = tuple(int(x) for x in b)
    if len(b) != a.nrows:
        raise BadParameter("right-hand side length does not match the row count")
    if a.ncols == 0:
        return [()] if not any(b) else []
    bounds = _coordinate_bounds(a, b)
    if bounds is None:
        return []
    dims = [x + 1 for x in bounds]
    total = prod(dims)
    if total > cap:
        raise FiberCapExceeded(
            f"fiber box holds {total} candidate points, over the cap of {cap}"
        )
    at = np.array(a.rows, dtype=np.int64).T
    target = np.array(b, dtype=np.int64)
    out = []
    for start in range(0, total, _CHUNK):
        idx = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        coords = np.stack(np.unravel_index(idx, dims), axis=1)
        mask = (coords @ at == target).all(axis=1)
        out.extend(tuple(int(v) for v in row) for row in coords[mask])
    return out


def brute_ip(a, b, c, cap: int = DEFAULT_POINT_CAP) -> Fraction:
    """Optimal integer value min c.z over the fiber of b, by exhaustion."""
    a = _as_matrix(a)
    points = enumerate_fiber(a, b, cap)
    if not points:
        raise EmptyFiber(f"no nonnegative integer point solves A z = {tuple(b)}")
    c = tuple(Fraction(x) for x in c)
    return min(sum((ci * zi for ci, zi in zip(c, z)), Fraction(0)) for z in points)


def brute_gap_box(a, c, box, cap: int = DEFAULT_POINT_CAP) -> tuple[Fraction, tuple[int, ...]]:
    """Worst IP-minus-LP difference over right-hand sides seen in a box.

    Scans every z below the componentwise bounds, groups by b = A z, and
    exhausts each fiber once.  The result is a lower bound on the true
    gap, exact whenever the box contains a gap-attaining point.  Returns
    the value and the first z (lexicographically) attaining it.
    """
    a = _as_matrix(a)
    box = tuple(int(x) for x in box)
    if len(box) != a.ncols:
        raise BadParameter("box length does not match the column count")
    if any(x < 0 for x in box):
        raise BadParameter("box bounds must be nonnegative")
    c = tuple(Fraction(x) for x in c)
    seen: dict[tuple[int, ...], Fraction] = {}
    best = None
    best_z = None
    for z in product(*(range(x + 1) for x in box)):
        b = a.mul_vector(z)
        if b not in seen:
            ip = brute_ip(a, b, c, cap)
            relax = lp.lp_value(a, b, c)
            if relax.status != lp.OPTIMAL:
                raise InfiniteFiber("relaxation unbounded below on a box fiber")
            seen[b] = ip - relax.value
        if best is None or seen[b] > best:
            best = seen[b]
            best_z = z
    return best, best_z
