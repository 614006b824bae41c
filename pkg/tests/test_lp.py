from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from ipgap.errors import EmptyFiber, UnboundedProgram
from ipgap.exactmath import IntMatrix
from ipgap import lp


def test_simple_min():
    # min x+y st x+2y = 4, x,y >= 0 -> y=2
    sol = lp.solve(
        lp.LPProblem(objective=(1, 1), eq=(((1, 2), 4),))
    )
    assert sol.status == lp.OPTIMAL
    assert sol.value == 2
    assert sol.x == (Fraction(0), Fraction(2))


def test_max_with_ub_rows():
    # max 3x+2y st x+y <= 4, x+3y <= 6 -> (4,0) value 12
    sol = lp.solve(
        lp.LPProblem(objective=(3, 2), sense="max", ub=(((1, 1), 4), ((1, 3), 6)))
    )
    assert sol.status == lp.OPTIMAL
    assert sol.value == 12
    assert sol.x == (Fraction(4), Fraction(0))


def test_free_variable():
    # min y st y >= x - 3, y >= -x + 1, x free, y free: min at x=2, y=-1
    prob = lp.LPProblem(
        objective=(0, 1),
        ub=(((1, -1), 3), ((-1, -1), -1)),
        free=(True, True),
    )
    sol = lp.solve(prob)
    assert sol.status == lp.OPTIMAL
    assert sol.value == -1
    assert sol.x == (Fraction(2), Fraction(-1))


def test_infeasible():
    sol = lp.solve(lp.LPProblem(objective=(1,), eq=(((1,), -2),)))
    assert sol.status == lp.INFEASIBLE


def test_unbounded():
    sol = lp.solve(lp.LPProblem(objective=(-1,), ub=()))
    assert sol.status == lp.UNBOUNDED
    sol = lp.solve(lp.LPProblem(objective=(1,), sense="max", ub=(((-1,), 0),)))
    assert sol.status == lp.UNBOUNDED


def test_degenerate_cycling_guard():
    # classic Beale-style degenerate setup; Bland's rule must terminate
    prob = lp.LPProblem(
        objective=(Fraction(-3, 4), 150, Fraction(-1, 50), 6),
        ub=(
            ((Fraction(1, 4), -60, Fraction(-1, 25), 9), 0),
            ((Fraction(1, 2), -90, Fraction(-1, 50), 3), 0),
            ((0, 0, 1, 0), 1),
        ),
    )
    sol = lp.solve(prob)
    assert sol.status == lp.OPTIMAL
    assert sol.value == Fraction(-1, 20)


def test_coin_relaxation_value_and_point():
    a = IntMatrix([[1, 1, 1, 1], [1, 5, 10, 25]])
    c = (0, 1, 0, 1)
    sol = lp.lp_value(a, (10, 114), c)
    assert sol.value == Fraction(14, 15)
    assert sol.x == (Fraction(0), Fraction(0), Fraction(136, 15), Fraction(14, 15))
    assert lp.lp_value(a, (0, 0), c).value == 0
    assert lp.lp_value(a, (1, 1), c).x == (1, 0, 0, 0)


def test_lp_value_statuses():
    a = IntMatrix([[1, 1]])
    assert lp.lp_value(a, (-1,), (1, 1)).status == lp.INFEASIBLE
    assert lp.lp_value(IntMatrix([[1, -1]]), (0,), (-1, 0)).status == lp.UNBOUNDED
    with pytest.raises(EmptyFiber):
        lp.relaxation_value(a, (-1,), (1, 1))
    with pytest.raises(UnboundedProgram):
        lp.relaxation_value(IntMatrix([[1, -1]]), (0,), (-1, 0))


def test_certificate_on_optimum():
    prob = lp.LPProblem(
        objective=(2, 3, 1),
        eq=(((1, 1, 1), 6),),
        ub=(((1, 0, 2), 5),),
    )
    sol = lp.solve(prob)
    assert sol.status == lp.OPTIMAL
    a, b, c, y, x = sol.certificate()
    m = len(a)
    for row, rhs in zip(a, b):
        assert sum(ai * xi for ai, xi in zip(row, x)) == rhs
    assert all(xi >= 0 for xi in x)
    assert sum(yi * bi for yi, bi in zip(y, b)) == sum(
        ci * xi for ci, xi in zip(c, x)
    )
    ncol = len(c)
    for j in range(ncol):
        red = c[j] - sum(y[i] * a[i][j] for i in range(m))
        assert red >= 0


small_lp = st.tuples(
    st.integers(1, 3),
    st.integers(1, 3),
    st.data(),
)


@settings(max_examples=120, deadline=None)
@given(small_lp)
def test_duality_certificate_random(args):
    n, m, data = args
    ints = st.integers(-5, 5)
    obj = data.draw(st.lists(ints, min_size=n, max_size=n))
    rows = data.draw(
        st.lists(st.lists(ints, min_size=n, max_size=n), min_size=m, max_size=m)
    )
    rhs = data.draw(st.lists(st.integers(0, 8), min_size=m, max_size=m))
    prob = lp.LPProblem(
        objective=tuple(obj),
        ub=tuple((tuple(r), h) for r, h in zip(rows, rhs)),
    )
    sol = lp.solve(prob)
    # origin is feasible (rhs >= 0), so never infeasible
    assert sol.status in (lp.OPTIMAL, lp.UNBOUNDED)
    if sol.status == lp.OPTIMAL:
        a, b, c, y, x = sol.certificate()
        assert sum(yi * bi for yi, bi in zip(y, b)) == sum(
            ci * xi for ci, xi in zip(c, x)
        )
        for j in range(len(c)):
            red = c[j] - sum(y[i] * a[i][j] for i in range(len(a)))
            assert red >= 0
        assert sol.value <= 0  # origin gives 0


def test_float_oracle_agreement():
    scipy = pytest.importorskip("scipy")
    from scipy.optimize import linprog

    a = IntMatrix([[1, 1, 1, 1], [1, 5, 10, 25]])
    c = (0, 1, 0, 1)
    for b in [(10, 114), (7, 52), (12, 300), (4, 40)]:
        res = linprog(c, A_eq=a.to_lists(), b_eq=list(b), method="highs")
        sol = lp.lp_value(a, b, c)
        if res.status == 0:
            assert sol.status == lp.OPTIMAL
            assert abs(float(sol.value) - res.fun) < 1e-7
        else:
            assert sol.status == lp.INFEASIBLE
