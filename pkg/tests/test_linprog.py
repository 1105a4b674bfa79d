import random
from fractions import Fraction

from toric.linprog import LP, in_cone, in_convex_hull, lp_solve, positive_functional


def test_lp_solve_basic_feasibility():
    status, x, _ = lp_solve([[1, 1]], [2])
    assert status == "optimal"
    assert x[0] + x[1] == 2 and x[0] >= 0 and x[1] >= 0
    status, _, _ = lp_solve([[1, 0], [1, 0]], [1, 2])
    assert status == "infeasible"


def test_lp_solve_optimize():
    # max x + y subject to x + 2y = 4, x, y >= 0
    status, x, val = lp_solve([[1, 2]], [4], [1, 1], maximize=True)
    assert status == "optimal" and val == 4 and x == [Fraction(4), Fraction(0)]
    status, x, val = lp_solve([[1, 2]], [4], [1, 1], maximize=False)
    assert val == 2
    # unbounded: max x with only y constrained
    status, _, _ = lp_solve([[0, 1]], [1], [-1, 0], maximize=False)
    assert status == "unbounded"


def test_lp_free_variables():
    lp = LP(2)
    lp.add_ge([1, 0], -5)
    lp.add_ge([-1, 0], 3)  # x <= -3
    p = lp.feasible_point()
    assert p is not None and -5 <= p[0] <= -3


def test_cone_and_hull_membership():
    rays = [(1, 0), (1, 2)]
    assert in_cone((2, 2), rays)
    assert in_cone((0, 0), rays)
    assert not in_cone((0, 1), rays)
    assert not in_cone((-1, 0), rays)
    pts = [(0, 0), (2, 0), (0, 2)]
    assert in_convex_hull((1, 1), pts)
    assert in_convex_hull((0, 0), pts)
    assert not in_convex_hull((2, 2), pts)


def test_positive_functional():
    assert positive_functional([(3, 0), (2, 1), (1, 2), (0, 3)]) is not None
    assert positive_functional([(1, 0), (-1, 0)]) is None
    # mixed-sign columns can still be pointed
    w = positive_functional([(2, -1), (-1, 2)])
    assert w is not None
    for a in [(2, -1), (-1, 2)]:
        assert sum(Fraction(x) * y for x, y in zip(w, a)) >= 1


def test_random_feasibility_against_certificates():
    rng = random.Random(11)
    for _ in range(40):
        d = rng.randint(1, 3)
        cols = [tuple(rng.randint(-2, 3) for _ in range(d)) for _ in range(rng.randint(1, 5))]
        w = positive_functional(cols)
        if w is not None:
            for a in cols:
                assert sum(Fraction(x) * y for x, y in zip(w, a)) >= 1
        else:
            # Gordan: infeasibility means a nonzero nonnegative combination
            # of the columns vanishes
            lp = LP(len(cols), nonneg=True)
            for coord in range(d):
                lp.add_eq([c[coord] for c in cols], 0)
            lp.add_eq([1] * len(cols), 1)
            assert lp.feasible_point() is not None
