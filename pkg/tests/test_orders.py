import random
from itertools import product

import pytest

from toric.orders import TermOrder, saturation_order


def monomials(n, max_deg, rng, count):
    return [tuple(rng.randint(0, max_deg) for _ in range(n)) for _ in range(count)]


@pytest.mark.parametrize("make", [
    lambda n: TermOrder.lex(n),
    lambda n: TermOrder.grevlex(n),
    lambda n: TermOrder.weight(tuple(range(1, n + 1))),
    lambda n: TermOrder.elimination([0], n),
    lambda n: TermOrder.weights([[1] * n, list(range(n))], n, tie="lex"),
])
def test_term_order_axioms(make):
    rng = random.Random(21)
    n = 4
    order = make(n)
    ms = monomials(n, 4, rng, 30)
    one = tuple([0] * n)
    for a in ms:
        if a != one:
            assert order.key(a) > order.key(one)
        for b in ms:
            if a != b:
                assert (order.key(a) > order.key(b)) != (order.key(b) > order.key(a))
            for c in ms:
                ac = tuple(x + z for x, z in zip(a, c))
                bc = tuple(y + z for y, z in zip(b, c))
                assert (order.key(a) > order.key(b)) == (order.key(ac) > order.key(bc))


def test_lex_and_grevlex_classics():
    lex = TermOrder.lex(4)
    grevlex = TermOrder.grevlex(4)
    x1x3 = (1, 0, 1, 0)
    x2sq = (0, 2, 0, 0)
    # lex prefers the earlier variable, grevlex punishes the later one
    assert lex.key(x1x3) > lex.key(x2sq)
    assert grevlex.key(x2sq) > grevlex.key(x1x3)
    x2x4 = (0, 1, 0, 1)
    x3sq = (0, 0, 2, 0)
    assert lex.key(x2x4) > lex.key(x3sq)
    assert grevlex.key(x3sq) > grevlex.key(x2x4)


def test_permuted_lex():
    order = TermOrder.lex(3, perm=[2, 0, 1])
    assert order.key((0, 0, 1)) > order.key((5, 5, 0))


def test_elimination_blocks():
    order = TermOrder.elimination([0, 1], 4)
    # any monomial with block variables beats any without
    assert order.key((1, 0, 0, 0)) > order.key((0, 0, 9, 9))
    assert order.key((0, 1, 1, 0)) > order.key((0, 0, 0, 7))
    assert order.key((0, 0, 2, 0)) > order.key((0, 0, 1, 1)) or \
        order.key((0, 0, 1, 1)) > order.key((0, 0, 2, 0))


def test_orient():
    order = TermOrder.grevlex(2)
    assert order.orient((1, 0), (0, 1)) == ((1, 0), (0, 1))
    assert order.orient((0, 1), (1, 0)) == ((1, 0), (0, 1))
    with pytest.raises(ValueError):
        order.orient((1, 1), (1, 1))


def test_saturation_order_prefers_low_powers_of_the_variable():
    omega = (1, 1, 1)
    order = saturation_order(omega, 1)
    # same omega-degree, less x2 wins
    assert order.key((2, 0, 0)) > order.key((1, 1, 0))
    assert order.key((0, 0, 2)) > order.key((0, 2, 0))


def test_describe_round_trip():
    order = TermOrder.weight((3, 1), tie="lex")
    d = order.describe()
    assert d["flavor"] == "weight" and d["weight"] == [3, 1]
