import itertools
import random
from fractions import Fraction

import pytest

from toric.binomials import (SparsePolynomial, binomial_power,
                             monomial_divides, monomial_lcm, parse_binomial)
from toric.errors import NotHomogeneousError
from toric.gallery import birkhoff, gap_curve, triple, twisted_cubic
from toric.groebner import (GroebnerBasis, buchberger, hilbert_function,
                            hilbert_polynomial, minimal_generators,
                            normal_form, radical_membership_bounded,
                            toric_ideal, toric_ideal_elimination_oracle)
from toric.lattice import Configuration
from toric.orders import TermOrder

TC_IDEAL = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]


def tc_gens():
    A = twisted_cubic()
    return [parse_binomial(s, A.labels) for s in TC_IDEAL]


def naive_spair_reduces_to_zero(pairs, order):
    """Direct S-pair check, independent of the engine's pair bookkeeping."""
    for f, g in itertools.combinations(pairs, 2):
        L = monomial_lcm(f[0], g[0])
        e1 = tuple(l - a + b for l, a, b in zip(L, f[0], f[1]))
        e2 = tuple(l - a + b for l, a, b in zip(L, g[0], g[1]))
        p = SparsePolynomial.from_binomial(e1, e2)
        if not normal_form(p, list(pairs), order).is_zero():
            return False
    return True


def test_quadrics_are_already_a_groebner_basis():
    order = TermOrder.grevlex(4)
    pairs = []
    for u in tc_gens():
        plus = tuple(x if x > 0 else 0 for x in u)
        minus = tuple(-x if x < 0 else 0 for x in u)
        pairs.append(order.orient(plus, minus))
    assert naive_spair_reduces_to_zero(pairs, order)
    G = buchberger(tc_gens(), order)
    got = {tuple(a - b for a, b in zip(l, t)) for l, t in G}
    want = {tuple(u) for u in tc_gens()} | {tuple(-x for x in u) for u in tc_gens()}
    assert all(u in want for u in got) and len(G) == 3


def test_single_generator_is_its_own_basis():
    G = buchberger([(1, -1)], TermOrder.lex(2))
    assert G == [((1, 0), (0, 1))]


def test_reduced_basis_unique_under_shuffling():
    rng = random.Random(41)
    A = twisted_cubic()
    order = TermOrder.grevlex(4)
    base = [tuple(u) for u in A.kernel().basis] + tc_gens()
    reference = buchberger(base, order)
    for _ in range(10):
        gens = list(base)
        rng.shuffle(gens)
        assert buchberger(gens, order) == reference
    # a different generating set of the same ideal gives the same basis
    doubled = base + [tuple(2 * x for x in base[0])]
    assert buchberger(doubled, order) == reference


def test_toric_ideal_twisted_cubic():
    A = twisted_cubic()
    G = toric_ideal(A)
    want = {tuple(parse_binomial(s, A.labels)) for s in TC_IDEAL}
    got = set(G.vectors())
    assert {u if u in want else tuple(-x for x in u) for u in got} == want


def test_toric_ideal_lex_contains_saturation_witness():
    A = twisted_cubic()
    G = toric_ideal(A, TermOrder.lex(4))
    target = parse_binomial("x2*x4 - x3^2", A.labels)
    assert G.contains_binomial(target)
    assert target in G.vectors() or tuple(-x for x in target) in G.vectors()


def test_toric_ideal_birkhoff3():
    B = birkhoff(3)
    G = toric_ideal(B)
    assert G.to_strings(B.labels) == ["x123*x231*x312 - x132*x213*x321"]


def test_toric_ideal_triple_222():
    T = triple(2, 2, 2)
    G = toric_ideal(T)
    assert G.to_strings(T.labels) == ["x111*x122*x212*x221 - x112*x121*x211*x222"]


def test_elimination_oracle_matches_saturation():
    A = twisted_cubic()
    assert toric_ideal(A).same_ideal(toric_ideal_elimination_oracle(A))


def test_elimination_oracle_one_column():
    A = Configuration([[2]])
    assert len(toric_ideal_elimination_oracle(A)) == 0
    assert len(toric_ideal(A)) == 0


def test_elimination_oracle_quadric_cone():
    # kernel spanned by (1,-2,1); saturation adds nothing
    A = Configuration([[2, 1, 0], [0, 1, 2]])
    E = toric_ideal_elimination_oracle(A)
    assert E.to_strings(A.labels) == ["x2^2 - x1*x3"]
    assert toric_ideal(A).same_ideal(E)


def test_elimination_oracle_handles_negative_entries():
    A = Configuration([[1, -1]])
    E = toric_ideal_elimination_oracle(A)
    G = toric_ideal(A)
    assert G.same_ideal(E)
    assert G.contains_binomial((1, 1))  # x1*x2 - 1


def test_oracle_agreement_random():
    rng = random.Random(42)
    for _ in range(25):
        n = rng.randint(2, 5)
        d = rng.randint(1, 3)
        A = Configuration([[rng.randint(0, 3) for _ in range(n)] for _ in range(d)])
        assert toric_ideal(A).same_ideal(toric_ideal_elimination_oracle(A))


def test_parametrization_vanishing():
    rng = random.Random(43)
    for _ in range(20):
        n = rng.randint(2, 5)
        d = rng.randint(1, 3)
        A = Configuration([[rng.randint(0, 3) for _ in range(n)] for _ in range(d)])
        G = toric_ideal(A)
        for _ in range(20):
            t = [rng.randint(1, 9) for _ in range(d)]
            for lead, trail in G:
                left, right = 1, 1
                for i in range(n):
                    col = A.column(i)
                    mono = 1
                    for k in range(d):
                        mono *= t[k] ** col[k]
                    left *= mono ** lead[i]
                    right *= mono ** trail[i]
                assert left == right


def test_normal_form_examples():
    order = TermOrder.grevlex(4)
    g = ((0, 2, 0, 0), (1, 0, 1, 0))  # x2^2 - x1*x3 oriented under grevlex
    G = GroebnerBasis([g], order)
    f = SparsePolynomial.from_binomial((1, 0, 1, 0), (0, 2, 0, 0))
    assert normal_form(f, G).is_zero()
    # irreducible polynomial passes through
    f2 = SparsePolynomial({(1, 0, 0, 0): 1, (0, 0, 0, 0): 1})
    assert normal_form(f2, G) == f2
    # full twisted cubic basis kills x1*x4 - x2*x3
    A = twisted_cubic()
    GB = toric_ideal(A)
    f3 = SparsePolynomial.from_vector(parse_binomial("x1*x4 - x2*x3", A.labels))
    assert normal_form(f3, GB).is_zero()


def test_normal_form_idempotent():
    rng = random.Random(44)
    A = twisted_cubic()
    GB = toric_ideal(A)
    for _ in range(20):
        terms = {tuple(rng.randint(0, 3) for _ in range(4)): rng.randint(-3, 3)
                 for _ in range(4)}
        f = SparsePolynomial(terms)
        r1 = normal_form(f, GB)
        assert normal_form(r1, GB) == r1
        for m in r1.terms:
            assert not any(monomial_divides(L, m) for L in GB.leads())


def test_minimal_generators_gap_curve():
    for r in (4, 5):
        M = minimal_generators(gap_curve(r))
        degrees = sorted(b.degree for b in M)
        assert degrees == [2] + [r - 1] * (r - 1)


def test_minimal_generators_twisted_cubic():
    M = minimal_generators(twisted_cubic())
    assert sorted(b.degree for b in M) == [2, 2, 2]


def test_minimal_generators_need_grading():
    with pytest.raises(NotHomogeneousError):
        minimal_generators(Configuration([[1, 2]]))


def count_standard_monomials_oracle(leads, n, s):
    """Enumerate degree-s monomials directly and test divisibility."""
    count = 0
    for m in itertools.product(range(s + 1), repeat=n):
        if sum(m) != s:
            continue
        if not any(monomial_divides(L, m) for L in leads):
            count += 1
    return count


def test_hilbert_function_against_enumeration():
    A = twisted_cubic()
    leads = toric_ideal(A).leads()
    for s in range(7):
        assert hilbert_function(A, s) == count_standard_monomials_oracle(leads, 4, s)
        assert hilbert_function(A, s) == 3 * s + 1


def test_hilbert_polynomial_examples():
    assert hilbert_polynomial(twisted_cubic()) == [Fraction(1), Fraction(3)]
    assert hilbert_polynomial(Configuration([[1]])) == [Fraction(1)]
    assert hilbert_polynomial(gap_curve(4)) == [Fraction(1), Fraction(4)]


def semigroup_level_count_oracle(config, s):
    """Brute-force semigroup enumeration: distinct sums of s columns."""
    sums = {tuple([0] * config.d)}
    for _ in range(s):
        sums = {tuple(a + b for a, b in zip(p, col))
                for p in sums for col in config.columns}
    return len(sums)


def test_hilbert_function_gap_curve_matches_semigroup():
    A = gap_curve(4)
    for s in range(4):
        assert hilbert_function(A, s) == semigroup_level_count_oracle(A, s)
    assert hilbert_function(A, 1) == 4  # E(1) = 5, the gap


def test_radical_membership():
    # member of the set itself
    assert radical_membership_bounded((1, -2, 1, 0), [(1, -2, 1, 0)], 4) == 1
    # x1*x4 - x2*x3 against the twisted cubic circuit ideal
    A = twisted_cubic()
    from toric.distinguished import circuits
    C = list(circuits(A).sorted_vectors())
    k = radical_membership_bounded(parse_binomial("x1*x4 - x2*x3", A.labels), C, 4)
    assert k == 2
    # x1 - 1 is not in the radical of <x2 - 1>: no power can work
    assert radical_membership_bounded(
        (1, 0), [(0, 1)], 5, TermOrder.grevlex(2)) is None


def test_no_common_factors_in_toric_bases():
    rng = random.Random(45)
    for _ in range(15):
        n = rng.randint(2, 5)
        A = Configuration([[1] * n] + [[rng.randint(0, 3) for _ in range(n)]])
        for lead, trail in toric_ideal(A):
            assert all(a == 0 or b == 0 for a, b in zip(lead, trail))
