"""Buchberger's algorithm specialized to binomial ideals, and the toric
ideal operations built on it.

Binomials are stored as oriented pairs (lead, trail) of exponent tuples.
S-polynomials and reductions of binomials are again binomials (or zero),
so the engine never leaves this representation; coefficients are +-1 by
construction, which is the self-check the theory promises for lattice
ideals.  Pair selection uses the normal strategy (minimal lcm degree,
ties by lexicographic lcm) and the Gebauer-Moeller update criteria.
"""

import heapq
from fractions import Fraction

from .binomials import (LatticeBinomial, SparsePolynomial, binomial_power,
                        format_binomial, negative_part, positive_part)
from .errors import InstabilityError, InternalCheckError, NotHomogeneousError
from .intlinalg import rational_solve
from .orders import TermOrder, saturation_order


def _orient(a, b, key):
    ka, kb = key(a), key(b)
    if ka > kb:
        return a, b
    if ka == kb:
        return None
    return b, a


def _divisor(m, G):
    for g in G:
        lead = g[0]
        for l, x in zip(lead, m):
            if l > x:
                break
        else:
            return g
    return None


def _reduce_pair(p, q, G, key):
    """Fully reduce the binomial x^p - x^q against G; None if it dies."""
    while True:
        g = _divisor(p, G)
        if g is None:
            break
        p = tuple(x - l + t for x, l, t in zip(p, g[0], g[1]))
        if p == q:
            return None
        if key(p) < key(q):
            p, q = q, p
    while True:
        g = _divisor(q, G)
        if g is None:
            break
        q = tuple(x - l + t for x, l, t in zip(q, g[0], g[1]))
    return p, q


def buchberger(gens, order):
    """Reduced Groebner basis of the binomial ideal spanned by gens.

    gens: iterable of integer vectors u (binomial x^u+ - x^u-) or of
    (lead, trail) exponent pairs.  Returns a canonically sorted list of
    oriented (lead, trail) pairs.
    """
    cache = {}
    okey = order.key

    def key(m):
        k = cache.get(m)
        if k is None:
            k = cache[m] = okey(m)
        return k

    start = []
    for g in gens:
        if isinstance(g, LatticeBinomial):
            pair = (g.u_plus, g.u_minus)
        elif g and isinstance(g[0], tuple):
            pair = (tuple(g[0]), tuple(g[1]))
        else:
            u = tuple(g)
            pair = (positive_part(u), negative_part(u))
        oriented = _orient(pair[0], pair[1], key)
        if oriented is None:
            continue
        start.append(oriented)
    start.sort(key=lambda p: (key(p[0]), key(p[1])))

    G = []
    alive = set()
    heap = []

    def push_pair(i, j):
        L = tuple(a if a > b else b for a, b in zip(G[i][0], G[j][0]))
        heapq.heappush(heap, (sum(L), L, i, j))
        alive.add((i, j))

    def add(f):
        lmf = f[0]
        m = len(G)
        # Gebauer-Moeller: drop old pairs made redundant by the new lead.
        for (i, j) in list(alive):
            li, lj = G[i][0], G[j][0]
            lij = tuple(a if a > b else b for a, b in zip(li, lj))
            if all(a <= b for a, b in zip(lmf, lij)):
                if (tuple(a if a > b else b for a, b in zip(li, lmf)) != lij
                        and tuple(a if a > b else b for a, b in zip(lj, lmf)) != lij):
                    alive.discard((i, j))
        # New pairs, one representative per minimal lcm, skipping classes
        # that contain a coprime pair (product criterion).
        lcms = {}
        for i in range(m):
            L = tuple(a if a > b else b for a, b in zip(G[i][0], lmf))
            lcms.setdefault(L, []).append(i)
        minimal = []
        for L in sorted(lcms, key=key):
            if not any(all(a <= b for a, b in zip(L2, L)) for L2 in minimal):
                minimal.append(L)
        G.append(f)
        for L in minimal:
            if not any(tuple(a + b for a, b in zip(G[i][0], lmf)) == L for i in lcms[L]):
                push_pair(min(lcms[L]), m)

    for f in start:
        h = _reduce_pair(f[0], f[1], G, key)
        if h is not None:
            add(h)

    while alive:
        _, L, i, j = heapq.heappop(heap)
        if (i, j) not in alive:
            continue
        alive.discard((i, j))
        fi, fj = G[i], G[j]
        e1 = tuple(l - a + b for l, a, b in zip(L, fi[0], fi[1]))
        e2 = tuple(l - a + b for l, a, b in zip(L, fj[0], fj[1]))
        if e1 == e2:
            continue
        p, q = _orient(e1, e2, key)
        h = _reduce_pair(p, q, G, key)
        if h is not None:
            add(h)

    return _interreduce(G, key)


def _interreduce(G, key):
    by_lead = sorted(G, key=lambda g: key(g[0]))
    minimal = []
    for g in by_lead:
        if not any(all(a <= b for a, b in zip(h[0], g[0])) for h in minimal):
            minimal.append(g)
    reduced = []
    for idx, g in enumerate(minimal):
        others = minimal[:idx] + minimal[idx + 1:]
        q = g[1]
        while True:
            h = _divisor(q, others)
            if h is None:
                break
            q = tuple(x - l + t for x, l, t in zip(q, h[0], h[1]))
        reduced.append((g[0], q))
    reduced.sort(key=lambda g: (max(sum(g[0]), sum(g[1])), g[0], g[1]))
    return reduced


def binomial_degree(pair):
    return max(sum(pair[0]), sum(pair[1]))


class GroebnerBasis:
    """A reduced Groebner basis of a binomial ideal, with its order."""

    def __init__(self, elements, order, reduced=True):
        self.elements = tuple((tuple(l), tuple(t)) for l, t in elements)
        self.order = order
        self.reduced = reduced

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def leads(self):
        return [g[0] for g in self.elements]

    @property
    def maxdeg(self):
        return max((binomial_degree(g) for g in self.elements), default=0)

    def vectors(self):
        """The elements as oriented integer vectors lead - trail."""
        return [tuple(a - b for a, b in zip(l, t)) for l, t in self.elements]

    def binomials(self):
        return [LatticeBinomial(u) for u in self.vectors()]

    def reduce_binomial(self, pair_or_vector):
        """Normal form of a binomial; None means it reduces to zero."""
        if isinstance(pair_or_vector, LatticeBinomial):
            p, q = pair_or_vector.u_plus, pair_or_vector.u_minus
        elif pair_or_vector and isinstance(pair_or_vector[0], tuple):
            p, q = pair_or_vector
        else:
            u = tuple(pair_or_vector)
            p, q = positive_part(u), negative_part(u)
        if p == q:
            return None
        oriented = _orient(p, q, self.order.key)
        if oriented is None:
            return None
        return _reduce_pair(oriented[0], oriented[1], list(self.elements), self.order.key)

    def contains_binomial(self, pair_or_vector):
        return self.reduce_binomial(pair_or_vector) is None

    def contains_ideal_of(self, other):
        """Does every element of the other basis reduce to zero here?"""
        return all(self.contains_binomial(g) for g in other.elements)

    def same_ideal(self, other):
        return self.contains_ideal_of(other) and other.contains_ideal_of(self)

    def to_strings(self, labels):
        return [format_binomial(l, t, labels) for l, t in self.elements]

    def to_json(self, labels):
        return {
            "order": self.order.describe(),
            "count": len(self.elements),
            "maxdeg": self.maxdeg,
            "elements": self.to_strings(labels),
        }

    def __repr__(self):
        return f"GroebnerBasis({len(self.elements)} elements, {self.order.flavor})"


def normal_form(f, G, order=None):
    """Remainder of a SparsePolynomial on division by a binomial set.

    G may be a GroebnerBasis or a list of (lead, trail) pairs oriented
    under the order; when G is a Groebner basis the result is the unique
    normal form and membership is result == 0.
    """
    if isinstance(G, GroebnerBasis):
        order = G.order
        basis = list(G.elements)
    else:
        basis = list(G)
    key = order.key
    work = dict(f.terms)
    while True:
        target = None
        for m in sorted(work, key=key, reverse=True):
            g = _divisor(m, basis)
            if g is not None:
                target = (m, g)
                break
        if target is None:
            out = SparsePolynomial()
            out.terms = work
            return out
        m, (lead, trail) = target
        c = work.pop(m)
        repl = tuple(x - l + t for x, l, t in zip(m, lead, trail))
        nc = work.get(repl, 0) + c
        if nc:
            work[repl] = nc
        else:
            work.pop(repl, None)


def _divide_out_variable(pair, i):
    k = min(pair[0][i], pair[1][i])
    if k == 0:
        return pair
    lead = tuple(x - k if j == i else x for j, x in enumerate(pair[0]))
    trail = tuple(x - k if j == i else x for j, x in enumerate(pair[1]))
    return (lead, trail)


def saturated_generators(config):
    """Generators of the toric ideal I_A, cached on the configuration.

    Pointed configurations carry a positive grading, so the lattice
    ideal is saturated variable by variable: under a weight order with
    weight 0 on x_i (x_i last in the grevlex tie-break) any element of a
    homogeneous ideal whose lead is divisible by x_i is itself divisible
    by x_i, and dividing the basis by x_i^max realizes I : x_i^inf.
    Otherwise we fall back to one elimination: I : (x_1...x_n)^inf is
    the t-free part of I + <t*x_1*...*x_n - 1>.
    """
    def compute():
        n = config.n
        ker = config.kernel().basis
        if not ker:
            return []
        gens = [(positive_part(u), negative_part(u)) for u in ker]
        omega = config.variable_grading()
        if omega is not None:
            G = gens
            for i in range(n):
                G = buchberger(G, saturation_order(omega, i))
                G = [_divide_out_variable(g, i) for g in G]
            return G
        # Non-pointed: adjoin t (last variable) and eliminate it.
        ext_gens = [(l + (0,), t + (0,)) for l, t in gens]
        ext_gens.append((tuple([1] * n + [1]), tuple([0] * (n + 1))))
        elim = TermOrder.elimination([n], n + 1)
        G = buchberger(ext_gens, elim)
        out = []
        for l, t in G:
            if l[n] == 0 and t[n] == 0:
                out.append((l[:n], t[:n]))
        return out

    return config._memo("saturated_gens", compute)


def toric_ideal(config, order=None):
    """Reduced Groebner basis of the toric ideal I_A under the order."""
    if order is None:
        order = TermOrder.grevlex(config.n)
    fp = (order.flavor, order.weight_rows, order.tie, order.perm)
    def compute():
        gens = saturated_generators(config)
        G = buchberger(gens, order)
        for l, t in G:
            if any(a > 0 and b > 0 for a, b in zip(l, t)):
                raise InternalCheckError("toric Groebner element with common factor")
        return GroebnerBasis(G, order)
    return config._memo(("toric", fp), compute)


def toric_ideal_elimination_oracle(config):
    """Generators of I_A by eliminating the parameter variables.

    Builds x_i - t^{a_i} (negative exponents routed through an inverse
    variable s with s*t_1*...*t_d = 1), computes an elimination Groebner
    basis, and keeps the parameter-free part.  The result generates the
    same ideal as toric_ideal; it is the classical cross-check oracle.
    """
    n, d = config.n, config.d
    cols = config.columns
    use_s = any(x < 0 for col in cols for x in col)
    nt = d + 1 if use_s else d
    width = nt + n
    gens = []
    for i, col in enumerate(cols):
        m = max(0, -min(col)) if use_s else 0
        tpart = [x + m for x in col] + ([m] if use_s else [])
        mono_t = tuple(tpart + [0] * n)
        mono_x = tuple([0] * nt + [1 if j == i else 0 for j in range(n)])
        gens.append((mono_t, mono_x))
    if use_s:
        rel = tuple([1] * d + [1] + [0] * n)
        gens.append((rel, tuple([0] * width)))
    elim = TermOrder.elimination(list(range(nt)), width)
    G = buchberger(gens, elim)
    kept = []
    for l, t in G:
        if all(x == 0 for x in l[:nt]) and all(x == 0 for x in t[:nt]):
            kept.append((l[nt:], t[nt:]))
    inner = TermOrder.grevlex(n)
    kept = [(p, q) if inner.key(p) > inner.key(q) else (q, p) for p, q in kept]
    kept.sort(key=lambda g: (binomial_degree(g), g[0], g[1]))
    return GroebnerBasis(kept, inner)


def minimal_generators(config):
    """A minimal homogeneous generating set of I_A as LatticeBinomials.

    Requires a grading (w.a_i = 1), so binomials are homogeneous for the
    standard degree and generators can be minimalized degree by degree.
    The cardinality and degree multiset are invariants of the ideal; the
    chosen set can depend on the processing order within a degree.
    """
    if not config.graded:
        raise NotHomogeneousError("minimal generators need a grading")
    order = TermOrder.grevlex(config.n)
    G = toric_ideal(config, order)
    candidates = sorted(G.elements, key=lambda g: (binomial_degree(g), g[0], g[1]))
    kept = []
    kept_gb = None
    for cand in candidates:
        if kept_gb is not None and kept_gb.reduce_binomial(cand) is None:
            continue
        kept.append(cand)
        kept_gb = GroebnerBasis(buchberger(kept, order), order)
    return [LatticeBinomial(tuple(a - b for a, b in zip(l, t))) for l, t in kept]


def hilbert_function(config, s):
    """dim of the degree-s graded piece of the coordinate ring.

    Counts standard monomials of the grevlex initial ideal; by Macaulay
    this equals the number of semigroup elements at level s.
    """
    if not config.graded:
        raise NotHomogeneousError("Hilbert function needs a grading")
    leads = toric_ideal(config).leads()
    return _count_standard(leads, config.n, s)


def _count_standard(leads, n, s):
    minimal = []
    for L in sorted(leads, key=sum):
        if not any(all(a <= b for a, b in zip(M, L)) for M in minimal):
            minimal.append(L)
    total = 0

    def rec(var, remaining, active):
        nonlocal total
        for L in active:
            if all(L[j] == 0 for j in range(var, n)):
                return
        if var == n - 1:
            if not any(L[n - 1] <= remaining for L in active):
                total += 1
            return
        for e in range(remaining + 1):
            rec(var + 1, remaining - e, [L for L in active if L[var] <= e])

    if n == 1:
        return 0 if any(L[0] <= s for L in minimal) else 1
    rec(0, s, minimal)
    return total


def interpolate_polynomial(values, degree):
    """Coefficients (constant first) of the degree-d polynomial through
    the points (s, values[s]) for the last degree+1 sample points."""
    pts = values[-(degree + 1):]
    xs = list(range(len(values) - degree - 1, len(values)))
    M = [[Fraction(x) ** j for j in range(degree + 1)] for x in xs]
    sol = rational_solve(M, [Fraction(v) for v in pts])
    if sol is None:
        raise InstabilityError("interpolation system inconsistent")
    return sol


def evaluate_polynomial(coeffs, s):
    acc = Fraction(0)
    p = Fraction(1)
    for c in coeffs:
        acc += Fraction(c) * p
        p *= s
    return acc


def _stabilized_polynomial(count, degree, s_cap, what):
    """Fit a degree-d polynomial to count(s) on a growing window until it
    also reproduces the two values just below the window."""
    s_max = degree + 3
    values = [count(s) for s in range(s_max + 1)]
    while True:
        if len(values) >= degree + 3:
            coeffs = interpolate_polynomial(values, degree)
            lo = len(values) - degree - 3
            if (evaluate_polynomial(coeffs, lo) == values[lo]
                    and evaluate_polynomial(coeffs, lo + 1) == values[lo + 1]):
                return coeffs
        if len(values) > s_cap:
            raise InstabilityError(f"{what} did not stabilize below s_max={s_cap}")
        values.append(count(len(values)))


def hilbert_polynomial(config, s_cap=60):
    """The Hilbert polynomial, constant-first rational coefficients.

    Computed from Hilbert function values on an adaptively grown window;
    the window only counts once the function has reached its polynomial.
    """
    if not config.graded:
        raise NotHomogeneousError("Hilbert polynomial needs a grading")
    leads = toric_ideal(config).leads()
    degree = config.rank - 1
    return _stabilized_polynomial(
        lambda s: _count_standard(leads, config.n, s), degree, s_cap,
        "Hilbert function")


def radical_membership_bounded(b, gens, k_max, order=None):
    """Least k <= k_max with b^k in <gens>, or None (inconclusive).

    b is an integer vector (the binomial x^b+ - x^b-); gens any iterable
    the engine accepts.  Powers are expanded and divided by a Groebner
    basis of the generators.
    """
    if isinstance(b, LatticeBinomial):
        b = b.u
    n = len(b)
    if order is None:
        order = TermOrder.grevlex(n)
    G = GroebnerBasis(buchberger(gens, order), order)
    for k in range(1, k_max + 1):
        if normal_form(binomial_power(tuple(b), k), G).is_zero():
            return k
    return None
