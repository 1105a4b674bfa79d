"""The distinguished binomial sets of a toric ideal.

Circuits from support-minimal kernel vectors, the Graver basis through
the Lawrence lifting, the universal Groebner basis by walking the
Groebner fan facet by facet, circuit indices and true degrees, and the
degree-bound report tying them together.
"""

import random
from itertools import combinations

from . import intlinalg
from .binomials import LatticeBinomial
from .errors import (CapExceededError, InternalCheckError, NotACircuitError,
                     NotHomogeneousError, NotPointedError)
from .groebner import (GroebnerBasis, binomial_degree, buchberger,
                       minimal_generators, saturated_generators, toric_ideal)
from .lattice import Configuration, SublatticeDescription, lattice_index
from .linprog import LP
from .orders import TermOrder


def _vector_degree(u):
    return max(sum(x for x in u if x > 0), -sum(x for x in u if x < 0))


class BinomialSet:
    """An orientation-free set of binomials, stored sign-normalized."""

    def __init__(self, vectors, provenance):
        self.vectors = frozenset(intlinalg.sign_normalize(tuple(v)) for v in vectors)
        self.provenance = provenance

    def __len__(self):
        return len(self.vectors)

    def __iter__(self):
        return iter(self.sorted_vectors())

    def sorted_vectors(self):
        return sorted(self.vectors, key=lambda u: (_vector_degree(u), u))

    def binomials(self):
        return [LatticeBinomial(u) for u in self.sorted_vectors()]

    @property
    def maxdeg(self):
        return max((_vector_degree(u) for u in self.vectors), default=0)

    def issubset(self, other):
        return self.vectors <= other.vectors

    def __eq__(self, other):
        return isinstance(other, BinomialSet) and self.vectors == other.vectors


class CircuitSet(BinomialSet):
    def __init__(self, vectors, config):
        super().__init__(vectors, "support-minimal kernel vectors")
        self.config = config

    def metadata(self):
        """Per-circuit support, degree, squarefree flags, index, true degree."""
        rows = []
        for u in self.sorted_vectors():
            b = LatticeBinomial(u)
            deg, index, true = true_degree(b, self.config)
            sf_plus, sf_minus = b.squarefree_sides()
            rows.append({
                "binomial": u,
                "support": list(b.support),
                "degree": deg,
                "index": index,
                "true_degree": true,
                "squarefree_plus": sf_plus,
                "squarefree_minus": sf_minus,
            })
        return rows


class GraverSet(BinomialSet):
    pass


class UniversalGBSet(BinomialSet):
    def __init__(self, vectors, provenance, gb_count, lower_bound=False):
        super().__init__(vectors, provenance)
        self.gb_count = gb_count
        self.lower_bound = lower_bound


def circuits(config, subset_cap=2_000_000):
    """All circuits of A: primitive kernel vectors of support-minimal
    nonzero support.

    Every (rank+1)-subset of columns of rank exactly rank(A) carries a
    one-dimensional kernel whose primitive generator is a circuit, and
    every circuit arises this way.
    """
    def compute():
        from math import comb
        n, r = config.n, config.rank
        if r + 1 > n:
            return CircuitSet([], config)
        if comb(n, r + 1) > subset_cap:
            raise CapExceededError("too many column subsets for circuit enumeration")
        found = set()
        for sub in combinations(range(n), r + 1):
            M = [[config.entries[row][j] for j in sub] for row in range(config.d)]
            ker = intlinalg.kernel_basis(M)
            if len(ker) != 1:
                continue
            v = ker[0]
            u = [0] * n
            for idx, j in enumerate(sub):
                u[j] = v[idx]
            found.add(intlinalg.sign_normalize(tuple(u)))
        return CircuitSet(found, config)
    return config._memo("circuits", compute)


def lawrence(config):
    """The Lawrence lifting [[A, 0], [I, I]] with x/y column labels."""
    d, n = config.d, config.n
    entries = [list(row) + [0] * n for row in config.entries]
    for i in range(n):
        e = [1 if j == i else 0 for j in range(n)]
        entries.append(e + e)
    labels = []
    for lab in config.labels:
        labels.append(lab)
    for lab in config.labels:
        labels.append("y" + lab[1:] if lab.startswith("x") else "y_" + lab)
    return Configuration(entries, labels)


def graver(config):
    """Graver basis of A: dehomogenized minimal generators of the ideal
    of the Lawrence lifting.

    Also validates the defining property: no element's monomial pair is
    divisible by another element's pair.
    """
    def compute():
        n = config.n
        if not config.kernel().basis:
            return GraverSet([], "lawrence-lifting")
        L = lawrence(config)
        gens = minimal_generators(L)
        vectors = set()
        for b in gens:
            u = b.u
            if tuple(-x for x in u[n:]) != u[:n]:
                raise InternalCheckError("Lawrence generator is not symmetric")
            vectors.add(intlinalg.sign_normalize(u[:n]))
        out = GraverSet(vectors, "lawrence-lifting")
        vecs = out.sorted_vectors()
        for g in vecs:
            for h in vecs:
                if g != h and (_conformal_divides(g, h) or
                               _conformal_divides(tuple(-x for x in g), h)):
                    raise InternalCheckError("Graver set is not an antichain")
        return out
    return config._memo("graver", compute)


def _conformal_divides(g, h):
    """g sign-compatible with h and componentwise no bigger."""
    for a, b in zip(g, h):
        if a * b < 0 or abs(a) > abs(b):
            return False
    return True


def graver_completion_oracle(config, size_cap=20_000):
    """Graver basis by Pottier-style completion, independent of Lawrence.

    Starts from the kernel basis with both signs, closes under pairwise
    sums reduced by conformal division, then keeps the conformally
    minimal vectors.  Exponential; meant for small kernels as the
    cross-check oracle.
    """
    basis = config.kernel().basis
    if not basis:
        return GraverSet([], "completion")
    G = []
    for b in basis:
        G.append(tuple(b))
        G.append(tuple(-x for x in b))

    def normal_form(s):
        changed = True
        while changed and any(s):
            changed = False
            for g in G:
                if any(g) and _conformal_divides(g, s):
                    s = tuple(a - b for a, b in zip(s, g))
                    changed = True
                    break
        return s

    pending = [(i, j) for i in range(len(G)) for j in range(i, len(G))]
    while pending:
        i, j = pending.pop()
        s = tuple(a + b for a, b in zip(G[i], G[j]))
        s = normal_form(s)
        if any(s):
            for t in (s, tuple(-x for x in s)):
                G.append(t)
                pending.extend((k, len(G) - 1) for k in range(len(G)))
            if len(G) > size_cap:
                raise CapExceededError("completion oracle exceeded size cap")
    out = set()
    for g in G:
        others = [h for h in G if h != g]
        if not any(_conformal_divides(h, g) for h in others if any(h)):
            out.add(intlinalg.sign_normalize(g))
    return GraverSet(out, "completion")


def _canonical_marked(G):
    return frozenset(G)


def universal_gb(config, mode="exhaustive", sample_count=20, cap=10, seed=7):
    """Universal Groebner basis (union of all reduced Groebner bases).

    Exhaustive mode walks the Groebner fan: start at a generic weight,
    then repeatedly cross every facet of the current Groebner cone by
    recomputing the reduced basis under a composite order (grading, a
    relative-interior point of the facet, the flipped facet normal,
    grevlex), breadth-first until no unseen marked basis appears.
    Sampled mode unions the reduced bases of random weights and is only
    a lower bound.
    """
    n = config.n
    omega = config.variable_grading()
    if omega is None:
        raise NotPointedError("universal Groebner bases need a pointed configuration")
    if not config.kernel().basis:
        return UniversalGBSet([], "fan-traversal", 1)
    gens = saturated_generators(config)
    rng = random.Random(seed)

    def reduced_gb(extra_rows, start):
        order = TermOrder.weights([omega] + extra_rows, n)
        return buchberger(start, order), order

    if mode != "exhaustive":
        union = set()
        count = 0
        for _ in range(sample_count):
            w = [rng.randrange(1, 1 << 30) for _ in range(n)]
            G, _ = reduced_gb([w], gens)
            union.update(intlinalg.sign_normalize(tuple(a - b for a, b in zip(l, t)))
                         for l, t in G)
            count += 1
        return UniversalGBSet(union, "sampled-weights", count, lower_bound=True)

    if n > cap:
        raise CapExceededError(f"exhaustive universal GB capped at n <= {cap}")

    w0 = [rng.randrange(1, 1 << 30) for _ in range(n)]
    G0, _ = reduced_gb([w0], gens)
    start_key = _canonical_marked(G0)
    visited = {start_key}
    queue = [G0]
    union = set()
    while queue:
        G = queue.pop()
        union.update(intlinalg.sign_normalize(tuple(a - b for a, b in zip(l, t)))
                     for l, t in G)
        normals = []
        seen = set()
        for l, t in G:
            u = intlinalg.primitive(tuple(a - b for a, b in zip(l, t)))
            if u not in seen:
                seen.add(u)
                normals.append(u)
        for f in normals:
            if tuple(-x for x in f) in seen:
                raise InternalCheckError("opposite facet normals in one Groebner cone")
            lp = LP(n)
            lp.add_eq(f, 0)
            for g in normals:
                if g != f:
                    lp.add_ge(g, 1)
            point = lp.feasible_point()
            if point is None:
                continue
            wall = intlinalg.clear_denominators(point) if any(point) else tuple([0] * n)
            flipped = tuple(-x for x in f)
            H, _ = reduced_gb([list(wall), list(flipped)], list(G))
            key = _canonical_marked(H)
            if key not in visited:
                visited.add(key)
                queue.append(H)
    return UniversalGBSet(union, "fan-traversal", len(visited))


def true_degree(circuit, config):
    """(degree, index, true degree) of a circuit of A.

    The index is the index of the lattice spanned by the support columns
    inside the intersection of their rational span with ZA.
    """
    if isinstance(circuit, LatticeBinomial):
        u = circuit.u
    else:
        u = tuple(circuit)
    if intlinalg.sign_normalize(intlinalg.primitive(u)) not in circuits(config).vectors:
        raise NotACircuitError(f"{u} is not a circuit of this configuration")
    b = LatticeBinomial(u)
    supp_cols = [config.column(i) for i in b.support]
    span_lattice = SublatticeDescription(supp_cols, config.d)
    perp = intlinalg.kernel_basis(supp_cols)
    za = config.column_lattice()
    if perp:
        K = [[sum(p[k] * z[k] for k in range(config.d)) for p in perp]
             for z in za.basis]
        coeffs = intlinalg.kernel_basis([list(col) for col in zip(*K)])
        slice_basis = [intlinalg.vec_mat(list(c), [list(z) for z in za.basis])
                       for c in coeffs]
    else:
        slice_basis = [list(z) for z in za.basis]
    slice_lattice = SublatticeDescription([tuple(v) for v in slice_basis], config.d)
    index = lattice_index(span_lattice, slice_lattice)
    deg = b.degree
    return deg, index, deg * index


def degree_bound_report(config, ugb_cap=10):
    """Degree ledger: maxima of the distinguished sets against the
    volume and codimension bounds, each reported pass/fail."""
    if not config.graded:
        raise NotHomogeneousError("the degree bounds compare against a graded degree")
    from .polytopes import normalized_volume

    C = circuits(config)
    Gr = graver(config)
    degree = normalized_volume(config)
    codim = config.codim
    maxdeg_c = C.maxdeg
    maxdeg_gr = Gr.maxdeg
    maxdeg_ugb = None
    if config.n <= ugb_cap and config.pointed:
        maxdeg_ugb = universal_gb(config, "exhaustive", cap=ugb_cap).maxdeg
    trues = [true_degree(b, config)[2] for b in C.binomials()]
    max_true = max(trues, default=0)
    checks = {
        "eq44": maxdeg_c <= degree,
        "eq45": maxdeg_gr <= codim * maxdeg_c,
        "lemma46": maxdeg_gr <= degree * codim,
        "conj48": maxdeg_gr <= max_true,
    }
    return {
        "maxdeg_circuits": maxdeg_c,
        "maxdeg_ugb": maxdeg_ugb,
        "maxdeg_graver": maxdeg_gr,
        "degree": degree,
        "codim": codim,
        "max_true_degree": max_true,
        "true_degree_bounded": max_true <= degree,
        "checks": checks,
    }
