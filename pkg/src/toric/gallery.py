"""Named configurations and their expected facts.

Every fact is machine-checkable by exactly one operation; `verify`
runs them all and reports mismatches.  Facts tagged slow only run when
TORIC_RUN_SLOW=1 is set (they take minutes at desk scale).
"""

import itertools
import os
from fractions import Fraction

from .binomials import parse_binomial
from .distinguished import (circuits, degree_bound_report, graver, lawrence,
                            true_degree, universal_gb)
from .errors import InputError
from .groebner import (hilbert_function, hilbert_polynomial,
                       minimal_generators, toric_ideal)
from .intlinalg import sign_normalize
from .lattice import Configuration
from .polytopes import (convex_hull, ehrhart_polynomial, lattice_point_count,
                        normal_fan_equal, normalized_volume, vertices_of)
from .semigroups import (is_hereditarily_normal, is_normal,
                         is_normal_projective, is_smooth, is_unimodular)


def _cols_to_config(cols, labels=None):
    return Configuration([[c[r] for c in cols] for r in range(len(cols[0]))], labels)


def twisted_cubic():
    return Configuration([[3, 2, 1, 0], [0, 1, 2, 3]])


def veronese(n, r):
    if n < 1 or r < 1:
        raise InputError("veronese needs n >= 1, r >= 1")
    pts = sorted((p for p in itertools.product(range(r + 1), repeat=n)
                  if sum(p) == r), reverse=True)
    return _cols_to_config([list(p) for p in pts])


def cubic_scroll():
    return Configuration([[2, 1, 1, 0, 0], [0, 1, 0, 2, 1], [0, 0, 1, 0, 1]])


def segre(r, s):
    if r < 1 or s < 1:
        raise InputError("segre needs r >= 1, s >= 1")
    cols, labels = [], []
    for i in range(r + 1):
        for j in range(s + 1):
            v = [0] * (r + 1)
            v[i] = 1
            w = [0] * (s + 1)
            w[j] = 1
            cols.append(v + w)
            labels.append(f"x{i + 1}{j + 1}")
    return _cols_to_config(cols, labels)


def birkhoff(p):
    if p < 2:
        raise InputError("birkhoff needs p >= 2")
    cols, labels = [], []
    for perm in sorted(itertools.permutations(range(p))):
        m = [[0] * p for _ in range(p)]
        for i, j in enumerate(perm):
            m[i][j] = 1
        cols.append([m[i][j] for i in range(p) for j in range(p)])
        labels.append("x" + "".join(str(i + 1) for i in perm))
    return _cols_to_config(cols, labels)


def triple(r, s, t):
    if not (1 <= r <= s <= t):
        raise InputError("triple needs 1 <= r <= s <= t")
    cols, labels = [], []
    for i in range(r):
        for j in range(s):
            for k in range(t):
                v = [0] * (r * s)
                v[i * s + j] = 1
                w = [0] * (r * t)
                w[i * t + k] = 1
                u = [0] * (s * t)
                u[j * t + k] = 1
                cols.append(v + w + u)
                labels.append(f"x{i + 1}{j + 1}{k + 1}")
    return _cols_to_config(cols, labels)


def octahedron():
    return Configuration([[1, 1, 1, 0, 0, 0], [1, 0, 0, 1, 1, 0],
                          [0, 1, 0, 1, 0, 1], [0, 0, 1, 0, 1, 1]])


def quadric_cone():
    return Configuration([[2, 1, 0], [0, 1, 2]])


def gap_curve(r):
    if r < 4:
        raise InputError("gap_curve needs r >= 4")
    return Configuration([[r, r - 1, 1, 0], [0, 1, r - 1, r]])


def hexagon(i, j, k):
    if not (0 < i < j < k):
        raise InputError("hexagon needs 0 < i < j < k")
    pts = sorted(set(itertools.permutations((i, j, k))))
    shell = _cols_to_config([list(p) for p in pts])
    P = convex_hull(shell)
    s = i + j + k
    allpts = sorted(p for p in itertools.product(range(i, k + 1), repeat=3)
                    if sum(p) == s and P.contains(p))
    return _cols_to_config([list(p) for p in allpts])


def tight_surface(d):
    if d < 3:
        raise InputError("tight_surface needs d >= 3")
    return Configuration([[1, 1, 1, 1, 1], [0, 1, 1, 0, 0], [0, 0, 1, 1, d]])


def graver_gap():
    return lawrence(Configuration([[1, 3, 4, 6, 0], [0, 0, 0, -5, 1]]))


def graph_config(edges):
    verts = sorted({v for e in edges for v in e})
    index = {v: i for i, v in enumerate(verts)}
    cols, labels = [], []
    for (a, b) in edges:
        v = [0] * len(verts)
        v[index[a]] = 1
        v[index[b]] = -1
        cols.append(v)
        labels.append(f"x{a}{b}")
    return _cols_to_config(cols, labels)


def cycle_digraph(k):
    if k < 2:
        raise InputError("cycle_digraph needs k >= 2")
    return graph_config([(i, i % k + 1) for i in range(1, k + 1)])


def complete_digraph(k):
    if k < 2:
        raise InputError("complete_digraph needs k >= 2")
    return graph_config([(i, j) for i in range(1, k + 1)
                         for j in range(1, k + 1) if i != j])


def matroid_bases(ground, bases):
    cols, labels = [], []
    for b in bases:
        b = sorted(b)
        v = [0] * ground
        for e in b:
            if not (1 <= e <= ground):
                raise InputError("basis element outside the ground set")
            v[e - 1] = 1
        cols.append(v)
        labels.append("x" + "".join(str(e) for e in b))
    return _cols_to_config(cols, labels)


def cubics_no_center():
    # Nine degree-3 exponent vectors on three variables (the full list of
    # 9 points; the e = (1,1,1) center is the only degree-3 point absent).
    pts = [(3, 0, 0), (0, 3, 0), (0, 0, 3), (2, 1, 0), (1, 2, 0),
           (2, 0, 1), (1, 0, 2), (0, 2, 1), (0, 1, 2)]
    return _cols_to_config([list(p) for p in pts])


GRAVER_GAP_GENERATORS = [
    "x2*y1^3 - x1^3*y2",
    "x3*y1^4 - x1^4*y3",
    "x3^3*y2^4 - x2^4*y3^3",
    "x4*x5^5*y2^2 - x2^2*y4*y5^5",
    "x4*x5^5*y1^6 - x1^6*y4*y5^5",
    "x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10",
    "x4*x5^5*y1^2*y3 - x1^2*x3*y4*y5^5",
    "x4*x5^5*y1^3*y2 - x1^3*x2*y4*y5^5",
    "x3*y1*y2 - x1*x2*y3",
    "x1*x4*x5^5*y2*y3 - x2*x3*y1*y4*y5^5",
    "x2^2*x4*x5^5*y3^3 - x3^3*y2^2*y4*y5^5",
    "x1*x3^2*y2^3 - x2^3*y1*y3^2",
    "x1^2*x3*y2^2 - x2^2*y1^2*y3",
    "x2*x4*x5^5*y1*y3^2 - x1*x3^2*y2*y4*y5^5",
    "x1^2*x4*x5^5*y3^2 - x3^2*y1^2*y4*y5^5",
    "x4^2*x5^10*y1*y2*y3^2 - x1*x2*x3^2*y4^2*y5^10",
]
GRAVER_GAP_CIRCUIT_COUNT = 6
GRAVER_GAP_KEY_CIRCUIT = "x4^2*x5^10*y3^3 - x3^3*y4^2*y5^10"


def _vector_set(binomial_like):
    return frozenset(sign_normalize(tuple(u)) for u in binomial_like)


def _ideal_strings_fact(strings):
    def check(config):
        want = _vector_set(parse_binomial(s, config.labels) for s in strings)
        got = _vector_set(toric_ideal(config).vectors())
        return got, want
    return check


def _mingen_degrees_fact(degrees):
    def check(config):
        got = sorted(b.degree for b in minimal_generators(config))
        return got, sorted(degrees)
    return check


class Fact:
    def __init__(self, name, check, slow=False):
        self.name = name
        self.check = check
        self.slow = slow

    def run(self, config):
        got, want = self.check(config)
        return got == want, got, want


class GalleryEntry:
    def __init__(self, name, builder, description, facts, aliases=(),
                 params_doc="", default_params=()):
        self.name = name
        self.builder = builder
        self.description = description
        self.facts = facts
        self.aliases = tuple(aliases)
        self.params_doc = params_doc
        self.default_params = tuple(default_params)

    def build(self, params=None):
        params = tuple(params) if params else self.default_params
        return self.builder(*params)


def _bool_fact(fn, want=True):
    return lambda config: (fn(config), want)


def _facts_twisted_cubic():
    ideal = ["x1*x3 - x2^2", "x1*x4 - x2*x3", "x2*x4 - x3^2"]
    circ = ["x1*x3 - x2^2", "x2*x4 - x3^2", "x1^2*x4 - x2^3", "x1*x4^2 - x3^3"]
    grav = circ + ["x1*x4 - x2*x3"]
    return [
        Fact("ideal", _ideal_strings_fact(ideal)),
        Fact("mingen_degrees", _mingen_degrees_fact([2, 2, 2])),
        Fact("circuits", lambda c: (_vector_set(circuits(c).vectors),
                                    _vector_set(parse_binomial(s, c.labels) for s in circ))),
        Fact("graver", lambda c: (_vector_set(graver(c).vectors),
                                  _vector_set(parse_binomial(s, c.labels) for s in grav))),
        Fact("ugb_equals_graver", lambda c: (universal_gb(c).vectors, graver(c).vectors)),
        Fact("degree", lambda c: (normalized_volume(c), 3)),
        Fact("dim", lambda c: (c.rank - 1, 1)),
        Fact("projectively_normal", lambda c: (is_normal(c).is_normal, True)),
        Fact("variety_normal", lambda c: (is_normal_projective(c)["normal"], True)),
        Fact("hereditarily_normal",
             lambda c: (is_hereditarily_normal(c)["hereditarily_normal"], False)),
        Fact("unimodular", lambda c: (is_unimodular(c)["unimodular"], False)),
        Fact("hilbert_polynomial", lambda c: (hilbert_polynomial(c),
                                              [Fraction(1), Fraction(3)])),
        Fact("ehrhart_equals_hilbert",
             lambda c: (ehrhart_polynomial(c, lattice="affine"), hilbert_polynomial(c))),
        Fact("circuit_true_degrees",
             lambda c: (sorted(true_degree(b, c) for b in circuits(c).binomials()),
                        [(2, 1, 2), (2, 1, 2), (3, 1, 3), (3, 1, 3)])),
    ]


def _facts_birkhoff_3():
    return [
        Fact("ideal", _ideal_strings_fact(["x123*x231*x312 - x132*x213*x321"])),
        Fact("degree", lambda c: (normalized_volume(c), 3)),
        Fact("dim", lambda c: (c.rank - 1, 4)),
        Fact("generated_in_degree_p", lambda c: (
            max(b.degree for b in minimal_generators(c)), 3)),
    ]


def _facts_birkhoff_4():
    return [
        Fact("degree", lambda c: (normalized_volume(c), 352)),
        Fact("dim", lambda c: (c.rank - 1, 9)),
        Fact("generated_in_degree_p", lambda c: (
            max(b.degree for b in minimal_generators(c)) <= 4, True), slow=True),
    ]


def _facts_triple_222():
    return [
        Fact("ideal", _ideal_strings_fact(
            ["x111*x122*x212*x221 - x112*x121*x211*x222"])),
    ]


def _facts_veronese_surface():
    return [
        Fact("ugb_equals_circuits",
             lambda c: (universal_gb(c).vectors, circuits(c).vectors)),
        Fact("graver_strictly_larger",
             lambda c: (circuits(c).vectors < graver(c).vectors, True)),
        Fact("vertices_are_corners",
             lambda c: (len(vertices_of(c)), 3)),
        Fact("degree", lambda c: (normalized_volume(c), 4)),
    ]


def _facts_octahedron():
    return [
        Fact("f_vector", lambda c: (list(convex_hull(c).f_vector()), [6, 12, 8])),
        Fact("degree", lambda c: (normalized_volume(c), 4)),
        Fact("dim", lambda c: (c.rank - 1, 3)),
        Fact("dilate_1_count", lambda c: (lattice_point_count(c, 1, "affine"), 6)),
        Fact("projectively_normal", lambda c: (is_normal(c).is_normal, True)),
        Fact("unimodular", lambda c: (is_unimodular(c)["unimodular"], True)),
        Fact("mingen_degrees", _mingen_degrees_fact([2, 2])),
    ]


def _facts_quadric_cone():
    return [
        Fact("normal", lambda c: (is_normal(c).is_normal, True)),
        Fact("smooth", lambda c: (is_normal(c).is_smooth, False)),
        Fact("hilbert_basis_is_A",
             lambda c: (sorted(is_normal(c).hilbert_basis), sorted(c.columns))),
    ]


def _facts_gap_curve(r):
    return [
        Fact("mingen_degrees", _mingen_degrees_fact([2] + [r - 1] * (r - 1))),
        Fact("not_projectively_normal", lambda c: (is_normal(c).is_normal, False)),
        Fact("witness_exists", lambda c: (is_normal(c).witness is not None, True)),
        Fact("variety_normal", lambda c: (is_normal_projective(c)["normal"], True)),
        Fact("variety_smooth",
             lambda c: (is_smooth(c, projective=True)["smooth"], True)),
        Fact("hilbert_equals_ehrhart", lambda c: (
            hilbert_polynomial(c), ehrhart_polynomial(c, lattice="affine"))),
        Fact("hilbert_function_gap", lambda c: (
            (hilbert_function(c, 1), lattice_point_count(c, 1, "affine")), (4, 5))
             if r == 4 else ((True,), (True,))),
    ]


def _quadratic_lex_exists(config, cap=None):
    """Search variable permutations for a quadratic pure-lex reduced GB."""
    from .orders import TermOrder
    n = config.n
    count = 0
    gens = toric_ideal(config).elements
    from .groebner import buchberger
    for perm in itertools.permutations(range(n)):
        G = buchberger(list(gens), TermOrder.lex(n, perm))
        count += 1
        if max((max(sum(l), sum(t)) for l, t in G), default=0) <= 2:
            return True, perm, count
        if cap and count >= cap:
            return False, None, count
    return False, None, count


def _facts_hexagon_123():
    return [
        Fact("variety_normal", lambda c: (is_normal_projective(c)["normal"], True)),
        Fact("normal", lambda c: (is_normal(c).is_normal, True)),
        Fact("fan_matches_124",
             lambda c: (normal_fan_equal(c, hexagon(1, 2, 4)), True)),
        Fact("fan_matches_235",
             lambda c: (normal_fan_equal(c, hexagon(2, 3, 5)), True)),
        Fact("quadratic_lex_gb",
             lambda c: (_quadratic_lex_exists(c)[0], True)),
    ]


def _facts_tight_surface(d):
    return [
        Fact("grading", lambda c: (c.graded, True)),
        Fact("mingen_degrees", _mingen_degrees_fact([2] + [d] * d)),
        Fact("degree", lambda c: (normalized_volume(c), d + 1)),
    ]


def _facts_graver_gap():
    def graver_exact(c):
        want = _vector_set(parse_binomial(s, c.labels) for s in GRAVER_GAP_GENERATORS)
        return graver(c).vectors, want

    def circuits_exact(c):
        want = _vector_set(parse_binomial(s, c.labels)
                           for s in GRAVER_GAP_GENERATORS[:GRAVER_GAP_CIRCUIT_COUNT])
        return circuits(c).vectors, want

    def key_circuit(c):
        u = parse_binomial(GRAVER_GAP_KEY_CIRCUIT, c.labels)
        return true_degree(u, c), (15, 2, 30)

    def bounds(c):
        rep = degree_bound_report(c)
        keys = (rep["maxdeg_graver"], rep["maxdeg_circuits"], rep["degree"],
                rep["codim"], rep["maxdeg_graver"] > rep["maxdeg_circuits"],
                rep["checks"]["conj48"], rep["checks"]["lemma46"])
        return keys, (16, 15, 54, 3, True, True, True)

    return [
        Fact("graver_exact_16", graver_exact),
        Fact("circuits_first_6", circuits_exact),
        Fact("graver_maxdeg", lambda c: (graver(c).maxdeg, 16)),
        Fact("circuits_maxdeg", lambda c: (circuits(c).maxdeg, 15)),
        Fact("key_circuit_true_degree", key_circuit),
        Fact("degree", lambda c: (normalized_volume(c), 54)),
        Fact("codim", lambda c: (c.codim, 3)),
        Fact("bounds_report", bounds),
        Fact("mingen_equals_graver", lambda c: (
            _vector_set(b.u for b in minimal_generators(c)), graver(c).vectors)),
    ]


def _facts_cycle5():
    return [
        Fact("circuits", lambda c: (_vector_set(circuits(c).vectors),
                                    _vector_set([parse_binomial(
                                        "x12*x23*x34*x45*x51 - 1", c.labels)]))),
        Fact("unimodular", lambda c: (is_unimodular(c)["unimodular"], True)),
        Fact("hereditarily_normal",
             lambda c: (is_hereditarily_normal(c)["hereditarily_normal"], True)),
    ]


def _facts_complete_digraph_4():
    return [
        Fact("unimodular", lambda c: (is_unimodular(c)["unimodular"], True)),
        Fact("hereditarily_normal",
             lambda c: (is_hereditarily_normal(c)["hereditarily_normal"], True)),
    ]


def _facts_cubics_no_center():
    return [
        Fact("generated_by_quadrics", lambda c: (
            sorted({b.degree for b in minimal_generators(c)}), [2])),
        Fact("no_quadratic_lex_gb_sampled", lambda c: (
            _quadratic_lex_exists(c, cap=40)[0], False)),
    ]


def _facts_segre(r, s):
    from math import comb
    return [
        Fact("degree", lambda c: (normalized_volume(c), comb(r + s, r))),
        Fact("unimodular", lambda c: (is_unimodular(c)["unimodular"], True)),
    ]


def _facts_scroll():
    return [
        Fact("degree", lambda c: (normalized_volume(c), 3)),
        Fact("vertices", lambda c: (len(vertices_of(c)), 4)),
        Fact("mingen_degrees", _mingen_degrees_fact([2, 2, 2])),
    ]


ENTRIES = {}


def _register(entry):
    ENTRIES[entry.name] = entry


_register(GalleryEntry(
    "twisted_cubic", lambda: twisted_cubic(),
    "Four equidistant points on a line; the twisted cubic curve.",
    _facts_twisted_cubic()))
_register(GalleryEntry(
    "veronese", veronese,
    "Degree-r monomials in n variables (Veronese embedding); the n=3, r=2 "
    "surface is the gallery instance.",
    _facts_veronese_surface(), params_doc="n r", default_params=(3, 2)))
_register(GalleryEntry(
    "cubic_scroll", lambda: cubic_scroll(),
    "Rational normal scroll of degree 3 in P^4; its polytope is a quadrangle.",
    _facts_scroll()))
_register(GalleryEntry(
    "segre", segre,
    "Products of simplices; ideal of 2x2 minors of a matrix of unknowns.",
    _facts_segre(2, 2), params_doc="r s", default_params=(2, 2)))
_register(GalleryEntry(
    "birkhoff", birkhoff,
    "Permutation matrices of size p (doubly stochastic polytope). The "
    "generated-in-degree-p fact is checked for p <= 4 (p = 4 is slow); "
    "p >= 5 degrees are out of desk scale.",
    _facts_birkhoff_3(), params_doc="p", default_params=(3,)))
_register(GalleryEntry(
    "birkhoff4", lambda: birkhoff(4),
    "Birkhoff configuration at p = 4 with its degree-352 volume fact.",
    _facts_birkhoff_4()))
_register(GalleryEntry(
    "triple", triple,
    "Triple products e_ij + e_ik + e_jk; looks like Segre but is not.",
    _facts_triple_222(), params_doc="r s t", default_params=(2, 2, 2)))
_register(GalleryEntry(
    "octahedron", lambda: octahedron(),
    "Generic torus orbit on the Grassmannian of lines in P^3; the bases "
    "of the uniform rank-2 matroid on 4 elements; a regular octahedron.",
    _facts_octahedron()))
_register(GalleryEntry(
    "quadric_cone", lambda: quadric_cone(),
    "The surface {(2,0),(1,1),(0,2)}: normal but not smooth.",
    _facts_quadric_cone()))
_register(GalleryEntry(
    "gap_curve", gap_curve,
    "P^1 embedded by {r, r-1, 1, 0}: smooth and normal but not "
    "projectively normal; its coordinate ring is also not Cohen-Macaulay "
    "(recorded, not machine-verified).",
    _facts_gap_curve(4), aliases=("ex26",), params_doc="r", default_params=(4,)))
_register(GalleryEntry(
    "hexagon", hexagon,
    "Lattice points of the hexagon with vertex coordinates the "
    "permutations of (i,j,k); P^2 blown up at three points.",
    _facts_hexagon_123(), params_doc="i j k", default_params=(1, 2, 3)))
_register(GalleryEntry(
    "tight_surface", tight_surface,
    "Codimension-2 surfaces in P^4 with one quadric and d forms of "
    "degree d; degree d+1.",
    _facts_tight_surface(3), aliases=("ex44",), params_doc="d",
    default_params=(3,)))
_register(GalleryEntry(
    "graver_gap", lambda: graver_gap(),
    "Lawrence lifting of [[1,3,4,6,0],[0,0,0,-5,1]]: Graver degree 16 "
    "exceeds circuit degree 15; the degree-30 true degree rescues the "
    "conjectured bound.  Regularity (17) is out of scope here.",
    _facts_graver_gap(), aliases=("ex47",)))
_register(GalleryEntry(
    "cycle5", lambda: cycle_digraph(5),
    "Directed 5-cycle graph configuration; one circuit, unimodular.",
    _facts_cycle5()))
_register(GalleryEntry(
    "root_system_a3", lambda: complete_digraph(4),
    "Complete digraph on 4 nodes (type A_3 root configuration); "
    "hereditarily normal.",
    _facts_complete_digraph_4()))
_register(GalleryEntry(
    "cubics_no_center", lambda: cubics_no_center(),
    "Nine degree-3 points on three variables (9 points as listed; the "
    "stated count of 8 disagrees with the list, which we ship verbatim): "
    "generated by quadrics, but no quadratic lex basis was found in the "
    "sampled permutations.",
    _facts_cubics_no_center(), aliases=("conj28",)))

ALIASES = {}
for entry in ENTRIES.values():
    for a in entry.aliases:
        ALIASES[a] = entry.name


def make_config(name, *params):
    """Build a named configuration; families take parameters."""
    key = ALIASES.get(name, name)
    builders = {
        "twisted_cubic": lambda: twisted_cubic(),
        "veronese": veronese,
        "cubic_scroll": lambda: cubic_scroll(),
        "segre": segre,
        "birkhoff": birkhoff,
        "birkhoff4": lambda: birkhoff(4),
        "triple": triple,
        "octahedron": lambda: octahedron(),
        "quadric_cone": lambda: quadric_cone(),
        "gap_curve": gap_curve,
        "hexagon": hexagon,
        "tight_surface": tight_surface,
        "graver_gap": lambda: graver_gap(),
        "cycle5": lambda: cycle_digraph(5),
        "cycle_digraph": cycle_digraph,
        "complete_digraph": complete_digraph,
        "root_system_a3": lambda: complete_digraph(4),
        "cubics_no_center": lambda: cubics_no_center(),
        "graph": graph_config,
        "matroid_bases": matroid_bases,
    }
    if key not in builders:
        raise InputError(f"unknown configuration {name!r}")
    try:
        return builders[key](*params)
    except TypeError as e:
        raise InputError(f"bad parameters for {name!r}: {e}") from None


def run_slow_facts():
    return os.environ.get("TORIC_RUN_SLOW") == "1"


def verify(name, params=None, include_slow=None):
    """Check every expected fact of a gallery entry.

    Returns (all_ok, results) with one (fact, ok, got, want) per fact;
    slow facts are skipped unless requested.
    """
    key = ALIASES.get(name, name)
    if key not in ENTRIES:
        raise InputError(f"unknown gallery entry {name!r}")
    entry = ENTRIES[key]
    config = entry.build(params)
    if include_slow is None:
        include_slow = run_slow_facts()
    results = []
    ok_all = True
    for fact in entry.facts:
        if fact.slow and not include_slow:
            results.append((fact.name, None, "skipped (slow)", None))
            continue
        ok, got, want = fact.run(config)
        ok_all = ok_all and ok
        results.append((fact.name, ok, got, want))
    return ok_all, results
