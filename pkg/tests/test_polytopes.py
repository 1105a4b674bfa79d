import itertools
import random
from fractions import Fraction
from math import comb, factorial

import pytest

from toric.errors import DegenerateError, NotHomogeneousError
from toric.gallery import (birkhoff, cubic_scroll, gap_curve, hexagon,
                           octahedron, segre, twisted_cubic, veronese)
from toric.groebner import hilbert_polynomial
from toric.intlinalg import rank
from toric.lattice import Configuration
from toric.polytopes import (Cone, cone_of, convex_hull, ehrhart_polynomial,
                             face_poset, incremental_hull,
                             lattice_point_count, normal_fan_equal,
                             normalized_volume, regular_triangulation,
                             vertices_of)


def test_hull_segment():
    P = convex_hull(twisted_cubic())
    assert P.dim == 1
    assert P.vertex_indices == (0, 3)
    for g, c, tight in P.facets:
        for i in range(4):
            assert sum(a * b for a, b in zip(g, twisted_cubic().column(i))) >= c


def test_hull_scroll_quadrangle():
    P = convex_hull(cubic_scroll())
    assert P.dim == 2
    assert len(P.vertex_indices) == 4
    assert len(P.facets) == 4


def test_hull_octahedron():
    P = convex_hull(octahedron())
    assert P.dim == 3
    assert len(P.vertex_indices) == 6
    assert len(P.facets) == 8
    assert P.f_vector() == (6, 12, 8)


def octahedron_faces_oracle():
    """Supporting-hyperplane enumeration over all small normal vectors."""
    cfg = octahedron()
    pts = cfg.columns
    faces = set()
    for g in itertools.product((-1, 0, 1), repeat=4):
        vals = [sum(a * b for a, b in zip(g, p)) for p in pts]
        m = max(vals)
        faces.add(frozenset(i for i, v in enumerate(vals) if v == m))
    faces.discard(frozenset(range(6)))
    return faces


def test_octahedron_face_poset_matches_oracle():
    P = convex_hull(octahedron())
    got = {f for f, d in P.proper_faces()}
    assert got == octahedron_faces_oracle()


def test_face_poset_segment():
    rep = face_poset(twisted_cubic())
    assert rep["dim"] == 1 and rep["f_vector"] == [2]


def test_face_poset_birkhoff3_dimension():
    rep = face_poset(birkhoff(3))
    assert rep["dim"] == 4


def test_cone_face_poset():
    # non-graded: pos(A) for A = {(1,0),(1,1),(0,1)} scaled to break grading
    A = Configuration([[2, 1, 0], [0, 1, 3]])
    rep = face_poset(A)
    assert rep["object"] == "cone"
    assert rep["dim"] == 2
    # two facet rays and the apex
    dims = sorted(d for _, d in rep["faces"])
    assert dims == [0, 1, 1]


def test_vertices_hexagon_with_certificates():
    H = hexagon(1, 2, 3)
    verts = vertices_of(H)
    pts = H.columns
    assert len(verts) == 6
    assert all(pts[i] != (2, 2, 2) for i in verts)
    # certificate: w aligned with a permutation is uniquely maximized there
    for i in verts:
        w = pts[i]
        vals = [sum(a * b for a, b in zip(w, p)) for p in pts]
        assert vals.count(max(vals)) == 1 and vals[i] == max(vals)
    # the center is the average of the six outer points, hence no vertex
    outer = [pts[i] for i in verts]
    avg = tuple(sum(c[k] for c in outer) // 6 for k in range(3))
    assert avg in pts and pts.index(avg) not in verts


def test_vertices_twisted_cubic_and_veronese():
    assert vertices_of(twisted_cubic()) == (0, 3)
    V = veronese(3, 2)
    verts = vertices_of(V)
    assert len(verts) == 3
    for i in verts:
        assert sorted(V.column(i), reverse=True) == [2, 0, 0]


def test_vertices_need_grading():
    with pytest.raises(NotHomogeneousError):
        vertices_of(Configuration([[1, 2]]))


def test_normal_fan_equalities():
    assert normal_fan_equal(hexagon(1, 2, 3), hexagon(1, 2, 4))
    assert normal_fan_equal(hexagon(1, 2, 3), hexagon(2, 3, 5))
    assert normal_fan_equal(twisted_cubic(), twisted_cubic())
    seg = Configuration([[0, 3], [0, 0]])
    square = Configuration([[0, 1, 0, 1], [0, 0, 1, 1]])
    assert not normal_fan_equal(seg, square)
    with pytest.raises(DegenerateError):
        normal_fan_equal(twisted_cubic(), cubic_scroll())


def test_triangulation_twisted_cubic_unit_weights():
    A = twisted_cubic()
    t = regular_triangulation(A, [0, 0, 0, 1])
    assert t.total_volume == 3
    assert all(v >= 1 for v in t.volumes)


def test_triangulation_segre_products():
    for r, s in [(1, 1), (2, 1), (2, 2)]:
        S = segre(r, s)
        rng = random.Random(100 * r + s)
        t = regular_triangulation(S, [rng.randrange(1 << 20) for _ in range(S.n)])
        assert t.unimodular
        assert len(t.simplices) == comb(r + s, r)


def test_triangulation_octahedron():
    t = regular_triangulation(octahedron(), [5, 3, 8, 1, 9, 2])
    assert len(t.simplices) == 4 and t.unimodular


def test_triangulation_covers_volume_independent_weights():
    rng = random.Random(51)
    for _ in range(15):
        n = rng.randint(2, 6)
        A = Configuration([[1] * n] + [[rng.randint(0, 3) for _ in range(n)]])
        t1 = regular_triangulation(A, [rng.randrange(1 << 25) for _ in range(n)])
        t2 = regular_triangulation(A, [rng.randrange(1 << 25) for _ in range(n)])
        assert t1.total_volume == t2.total_volume


def test_triangulation_json_shape():
    t = regular_triangulation(octahedron(), [5, 3, 8, 1, 9, 2])
    j = t.to_json()
    assert set(j) >= {"simplices", "volumes", "normalized_volume", "unimodular",
                      "lifting_weights", "perturbed"}


def test_volume_examples():
    assert normalized_volume(twisted_cubic()) == 3
    assert normalized_volume(cubic_scroll()) == 3
    assert normalized_volume(octahedron()) == 4
    assert normalized_volume(birkhoff(3)) == 3
    for r, s in [(1, 1), (1, 2), (2, 2), (1, 3)]:
        assert normalized_volume(segre(r, s)) == comb(r + s, r)


def test_volume_single_point():
    assert normalized_volume(Configuration([[1, 1], [2, 2]])) == 1


def test_volume_matches_hilbert_leading_coefficient():
    for cfg in [twisted_cubic(), cubic_scroll(), octahedron(), gap_curve(4),
                veronese(3, 2), birkhoff(3)]:
        h = hilbert_polynomial(cfg)
        dim = cfg.rank - 1
        assert Fraction(normalized_volume(cfg)) == h[-1] * factorial(dim)


def test_ehrhart_twisted_cubic():
    assert ehrhart_polynomial(twisted_cubic()) == [Fraction(1), Fraction(3)]
    assert ehrhart_polynomial(twisted_cubic(), lattice="affine") \
        == [Fraction(1), Fraction(3)]


def test_ehrhart_unit_simplex():
    # Veronese r=1: the unit simplex counts binomial(s+2, 2)
    V = veronese(3, 1)
    coeffs = ehrhart_polynomial(V)
    for s in range(6):
        val = sum(Fraction(c) * s ** k for k, c in enumerate(coeffs))
        assert val == comb(s + 2, 2)


def brute_force_dilate_count(cfg, s):
    pts = cfg.columns
    lo = [min(p[k] for p in pts) * s for k in range(cfg.d)]
    hi = [max(p[k] for p in pts) * s for k in range(cfg.d)]
    P = convex_hull(cfg)
    count = 0
    for cand in itertools.product(*[range(a, b + 1) for a, b in zip(lo, hi)]):
        scaled_ok = all(
            sum(g[k] * cand[k] for k in range(cfg.d)) >= c * s
            for g, c, _ in P.facets)
        if not scaled_ok:
            continue
        from toric.polytopes import _saturated_direction_lattice
        from toric.lattice import SublatticeDescription
        sat = _saturated_direction_lattice(cfg)
        lat = SublatticeDescription(list(sat), cfg.d)
        diff = tuple(a - s * b for a, b in zip(cand, cfg.column(0)))
        if lat.coordinates(diff) is not None:
            count += 1
    return count


def test_ehrhart_octahedron_counts():
    O = octahedron()
    assert lattice_point_count(O, 1, "affine") == 6
    assert lattice_point_count(O, 1, "ambient") == 6
    for s in (1, 2):
        assert lattice_point_count(O, s, "ambient") == brute_force_dilate_count(O, s)


def test_gap_curve_two_lattice_counts_differ():
    A = gap_curve(4)
    # ZA-affine count at s=1 is 5 while the semigroup only reaches 4
    assert lattice_point_count(A, 1, "affine") == 5


def test_incremental_hull_rejects_duplicates_and_flat_input():
    with pytest.raises(ValueError):
        incremental_hull([(0, 0), (0, 0), (1, 0)])
    with pytest.raises(DegenerateError):
        incremental_hull([(0, 0), (1, 1), (2, 2)])


def test_cone_of_quadrant():
    A = Configuration([[2, 1, 0], [0, 1, 3]])
    C = cone_of(A)
    assert C.dim == 2
    assert C.pointed
    assert C.contains((1, 1)) and not C.contains((-1, 0))
    assert sorted(C.rays) == sorted([(1, 0), (0, 1)])
