"""Exact convex geometry of conv(A) and pos(A).

All computations run over the integers or Fractions in coordinates taken
with respect to a basis of the affine lattice spanned by A, so
unimodularity verdicts and volumes are exact integer determinants.
"""

import random
from fractions import Fraction
from itertools import combinations
from math import comb, gcd

from . import intlinalg
from .errors import (CapExceededError, DegenerateError, InternalCheckError,
                     NotHomogeneousError)
from .groebner import _stabilized_polynomial
from .lattice import Configuration, SublatticeDescription
from .linprog import in_cone


def _affine_independent_subset(points, target):
    """Indices of up to target+1 affinely independent points, greedily."""
    chosen = [0]
    rows = []
    r = 0
    for i in range(1, len(points)):
        cand = rows + [[a - b for a, b in zip(points[i], points[chosen[0]])]]
        if intlinalg.rank(cand) > r:
            rows = cand
            r += 1
            chosen.append(i)
            if r == target:
                break
    return chosen


def _hyperplane_through(pts):
    """Primitive (normal, offset) of the hyperplane through m points in R^m."""
    m = len(pts[0])
    if m == 1:
        return (1,), pts[0][0]
    diffs = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
    ker = intlinalg.kernel_basis(diffs)
    if len(ker) != 1:
        raise DegenerateError("facet points affinely dependent")
    g = ker[0]
    return g, sum(a * b for a, b in zip(g, pts[0]))


def incremental_hull(points):
    """Facets of the convex hull of full-dimensional integer points.

    Returns a list of simplicial facets (normal, offset, vertex index
    tuple) with outward primitive integer normals: normal . x <= offset
    holds on the hull with equality on the facet.  The boundary is
    triangulated; facets sharing a hyperplane describe one geometric
    facet.  Insertion treats only strictly-beyond facets as visible,
    which keeps coplanar insertions non-degenerate.
    """
    m = len(points[0])
    if len(set(points)) != len(points):
        raise ValueError("hull input must be deduplicated")
    init = _affine_independent_subset(points, m)
    if len(init) != m + 1:
        raise DegenerateError("points are not full-dimensional")
    interior = [Fraction(sum(points[i][j] for i in init), m + 1) for j in range(m)]

    def oriented(vertex_ids):
        g, c = _hyperplane_through([points[i] for i in vertex_ids])
        val = sum(Fraction(a) * b for a, b in zip(g, interior))
        if val > c:
            g = tuple(-x for x in g)
            c = -c
        elif val == c:
            raise InternalCheckError("interior point on a facet hyperplane")
        return (g, c, tuple(sorted(vertex_ids)))

    facets = []
    for k in range(m + 1):
        facets.append(oriented([v for j, v in enumerate(init) if j != k]))

    order = sorted(range(len(points)), key=lambda i: points[i])
    for p_idx in order:
        if p_idx in init:
            continue
        p = points[p_idx]
        visible, kept = [], []
        for f in facets:
            if sum(a * b for a, b in zip(f[0], p)) > f[1]:
                visible.append(f)
            else:
                kept.append(f)
        if not visible:
            continue
        ridge_count = {}
        for g, c, verts in visible:
            for k in range(len(verts)):
                ridge = verts[:k] + verts[k + 1:]
                ridge_count[ridge] = ridge_count.get(ridge, 0) + 1
        for ridge, cnt in ridge_count.items():
            if cnt == 1:
                kept.append(oriented(list(ridge) + [p_idx]))
        facets = kept
    return facets


def merged_facets(points, simplicial):
    """Group simplicial hull facets by hyperplane; tight sets recomputed
    over all points.  Returns [(normal, offset, tight index tuple)]."""
    seen = {}
    for g, c, _ in simplicial:
        seen[(g, c)] = None
    out = []
    for g, c in sorted(seen):
        tight = tuple(i for i, p in enumerate(points)
                      if sum(a * b for a, b in zip(g, p)) == c)
        out.append((g, c, tight))
    return out


class Polytope:
    """conv(A) with exact vertex and facet data.

    facets hold primitive integer inward normals in the ambient space:
    normal . x >= offset on the polytope, equality exactly on the facet.
    vertex_indices and facet tight sets refer to original column indices
    (duplicated columns all appear).
    """

    def __init__(self, config):
        self.config = config
        points, reps = config.distinct_columns()
        self.points = points
        self._build()

    def _build(self):
        cfg = self.config
        points = self.points
        base = points[0]
        aff = SublatticeDescription(
            [tuple(a - b for a, b in zip(p, base)) for p in points], cfg.d)
        self.dim = aff.rank
        self.affine_lattice = aff
        self._reduced = [tuple(aff.coordinates(tuple(a - b for a, b in zip(p, base))))
                         if self.dim else () for p in points]
        self._base = base
        if self.dim == 0:
            self.facets = []
            self._reduced_facets = []
            self._vertex_points = set(points)
        else:
            simplicial = incremental_hull(self._reduced)
            reduced = merged_facets(self._reduced, simplicial)
            self._reduced_facets = reduced
            self.facets = [self._pull_back(g, c, tight) for g, c, tight in reduced]
            self._vertex_points = set()
            for idx, y in enumerate(self._reduced):
                normals = [g for g, c, tight in reduced if idx in tight]
                if normals and intlinalg.rank(normals) == self.dim:
                    self._vertex_points.add(points[idx])
        self.vertex_indices = tuple(
            i for i in range(cfg.n) if cfg.column(i) in self._vertex_points)

    def _pull_back(self, g, c, tight):
        # Reduced inequality g . y <= c; y are coordinates of p - base in
        # the affine lattice basis B, so an ambient normal gamma needs
        # B gamma = g.  Flip to the inward convention.
        B = [list(row) for row in self.affine_lattice.basis]
        gamma = intlinalg.rational_solve(B, list(g))
        if gamma is None:
            raise InternalCheckError("facet normal does not pull back")
        lcm = 1
        for f in gamma:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        gi = [int(f * lcm) for f in gamma]
        offset = sum(a * b for a, b in zip(gi, self._base)) + lcm * c
        gi = [-x for x in gi]
        offset = -offset
        gg = 0
        for x in gi + [offset]:
            gg = gcd(gg, abs(x))
        if gg > 1:
            gi = [x // gg for x in gi]
            offset //= gg
        tight_cols = tuple(i for i in range(self.config.n)
                           if self.config.column(i) in {self.points[t] for t in tight})
        return (tuple(gi), offset, tight_cols)

    def contains(self, x):
        """Ambient point inside conv(A)? (affine span membership included)"""
        diff = tuple(a - b for a, b in zip(x, self._base))
        if self.dim == 0:
            return all(v == 0 for v in diff)
        coords = self.affine_lattice.coordinates(diff)
        if coords is None:
            return False
        return all(sum(a * b for a, b in zip(g, coords)) <= c
                   for g, c, _ in self._reduced_facets)

    def f_vector(self):
        counts = {}
        for face, dim in self.proper_faces():
            counts[dim] = counts.get(dim, 0) + 1
        return tuple(counts.get(k, 0) for k in range(self.dim))

    def proper_faces(self):
        """All proper nonempty faces as (column index frozenset, dim)."""
        cfg = self.config
        all_idx = frozenset(range(cfg.n))
        faces = set()
        frontier = {frozenset(t) for _, _, t in self.facets}
        while frontier:
            faces |= frontier
            nxt = set()
            for f in frontier:
                for g0 in {frozenset(t) for _, _, t in self.facets}:
                    h = f & g0
                    if h and h not in faces:
                        nxt.add(h)
            frontier = nxt - faces
        out = []
        for f in sorted(faces, key=lambda s: (len(s), sorted(s))):
            if f == all_idx:
                continue
            pts = [cfg.column(i) for i in sorted(f)]
            dim = _affine_dim(pts)
            out.append((f, dim))
        if self.dim == 0:
            out = [(all_idx, 0)]
        return out

    def vertex_facet_normals(self, col_idx):
        """Outward primitive ambient normals of the facets at a vertex."""
        return [tuple(-x for x in g) for g, c, t in self.facets if col_idx in t]


def _affine_dim(points):
    if len(points) <= 1:
        return 0
    diffs = [[a - b for a, b in zip(p, points[0])] for p in points[1:]]
    return intlinalg.rank(diffs)


def convex_hull(config):
    """The Polytope of conv(A), cached on the configuration."""
    return config._memo("polytope", lambda: Polytope(config))


def vertices_of(config):
    """Column indices that are vertices of conv(A); needs a grading."""
    if not config.graded:
        raise NotHomogeneousError("vertex detection is defined for graded A")
    return convex_hull(config).vertex_indices


def face_poset(config):
    """Proper faces of conv(A) (graded) or of pos(A), with dimensions."""
    if config.graded:
        P = convex_hull(config)
        return {"object": "polytope", "dim": P.dim,
                "faces": [(sorted(f), d) for f, d in P.proper_faces()],
                "f_vector": list(P.f_vector())}
    C = cone_of(config)
    return {"object": "cone", "dim": C.dim, "faces": C.proper_faces(),
            "f_vector": C.f_vector()}


def _projection_onto_rowspace(D):
    """Return a function projecting integer vectors onto the row space of
    D, returning primitive integer representatives."""
    Dt = intlinalg.transpose(D)
    DDt = intlinalg.mat_mul(D, Dt)

    def proj(v):
        rhs = [sum(row[j] * v[j] for j in range(len(v))) for row in D]
        z = intlinalg.rational_solve([[Fraction(x) for x in row] for row in DDt],
                                     [Fraction(x) for x in rhs])
        pi = [sum(Fraction(z[i]) * D[i][j] for i in range(len(D))) for j in range(len(v))]
        return intlinalg.clear_denominators(pi)

    return proj


def normal_fan_canonical(config):
    """Canonical description of the normal fan of conv(A).

    A maximal cone per vertex, each identified by the set of primitive
    outward facet normals projected onto the direction space of the
    polytope (the projection removes the ambient lineality, which every
    normal cone shares).
    """
    P = convex_hull(config)
    dirs = _saturated_direction_lattice(config)
    if not dirs:
        return (tuple(), frozenset())
    proj = _projection_onto_rowspace([list(r) for r in dirs])
    cones = set()
    seen_points = set()
    for v in P.vertex_indices:
        pt = config.column(v)
        if pt in seen_points:
            continue
        seen_points.add(pt)
        rays = frozenset(proj(list(g)) for g in P.vertex_facet_normals(v))
        cones.add(rays)
    return (tuple(dirs), frozenset(cones))


def _saturated_direction_lattice(config):
    base = config.column(0)
    diffs = [[a - b for a, b in zip(config.column(j), base)] for j in range(1, config.n)]
    diffs = [d for d in diffs if any(d)]
    if not diffs:
        return tuple()
    perp = intlinalg.kernel_basis(diffs)
    if not perp:
        return tuple(intlinalg.hnf_basis([tuple(e) for e in intlinalg.identity_matrix(config.d)]))
    sat = intlinalg.kernel_basis([list(p) for p in perp])
    return tuple(sat)


def normal_fan_equal(config_p, config_q):
    """Do conv(P) and conv(Q) have the same normal fan?"""
    if config_p.d != config_q.d:
        raise DegenerateError("normal fans live in different ambient dimensions")
    return normal_fan_canonical(config_p) == normal_fan_canonical(config_q)


class Triangulation:
    """A regular triangulation with its lifting certificate."""

    def __init__(self, simplices, volumes, weights, perturbed):
        self.simplices = simplices
        self.volumes = volumes
        self.weights = weights
        self.perturbed = perturbed

    @property
    def total_volume(self):
        return sum(self.volumes)

    @property
    def unimodular(self):
        return all(v == 1 for v in self.volumes)

    def to_json(self):
        return {
            "simplices": [sorted(s) for s in self.simplices],
            "volumes": list(self.volumes),
            "normalized_volume": self.total_volume,
            "unimodular": self.unimodular,
            "lifting_weights": list(self.weights),
            "perturbed": self.perturbed,
        }


def _lower_hull_simplices(reduced, weights):
    """Simplices of the regular subdivision, or None when non-generic."""
    m = len(reduced[0])
    lifted = [tuple(y) + (w,) for y, w in zip(reduced, weights)]
    if len(set(lifted)) != len(lifted):
        return None
    try:
        facets = incremental_hull(lifted)
    except DegenerateError:
        return None
    simplices = []
    for g, c, verts in facets:
        if g[-1] >= 0:
            continue
        tight = [i for i, q in enumerate(lifted)
                 if sum(a * b for a, b in zip(g, q)) == c]
        if len(tight) != m + 1:
            return None
        simplices.append(tuple(sorted(verts)))
    return simplices


def regular_triangulation(config, w):
    """Lower-hull triangulation of conv(A) induced by lifting weights w.

    w has one entry per column; duplicate columns use the minimum of
    their weights.  Non-generic w is perturbed deterministically and the
    triangulation reports the weights actually used.  Simplex volumes
    are determinants in the affine lattice of A, so 1 means primitive.
    """
    points, reps = config.distinct_columns()
    P = convex_hull(config)
    m = P.dim
    if m == 0:
        return Triangulation([(reps[0],)], [1], list(w), False)
    reduced = P._reduced
    col_weight = {}
    for i in range(config.n):
        pt = config.column(i)
        col_weight[pt] = min(col_weight.get(pt, w[i]), w[i])
    weights = [col_weight[p] for p in points]

    if len(points) == m + 1:
        # A simplex configuration has exactly one triangulation; any lift
        # is flat over it.
        mat = [[a - b for a, b in zip(p, reduced[0])] for p in reduced[1:]]
        v = abs(intlinalg.det(mat))
        return Triangulation([tuple(reps)], [v], list(weights), False)

    attempt = 0
    current = list(weights)
    while True:
        simplices = _lower_hull_simplices(reduced, current)
        if simplices is not None:
            break
        attempt += 1
        if attempt > 8:
            raise InternalCheckError("could not reach a generic lifting")
        M = 2 + max(max(abs(x) for y in reduced for x in y), max(abs(x) for x in weights), 1)
        if attempt == 1:
            current = [wi * (len(points) + 1) * M ** (len(points) + 2)
                       + (i + 1) * M ** (i + 1) for i, wi in enumerate(weights)]
        else:
            rng = random.Random(10_000 + attempt)
            current = [wi * M ** (len(points) + 2) + rng.randrange(M ** (len(points) + 1))
                       for i, wi in enumerate(weights)]

    vols = []
    out_simplices = []
    for s in simplices:
        pts = [reduced[i] for i in s]
        mat = [[a - b for a, b in zip(p, pts[0])] for p in pts[1:]]
        v = abs(intlinalg.det(mat))
        if v == 0:
            raise InternalCheckError("flat simplex in triangulation")
        vols.append(v)
        out_simplices.append(tuple(reps[i] for i in s))
    return Triangulation(out_simplices, vols, current, attempt > 0)


def normalized_volume(config):
    """Normalized volume of conv(A) = degree of the projective variety.

    Summed over a regular triangulation in the affine lattice of A, then
    verified against a second triangulation from independent weights.
    """
    if not config.graded:
        raise NotHomogeneousError("normalized volume needs a grading")

    def compute():
        rng = random.Random(271828)
        w1 = [rng.randrange(1 << 30) for _ in range(config.n)]
        w2 = [rng.randrange(1 << 30) for _ in range(config.n)]
        t1 = regular_triangulation(config, w1)
        t2 = regular_triangulation(config, w2)
        if t1.total_volume != t2.total_volume:
            raise InternalCheckError("triangulation volumes disagree")
        return t1.total_volume

    return config._memo("volume", compute)


def lattice_point_count(config, s, lattice="affine"):
    """Number of lattice points of the dilate s . conv(A).

    lattice 'affine' counts in the affine lattice spanned by A (the
    count matching the Hilbert polynomial of the normalization);
    'ambient' counts Z^d points of the dilated polytope.
    """
    if s == 0:
        return 1
    P = convex_hull(config)
    if lattice == "affine":
        reduced = P._reduced
        facets = P._reduced_facets
        m = P.dim
    elif lattice == "ambient":
        reduced, facets, m = _ambient_reduction(config)
    else:
        raise ValueError("lattice must be 'affine' or 'ambient'")
    if m == 0:
        return 1
    mins = [min(y[j] for y in reduced) * s for j in range(m)]
    maxs = [max(y[j] for y in reduced) * s for j in range(m)]
    total_box = 1
    for lo, hi in zip(mins, maxs):
        total_box *= hi - lo + 1
    if total_box > 4_000_000:
        raise CapExceededError(f"dilate scan of {total_box} points exceeds the cap")
    count = 0
    point = [0] * m

    def rec(j):
        nonlocal count
        if j == m:
            if all(sum(a * b for a, b in zip(g, point)) <= c * s for g, c, _ in facets):
                count += 1
            return
        for v in range(mins[j], maxs[j] + 1):
            point[j] = v
            rec(j + 1)

    rec(0)
    return count


def _ambient_reduction(config):
    """Reduced coordinates and facets w.r.t. the saturated affine lattice."""
    def compute():
        points, _ = config.distinct_columns()
        base = points[0]
        sat = _saturated_direction_lattice(config)
        if not sat:
            return [()], [], 0
        lat = SublatticeDescription(list(sat), config.d)
        reduced = []
        for p in points:
            c = lat.coordinates(tuple(a - b for a, b in zip(p, base)))
            if c is None:
                raise InternalCheckError("point outside saturated affine lattice")
            reduced.append(tuple(c))
        m = lat.rank
        simplicial = incremental_hull(list(dict.fromkeys(reduced)))
        facets = merged_facets(list(dict.fromkeys(reduced)), simplicial)
        return reduced, facets, m
    return config._memo("ambient_reduction", compute)


def ehrhart_polynomial(config, s_cap=40, lattice="ambient"):
    """Ehrhart polynomial of conv(A), constant-first rational coefficients.

    Counts dilate points by exact facet membership over a bounding box
    and interpolates a degree-dim polynomial, verifying two extra
    consecutive values.  The 'ambient' lattice is the defining Z^d count;
    'affine' counts in the lattice spanned by A (used by the normality
    cross-check, where the two can differ).
    """
    if not config.graded:
        raise NotHomogeneousError("Ehrhart polynomial needs a grading")
    P = convex_hull(config)
    return _stabilized_polynomial(
        lambda s: lattice_point_count(config, s, lattice), P.dim, s_cap,
        "Ehrhart count")


class Cone:
    """pos(A) in coordinates of a lattice basis of ZA (full-dimensional)."""

    def __init__(self, config, ray_subset_cap=200_000):
        self.config = config
        za = config.column_lattice()
        self.lattice = za
        self.dim = za.rank
        reduced = []
        for col in config.columns:
            c = za.coordinates(col)
            if c is None:
                raise InternalCheckError("column outside ZA")
            reduced.append(tuple(c))
        self.reduced_columns = reduced
        prim = []
        for v in reduced:
            if any(v):
                p = intlinalg.primitive(v)
                if p not in prim:
                    prim.append(p)
        rays = []
        for i, p in enumerate(prim):
            others = prim[:i] + prim[i + 1:]
            if not in_cone(p, others):
                rays.append(p)
        self.rays = sorted(rays)
        self.pointed = config.pointed
        self.facet_normals = self._facets(ray_subset_cap)

    def _facets(self, cap):
        r = self.dim
        rays = self.rays
        if r == 0:
            return []
        if r == 1:
            sgn = 1 if rays and rays[0][0] > 0 else -1
            return [(sgn,)]
        if comb(len(rays), r - 1) > cap:
            raise CapExceededError("too many ray subsets for facet enumeration")
        normals = set()
        for sub in combinations(range(len(rays)), r - 1):
            M = [list(rays[i]) for i in sub]
            if intlinalg.rank(M) != r - 1:
                continue
            ker = intlinalg.kernel_basis(M)
            if len(ker) != 1:
                continue
            g = ker[0]
            vals = [sum(a * b for a, b in zip(g, ray)) for ray in rays]
            if all(v >= 0 for v in vals):
                normals.add(tuple(g))
            elif all(v <= 0 for v in vals):
                normals.add(tuple(-x for x in g))
        return sorted(normals)

    def contains_reduced(self, x):
        if self.dim == 0:
            return all(v == 0 for v in x)
        if not any(x):
            return True
        if self.dim == 1:
            return (x[0] * self.facet_normals[0][0]) >= 0 if self.facet_normals else False
        return all(sum(a * b for a, b in zip(g, x)) >= 0 for g in self.facet_normals)

    def contains(self, ambient_x):
        c = self.lattice.coordinates(ambient_x)
        return c is not None and self.contains_reduced(c)

    def proper_faces(self):
        """Proper faces as (sorted column indices on the face, dim)."""
        tights = []
        for g in self.facet_normals:
            tights.append(frozenset(
                i for i, col in enumerate(self.reduced_columns)
                if sum(a * b for a, b in zip(g, col)) == 0))
        faces = set()
        frontier = set(tights)
        while frontier:
            faces |= frontier
            nxt = set()
            for f in frontier:
                for t in tights:
                    h = f & t
                    if h not in faces:
                        nxt.add(h)
            frontier = nxt - faces
        out = []
        for f in sorted(faces, key=lambda s: (len(s), sorted(s))):
            cols = [self.reduced_columns[i] for i in sorted(f)]
            out.append((sorted(f), intlinalg.rank([list(c) for c in cols]) if cols else 0))
        return out

    def f_vector(self):
        counts = {}
        for _, dim in self.proper_faces():
            counts[dim] = counts.get(dim, 0) + 1
        return [counts.get(k, 0) for k in range(self.dim)]


def cone_of(config):
    return config._memo("cone", lambda: Cone(config))
