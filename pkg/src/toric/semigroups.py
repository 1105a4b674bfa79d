"""Semigroup-theoretic tests: Hilbert bases, normality, smoothness,
unimodularity, hereditary normality, and the affine chart machinery."""

import random
from fractions import Fraction
from math import gcd

from . import intlinalg
from .distinguished import circuits
from .errors import (CapExceededError, InternalCheckError, NotHomogeneousError,
                     NotPointedError)
from .lattice import SublatticeDescription, lattice_index
from .polytopes import cone_of, convex_hull, regular_triangulation, vertices_of


class SemigroupReport:
    """Verdicts about the semigroup NA inside pos(A) meet ZA."""

    def __init__(self, pointed, hilbert_basis, normal, smooth, witness):
        self.is_pointed = pointed
        self.hilbert_basis = hilbert_basis
        self.is_normal = normal
        self.is_smooth = smooth
        self.witness = witness

    @property
    def normalization_generators(self):
        return None if self.is_normal else self.hilbert_basis

    def to_json(self):
        return {
            "pointed": self.is_pointed,
            "normal": self.is_normal,
            "smooth": self.is_smooth,
            "hilbert_basis": [list(h) for h in self.hilbert_basis],
            "witness": list(self.witness) if self.witness else None,
        }


def _require_pointed(config):
    if not config.pointed:
        raise NotPointedError("operation requires a pointed configuration")


def _positive_functional_int(config):
    w = config.positive_weight()
    lcm = 1
    for f in w:
        lcm = lcm * f.denominator // gcd(lcm, f.denominator)
    return [int(Fraction(f) * lcm) for f in w]


def hilbert_basis(config, rank_cap=6, candidate_cap=200_000):
    """The Hilbert basis of pos(A) meet ZA, as ambient integer vectors.

    Works in coordinates of a lattice basis of ZA: enumerates the
    integer cone points inside the bounding box of the zonotope of the
    extreme rays (a generating set of the monoid), then keeps exactly
    the elements that are not a sum of two nonzero monoid elements.
    That filter is the minimality certificate; the result is the unique
    minimal generating set.
    """
    _require_pointed(config)

    def compute():
        cone = cone_of(config)
        r = cone.dim
        if r > rank_cap:
            raise CapExceededError(f"Hilbert basis capped at lattice rank {rank_cap}")
        rays = cone.rays
        lo = [sum(min(0, ray[j]) for ray in rays) for j in range(r)]
        hi = [sum(max(0, ray[j]) for ray in rays) for j in range(r)]
        size = 1
        for a, b in zip(lo, hi):
            size *= b - a + 1
        if size > candidate_cap:
            raise CapExceededError("zonotope box too large for Hilbert basis scan")
        candidates = []
        point = [0] * r

        def scan(j):
            if j == r:
                if any(point) and cone.contains_reduced(tuple(point)):
                    candidates.append(tuple(point))
                return
            for v in range(lo[j], hi[j] + 1):
                point[j] = v
                scan(j + 1)

        scan(0)
        # c is a sum of two nonzero monoid elements iff it is one with an
        # irreducible first summand, and every irreducible element lies
        # in the candidate pool, so scanning candidates suffices.
        cand_set = sorted(candidates)

        def reducible(c):
            for a in cand_set:
                if a == c:
                    continue
                rest = tuple(x - y for x, y in zip(c, a))
                if cone.contains_reduced(rest):
                    return True
            return False

        basis_reduced = [c for c in cand_set if not reducible(c)]
        za = config.column_lattice()
        B = [list(z) for z in za.basis]
        return [tuple(intlinalg.vec_mat(list(c), B)) for c in basis_reduced]

    return config._memo("hilbert_basis", compute)


def semigroup_member(config, target, state_cap=2_000_000):
    """Is the ambient vector a nonnegative integer combination of columns?

    Level dynamic program over a strictly positive functional: states are
    partial sums p with target - p still in pos(A), so termination is a
    consequence of pointedness, not of an arbitrary bound.
    """
    _require_pointed(config)
    cone = cone_of(config)
    za = config.column_lattice()
    t_red = za.coordinates(tuple(target))
    if t_red is None or not cone.contains_reduced(tuple(t_red)):
        return False
    cols = [tuple(za.coordinates(c)) for c in config.columns]
    target_red = tuple(t_red)
    seen = {tuple([0] * len(target_red))}
    frontier = [tuple([0] * len(target_red))]
    while frontier:
        nxt = []
        for p in frontier:
            for c in cols:
                q = tuple(a + b for a, b in zip(p, c))
                if q in seen:
                    continue
                if q == target_red:
                    return True
                rest = tuple(a - b for a, b in zip(target_red, q))
                if not cone.contains_reduced(rest):
                    continue
                seen.add(q)
                nxt.append(q)
                if len(seen) > state_cap:
                    raise CapExceededError("semigroup membership state cap hit")
        frontier = nxt
    return not any(target_red)


def is_normal(config):
    """Is NA equal to pos(A) meet ZA?  Reports a witness when it is not."""
    _require_pointed(config)

    def compute():
        hb = hilbert_basis(config)
        witness = None
        for h in hb:
            if not semigroup_member(config, h):
                witness = h
                break
        normal = witness is None
        smooth = False
        if normal:
            za = config.column_lattice()
            rank = za.rank
            if len(hb) == rank:
                span = SublatticeDescription(hb, config.d)
                smooth = span.rank == rank and lattice_index(span, za) == 1
        return SemigroupReport(True, hb, normal, smooth, witness)

    return config._memo("normal_report", compute)


def is_smooth(config, projective=False):
    """Smoothness via the free-semigroup characterization.

    Affine: NA free, i.e. normal with Hilbert basis a lattice basis of
    ZA.  Projective: every vertex chart is smooth.
    """
    if not projective:
        return {"smooth": is_normal(config).is_smooth, "charts": None}
    reports = is_normal_projective(config)
    return {"smooth": all(r["smooth"] for r in reports["charts"].values()),
            "charts": {k: r["smooth"] for k, r in reports["charts"].items()}}


def is_normal_projective(config):
    """Normality of the projective variety via its irredundant chart cover.

    Charts live at the vertices of conv(A); the variety is normal iff
    every chart semigroup is normal.  Projective normality is the
    stronger condition is_normal(A) on the cone itself.
    """
    if not config.graded:
        raise NotHomogeneousError("projective normality needs a grading")
    charts = {}
    for i in vertices_of(config):
        chart = config.chart(i)
        rep = is_normal(chart)
        charts[config.labels[i]] = {
            "normal": rep.is_normal,
            "smooth": rep.is_smooth,
            "witness": rep.witness,
        }
    return {
        "normal": all(r["normal"] for r in charts.values()),
        "charts": charts,
    }


def is_unimodular(config, spot_check=True, samples=3, seed=1729):
    """Unimodularity via the circuit criterion: both monomials of every
    circuit squarefree.

    On small instances the verdict is spot-checked against sampled
    regular triangulations (graded case) and sampled initial ideals; a
    unimodular verdict contradicted by a sample is an internal error.
    """
    C = circuits(config)
    violating = None
    for b in C.binomials():
        sf_p, sf_m = b.squarefree_sides()
        if not (sf_p and sf_m):
            violating = b.u
            break
    verdict = violating is None
    checks = {}
    if spot_check and config.n <= 8:
        from .groebner import toric_ideal
        from .orders import TermOrder
        rng = random.Random(seed)
        tri_flags, ini_flags = [], []
        for _ in range(samples):
            w = [rng.randrange(1, 1 << 20) for _ in range(config.n)]
            order = TermOrder.weight(w)
            leads = toric_ideal(config, order).leads()
            ini_flags.append(all(all(e <= 1 for e in L) for L in leads))
            if config.graded:
                tri = regular_triangulation(config, w)
                tri_flags.append(tri.unimodular)
        checks = {"sampled_initial_radical": ini_flags,
                  "sampled_triangulations_unimodular": tri_flags}
        if verdict and (not all(ini_flags) or not all(tri_flags)):
            raise InternalCheckError("unimodular circuits but a bad sample")
    return {"unimodular": verdict, "violating_circuit": violating,
            "spot_checks": checks}


def is_hereditarily_normal(config):
    """Hereditary normality: every circuit has a squarefree monomial.

    Also validates the implication chain unimodular -> hereditarily
    normal -> normal on this instance (the normality leg only when the
    configuration is pointed, where normality is defined).
    """
    C = circuits(config)
    violating = None
    for b in C.binomials():
        sf_p, sf_m = b.squarefree_sides()
        if not (sf_p or sf_m):
            violating = b.u
            break
    hereditary = violating is None
    unimod = is_unimodular(config, spot_check=False)["unimodular"]
    if unimod and not hereditary:
        raise InternalCheckError("unimodular instance not hereditarily normal")
    if hereditary and config.pointed:
        if not is_normal(config).is_normal:
            raise InternalCheckError("hereditarily normal instance not normal")
    return {"hereditarily_normal": hereditary, "violating_circuit": violating}


def semigroup_report(config):
    """The combined JSON report for the CLI."""
    out = {"pointed": config.pointed}
    if config.pointed:
        rep = is_normal(config)
        out["normal"] = rep.is_normal
        out["smooth"] = rep.is_smooth
        out["hilbert_basis"] = [list(h) for h in rep.hilbert_basis]
        out["witness"] = list(rep.witness) if rep.witness else None
    else:
        out["normal"] = None
        out["smooth"] = None
        out["hilbert_basis"] = None
        out["witness"] = None
    if config.graded:
        proj = is_normal_projective(config)
        out["variety_normal"] = proj["normal"]
        out["projectively_normal"] = out["normal"]
        out["variety_smooth"] = is_smooth(config, projective=True)["smooth"]
    else:
        out["variety_normal"] = None
        out["projectively_normal"] = out["normal"]
        out["variety_smooth"] = None
    out["unimodular"] = is_unimodular(config)["unimodular"]
    out["hereditarily_normal"] = is_hereditarily_normal(config)["hereditarily_normal"]
    return out
