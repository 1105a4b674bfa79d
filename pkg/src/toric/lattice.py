"""Configurations of lattice points and their kernel lattices."""

from fractions import Fraction
from math import gcd

from . import intlinalg
from .errors import NotSublatticeError
from .linprog import positive_functional

INFINITE_INDEX = "infinite"


class SublatticeDescription:
    """A sublattice of Z^k, canonically stored as an HNF row basis."""

    __slots__ = ("basis", "ambient_dim")

    def __init__(self, vectors, ambient_dim=None):
        vectors = [tuple(v) for v in vectors]
        if ambient_dim is None:
            if not vectors:
                raise ValueError("ambient_dim required for the zero lattice")
            ambient_dim = len(vectors[0])
        self.basis = tuple(intlinalg.hnf_basis(vectors))
        self.ambient_dim = ambient_dim

    @property
    def rank(self):
        return len(self.basis)

    def contains(self, v):
        return intlinalg.in_lattice(list(self.basis), v) is not None

    def coordinates(self, v):
        return intlinalg.in_lattice(list(self.basis), v)

    def __eq__(self, other):
        return (isinstance(other, SublatticeDescription)
                and self.ambient_dim == other.ambient_dim
                and self.basis == other.basis)

    def __hash__(self):
        return hash((self.ambient_dim, self.basis))

    def __repr__(self):
        return f"SublatticeDescription(rank={self.rank}, ambient={self.ambient_dim})"


class Configuration:
    """An integer d x n matrix whose columns are exponent vectors.

    Columns may repeat; they are preserved as given.  Pointedness (the
    semigroup spanned by the columns has no units, certified by a
    rational w with w.a_i > 0 for all i) is decided on first use by an
    exact LP and cached.
    """

    def __init__(self, entries, labels=None):
        self.entries = tuple(tuple(int(x) for x in row) for row in entries)
        if not self.entries or not self.entries[0]:
            raise ValueError("configuration needs at least one row and one column")
        n = len(self.entries[0])
        if any(len(row) != n for row in self.entries):
            raise ValueError("ragged matrix")
        if labels is None:
            labels = [f"x{i + 1}" for i in range(n)]
        if len(labels) != n:
            raise ValueError("need one label per column")
        self.labels = tuple(labels)
        self._cache = {}

    @property
    def d(self):
        return len(self.entries)

    @property
    def n(self):
        return len(self.entries[0])

    def column(self, i):
        return tuple(row[i] for row in self.entries)

    @property
    def columns(self):
        return [self.column(i) for i in range(self.n)]

    def _memo(self, key, fn):
        if key not in self._cache:
            self._cache[key] = fn()
        return self._cache[key]

    @property
    def rank(self):
        return self._memo("rank", lambda: intlinalg.rank([list(r) for r in self.entries]))

    @property
    def codim(self):
        return self.n - self.rank

    def kernel(self):
        return self._memo("kernel", lambda: kernel_lattice(self))

    def positive_weight(self):
        """Rational w with w.a_i > 0 for all columns, or None (not pointed)."""
        return self._memo("pos_w", lambda: positive_functional(self.columns))

    @property
    def pointed(self):
        return self.positive_weight() is not None

    def variable_grading(self):
        """Positive integer weights (w.a_1, ..., w.a_n) scaled to Z, or None.

        Every kernel vector is orthogonal to these weights, so the
        lattice ideal is homogeneous for them whenever A is pointed.
        """
        def compute():
            w = self.positive_weight()
            if w is None:
                return None
            vals = [sum(Fraction(wk) * ak for wk, ak in zip(w, col)) for col in self.columns]
            lcm = 1
            for v in vals:
                lcm = lcm * v.denominator // gcd(lcm, v.denominator)
            return tuple(int(v * lcm) for v in vals)
        return self._memo("omega", compute)

    def grading_vector(self):
        """Rational row w with w.a_i = 1 for all i, or None."""
        def compute():
            At = intlinalg.transpose([list(r) for r in self.entries])
            return intlinalg.rational_solve(At, [1] * self.n)
        return self._memo("grading", compute)

    @property
    def graded(self):
        return self.grading_vector() is not None

    def integer_grading_functional(self):
        """Integer row W and positive integer s with W.a_i = s for all i."""
        w = self.grading_vector()
        if w is None:
            return None
        lcm = 1
        for f in w:
            lcm = lcm * f.denominator // gcd(lcm, f.denominator)
        W = [int(f * lcm) for f in w]
        return W, lcm

    def column_lattice(self):
        """Z A, the lattice generated by the columns."""
        return self._memo(
            "ZA", lambda: SublatticeDescription(self.columns, ambient_dim=self.d))

    def affine_lattice(self):
        """Lattice generated by the differences a_j - a_1."""
        def compute():
            base = self.column(0)
            diffs = [tuple(x - y for x, y in zip(self.column(j), base))
                     for j in range(1, self.n)]
            return SublatticeDescription(diffs, ambient_dim=self.d)
        return self._memo("affine", compute)

    def distinct_columns(self):
        """(points, representative index per point) with duplicates removed."""
        def compute():
            seen = {}
            for i in range(self.n):
                seen.setdefault(self.column(i), i)
            points = sorted(seen, key=lambda p: seen[p])
            return points, [seen[p] for p in points]
        return self._memo("distinct", compute)

    def chart(self, i):
        """The configuration A - a_i of differences (zero columns dropped).

        Zero columns come from duplicates of a_i and generate nothing, so
        dropping them changes no semigroup question about the chart.
        """
        ai = self.column(i)
        cols, labels = [], []
        for j in range(self.n):
            if j == i:
                continue
            diff = tuple(x - y for x, y in zip(self.column(j), ai))
            if any(diff):
                cols.append(diff)
                labels.append(self.labels[j])
        if not cols:
            raise ValueError("chart has no nonzero columns")
        entries = [[c[k] for c in cols] for k in range(self.d)]
        return Configuration(entries, labels)

    def __eq__(self, other):
        return (isinstance(other, Configuration)
                and self.entries == other.entries and self.labels == other.labels)

    def __hash__(self):
        return hash((self.entries, self.labels))

    def __repr__(self):
        return f"Configuration({self.d}x{self.n})"


def kernel_lattice(config):
    """Saturated lattice {u in Z^n : A u = 0} as a SublatticeDescription."""
    basis = intlinalg.kernel_basis([list(r) for r in config.entries])
    return SublatticeDescription(basis, ambient_dim=config.n)


def lattice_index(sub, ambient):
    """Index [ambient : sub], or INFINITE_INDEX when the ranks differ.

    Raises NotSublatticeError when sub is not contained in ambient.
    """
    if sub.ambient_dim != ambient.ambient_dim:
        raise NotSublatticeError("different ambient dimensions")
    coords = []
    for v in sub.basis:
        c = ambient.coordinates(v)
        if c is None:
            raise NotSublatticeError(f"{v} is not in the ambient lattice")
        coords.append(c)
    if sub.rank < ambient.rank:
        return INFINITE_INDEX
    return abs(intlinalg.det(coords))


def grading(config):
    """Alias for Configuration.grading_vector as a module-level operation."""
    return config.grading_vector()
