"""Exact rational linear programming.

A small dense tableau simplex over Fraction with Bland's rule, which
guarantees termination.  Sizes in this package are tiny (tens of
variables), so simplicity and exactness win over speed.  Used for
pointedness certificates, convex-hull and cone membership, and interior
points of Groebner-cone facets.
"""

from fractions import Fraction


def _pivot(T, basis, prow, pcol):
    piv = T[prow][pcol]
    T[prow] = [x / piv for x in T[prow]]
    for i in range(len(T)):
        if i != prow and T[i][pcol] != 0:
            f = T[i][pcol]
            T[i] = [x - f * y for x, y in zip(T[i], T[prow])]
    basis[prow] = pcol


def _bland(T, basis, ncols, allowed):
    """Run simplex iterations on tableau T (last row = cost, last col = rhs).

    Minimizes.  Returns 'optimal' or 'unbounded'.
    """
    m = len(T) - 1
    while True:
        cost = T[m]
        pcol = next((j for j in range(ncols) if j in allowed and cost[j] < 0), None)
        if pcol is None:
            return "optimal"
        prow = None
        best = None
        for i in range(m):
            if T[i][pcol] > 0:
                ratio = T[i][-1] / T[i][pcol]
                if best is None or ratio < best or (ratio == best and basis[i] < basis[prow]):
                    best = ratio
                    prow = i
        if prow is None:
            return "unbounded"
        _pivot(T, basis, prow, pcol)


def lp_solve(A, b, c=None, maximize=False):
    """Solve min/max c.x subject to A x = b, x >= 0, exactly.

    Returns (status, x, value) where status is 'optimal', 'infeasible'
    or 'unbounded'; x is a list of Fractions when status == 'optimal'.
    With c None this is a pure feasibility solve.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    A = [[Fraction(x) for x in row] for row in A]
    b = [Fraction(x) for x in b]
    for i in range(m):
        if b[i] < 0:
            A[i] = [-x for x in A[i]]
            b[i] = -b[i]
    # Phase 1 tableau: [A | I | b] plus the artificial cost row.
    ncols = n + m
    T = [A[i] + [Fraction(1) if j == i else Fraction(0) for j in range(m)] + [b[i]]
         for i in range(m)]
    cost = [Fraction(0)] * (ncols + 1)
    for i in range(m):
        for j in range(n):
            cost[j] -= T[i][j]
        cost[-1] -= T[i][-1]
    T.append(cost)
    basis = [n + i for i in range(m)]
    _bland(T, basis, ncols, set(range(n)))
    if -T[-1][-1] != 0:
        return "infeasible", None, None
    # Pivot artificials out of the basis; rows that cannot pivot are
    # redundant equations and get dropped.
    drop = []
    for i in range(m):
        if basis[i] >= n:
            pcol = next((j for j in range(n) if T[i][j] != 0), None)
            if pcol is None:
                drop.append(i)
            else:
                _pivot(T, basis, i, pcol)
    if drop:
        T = [row for i, row in enumerate(T) if i not in drop]
        basis = [v for i, v in enumerate(basis) if i not in drop]
    mm = len(T) - 1
    T = [row[:n] + [row[-1]] for row in T]
    if c is None:
        x = [Fraction(0)] * n
        for i in range(mm):
            x[basis[i]] = T[i][-1]
        return "optimal", x, Fraction(0)
    # Phase 2.
    obj = [Fraction(x) for x in c]
    if maximize:
        obj = [-x for x in obj]
    cost = obj + [Fraction(0)]
    for i in range(mm):
        if cost[basis[i]] != 0:
            f = cost[basis[i]]
            cost = [x - f * y for x, y in zip(cost, T[i])]
    T[mm] = cost
    status = _bland(T, basis, n, set(range(n)))
    if status == "unbounded":
        return "unbounded", None, None
    x = [Fraction(0)] * n
    for i in range(mm):
        x[basis[i]] = T[i][-1]
    val = -T[mm][-1]
    if maximize:
        val = -val
    return "optimal", x, val


class LP:
    """Incrementally built LP over n variables (free by default)."""

    def __init__(self, n, nonneg=False):
        self.n = n
        self.nonneg = nonneg
        self.eqs = []
        self.ges = []

    def add_eq(self, coeffs, rhs):
        self.eqs.append((list(coeffs), rhs))

    def add_ge(self, coeffs, rhs):
        self.ges.append((list(coeffs), rhs))

    def _standard_form(self):
        # Free variables split as x = p - q; one slack per inequality.
        n = self.n
        width = n if self.nonneg else 2 * n
        nslack = len(self.ges)
        A, b = [], []
        for coeffs, rhs in self.eqs:
            row = self._expand(coeffs, width) + [Fraction(0)] * nslack
            A.append(row)
            b.append(rhs)
        for k, (coeffs, rhs) in enumerate(self.ges):
            row = self._expand(coeffs, width)
            row += [Fraction(-1) if j == k else Fraction(0) for j in range(nslack)]
            A.append(row)
            b.append(rhs)
        return A, b, width

    def _expand(self, coeffs, width):
        if self.nonneg:
            return [Fraction(c) for c in coeffs]
        out = []
        for c in coeffs:
            out.append(Fraction(c))
        for c in coeffs:
            out.append(Fraction(-c))
        return out

    def _recover(self, x):
        if self.nonneg:
            return x[:self.n]
        return [x[j] - x[self.n + j] for j in range(self.n)]

    def feasible_point(self):
        """A feasible point as Fractions, or None."""
        A, b, width = self._standard_form()
        status, x, _ = lp_solve(A, b)
        if status != "optimal":
            return None
        return self._recover(x)

    def optimize(self, objective, maximize=False):
        """(status, point, value) minimizing or maximizing objective."""
        A, b, width = self._standard_form()
        nslack = len(self.ges)
        obj = self._expand(objective, width) + [Fraction(0)] * nslack
        status, x, val = lp_solve(A, b, obj, maximize=maximize)
        if status != "optimal":
            return status, None, None
        return status, self._recover(x), val


def in_cone(point, rays):
    """Is point a nonnegative rational combination of the rays?"""
    if all(x == 0 for x in point):
        return True
    if not rays:
        return False
    lp = LP(len(rays), nonneg=True)
    for coord in range(len(point)):
        lp.add_eq([r[coord] for r in rays], point[coord])
    return lp.feasible_point() is not None


def in_convex_hull(point, points):
    """Is point a convex rational combination of the given points?"""
    if not points:
        return False
    lp = LP(len(points), nonneg=True)
    for coord in range(len(point)):
        lp.add_eq([p[coord] for p in points], point[coord])
    lp.add_eq([1] * len(points), 1)
    return lp.feasible_point() is not None


def positive_functional(columns):
    """Rational w with w . a >= 1 for every column a, or None.

    Existence is the pointedness certificate for the semigroup spanned
    by the columns.
    """
    if not columns:
        return None
    d = len(columns[0])
    lp = LP(d)
    for a in columns:
        lp.add_ge(a, 1)
    return lp.feasible_point()
