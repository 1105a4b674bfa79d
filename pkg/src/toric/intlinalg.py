"""Exact integer and rational linear algebra.

Matrices are lists of rows, rows are lists/tuples of Python ints (or
Fractions for the rational helpers).  Everything here is arbitrary
precision; there is no floating point anywhere in the package.
"""

from fractions import Fraction
from math import gcd


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def transpose(M):
    return [list(col) for col in zip(*M)]


def mat_vec(M, v):
    return [sum(a * b for a, b in zip(row, v)) for row in M]


def vec_mat(v, M):
    return [sum(v[i] * M[i][j] for i in range(len(v))) for j in range(len(M[0]) if M else 0)]


def mat_mul(A, B):
    Bt = transpose(B)
    return [[sum(a * b for a, b in zip(row, col)) for col in Bt] for row in A]


def vec_gcd(v):
    g = 0
    for x in v:
        g = gcd(g, abs(x))
    return g


def primitive(v):
    """Divide an integer vector by the gcd of its entries (0 stays 0)."""
    g = vec_gcd(v)
    if g <= 1:
        return tuple(v)
    return tuple(x // g for x in v)


def sign_normalize(v):
    """Flip the vector so its first nonzero entry is positive."""
    for x in v:
        if x != 0:
            return tuple(v) if x > 0 else tuple(-y for y in v)
    return tuple(v)


def row_hnf(M):
    """Row-style Hermite normal form with transformation matrix.

    Returns (H, U, rank) with U unimodular, U @ M == H, pivots positive,
    entries above each pivot reduced into [0, pivot), zero rows at the
    bottom.  Pivot columns increase strictly row by row, so H is a
    canonical form: two integer row spans are equal iff their H's agree.
    """
    H = [list(row) for row in M]
    m = len(H)
    n = len(H[0]) if m else 0
    U = identity_matrix(m)
    r = 0
    for col in range(n):
        # Euclid on the entries of this column at rows r..m-1.
        while True:
            piv = None
            for i in range(r, m):
                if H[i][col] != 0 and (piv is None or abs(H[i][col]) < abs(H[piv][col])):
                    piv = i
            if piv is None:
                break
            if piv != r:
                H[r], H[piv] = H[piv], H[r]
                U[r], U[piv] = U[piv], U[r]
            done = True
            for i in range(r + 1, m):
                if H[i][col] != 0:
                    q = H[i][col] // H[r][col]
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
                    if H[i][col] != 0:
                        done = False
            if done:
                break
        if r < m and H[r][col] != 0:
            if H[r][col] < 0:
                H[r] = [-a for a in H[r]]
                U[r] = [-a for a in U[r]]
            p = H[r][col]
            for i in range(r):
                q = H[i][col] // p  # floor division puts the entry in [0, p)
                if q:
                    H[i] = [a - q * b for a, b in zip(H[i], H[r])]
                    U[i] = [a - q * b for a, b in zip(U[i], U[r])]
            r += 1
            if r == m:
                break
    return H, U, r


def hnf_basis(vectors):
    """Canonical (HNF) basis of the lattice spanned by integer vectors.

    Returns a list of tuples; the empty list is the zero lattice.
    """
    vecs = [v for v in vectors if any(x != 0 for x in v)]
    if not vecs:
        return []
    H, _, r = row_hnf(vecs)
    return [tuple(row) for row in H[:r]]


def rank(M):
    if not M or not M[0]:
        return 0
    _, _, r = row_hnf(M)
    return r


def kernel_basis(M):
    """Basis of the saturated integer kernel {u : M @ u = 0}.

    Computed from the HNF transformation of the transpose: the rows of U
    matching zero rows of H form a basis, and because U is unimodular the
    lattice they span is saturated (any integer kernel vector is an
    integer combination of them).  The basis is returned in HNF form.
    """
    if not M or not M[0]:
        return []
    Mt = transpose(M)
    H, U, r = row_hnf(Mt)
    ker = [tuple(U[i]) for i in range(r, len(Mt))]
    return hnf_basis(ker)


def in_lattice(basis, v):
    """Integer coordinates of v in the given basis rows, or None."""
    if not basis:
        return [] if all(x == 0 for x in v) else None
    H, U, r = row_hnf([list(b) for b in basis])
    if r < len(basis):
        raise ValueError("basis rows are linearly dependent")
    # Solve y @ H = v by forward substitution on the pivot columns,
    # then pull back through U.
    n = len(v)
    res = list(v)
    y = [0] * len(basis)
    row = 0
    for col in range(n):
        if row < r and H[row][col] != 0:
            q, rem = divmod(res[col], H[row][col])
            if rem != 0:
                return None
            y[row] = q
            res = [a - q * b for a, b in zip(res, H[row])]
            row += 1
        elif res[col] != 0:
            return None
    if any(res):
        return None
    return vec_mat(y, U)


def smith_diagonal(M):
    """Diagonal of the Smith normal form (nonzero entries only, positive).

    Alternates clearing the current row and column with exact gcd row and
    column operations until both are clear, then recurses on the rest.
    """
    A = [list(row) for row in M]
    m = len(A)
    n = len(A[0]) if m else 0
    diag = []
    top = 0
    while top < m and top < n:
        # Find a nonzero pivot.
        piv = None
        for i in range(top, m):
            for j in range(top, n):
                if A[i][j] != 0:
                    piv = (i, j)
                    break
            if piv:
                break
        if piv is None:
            break
        i0, j0 = piv
        A[top], A[i0] = A[i0], A[top]
        for row in A:
            row[top], row[j0] = row[j0], row[top]
        while True:
            # Clear column `top` with row operations.
            for i in range(top + 1, m):
                while A[i][top] != 0:
                    if abs(A[i][top]) < abs(A[top][top]):
                        A[top], A[i] = A[i], A[top]
                    q = A[i][top] // A[top][top]
                    A[i] = [a - q * b for a, b in zip(A[i], A[top])]
            # Clear row `top` with column operations.
            col_clear = True
            for j in range(top + 1, n):
                while A[top][j] != 0:
                    if abs(A[top][j]) < abs(A[top][top]):
                        for row in A:
                            row[top], row[j] = row[j], row[top]
                        col_clear = False
                    q = A[top][j] // A[top][top]
                    for row in A:
                        row[j] -= q * row[top]
            if col_clear and all(A[i][top] == 0 for i in range(top + 1, m)):
                break
        d = abs(A[top][top])
        diag.append(d)
        top += 1
    # Enforce the divisibility chain d1 | d2 | ... (only the product is
    # used for indices, but canonical output is cheap to get).
    for i in range(len(diag)):
        for j in range(i + 1, len(diag)):
            a, b = diag[i], diag[j]
            g = gcd(a, b)
            diag[i], diag[j] = g, a * b // g if g else 0
    return diag


def det(M):
    """Determinant of a square integer matrix, by fraction-free Bareiss."""
    n = len(M)
    if n == 0:
        return 1
    A = [list(row) for row in M]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if A[i][k] != 0), None)
            if swap is None:
                return 0
            A[k], A[swap] = A[swap], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rational_solve(M, b):
    """One rational solution x of M @ x = b, or None if inconsistent."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[Fraction(x) for x in row] + [Fraction(bi)] for row, bi in zip(M, b)]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        A[r] = [x / A[r][col] for x in A[r]]
        for i in range(m):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if A[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivots):
        x[col] = A[i][n]
    return x


def rational_nullspace(M):
    """Basis of the rational nullspace of M, as Fraction vectors."""
    m = len(M)
    n = len(M[0]) if m else 0
    A = [[Fraction(x) for x in row] for row in M]
    pivots = []
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        A[r] = [x / A[r][col] for x in A[r]]
        for i in range(m):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    basis = []
    free = [c for c in range(n) if c not in pivots]
    for fc in free:
        v = [Fraction(0)] * n
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -A[i][fc]
        basis.append(v)
    return basis


def clear_denominators(v):
    """Scale a Fraction vector to a primitive integer vector."""
    fracs = [Fraction(x) for x in v]
    lcm = 1
    for f in fracs:
        d = f.denominator
        lcm = lcm * d // gcd(lcm, d)
    ints = [int(f * lcm) for f in fracs]
    return primitive(ints)
