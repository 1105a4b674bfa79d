"""Term orders on monomials.

A monomial is a tuple of nonnegative integer exponents.  Every order
here is realized as an integer key vector: a list of weight rows applied
first, then a lexicographic or graded-reverse-lexicographic tie-break on
a permutation of the variables.  Comparing monomials is comparing key
tuples, so orders compose and stay exact.
"""


class TermOrder:
    """Total multiplicative order on monomials of a fixed arity.

    flavor is one of 'lex', 'grevlex', 'weight', 'elimination', 'matrix'
    and is carried only for reporting; comparisons always go through
    key().
    """

    __slots__ = ("n", "flavor", "weight_rows", "tie", "perm", "_lexpos", "_revpos")

    def __init__(self, n, flavor, weight_rows=(), tie="grevlex", perm=None):
        self.n = n
        self.flavor = flavor
        self.weight_rows = tuple(tuple(int(x) for x in row) for row in weight_rows)
        for row in self.weight_rows:
            if len(row) != n:
                raise ValueError("weight row has wrong length")
        if tie not in ("lex", "grevlex"):
            raise ValueError("tie must be 'lex' or 'grevlex'")
        self.tie = tie
        self.perm = tuple(perm) if perm is not None else tuple(range(n))
        if sorted(self.perm) != list(range(n)):
            raise ValueError("perm must be a permutation of the variable indices")
        self._lexpos = self.perm
        self._revpos = tuple(reversed(self.perm))

    @classmethod
    def lex(cls, n, perm=None):
        return cls(n, "lex", (), "lex", perm)

    @classmethod
    def grevlex(cls, n, perm=None):
        return cls(n, "grevlex", (), "grevlex", perm)

    @classmethod
    def weight(cls, w, tie="grevlex", perm=None):
        return cls(len(w), "weight", (w,), tie, perm)

    @classmethod
    def weights(cls, rows, n, tie="grevlex", perm=None):
        return cls(n, "matrix", rows, tie, perm)

    @classmethod
    def elimination(cls, block, n, perm=None):
        """Every monomial touching a block variable beats every one that
        does not; graded-reverse-lex inside either comparison."""
        row = tuple(1 if i in set(block) else 0 for i in range(n))
        return cls(n, "elimination", (row,), "grevlex", perm)

    def key(self, m):
        head = tuple(sum(r[i] * m[i] for i in range(self.n)) for r in self.weight_rows)
        if self.tie == "lex":
            return head + tuple(m[i] for i in self._lexpos)
        return head + (sum(m),) + tuple(-m[i] for i in self._revpos)

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def orient(self, a, b):
        """(lead, trail) for the binomial x^a - x^b; a == b is an error."""
        if self.key(a) > self.key(b):
            return a, b
        if a == b:
            raise ValueError("cannot orient the zero binomial")
        return b, a

    def describe(self):
        d = {"flavor": self.flavor, "tie_break": list(self.perm)}
        if self.weight_rows:
            d["weight"] = list(self.weight_rows[0])
            if len(self.weight_rows) > 1:
                d["extra_weight_rows"] = [list(r) for r in self.weight_rows[1:]]
        return d

    def __repr__(self):
        return f"TermOrder({self.flavor}, n={self.n})"


def saturation_order(omega, i):
    """Order used to saturate variable i out of a positively graded ideal.

    The grading weight is zeroed at i, so among the monomials of a
    homogeneous binomial the lead always carries the minimal power of
    x_i; the grevlex tie-break puts x_i last.
    """
    n = len(omega)
    w = tuple(0 if j == i else omega[j] for j in range(n))
    perm = tuple(j for j in range(n) if j != i) + (i,)
    return TermOrder(n, "weight", (w,), "grevlex", perm)
