"""Binomials x^u+ - x^u- and sparse polynomials with integer coefficients."""

from fractions import Fraction

from .intlinalg import sign_normalize, vec_gcd


def positive_part(u):
    return tuple(x if x > 0 else 0 for x in u)


def negative_part(u):
    return tuple(-x if x < 0 else 0 for x in u)


class LatticeBinomial:
    """The binomial x^u+ - x^u- attached to an integer vector u.

    u+ and u- are the positive and negative parts of u, so they have
    disjoint support and the decomposition is unique.
    """

    __slots__ = ("u",)

    def __init__(self, u):
        self.u = tuple(int(x) for x in u)

    @property
    def u_plus(self):
        return positive_part(self.u)

    @property
    def u_minus(self):
        return negative_part(self.u)

    @property
    def support(self):
        return tuple(i for i, x in enumerate(self.u) if x != 0)

    @property
    def degree(self):
        return max(sum(self.u_plus), sum(self.u_minus))

    def is_zero(self):
        return all(x == 0 for x in self.u)

    def sign_normalized(self):
        return LatticeBinomial(sign_normalize(self.u))

    def primitive_gcd(self):
        return vec_gcd(self.u)

    def squarefree_sides(self):
        """(plus side squarefree, minus side squarefree)."""
        return (all(x <= 1 for x in self.u_plus), all(x <= 1 for x in self.u_minus))

    def __eq__(self, other):
        return isinstance(other, LatticeBinomial) and self.u == other.u

    def __hash__(self):
        return hash(self.u)

    def __repr__(self):
        return f"LatticeBinomial({self.u})"


def monomial_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(a, b):
    """a / b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        if x < y:
            return None
        out.append(x - y)
    return tuple(out)


def monomial_divides(b, a):
    return all(y <= x for x, y in zip(a, b))


def monomial_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def monomial_gcd(a, b):
    return tuple(x if x < y else y for x, y in zip(a, b))


def format_monomial(m, labels):
    parts = []
    for i, e in enumerate(m):
        if e == 1:
            parts.append(labels[i])
        elif e > 1:
            parts.append(f"{labels[i]}^{e}")
    return "*".join(parts) if parts else "1"


def format_binomial(lead, trail, labels):
    return f"{format_monomial(lead, labels)} - {format_monomial(trail, labels)}"


def format_vector_binomial(u, labels):
    return format_binomial(positive_part(u), negative_part(u), labels)


def parse_binomial(text, labels):
    """Parse "x1^2*x4 - x2^3" into the vector u = lead - trail.

    The two monomials must be separated by a single ' - '.
    """
    index = {lab: i for i, lab in enumerate(labels)}
    halves = text.split(" - ")
    if len(halves) != 2:
        raise ValueError(f"not a binomial: {text!r}")

    def parse_monomial(s):
        m = [0] * len(labels)
        s = s.strip()
        if s == "1":
            return tuple(m)
        for factor in s.split("*"):
            if "^" in factor:
                lab, exp = factor.split("^")
                e = int(exp)
            else:
                lab, e = factor, 1
            if lab not in index:
                raise ValueError(f"unknown variable {lab!r} in {text!r}")
            m[index[lab]] += e
        return tuple(m)

    lead = parse_monomial(halves[0])
    trail = parse_monomial(halves[1])
    return tuple(a - b for a, b in zip(lead, trail))


class SparsePolynomial:
    """Integer-coefficient polynomial as a map exponent tuple -> coeff."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {}
        if terms:
            for m, c in (terms.items() if isinstance(terms, dict) else terms):
                self._add_term(m, c)

    def _add_term(self, m, c):
        c = self.terms.get(m, 0) + c
        if c:
            self.terms[m] = c
        else:
            self.terms.pop(m, None)

    @classmethod
    def from_binomial(cls, lead, trail):
        p = cls()
        p._add_term(tuple(lead), 1)
        p._add_term(tuple(trail), -1)
        return p

    @classmethod
    def from_vector(cls, u):
        return cls.from_binomial(positive_part(u), negative_part(u))

    def is_zero(self):
        return not self.terms

    def copy(self):
        p = SparsePolynomial()
        p.terms = dict(self.terms)
        return p

    def leading_term(self, order):
        return max(self.terms, key=order.key)

    def sorted_terms(self, order):
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def __eq__(self, other):
        return isinstance(other, SparsePolynomial) and self.terms == other.terms

    def __repr__(self):
        return f"SparsePolynomial({self.terms})"


def binomial_power(u, k):
    """(x^u+ - x^u-)^k expanded as a SparsePolynomial."""
    from math import comb

    plus = positive_part(u)
    minus = negative_part(u)
    p = SparsePolynomial()
    for j in range(k + 1):
        m = tuple(j * a + (k - j) * b for a, b in zip(plus, minus))
        c = comb(k, j) * ((-1) ** (k - j))
        p._add_term(m, c)
    return p


def poly_to_string(p, order, labels):
    """Human-readable form, terms sorted by the order, leading first."""
    if p.is_zero():
        return "0"
    parts = []
    for m, c in p.sorted_terms(order):
        mono = format_monomial(m, labels)
        if c < 0:
            sign, mag = " - ", -c
        else:
            sign, mag = " + ", c
        body = mono if mag == 1 and mono != "1" else (str(mag) if mono == "1" else f"{mag}*{mono}")
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == " - " else "") + first_body
    for sign, body in parts[1:]:
        out += sign + body
    return out


def polynomial_coeffs_to_string(coeffs, var="s"):
    """Exact rational polynomial from constant-first coefficients."""
    parts = []
    for i, c in enumerate(coeffs):
        c = Fraction(c)
        if c == 0:
            continue
        if i == 0:
            parts.append(str(c))
        elif i == 1:
            parts.append(f"{c}*{var}" if c != 1 else var)
        else:
            parts.append(f"{c}*{var}^{i}" if c != 1 else f"{var}^{i}")
    if not parts:
        return "0"
    return " + ".join(reversed(parts)).replace("+ -", "- ")
