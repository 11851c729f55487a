"""Prime fields and dense multivariate polynomials over them.

Field elements are plain ints in [0, q); a PrimeField object carries the
modulus and reduces after every operation, so everything stays inside
64-bit arithmetic for the moduli this package accepts (q < 2^31).

Polynomials are dictionaries from exponent tuples to nonzero coefficients.
Sampling draws one uniform coefficient per monomial of total degree <= d,
walking monomials in graded-lexicographic order so the coefficient layout
is reproducible for a fixed seed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import comb

from .errors import CapacityError

MAX_MODULUS = 2 ** 31
MAX_MONOMIALS = 1_000_000


def is_prime(n):
    """Trial division, fine for the desk-scale moduli used here."""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class PrimeField:
    """Arithmetic in F_q for a prime q."""

    __slots__ = ("q",)

    def __init__(self, q):
        if q >= MAX_MODULUS:
            raise ValueError(f"modulus must be below 2^31, got {q}")
        if not is_prime(q):
            raise ValueError(f"modulus must be prime, got {q}")
        self.q = q

    def element(self, x):
        return x % self.q

    def add(self, x, y):
        return (x + y) % self.q

    def sub(self, x, y):
        return (x - y) % self.q

    def mul(self, x, y):
        return (x * y) % self.q

    def neg(self, x):
        return (-x) % self.q

    def inv(self, x):
        if x % self.q == 0:
            raise ZeroDivisionError("no inverse of 0")
        return pow(x, self.q - 2, self.q)

    def pow(self, x, e):
        return pow(x, e, self.q)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and self.q == other.q

    def __hash__(self):
        return hash(("PrimeField", self.q))

    def __repr__(self):
        return f"PrimeField({self.q})"


def monomial_count(num_vars, degree):
    """Number of monomials in num_vars variables of total degree <= degree."""
    return comb(num_vars + degree, degree)


def iter_monomials(num_vars, degree):
    """Exponent tuples of total degree <= degree in graded-lex order.

    Grades ascend; within a grade tuples are lexicographic with the first
    variable weighted highest, e.g. for two variables and degree 2:
    (0,0), (1,0), (0,1), (2,0), (1,1), (0,2).
    """
    def parts(total, slots):
        if slots == 1:
            yield (total,)
            return
        for first in range(total, -1, -1):
            for rest in parts(total - first, slots - 1):
                yield (first,) + rest

    for total in range(degree + 1):
        yield from parts(total, num_vars)


@dataclass(frozen=True)
class MultiPolynomial:
    """Polynomial over F_q with degree bound and nonzero coefficients only."""

    num_vars: int
    degree: int
    modulus: int
    coeffs: tuple  # sorted tuple of (exponent_tuple, coefficient)

    @staticmethod
    def make(num_vars, degree, modulus, coeffs):
        """Normalise a {exponents: coefficient} mapping into a polynomial."""
        if num_vars < 1:
            raise ValueError("need at least one variable")
        if degree < 0:
            raise ValueError("degree bound must be nonnegative")
        if modulus >= MAX_MODULUS:
            raise ValueError(f"modulus must be below 2^31, got {modulus}")
        if not is_prime(modulus):
            raise ValueError(f"modulus must be prime, got {modulus}")
        items = []
        for exps, c in dict(coeffs).items():
            exps = tuple(exps)
            if len(exps) != num_vars:
                raise ValueError(f"exponent tuple {exps} has wrong arity")
            if any(e < 0 for e in exps) or sum(exps) > degree:
                raise ValueError(f"exponent tuple {exps} outside degree bound {degree}")
            c %= modulus
            if c:
                items.append((exps, c))
        items.sort()
        return MultiPolynomial(num_vars, degree, modulus, tuple(items))

    def evaluate(self, point):
        """Value at a point of F_q^num_vars (ints in [0, q))."""
        q = self.modulus
        if len(point) != self.num_vars:
            raise ValueError(f"point has arity {len(point)}, expected {self.num_vars}")
        for x in point:
            if not (0 <= x < q):
                raise ValueError(f"coordinate {x} not reduced mod {q}")
        # cache powers per variable up to the largest exponent used
        maxe = [0] * self.num_vars
        for exps, _ in self.coeffs:
            for i, e in enumerate(exps):
                if e > maxe[i]:
                    maxe[i] = e
        powers = []
        for i, x in enumerate(point):
            row = [1] * (maxe[i] + 1)
            for e in range(1, maxe[i] + 1):
                row[e] = row[e - 1] * x % q
            powers.append(row)
        total = 0
        for exps, c in self.coeffs:
            term = c
            for i, e in enumerate(exps):
                if e:
                    term = term * powers[i][e] % q
            total = (total + term) % q
        return total

    def to_json_dict(self):
        return {
            "t": self.num_vars,
            "d": self.degree,
            "q": self.modulus,
            "terms": [{"exps": list(e), "coef": c} for e, c in self.coeffs],
        }

    @staticmethod
    def from_json_dict(data):
        coeffs = {tuple(t["exps"]): t["coef"] for t in data["terms"]}
        return MultiPolynomial.make(data["t"], data["d"], data["q"], coeffs)

    def to_json(self):
        return json.dumps(self.to_json_dict(), sort_keys=True)

    @staticmethod
    def from_json(text):
        return MultiPolynomial.from_json_dict(json.loads(text))


def zero_polynomial(num_vars, degree, modulus):
    return MultiPolynomial.make(num_vars, degree, modulus, {})


def sample_polynomial(num_vars, degree, q, rng, max_monomials=MAX_MONOMIALS):
    """Uniform random polynomial: every coefficient iid uniform in F_q.

    One rng draw per monomial in graded-lex order, so a fixed seed fixes
    the polynomial.
    """
    field = PrimeField(q)
    count = monomial_count(num_vars, degree)
    if count > max_monomials:
        raise CapacityError(f"{count} monomials exceed the bound {max_monomials}")
    coeffs = {}
    for exps in iter_monomials(num_vars, degree):
        c = rng.randrange(field.q)
        if c:
            coeffs[exps] = c
    return MultiPolynomial.make(num_vars, degree, q, coeffs)


def check_zero_probability_preconditions(q, m, d):
    """True when q > m(m-1)/2 and d >= m-1.

    Under these conditions a uniform polynomial of degree <= d vanishes at m
    prescribed distinct points with probability exactly q^-m.
    """
    return q > m * (m - 1) // 2 and d >= m - 1


def empirical_zero_probability(num_vars, degree, q, points, trials, rng):
    """Fraction of sampled polynomials vanishing at every given point."""
    pts = [tuple(p) for p in points]
    if len(set(pts)) != len(pts):
        raise ValueError("evaluation points must be distinct")
    if not pts:
        raise ValueError("need at least one point")
    if trials < 1:
        raise ValueError("need at least one trial")
    hits = 0
    for _ in range(trials):
        f = sample_polynomial(num_vars, degree, q, rng)
        if all(f.evaluate(p) == 0 for p in pts):
            hits += 1
    return hits / trials
