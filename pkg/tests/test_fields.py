"""Prime fields, monomial order, polynomial evaluation and sampling."""

import itertools
import json
import math
import random
from fractions import Fraction

import pytest

from turanexp import (
    MultiPolynomial,
    PrimeField,
    check_zero_probability_preconditions,
    empirical_zero_probability,
    is_prime,
    sample_polynomial,
)
from turanexp.errors import CapacityError
from turanexp.fields import iter_monomials, monomial_count, zero_polynomial

from helpers import poly_eval_naive


def test_is_prime_matches_trial_division():
    for n in range(-3, 200):
        want = n >= 2 and all(n % d for d in range(2, n))
        assert is_prime(n) == want


def test_prime_field_ops():
    f = PrimeField(7)
    rng = random.Random(3)
    for _ in range(200):
        a, b = rng.randrange(7), rng.randrange(7)
        assert f.add(a, b) == (a + b) % 7
        assert f.sub(a, b) == (a - b) % 7
        assert f.mul(a, b) == (a * b) % 7
        assert f.neg(a) == (-a) % 7
    for a in range(1, 7):
        assert f.mul(a, f.inv(a)) == 1
    assert f.pow(3, 6) == 1  # Fermat


def test_prime_field_errors():
    with pytest.raises(ValueError):
        PrimeField(6)
    f = PrimeField(5)
    # ops are total: unreduced inputs are reduced, never rejected
    assert f.add(5, 0) == 0
    assert f.element(-1) == 4
    with pytest.raises(ZeroDivisionError):
        f.inv(0)


def test_monomial_count_examples():
    assert monomial_count(1, 0) == 1
    assert monomial_count(2, 2) == 6
    for t in range(1, 5):
        for d in range(0, 5):
            assert monomial_count(t, d) == math.comb(t + d, d)


def test_iter_monomials_graded_lex():
    got = list(iter_monomials(2, 2))
    assert got == [(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)]
    for t, d in ((1, 3), (3, 2), (2, 4)):
        mons = list(iter_monomials(t, d))
        assert len(mons) == monomial_count(t, d)
        assert len(set(mons)) == len(mons)
        assert all(sum(m) <= d for m in mons)
        grades = [sum(m) for m in mons]
        assert grades == sorted(grades)


def test_polynomial_make_and_evaluate():
    # f = X1*X2 over F_5 at (2, 3) -> 6 mod 5 = 1
    f = MultiPolynomial.make(2, 2, 5, [((1, 1), 1)])
    assert f.evaluate((2, 3)) == 1
    z = zero_polynomial(3, 2, 7)
    for pt in itertools.product(range(3), repeat=3):
        assert z.evaluate(pt) == 0


def test_polynomial_validation():
    with pytest.raises(ValueError):
        MultiPolynomial.make(2, 1, 5, [((1, 1), 1)])  # degree too high
    with pytest.raises(ValueError):
        MultiPolynomial.make(1, 2, 5, [((1, 1), 1)])  # arity mismatch
    with pytest.raises(ValueError):
        MultiPolynomial.make(1, 2, 6, [((1,), 1)])  # modulus not prime
    f = MultiPolynomial.make(2, 2, 5, [((1, 0), 3)])
    with pytest.raises(ValueError):
        f.evaluate((1,))


def test_polynomial_evaluate_matches_naive():
    rng = random.Random(17)
    for _ in range(40):
        t = rng.randrange(1, 4)
        d = rng.randrange(0, 4)
        q = rng.choice([2, 3, 5, 7])
        f = sample_polynomial(t, d, q, rng)
        for _ in range(5):
            pt = tuple(rng.randrange(q) for _ in range(t))
            assert f.evaluate(pt) == poly_eval_naive(f.coeffs, pt, q)


def test_polynomial_json_round_trip():
    rng = random.Random(9)
    f = sample_polynomial(3, 2, 11, rng)
    back = MultiPolynomial.from_json(f.to_json())
    assert back == f
    d = f.to_json_dict()
    assert d["t"] == 3 and d["d"] == 2 and d["q"] == 11
    json.dumps(d)  # serializable


def test_sample_polynomial_deterministic():
    a = sample_polynomial(2, 2, 5, random.Random(42))
    b = sample_polynomial(2, 2, 5, random.Random(42))
    c = sample_polynomial(2, 2, 5, random.Random(43))
    assert a == b
    assert a != c  # 1 in 5^6 collision chance for this seed pair


def test_sample_polynomial_uniform_constant():
    # t=1, d=0: a single uniform coefficient
    counts = [0] * 5
    rng = random.Random(1)
    for _ in range(2000):
        f = sample_polynomial(1, 0, 5, rng)
        value = f.evaluate((0,))
        counts[value] += 1
    assert all(c > 300 for c in counts)


def test_sample_polynomial_capacity():
    with pytest.raises(CapacityError):
        sample_polynomial(8, 12, 5, random.Random(0), max_monomials=1000)


def test_zero_probability_preconditions():
    assert check_zero_probability_preconditions(7, 3, 2)
    assert not check_zero_probability_preconditions(3, 3, 2)
    assert not check_zero_probability_preconditions(11, 4, 2)


def test_empirical_zero_probability_one_point():
    rng = random.Random(5)
    freq = empirical_zero_probability(1, 1, 3, [(1,)], 10_000, rng)
    sigma = math.sqrt((1 / 3) * (2 / 3) / 10_000)
    assert abs(freq - 1 / 3) <= 3 * sigma


def test_empirical_zero_probability_two_points():
    rng = random.Random(6)
    freq = empirical_zero_probability(1, 1, 5, [(0,), (1,)], 100_000, rng)
    sigma = math.sqrt((1 / 25) * (24 / 25) / 100_000)
    assert abs(freq - 1 / 25) <= 3 * sigma


def test_empirical_zero_probability_rejects_duplicates():
    with pytest.raises(ValueError):
        empirical_zero_probability(1, 1, 5, [(2,), (2,)], 10, random.Random(0))


def test_zero_probability_exact_tiny_field():
    # all 9 linear univariate polynomials over F_3, by full enumeration
    vanish_one = 0
    vanish_two = 0
    for c0 in range(3):
        for c1 in range(3):
            f = MultiPolynomial.make(1, 1, 3, [((0,), c0), ((1,), c1)])
            if f.evaluate((1,)) == 0:
                vanish_one += 1
            if f.evaluate((0,)) == 0 and f.evaluate((1,)) == 0:
                vanish_two += 1
    assert Fraction(vanish_one, 9) == Fraction(1, 3)
    assert Fraction(vanish_two, 9) == Fraction(1, 9)
