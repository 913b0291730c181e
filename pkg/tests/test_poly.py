import random
from math import factorial

import pytest

from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import (
    add,
    evaluate,
    falling_factorial,
    format_polynomial,
    mul,
    polynomial_from_json,
    polynomial_to_json,
    rising_factorial,
    sign_reflect,
    substitute_negate,
    substitute_shift,
    wreath_cycle_poly,
)
from app.util.exceptions import InvalidArgumentError


def P(*coeffs: int) -> IntPolynomial:
    """오름차순 계수로 다항식 생성"""
    return IntPolynomial(coeffs)


def test_normalization_drops_trailing_zeros():
    assert P(1, 2, 0, 0) == P(1, 2)
    assert P(0, 0).is_zero()
    assert P(0, 0).degree == -1
    assert P(0, 0, 5).degree == 2


@pytest.mark.parametrize(
    "p, x, expected",
    [
        (P(0, 1, 1), -1, 0),
        (IntPolynomial.zero(), 7, 0),
        (P(0, 2, 3, 1), 2, 24),
    ],
)
def test_evaluate(p, x, expected):
    assert evaluate(p, x) == expected
    assert p(x) == expected


def test_evaluate_is_exact_for_large_values():
    p = rising_factorial(20)
    assert evaluate(p, 10**6) == p(10**6)
    assert evaluate(falling_factorial(30), 30) == 265252859812191058636308480000000


def test_arithmetic():
    assert mul(P(0, 1, 1), P(0, 1, 1)) == P(0, 0, 1, 2, 1)
    assert add(P(3, 1), IntPolynomial.zero()) == P(3, 1)
    assert mul(IntPolynomial.x(), P(-1, 1)) == P(0, -1, 1)
    assert P(1, 1) - P(1, 1) == IntPolynomial.zero()
    assert -P(1, -2) == P(-1, 2)
    assert 3 * P(1, 1) == P(3, 3)
    assert P(1, 1) * P(1, 1) == P(1, 2, 1)


@pytest.mark.parametrize(
    "p, expected",
    [
        (P(0, 1, 0, 1), P(0, -1, 0, -1)),
        (P(0, 2, 3, 2, 1), P(0, -2, 3, -2, 1)),
        (IntPolynomial.zero(), IntPolynomial.zero()),
    ],
)
def test_substitute_negate(p, expected):
    assert substitute_negate(p) == expected


def test_sign_reflect_of_rising_factorial_is_falling_factorial():
    for n in range(1, 8):
        assert sign_reflect(rising_factorial(n), n) == falling_factorial(n)


@pytest.mark.parametrize(
    "p, k, expected",
    [
        (P(0, 0, 1), 1, P(1, -2, 1)),
        (P(0, 2, 3, 1), 2, P(0, 2, -3, 1)),
        (P(4, 5, 6), 0, P(4, 5, 6)),
    ],
)
def test_substitute_shift(p, k, expected):
    assert substitute_shift(p, k) == expected


def test_substitute_shift_agrees_with_evaluation():
    p = P(7, -3, 0, 2, 1)
    shifted = substitute_shift(p, 3)
    for x in range(-5, 6):
        assert evaluate(shifted, x) == evaluate(p, x - 3)


def random_poly(rng: random.Random) -> IntPolynomial:
    return IntPolynomial(tuple(rng.randint(-9, 9) for _ in range(rng.randint(0, 6))))


def test_substitute_shift_matches_evaluation_on_random_samples():
    rng = random.Random(11)
    for _ in range(50):
        p, k, x = random_poly(rng), rng.randint(0, 6), rng.randint(-10, 10)
        assert evaluate(substitute_shift(p, k), x) == evaluate(p, x - k)


def test_substitute_negate_is_an_involution():
    rng = random.Random(12)
    for _ in range(50):
        p = random_poly(rng)
        assert substitute_negate(substitute_negate(p)) == p


def test_mul_is_commutative_and_associative():
    rng = random.Random(13)
    for _ in range(50):
        p, q, r = random_poly(rng), random_poly(rng), random_poly(rng)
        assert mul(p, q) == mul(q, p)
        assert mul(mul(p, q), r) == mul(p, mul(q, r))


def test_evaluate_is_a_ring_homomorphism():
    rng = random.Random(14)
    for _ in range(50):
        p, q, x = random_poly(rng), random_poly(rng), rng.randint(-10, 10)
        assert evaluate(add(p, q), x) == evaluate(p, x) + evaluate(q, x)
        assert evaluate(mul(p, q), x) == evaluate(p, x) * evaluate(q, x)


@pytest.mark.parametrize("m", range(11))
def test_rising_factorial_at_one_is_factorial(m):
    assert evaluate(rising_factorial(m), 1) == factorial(m)


def test_substitute_shift_rejects_negative_shift():
    with pytest.raises(InvalidArgumentError):
        substitute_shift(P(1, 1), -1)


@pytest.mark.parametrize(
    "m, expected",
    [(0, P(1)), (2, P(0, -1, 1)), (3, P(0, 2, -3, 1))],
)
def test_falling_factorial(m, expected):
    assert falling_factorial(m) == expected


@pytest.mark.parametrize(
    "m, expected",
    [(1, P(0, 1)), (2, P(0, 1, 1)), (3, P(0, 2, 3, 1))],
)
def test_rising_factorial(m, expected):
    assert rising_factorial(m) == expected


def test_wreath_cycle_poly_examples():
    # S_2 wr S_2
    assert wreath_cycle_poly(P(0, 1, 1), 2, P(0, 1, 1), 2) == P(0, 2, 3, 2, 1)
    # 1점 위의 자명한 H
    assert wreath_cycle_poly(P(0, 2, 3, 1), 6, P(0, 1), 1) == P(0, 2, 3, 1)


def test_wreath_cycle_poly_rejects_wrong_top_degree():
    with pytest.raises(InvalidArgumentError):
        wreath_cycle_poly(P(0, 1, 1), 2, P(0, 1, 1), 3)


@pytest.mark.parametrize(
    "p, text",
    [
        (P(0, -2, 3, -2, 1), "x^4-2x^3+3x^2-2x"),
        (P(0, 2, 3, 1), "x^3+3x^2+2x"),
        (P(-1, 0, 1), "x^2-1"),
        (P(0, -1), "-x"),
        (P(5), "5"),
        (IntPolynomial.zero(), "0"),
    ],
)
def test_format_polynomial(p, text):
    assert format_polynomial(p) == text
    assert str(p) == text


def test_json_coefficients_are_decimal_strings():
    p = falling_factorial(25)
    encoded = polynomial_to_json(p)
    assert all(isinstance(c, str) for c in encoded)
    assert polynomial_from_json(encoded) == p


def test_json_rejects_non_integer_coefficients():
    with pytest.raises(ValueError):
        polynomial_from_json(["1", "x"])
