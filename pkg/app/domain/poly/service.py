"""정수 다항식 연산 - reciprocity 항등식에 필요한 치환과 합성 형태 포함"""
from itertools import zip_longest

from app.domain.poly.models import IntPolynomial, PolynomialModel
from app.util.exceptions import InvalidArgumentError


def evaluate(p: IntPolynomial, x: int) -> int:
    """정수 x에서 정확한 값 계산 (Horner)"""
    result = 0
    for c in reversed(p.coeffs):
        result = result * x + c
    return result


def add(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(tuple(a + b for a, b in zip_longest(p.coeffs, q.coeffs, fillvalue=0)))


def scale(p: IntPolynomial, c: int) -> IntPolynomial:
    return IntPolynomial(tuple(a * c for a in p.coeffs))


def mul(p: IntPolynomial, q: IntPolynomial) -> IntPolynomial:
    if p.is_zero() or q.is_zero():
        return IntPolynomial.zero()
    result = [0] * (len(p.coeffs) + len(q.coeffs) - 1)
    for i, a in enumerate(p.coeffs):
        if a == 0:
            continue
        for j, b in enumerate(q.coeffs):
            result[i + j] += a * b
    return IntPolynomial(tuple(result))


def power(p: IntPolynomial, e: int) -> IntPolynomial:
    result = IntPolynomial.one()
    for _ in range(e):
        result = mul(result, p)
    return result


def substitute_negate(p: IntPolynomial) -> IntPolynomial:
    """p(-x): 홀수 차수 계수의 부호 반전"""
    return IntPolynomial(tuple(-c if i % 2 else c for i, c in enumerate(p.coeffs)))


def sign_reflect(p: IntPolynomial, n: int) -> IntPolynomial:
    """(-1)^n p(-x) - reciprocity 관계의 우변"""
    reflected = substitute_negate(p)
    return scale(reflected, -1) if n % 2 else reflected


def substitute_shift(p: IntPolynomial, k: int) -> IntPolynomial:
    """p(x-k)를 정확히 전개

    Args:
        p: 대상 다항식
        k: 이동량 (0 이상)

    Returns:
        p(x-k)의 계수 표현
    """
    if k < 0:
        raise InvalidArgumentError(f"Shift must be non-negative. Got: {k}")
    if k == 0:
        return p

    # Horner: result = result * (x - k) + c
    result: list[int] = []
    for c in reversed(p.coeffs):
        shifted = [0] * (len(result) + 1)
        for i, a in enumerate(result):
            shifted[i + 1] += a
            shifted[i] -= k * a
        shifted[0] += c
        result = shifted
    return IntPolynomial(tuple(result))


def falling_factorial(m: int) -> IntPolynomial:
    """x(x-1)...(x-m+1)"""
    result = IntPolynomial.one()
    for i in range(m):
        result = mul(result, IntPolynomial((-i, 1)))
    return result


def rising_factorial(m: int) -> IntPolynomial:
    """x(x+1)...(x+m-1) - 대칭군 S_m의 cycle polynomial과 같다"""
    result = IntPolynomial.one()
    for i in range(m):
        result = mul(result, IntPolynomial((i, 1)))
    return result


def wreath_cycle_poly(f_g: IntPolynomial, order_g: int, f_h: IntPolynomial, m: int) -> IntPolynomial:
    """|G|^m F_H(F_G(x)/|G|)를 정수 다항식으로 계산

    F_H(y) = sum a_j y^j 이면 결과는 sum a_j |G|^(m-j) F_G^j 이다.

    Args:
        f_g: G의 cycle polynomial
        order_g: |G|
        f_h: H의 cycle polynomial (차수 m)
        m: H의 정의역 크기

    Raises:
        InvalidArgumentError: deg(f_h) != m 인 경우
    """
    if f_h.degree != m:
        raise InvalidArgumentError(f"Cycle polynomial of H must have degree {m}. Got: {f_h.degree}")
    if order_g < 1:
        raise InvalidArgumentError(f"Group order must be positive. Got: {order_g}")

    result = IntPolynomial.zero()
    f_g_power = IntPolynomial.one()
    for j, a in enumerate(f_h.coeffs):
        if a:
            result = add(result, scale(f_g_power, a * order_g ** (m - j)))
        f_g_power = mul(f_g_power, f_g)
    return result


def format_polynomial(p: IntPolynomial, var: str = "x") -> str:
    """내림차순, 부호 명시 형식: x^4-2x^3+3x^2-2x"""
    if p.is_zero():
        return "0"

    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        magnitude = abs(c)
        if i == 0:
            body = str(magnitude)
        else:
            monomial = var if i == 1 else f"{var}^{i}"
            body = monomial if magnitude == 1 else f"{magnitude}{monomial}"
        parts.append((sign, body))

    first_sign, first_body = parts[0]
    text = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += sign + body
    return text


def polynomial_to_json(p: IntPolynomial) -> list[str]:
    return [str(c) for c in p.coeffs]


def polynomial_from_json(coeffs: list[str]) -> IntPolynomial:
    model = PolynomialModel(coeffs=coeffs)
    return IntPolynomial(tuple(int(c) for c in model.coeffs))
