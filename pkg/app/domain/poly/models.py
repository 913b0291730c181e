from __future__ import annotations

from dataclasses import dataclass

from pydantic import BaseModel, field_validator


@dataclass(frozen=True, slots=True)
class IntPolynomial:
    """정수 계수 일변수 다항식 (오름차순 dense 표현)

    coeffs[i]는 x^i의 계수. 마지막 계수는 0이 아니며 영다항식은 빈 튜플이다.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        coeffs = tuple(int(c) for c in self.coeffs)
        end = len(coeffs)
        while end and coeffs[end - 1] == 0:
            end -= 1
        object.__setattr__(self, "coeffs", coeffs[:end])

    @classmethod
    def zero(cls) -> IntPolynomial:
        return cls(())

    @classmethod
    def one(cls) -> IntPolynomial:
        return cls((1,))

    @classmethod
    def x(cls) -> IntPolynomial:
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff: int = 1) -> IntPolynomial:
        return cls((0,) * degree + (coeff,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x: int) -> int:
        from app.domain.poly.service import evaluate

        return evaluate(self, x)

    def __add__(self, other: IntPolynomial) -> IntPolynomial:
        from app.domain.poly.service import add

        return add(self, other)

    def __sub__(self, other: IntPolynomial) -> IntPolynomial:
        from app.domain.poly.service import add, scale

        return add(self, scale(other, -1))

    def __neg__(self) -> IntPolynomial:
        from app.domain.poly.service import scale

        return scale(self, -1)

    def __mul__(self, other: IntPolynomial | int) -> IntPolynomial:
        from app.domain.poly.service import mul, scale

        if isinstance(other, int):
            return scale(self, other)
        return mul(self, other)

    __rmul__ = __mul__

    def __str__(self) -> str:
        from app.domain.poly.service import format_polynomial

        return format_polynomial(self)


class PolynomialModel(BaseModel):
    """다항식 JSON 스키마 - 십진 문자열 계수 배열 (오름차순)"""

    coeffs: list[str]

    @field_validator("coeffs")
    @classmethod
    def validate_coeffs(cls, v: list[str]) -> list[str]:
        """각 계수가 정수 십진 문자열인지 검증"""
        for c in v:
            try:
                int(c)
            except ValueError:
                raise ValueError(f"Coefficient must be a decimal integer string. Got: '{c}'")
        return v
