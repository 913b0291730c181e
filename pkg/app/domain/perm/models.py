from __future__ import annotations

from dataclasses import dataclass, field

from pydantic import BaseModel, field_validator

from app.util.exceptions import DegreeMismatchError, InvalidArgumentError


@dataclass(frozen=True, slots=True, order=True)
class Permutation:
    """{0..n-1} 위의 전단사 (image 배열 표현)

    정렬 순서는 images의 사전식 순서이다.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        images = tuple(self.images)
        if sorted(images) != list(range(len(images))):
            raise InvalidArgumentError(f"Not a bijection on 0..{len(images) - 1}: {list(images)}")
        object.__setattr__(self, "images", images)

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_cycles(cls, n: int, cycles: list[list[int]]) -> Permutation:
        """0-indexed 순환 목록으로 순열 생성"""
        images = list(range(n))
        seen: set[int] = set()
        for cycle in cycles:
            for i, point in enumerate(cycle):
                if not 0 <= point < n:
                    raise InvalidArgumentError(f"Point {point} out of range for degree {n}")
                if point in seen:
                    raise InvalidArgumentError(f"Point {point} appears in more than one cycle")
                seen.add(point)
                images[point] = cycle[(i + 1) % len(cycle)]
        return cls(tuple(images))

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: Permutation) -> Permutation:
        """self * other: other를 먼저 적용한 뒤 self 적용"""
        if other.degree != self.degree:
            raise DegreeMismatchError(f"Cannot compose degree {self.degree} with degree {other.degree}")
        mine = self.images
        return Permutation(tuple(mine[i] for i in other.images))

    def inverse(self) -> Permutation:
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def support(self) -> list[int]:
        return [i for i, j in enumerate(self.images) if i != j]


@dataclass(frozen=True)
class PermGroup:
    """완전히 나열된 작은 순열군

    elements는 사전식으로 정렬되어 있고 항등원을 포함한다.
    """

    degree: int
    generators: tuple[Permutation, ...] = field(compare=False)
    elements: tuple[Permutation, ...]
    _members: frozenset[Permutation] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_members", frozenset(self.elements))

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, g: Permutation) -> bool:
        return g in self._members

    @property
    def identity(self) -> Permutation:
        return Permutation.identity(self.degree)

    def element_set(self) -> frozenset[Permutation]:
        return self._members


class GroupSpecModel(BaseModel):
    """군 JSON 스키마 - 1-indexed 순환 표기 생성원"""

    degree: int
    generators: list[str] = []

    @field_validator("degree")
    @classmethod
    def validate_degree(cls, v: int) -> int:
        if v < 0:
            raise ValueError(f"Degree must be non-negative. Got: {v}")
        return v
