from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional

from pydantic import BaseModel, model_validator

from app.util.exceptions import InvalidArgumentError


@dataclass(frozen=True)
class SimpleGraph:
    """루프와 중복 간선이 없는 단순 그래프

    간선은 u < v 인 (u, v) 튜플로 정규화되어 저장된다.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Iterable[int]]) -> SimpleGraph:
        if n < 0:
            raise InvalidArgumentError(f"Vertex count must be non-negative. Got: {n}")
        normalized = set()
        for edge in edges:
            u, v = edge
            if u == v:
                raise InvalidArgumentError(f"Loop at vertex {u} is not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise InvalidArgumentError(f"Edge ({u}, {v}) out of range for {n} vertices")
            normalized.add((min(u, v), max(u, v)))
        return cls(n=n, edges=frozenset(normalized))

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    @cached_property
    def adjacency(self) -> tuple[frozenset[int], ...]:
        neighbours: list[set[int]] = [set() for _ in range(self.n)]
        for u, v in self.edges:
            neighbours[u].add(v)
            neighbours[v].add(u)
        return tuple(frozenset(s) for s in neighbours)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])


@dataclass(frozen=True)
class QuotientResult:
    """Gamma/g 결과 - 내부 간선이 있으면 graph는 None"""

    has_internal_edge: bool
    graph: Optional[SimpleGraph] = None


class GraphSpecModel(BaseModel):
    """그래프 JSON 스키마 - 0-indexed 간선 목록 (정렬됨)"""

    n: int
    edges: list[list[int]] = []

    @model_validator(mode="after")
    def validate_edges(self) -> GraphSpecModel:
        """간선이 [u, v] 쌍이고 범위 안에 있는지 검증"""
        if self.n < 0:
            raise ValueError(f"Vertex count must be non-negative. Got: {self.n}")
        for edge in self.edges:
            if len(edge) != 2:
                raise ValueError(f"Edge must be a pair [u, v]. Got: {edge}")
            u, v = edge
            if u == v or not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"Invalid edge {edge} for {self.n} vertices")
        return self
