from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Optional

from pydantic import BaseModel


class ClassificationTag(str, Enum):
    """추측(conjecture)의 가족 분류 태그 - 검사 순서대로 나열"""

    TRIVIAL_NULL = "TrivialNull"
    TRIVIAL_COMPLETE = "TrivialComplete"
    FOUR_CYCLE = "FourCycle"
    K_STAR = "KStar"
    PRODUCT_DERIVED = "ProductDerived"
    WREATH_DERIVED = "WreathDerived"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class Classification:
    tag: ClassificationTag
    evidence: dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class DecompositionWitness:
    """reducible 쌍의 분해 증거

    kind가 "product"이면 parts는 연결성분 묶음(정점 목록)들,
    "wreath"이면 parts는 연결성분들이고 top_* 필드가 블록 작용 H를 설명한다.
    """

    kind: str
    parts: tuple[tuple[int, ...], ...]
    top_order: Optional[int] = None
    top_generators: tuple[str, ...] = ()
    top_has_odd_permutation: Optional[bool] = None


class ClassificationModel(BaseModel):
    tag: ClassificationTag
    evidence: dict[str, Any] = {}


class SearchSummaryModel(BaseModel):
    """검색 요약 레코드 (JSON-lines 마지막 줄)"""

    kind: str = "summary"
    n: int
    graphs_examined: int
    subgroups_examined: int
    pairs_found: int
    unknown_pairs: int
    tag_counts: dict[str, int] = {}


@dataclass
class SearchResult:
    """search_pairs 결과 - pairs는 그래프 정규 순서, 각 그래프 안에서는 부분군 순서"""

    n: int
    graphs_examined: int = 0
    subgroups_examined: int = 0
    pairs: list = field(default_factory=list)

    def unknown_pairs(self) -> list:
        return [
            p for p in self.pairs
            if p.classification is not None and p.classification.tag == ClassificationTag.UNKNOWN
        ]
