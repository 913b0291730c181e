from __future__ import annotations

from dataclasses import dataclass, replace
from typing import Optional

from pydantic import BaseModel

from app.domain.graph.models import GraphSpecModel, SimpleGraph
from app.domain.perm.models import GroupSpecModel, PermGroup
from app.domain.poly.models import IntPolynomial
from app.domain.search.models import Classification, ClassificationModel


@dataclass(frozen=True)
class PairReport:
    """(그래프, 군) 쌍과 reciprocity 관계의 양변

    reciprocal은 orbital == (-1)^n cycle(-x) 계수 일치 여부이다.
    """

    graph: SimpleGraph
    group: PermGroup
    orbital: IntPolynomial
    cycle: IntPolynomial
    reciprocal: bool
    classification: Optional[Classification] = None

    def with_classification(self, classification: Classification) -> PairReport:
        return replace(self, classification=classification)


class PairReportModel(BaseModel):
    """PairReport JSON 스키마"""

    graph: GraphSpecModel
    group: GroupSpecModel
    orbital: list[str] = []
    cycle: list[str] = []
    reciprocal: Optional[bool] = None
    classification: Optional[ClassificationModel] = None
