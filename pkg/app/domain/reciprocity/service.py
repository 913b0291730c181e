"""orbital chromatic polynomial과 group-graph reciprocity 검사"""
import logging
from functools import reduce

from app.domain.graph.models import SimpleGraph
from app.domain.graph.service import (
    chromatic_polynomial,
    disjoint_union,
    graph_from_spec,
    graph_to_spec,
    is_automorphism,
    k_star,
    quotient,
)
from app.domain.perm.models import PermGroup
from app.domain.perm.service import (
    cycle_polynomial,
    direct_product,
    group_from_spec,
    group_to_spec,
    has_odd_permutation,
    symmetric,
    wreath_product,
)
from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import (
    falling_factorial,
    mul,
    polynomial_from_json,
    polynomial_to_json,
    sign_reflect,
    substitute_negate,
    substitute_shift,
)
from app.domain.reciprocity.models import PairReport, PairReportModel
from app.domain.search.models import Classification, ClassificationModel
from app.util.exceptions import (
    DegreeMismatchError,
    InvalidArgumentError,
    InvariantViolationError,
    NotAutomorphismGroupError,
    NotReciprocalError,
    OddPermutationInHError,
)

logger = logging.getLogger(__name__)


def orbital_chromatic_polynomial(graph: SimpleGraph, group: PermGroup) -> IntPolynomial:
    """P_{Gamma,G}(x) = sum_{g in G} P_{Gamma/g}(x)

    내부 간선이 생기는 원소는 0을 기여한다. 몫 그래프의 채색 다항식은
    호출 안에서 memo를 공유한다.

    Raises:
        DegreeMismatchError: 군 차수와 정점 수가 다른 경우
        NotAutomorphismGroupError: 자기동형이 아닌 원소가 있는 경우
    """
    if group.degree != graph.n:
        raise DegreeMismatchError(f"Group degree {group.degree} does not match vertex count {graph.n}")

    memo: dict = {}
    coeffs = [0] * (graph.n + 1)
    for g in group:
        if not is_automorphism(graph, g):
            raise NotAutomorphismGroupError(f"Element {list(g.images)} is not an automorphism of the graph")
        result = quotient(graph, g)
        if result.has_internal_edge:
            continue
        contribution = chromatic_polynomial(result.graph, memo)
        for i, c in enumerate(contribution.coeffs):
            coeffs[i] += c
    return IntPolynomial(tuple(coeffs))


def is_reciprocal_pair(graph: SimpleGraph, group: PermGroup) -> PairReport:
    """P_{Gamma,G}(x) = (-1)^n F_G(-x) 를 계수 단위로 비교"""
    orbital = orbital_chromatic_polynomial(graph, group)
    cycle = cycle_polynomial(group)
    reciprocal = orbital == sign_reflect(cycle, graph.n)
    logger.debug("[Pair] n=%d |G|=%d reciprocal=%s", graph.n, group.order, reciprocal)
    return PairReport(graph=graph, group=group, orbital=orbital, cycle=cycle, reciprocal=reciprocal)


# ---------------------------------------------------------------------------
# k-star 가족
# ---------------------------------------------------------------------------

def kstar_orbital_closed_form(k: int, n: int, gbar: PermGroup) -> IntPolynomial:
    """x(x-1)...(x-k+1) F_Gbar(x-k)

    Args:
        k: 중심 크기
        n: 전체 정점 수
        gbar: n-k개 점 위의 군
    """
    if not 1 <= k < n:
        raise InvalidArgumentError(f"k-star needs 1 <= k < n. Got: k={k}, n={n}")
    if gbar.degree != n - k:
        raise DegreeMismatchError(f"Gbar must act on {n - k} points. Got degree {gbar.degree}")
    return mul(falling_factorial(k), substitute_shift(cycle_polynomial(gbar), k))


def kstar_reciprocity_equation(k: int, gbar: PermGroup, centre_group: PermGroup) -> bool:
    """F_Gbar(-x) F_T(-x) = (-1)^n x(x-1)...(x-k+1) F_Gbar(x-k) 성립 여부

    G = Gbar x T 일 때 k-star 쌍이 reciprocal인 것과 동치인 조건이다.
    """
    if centre_group.degree != k:
        raise DegreeMismatchError(f"T must act on the {k} centre vertices. Got degree {centre_group.degree}")
    n = gbar.degree + k
    f_gbar = cycle_polynomial(gbar)
    left = mul(substitute_negate(f_gbar), substitute_negate(cycle_polynomial(centre_group)))
    right = mul(falling_factorial(k), substitute_shift(f_gbar, k))
    if n % 2:
        right = -right
    return left == right


def theorem1_group(k: int, r: int, top: PermGroup) -> PermGroup:
    """S_k x (S_{k+1} wr H) - 중심 {0..k-1}, 이어서 크기 k+1의 r개 연속 블록

    Args:
        k: 중심 크기 (>= 1)
        r: 블록 수 (>= 1)
        top: r개 점 위의 H
    """
    if k < 1 or r < 1:
        raise InvalidArgumentError(f"The k-star family needs k >= 1 and r >= 1. Got: k={k}, r={r}")
    if top.degree != r:
        raise DegreeMismatchError(f"H must act on {r} points. Got degree {top.degree}")
    gbar = wreath_product(symmetric(k + 1), top)
    return direct_product(symmetric(k), gbar)


def theorem1_expected(k: int, top: PermGroup) -> bool:
    """k가 홀수이거나 H에 홀순열이 없으면 reciprocal이 예측된다"""
    return k % 2 == 1 or not has_odd_permutation(top)


def verify_theorem1(k: int, r: int, top: PermGroup) -> PairReport:
    """k-star(k, r(k+1)+k)와 theorem1_group으로 reciprocity 검사

    H에 홀순열이 있고 k가 짝수이면 false가 예상된다 (음성 사례 검증용).
    """
    n = r * (k + 1) + k
    if n < 2 * k + 1:
        raise InvalidArgumentError(f"The k-star family requires n >= 2k+1. Got: n={n}, k={k}")
    group = theorem1_group(k, r, top)
    report = is_reciprocal_pair(k_star(k, n), group)
    logger.info("[Theorem1] k=%d r=%d |H|=%d |G|=%d reciprocal=%s", k, r, top.order, group.order, report.reciprocal)
    return report


# ---------------------------------------------------------------------------
# 쌍 조합 (direct product / wreath product)
# ---------------------------------------------------------------------------

def product_pair(pairs: list[PairReport]) -> PairReport:
    """서로소 합 그래프와 직접곱 군으로 새 쌍을 만들고 reciprocity를 재계산"""
    if not pairs:
        raise InvalidArgumentError("Product of an empty list of pairs is not defined")
    for pair in pairs:
        if not pair.reciprocal:
            raise NotReciprocalError("Every factor of a product pair must be reciprocal")

    graph = disjoint_union(p.graph for p in pairs)
    group = reduce(direct_product, (p.group for p in pairs))
    report = is_reciprocal_pair(graph, group)
    if not report.reciprocal:
        raise InvariantViolationError("Direct product of reciprocal pairs failed to be reciprocal")
    return report


def wreath_pair(pair: PairReport, top: PermGroup) -> PairReport:
    """그래프 m개 사본과 G wr H로 새 쌍을 만들고 reciprocity를 재계산"""
    if not pair.reciprocal:
        raise NotReciprocalError("Base of a wreath pair must be reciprocal")
    if has_odd_permutation(top):
        raise OddPermutationInHError("H must contain no odd permutations")

    graph = disjoint_union([pair.graph] * top.degree)
    group = wreath_product(pair.group, top)
    report = is_reciprocal_pair(graph, group)
    if not report.reciprocal:
        raise InvariantViolationError("Wreath product of a reciprocal pair failed to be reciprocal")
    return report


# ---------------------------------------------------------------------------
# JSON 경계
# ---------------------------------------------------------------------------

def pair_report_to_model(report: PairReport) -> PairReportModel:
    classification = None
    if report.classification is not None:
        classification = ClassificationModel(
            tag=report.classification.tag, evidence=report.classification.evidence
        )
    return PairReportModel(
        graph=graph_to_spec(report.graph),
        group=group_to_spec(report.group),
        orbital=polynomial_to_json(report.orbital),
        cycle=polynomial_to_json(report.cycle),
        reciprocal=report.reciprocal,
        classification=classification,
    )


def pair_report_from_model(model: PairReportModel) -> PairReport:
    """JSON에서 PairReport 복원 - 다항식이 없으면 재계산"""
    graph = graph_from_spec(model.graph)
    group = group_from_spec(model.group)
    if not model.orbital or not model.cycle or model.reciprocal is None:
        report = is_reciprocal_pair(graph, group)
    else:
        report = PairReport(
            graph=graph,
            group=group,
            orbital=polynomial_from_json(model.orbital),
            cycle=polynomial_from_json(model.cycle),
            reciprocal=model.reciprocal,
        )
    if model.classification is not None:
        report = report.with_classification(
            Classification(tag=model.classification.tag, evidence=model.classification.evidence)
        )
    return report
