"""순열군 구성 및 군 통계 - 완전 나열 기반"""
import logging
import random
import re
from collections import Counter, deque
from itertools import product
from math import factorial
from typing import Iterable, Optional

from app.config.settings import settings
from app.domain.graph.models import SimpleGraph
from app.domain.perm.models import GroupSpecModel, PermGroup, Permutation
from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import evaluate
from app.util.exceptions import (
    BoundExceededError,
    DegreeMismatchError,
    InvalidArgumentError,
    InvariantViolationError,
)

logger = logging.getLogger(__name__)

_CYCLE_PATTERN = re.compile(r"\(([^()]*)\)")


# ---------------------------------------------------------------------------
# 순열 통계
# ---------------------------------------------------------------------------

def cycles(g: Permutation) -> list[list[int]]:
    """g의 궤도 분할 (고정점 포함)

    각 궤도는 최소 원소부터 g를 따라 나열되고, 궤도들은 최소 원소 순으로 정렬된다.
    """
    seen = [False] * g.degree
    result = []
    for start in range(g.degree):
        if seen[start]:
            continue
        orbit = []
        point = start
        while not seen[point]:
            seen[point] = True
            orbit.append(point)
            point = g.images[point]
        result.append(orbit)
    return result


def cycle_count(g: Permutation) -> int:
    """c(g): 고정점을 포함한 순환의 개수"""
    seen = [False] * g.degree
    count = 0
    for start in range(g.degree):
        if seen[start]:
            continue
        count += 1
        point = start
        while not seen[point]:
            seen[point] = True
            point = g.images[point]
    return count


def cycle_type(g: Permutation) -> tuple[int, ...]:
    return tuple(sorted(len(orbit) for orbit in cycles(g)))


def is_even(g: Permutation) -> bool:
    return (g.degree - cycle_count(g)) % 2 == 0


def transposition_pair(g: Permutation) -> Optional[tuple[int, int]]:
    """g가 단일 호환이면 움직이는 두 점, 아니면 None"""
    moved = g.support()
    if len(moved) == 2:
        return moved[0], moved[1]
    return None


def has_odd_permutation(group: PermGroup) -> bool:
    return any(not is_even(g) for g in group.elements)


# ---------------------------------------------------------------------------
# 군 생성
# ---------------------------------------------------------------------------

def close(degree: int, generators: Iterable[Permutation], max_order: int = None) -> PermGroup:
    """생성원으로부터 BFS closure로 군 전체를 나열

    Args:
        degree: 작용하는 점의 개수 n
        generators: 생성원 목록 (모두 차수 n)
        max_order: 군 크기 한도 (None이면 설정값)

    Returns:
        사전식 정렬된 원소를 가진 PermGroup

    Raises:
        DegreeMismatchError: 생성원 차수가 n이 아닌 경우
        BoundExceededError: closure 크기가 한도를 넘는 경우
    """
    if max_order is None:
        max_order = settings.group.max_order
    generators = tuple(generators)
    for gen in generators:
        if gen.degree != degree:
            raise DegreeMismatchError(f"Generator {list(gen.images)} has degree {gen.degree}, expected {degree}")

    identity = Permutation.identity(degree)
    queue = deque([identity])
    visited = {identity}

    while queue:
        current = queue.popleft()
        for gen in generators:
            nxt = gen * current
            if nxt not in visited:
                visited.add(nxt)
                if len(visited) > max_order:
                    raise BoundExceededError(f"Group closure exceeds the cap of {max_order} elements")
                queue.append(nxt)

    logger.debug("[Closure] degree %d, %d generators -> order %d", degree, len(generators), len(visited))
    return PermGroup(degree=degree, generators=generators, elements=tuple(sorted(visited)))


def from_elements(degree: int, elements: Iterable[Permutation]) -> PermGroup:
    """이미 닫힌 원소 집합으로 PermGroup 생성

    생성원은 정렬 순서대로 아직 생성되지 않은 원소를 탐욕적으로 추가해 고른다.
    """
    ordered = tuple(sorted(set(elements)))
    generators: list[Permutation] = []
    generated = {Permutation.identity(degree)}
    for g in ordered:
        if g in generated:
            continue
        generators.append(g)
        generated = set(close(degree, generators, max_order=len(ordered)).elements)
    return PermGroup(degree=degree, generators=tuple(generators), elements=ordered)


def trivial(n: int) -> PermGroup:
    if n < 0:
        raise InvalidArgumentError(f"Degree must be non-negative. Got: {n}")
    return close(n, [])


def _require_positive(n: int, minimum: int = 1) -> None:
    if n < minimum:
        raise InvalidArgumentError(f"Degree must be at least {minimum}. Got: {n}")


def _n_cycle(n: int) -> Permutation:
    return Permutation(tuple((i + 1) % n for i in range(n)))


def symmetric(n: int) -> PermGroup:
    _require_positive(n)
    if n == 1:
        return trivial(1)
    return close(n, [Permutation.from_cycles(n, [[0, 1]]), _n_cycle(n)])


def alternating(n: int) -> PermGroup:
    _require_positive(n)
    if n < 3:
        return trivial(n)
    return close(n, [Permutation.from_cycles(n, [[0, 1, i]]) for i in range(2, n)])


def cyclic(n: int) -> PermGroup:
    _require_positive(n)
    if n == 1:
        return trivial(1)
    return close(n, [_n_cycle(n)])


def dihedral(n: int) -> PermGroup:
    """정n각형 0-1-...-(n-1)-0의 대칭군 (차수 2n)"""
    _require_positive(n, 3)
    reflection = Permutation(tuple((-i) % n for i in range(n)))
    return close(n, [_n_cycle(n), reflection])


def _shift(g: Permutation, offset: int, degree: int) -> Permutation:
    """g를 {offset..offset+deg(g)-1}에 작용하도록 옮긴 차수 degree 순열"""
    images = list(range(degree))
    for i, j in enumerate(g.images):
        images[offset + i] = offset + j
    return Permutation(tuple(images))


def direct_product(g1: PermGroup, g2: PermGroup, max_order: int = None) -> PermGroup:
    """G1 x G2: G1은 {0..n1-1}, G2는 {n1..n1+n2-1}에 작용"""
    if max_order is None:
        max_order = settings.group.max_order
    if g1.order * g2.order > max_order:
        raise BoundExceededError(f"Direct product order {g1.order * g2.order} exceeds the cap of {max_order}")

    degree = g1.degree + g2.degree
    generators = [_shift(g, 0, degree) for g in g1.generators]
    generators += [_shift(g, g1.degree, degree) for g in g2.generators]
    # 원소를 (g1, g2) 사전식으로 이어 붙이면 이미 정렬 순서가 된다
    elements = tuple(Permutation(a.images + tuple(g1.degree + j for j in b.images)) for a in g1 for b in g2)
    return PermGroup(degree=degree, generators=tuple(generators), elements=elements)


def wreath_product(base: PermGroup, top: PermGroup, max_order: int = None) -> PermGroup:
    """G wr H의 비원시 작용 (m개의 연속 블록, 블록 크기 d)

    원소 (g_0, ..., g_{m-1}; h)는 점 i*d + j 를 h(i)*d + g_i(j) 로 보낸다.

    Args:
        base: d개 점 위의 G
        top: m개 점 위의 H
        max_order: 군 크기 한도 (None이면 설정값)
    """
    if max_order is None:
        max_order = settings.group.max_order
    d, m = base.degree, top.degree
    order = base.order ** m * top.order
    if order > max_order:
        raise BoundExceededError(f"Wreath product order {order} exceeds the cap of {max_order}")

    degree = d * m
    generators = [_shift(g, i * d, degree) for i in range(m) for g in base.generators]
    for h in top.generators:
        generators.append(Permutation(tuple(h.images[i] * d + j for i in range(m) for j in range(d))))

    elements = []
    for h in top:
        for gs in product(base.elements, repeat=m):
            elements.append(
                Permutation(tuple(h.images[i] * d + gs[i].images[j] for i in range(m) for j in range(d)))
            )
    return PermGroup(degree=degree, generators=tuple(generators), elements=tuple(sorted(elements)))


def point_stabilizer(group: PermGroup, points: Iterable[int]) -> PermGroup:
    """나열된 점을 각각 고정하는 부분군"""
    points = sorted(set(points))
    for p in points:
        if not 0 <= p < group.degree:
            raise InvalidArgumentError(f"Point {p} out of range for degree {group.degree}")
    return from_elements(group.degree, [g for g in group if all(g.images[p] == p for p in points)])


def conjugate(group: PermGroup, sigma: Permutation) -> PermGroup:
    """sigma G sigma^-1"""
    sigma_inv = sigma.inverse()
    elements = sorted(sigma * g * sigma_inv for g in group)
    generators = tuple(sigma * g * sigma_inv for g in group.generators)
    return PermGroup(degree=group.degree, generators=generators, elements=tuple(elements))


def join(a: PermGroup, b: PermGroup) -> PermGroup:
    if a.degree != b.degree:
        raise DegreeMismatchError(f"Cannot join groups of degree {a.degree} and {b.degree}")
    return close(a.degree, a.generators + tuple(g for g in b.generators if g not in a))


def is_subgroup(sub: PermGroup, group: PermGroup) -> bool:
    return sub.degree == group.degree and all(g in group for g in sub.generators)


# ---------------------------------------------------------------------------
# 군 통계
# ---------------------------------------------------------------------------

def cycle_polynomial(group: PermGroup) -> IntPolynomial:
    """F_G(x) = sum_{g in G} x^{c(g)}"""
    counts = Counter(cycle_count(g) for g in group)
    coeffs = [0] * (group.degree + 1)
    for c, multiplicity in counts.items():
        coeffs[c] = multiplicity
    return IntPolynomial(tuple(coeffs))


def transposition_census(group: PermGroup, graph: SimpleGraph) -> tuple[int, int]:
    """(t, t0): G의 호환 개수와 그중 비변(non-edge)을 움직이는 것의 개수"""
    if group.degree != graph.n:
        raise DegreeMismatchError(f"Group degree {group.degree} does not match vertex count {graph.n}")
    t = t0 = 0
    for g in group:
        pair = transposition_pair(g)
        if pair is None:
            continue
        t += 1
        if not graph.has_edge(*pair):
            t0 += 1
    return t, t0


def verify_closure(group: PermGroup, limit: int = None, samples: int = 1000, seed: int = 0) -> None:
    """원소 집합이 곱과 역원에 닫혀 있는지 검증

    |G| <= limit이면 모든 쌍, 아니면 seed 고정 무작위 쌍을 검사한다.

    Raises:
        InvariantViolationError: closure, 항등원, Lagrange, 생성원 조건 위반
    """
    if limit is None:
        limit = settings.group.closure_check_limit
    if group.identity not in group:
        raise InvariantViolationError("Group does not contain the identity")
    if factorial(group.degree) % group.order:
        raise InvariantViolationError(f"Order {group.order} does not divide {group.degree}!")
    if any(g not in group for g in group.generators):
        raise InvariantViolationError("A generator is missing from the element list")
    if any(g.inverse() not in group for g in group):
        raise InvariantViolationError("Element set is not closed under inverse")

    if group.order <= limit:
        pairs = product(group.elements, repeat=2)
    else:
        rng = random.Random(seed)
        pairs = ((rng.choice(group.elements), rng.choice(group.elements)) for _ in range(samples))
    for a, b in pairs:
        if a * b not in group:
            raise InvariantViolationError("Element set is not closed under composition")


def lemma3_root_propagates(sub: PermGroup, group: PermGroup, a: int) -> bool:
    """H <= G 에서 F_H(-a) = 0 이면 F_G(-a) = 0 인지 확인 (전제가 거짓이면 True)"""
    if evaluate(cycle_polynomial(sub), -a) != 0:
        return True
    return evaluate(cycle_polynomial(group), -a) == 0


# ---------------------------------------------------------------------------
# 텍스트 / JSON 경계 (1-indexed)
# ---------------------------------------------------------------------------

def parse_cycles(text: str, degree: int) -> Permutation:
    """'(1,3)(2,4)' 형식의 1-indexed 순환 표기를 순열로 변환 ('()'는 항등원)"""
    stripped = text.replace(" ", "")
    if not stripped or _CYCLE_PATTERN.sub("", stripped):
        raise InvalidArgumentError(f"Malformed cycle notation: '{text}'")

    cycle_list = []
    for body in _CYCLE_PATTERN.findall(stripped):
        if not body:
            continue
        try:
            cycle_list.append([int(p) - 1 for p in body.split(",")])
        except ValueError:
            raise InvalidArgumentError(f"Malformed cycle notation: '{text}'")
    return Permutation.from_cycles(degree, cycle_list)


def format_cycles(g: Permutation) -> str:
    """1-indexed 순환 표기 (고정점 생략)"""
    parts = [orbit for orbit in cycles(g) if len(orbit) > 1]
    if not parts:
        return "()"
    return "".join("(" + ",".join(str(p + 1) for p in orbit) + ")" for orbit in parts)


def group_to_spec(group: PermGroup) -> GroupSpecModel:
    return GroupSpecModel(degree=group.degree, generators=[format_cycles(g) for g in group.generators])


def group_from_spec(spec: GroupSpecModel) -> PermGroup:
    return close(spec.degree, [parse_cycles(text, spec.degree) for text in spec.generators])
