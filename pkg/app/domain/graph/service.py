"""단순 그래프 구성, 몫 그래프, 채색 다항식, 자기동형군"""
import logging
from itertools import combinations, permutations, product
from typing import Iterable, Optional

import networkx as nx

from app.config.settings import settings
from app.domain.graph.models import GraphSpecModel, QuotientResult, SimpleGraph
from app.domain.perm.models import PermGroup, Permutation
from app.domain.perm.service import cycles, from_elements
from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import falling_factorial, mul
from app.util.exceptions import BoundExceededError, DegreeMismatchError, InvalidArgumentError

logger = logging.getLogger(__name__)

EdgeKey = tuple[int, frozenset[tuple[int, int]]]


# ---------------------------------------------------------------------------
# 이름 있는 구성
# ---------------------------------------------------------------------------

def complete(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidArgumentError(f"Complete graph needs at least 1 vertex. Got: {n}")
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def null(n: int) -> SimpleGraph:
    if n < 1:
        raise InvalidArgumentError(f"Null graph needs at least 1 vertex. Got: {n}")
    return SimpleGraph.from_edges(n, [])


def cycle_graph(n: int) -> SimpleGraph:
    if n < 3:
        raise InvalidArgumentError(f"Cycle graph needs at least 3 vertices. Got: {n}")
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def k_star(k: int, n: int) -> SimpleGraph:
    """k-star: 중심 {0..k-1}은 clique, 점 {k..n-1}은 모든 중심과만 인접

    Args:
        k: 중심 크기 (1 <= k < n)
        n: 전체 정점 수
    """
    if not 1 <= k < n:
        raise InvalidArgumentError(f"k-star needs 1 <= k < n. Got: k={k}, n={n}")
    centre_edges = combinations(range(k), 2)
    spoke_edges = ((i, j) for i in range(k) for j in range(k, n))
    return SimpleGraph.from_edges(n, list(centre_edges) + list(spoke_edges))


def disjoint_union(graphs: Iterable[SimpleGraph]) -> SimpleGraph:
    """입력 순서대로 정점 블록을 이어 붙인 서로소 합"""
    offset = 0
    edges = []
    for graph in graphs:
        edges += [(u + offset, v + offset) for u, v in graph.edges]
        offset += graph.n
    return SimpleGraph.from_edges(offset, edges)


def relabel(graph: SimpleGraph, sigma: Permutation) -> SimpleGraph:
    """정점 v를 sigma(v)로 옮긴 그래프"""
    if sigma.degree != graph.n:
        raise DegreeMismatchError(f"Permutation degree {sigma.degree} does not match vertex count {graph.n}")
    return SimpleGraph.from_edges(graph.n, [(sigma(u), sigma(v)) for u, v in graph.edges])


def induced_subgraph(graph: SimpleGraph, vertices: Iterable[int]) -> SimpleGraph:
    """정점 부분집합의 유도 부분그래프 (오름차순으로 0..부터 재번호)"""
    ordered = sorted(set(vertices))
    index = {v: i for i, v in enumerate(ordered)}
    edges = [(index[u], index[v]) for u, v in graph.edges if u in index and v in index]
    return SimpleGraph.from_edges(len(ordered), edges)


def to_networkx(graph: SimpleGraph) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(graph.n))
    g.add_edges_from(graph.sorted_edges())
    return g


def graph_to_spec(graph: SimpleGraph) -> GraphSpecModel:
    return GraphSpecModel(n=graph.n, edges=[[u, v] for u, v in graph.sorted_edges()])


def graph_from_spec(spec: GraphSpecModel) -> SimpleGraph:
    return SimpleGraph.from_edges(spec.n, spec.edges)


# ---------------------------------------------------------------------------
# 몫 그래프
# ---------------------------------------------------------------------------

def quotient(graph: SimpleGraph, g: Permutation) -> QuotientResult:
    """g의 각 순환을 한 정점으로 수축한 Gamma/g

    어떤 순환이 간선의 두 끝점을 모두 포함하면 has_internal_edge를 반환한다.
    몫 그래프의 정점 i는 cycles(g)의 i번째 궤도이다.
    """
    if g.degree != graph.n:
        raise DegreeMismatchError(f"Permutation degree {g.degree} does not match vertex count {graph.n}")

    orbits = cycles(g)
    orbit_of = [0] * graph.n
    for i, orbit in enumerate(orbits):
        for v in orbit:
            orbit_of[v] = i

    edges = set()
    for u, v in graph.edges:
        a, b = orbit_of[u], orbit_of[v]
        if a == b:
            return QuotientResult(has_internal_edge=True)
        edges.add((min(a, b), max(a, b)))
    return QuotientResult(has_internal_edge=False, graph=SimpleGraph(n=len(orbits), edges=frozenset(edges)))


# ---------------------------------------------------------------------------
# 채색 다항식
# ---------------------------------------------------------------------------

def _neighbours(n: int, edges: frozenset[tuple[int, int]]) -> list[set[int]]:
    adjacency: list[set[int]] = [set() for _ in range(n)]
    for u, v in edges:
        adjacency[u].add(v)
        adjacency[v].add(u)
    return adjacency


def _remove_vertex(n: int, edges: frozenset[tuple[int, int]], v: int) -> EdgeKey:
    def shift(w: int) -> int:
        return w - 1 if w > v else w

    return n - 1, frozenset((shift(a), shift(b)) for a, b in edges if v not in (a, b))


def _contract(n: int, edges: frozenset[tuple[int, int]], u: int, v: int) -> EdgeKey:
    """간선 (u, v), u < v 를 수축 - v를 u에 합치고 평행 간선은 하나로"""
    def merge(w: int) -> int:
        if w == v:
            w = u
        return w - 1 if w > v else w

    contracted = set()
    for a, b in edges:
        a, b = merge(a), merge(b)
        if a != b:
            contracted.add((min(a, b), max(a, b)))
    return n - 1, frozenset(contracted)


def _simplicial_vertex(n: int, edges: frozenset[tuple[int, int]]) -> Optional[tuple[int, int]]:
    """이웃이 clique인 가장 작은 정점과 그 차수"""
    adjacency = _neighbours(n, edges)
    for v in range(n):
        nbrs = sorted(adjacency[v])
        if all((a, b) in edges for a, b in combinations(nbrs, 2)):
            return v, len(nbrs)
    return None


def _chromatic(n: int, edges: frozenset[tuple[int, int]], memo: dict[EdgeKey, IntPolynomial]) -> IntPolynomial:
    key = (n, edges)
    cached = memo.get(key)
    if cached is not None:
        return cached

    if not edges:
        result = IntPolynomial.monomial(n)
    elif len(edges) == n * (n - 1) // 2:
        result = falling_factorial(n)
    else:
        simplicial = _simplicial_vertex(n, edges)
        if simplicial is not None:
            v, d = simplicial
            result = mul(IntPolynomial((-d, 1)), _chromatic(*_remove_vertex(n, edges, v), memo))
        else:
            # 사전식 최소 간선에서 deletion-contraction
            u, v = min(edges)
            deleted = _chromatic(n, edges - {(u, v)}, memo)
            contracted = _chromatic(*_contract(n, edges, u, v), memo)
            result = deleted - contracted

    memo[key] = result
    return result


def chromatic_polynomial(graph: SimpleGraph, memo: dict[EdgeKey, IntPolynomial] = None) -> IntPolynomial:
    """P_Gamma(x) - deletion-contraction (호출별 memo)

    간선 없는 그래프, 완전 그래프, simplicial 정점은 정확한 축약 공식으로 처리한다.

    Args:
        graph: 대상 그래프
        memo: 같은 계산 안에서 공유할 memo 테이블 (None이면 새로 생성)
    """
    if memo is None:
        memo = {}
    return _chromatic(graph.n, graph.edges, memo)


def count_colorings_oracle(graph: SimpleGraph, c: int, bound: int = None) -> int:
    """c색 proper colouring 개수를 전수 나열로 계산"""
    if bound is None:
        bound = settings.graph.coloring_oracle_bound
    if c < 0:
        raise InvalidArgumentError(f"Colour count must be non-negative. Got: {c}")
    if c ** graph.n > bound:
        raise BoundExceededError(f"{c}^{graph.n} colour maps exceed the enumeration bound {bound}")

    edges = graph.sorted_edges()
    return sum(
        1
        for colouring in product(range(c), repeat=graph.n)
        if all(colouring[u] != colouring[v] for u, v in edges)
    )


# ---------------------------------------------------------------------------
# 자기동형
# ---------------------------------------------------------------------------

def is_automorphism(graph: SimpleGraph, g: Permutation) -> bool:
    if g.degree != graph.n:
        raise DegreeMismatchError(f"Permutation degree {g.degree} does not match vertex count {graph.n}")
    return all(graph.has_edge(g(u), g(v)) for u, v in graph.edges)


def automorphism_group(graph: SimpleGraph, max_n: int = None) -> PermGroup:
    """전수 탐색 (차수 분할 가지치기)으로 Aut(Gamma) 계산"""
    if max_n is None:
        max_n = settings.graph.automorphism_max_n
    if graph.n > max_n:
        raise BoundExceededError(f"Automorphism search is limited to {max_n} vertices. Got: {graph.n}")

    n = graph.n
    adjacency = graph.adjacency
    degrees = [len(a) for a in adjacency]
    images = [0] * n
    used = [False] * n
    found: list[Permutation] = []

    def extend(i: int) -> None:
        if i == n:
            found.append(Permutation(tuple(images)))
            return
        for w in range(n):
            if used[w] or degrees[w] != degrees[i]:
                continue
            if any((j in adjacency[i]) != (images[j] in adjacency[w]) for j in range(i)):
                continue
            used[w] = True
            images[i] = w
            extend(i + 1)
            used[w] = False

    extend(0)
    logger.debug("[Aut] %d vertices, %d edges -> order %d", n, graph.num_edges, len(found))
    return from_elements(n, found)


# ---------------------------------------------------------------------------
# 정규형
# ---------------------------------------------------------------------------

def canonical_form(graph: SimpleGraph) -> tuple[int, SimpleGraph]:
    """최소 간선 비트열 정규형

    정점을 차수 내림차순 칸으로 나누고, 칸 내부의 모든 순서 중 간선 비트열
    ((0,1), (0,2), ..., (n-2,n-1) 순서)이 사전식 최소인 것을 고른다.

    Returns:
        (비트열 정수 코드, 정규 라벨 그래프)
    """
    n = graph.n
    adjacency = graph.adjacency
    by_degree: dict[int, list[int]] = {}
    for v in range(n):
        by_degree.setdefault(len(adjacency[v]), []).append(v)
    cells = [by_degree[d] for d in sorted(by_degree, reverse=True)]
    pairs = list(combinations(range(n), 2))

    best_code = None
    best_order = None
    for choice in product(*(permutations(cell) for cell in cells)):
        order = [v for part in choice for v in part]
        code = 0
        for p, q in pairs:
            code = (code << 1) | (order[q] in adjacency[order[p]])
        if best_code is None or code < best_code:
            best_code, best_order = code, order

    if best_order is None:
        return 0, graph
    position = {v: p for p, v in enumerate(best_order)}
    canonical = SimpleGraph.from_edges(n, [(position[u], position[v]) for u, v in graph.edges])
    return best_code, canonical
