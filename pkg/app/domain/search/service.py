"""reciprocal pair 전수 검색 - 그래프/부분군 나열, 분류, 기약성 판정"""
import logging
from collections import Counter, deque
from itertools import combinations
from math import factorial
from typing import Iterator, Optional

import networkx as nx
from networkx.algorithms.isomorphism import GraphMatcher

from app.config.settings import settings
from app.domain.graph.models import SimpleGraph
from app.domain.graph.service import (
    automorphism_group,
    canonical_form,
    cycle_graph,
    induced_subgraph,
    to_networkx,
)
from app.domain.perm.models import PermGroup, Permutation
from app.domain.perm.service import (
    close,
    cycle_type,
    format_cycles,
    from_elements,
    has_odd_permutation,
    is_even,
    transposition_pair,
    wreath_product,
)
from app.domain.reciprocity.models import PairReport, PairReportModel
from app.domain.reciprocity.service import (
    is_reciprocal_pair,
    pair_report_from_model,
    pair_report_to_model,
)
from app.domain.search.models import (
    Classification,
    ClassificationTag,
    DecompositionWitness,
    SearchResult,
    SearchSummaryModel,
)
from app.util.cache.client import cache_service
from app.util.exceptions import BoundExceededError, InvalidArgumentError, NotReciprocalError, ReciprocityError
from app.util.scheduler import search_scheduler
from app.util.union_find import UnionFind, find_orbits

logger = logging.getLogger(__name__)


# ---------------------------------------------------------------------------
# 그래프 나열
# ---------------------------------------------------------------------------

def enumerate_graphs(n: int, max_n: int = None) -> list[SimpleGraph]:
    """동형류마다 정규형 대표 하나씩 (간선 수, 정규 코드) 순으로 나열

    간선 k+1개 대표는 간선 k개 대표에 간선 하나를 더한 그래프의 정규형으로 얻는다.
    """
    if max_n is None:
        max_n = settings.graph.enumerate_max_n
    if n < 1:
        raise InvalidArgumentError(f"Vertex count must be at least 1. Got: {n}")
    if n > max_n:
        raise BoundExceededError(f"Graph enumeration is limited to {max_n} vertices. Got: {n}")

    pairs = list(combinations(range(n), 2))
    level = dict([canonical_form(SimpleGraph.from_edges(n, []))])
    result: list[SimpleGraph] = []
    while level:
        result += [level[code] for code in sorted(level)]
        next_level: dict[int, SimpleGraph] = {}
        for graph in level.values():
            for edge in pairs:
                if edge in graph.edges:
                    continue
                code, canonical = canonical_form(SimpleGraph(n=n, edges=graph.edges | {edge}))
                next_level.setdefault(code, canonical)
        level = next_level

    logger.info("[Search] %d graphs on %d vertices up to isomorphism", len(result), n)
    return result


# ---------------------------------------------------------------------------
# 부분군 나열
# ---------------------------------------------------------------------------

Subgroup = tuple[frozenset, tuple]  # (원소 집합, 생성원)


def _cyclic_subgroups(group: PermGroup) -> list[Subgroup]:
    seen: dict[frozenset, Permutation] = {}
    for g in group:
        powers = {group.identity}
        current = g
        while current not in powers:
            powers.add(current)
            current = g * current
        seen.setdefault(frozenset(powers), g)
    return sorted(
        ((elements, (g,) if not g.is_identity() else ()) for elements, g in seen.items()),
        key=lambda s: (len(s[0]), sorted(s[0])),
    )


def _join(degree: int, a: Subgroup, b: Subgroup, max_order: int) -> Subgroup:
    extra = tuple(g for g in b[1] if g not in a[0])
    if not extra:
        return a
    generators = a[1] + extra
    return frozenset(close(degree, generators, max_order=max_order).elements), generators


def _conjugacy_invariant(elements: frozenset) -> tuple:
    return len(elements), tuple(sorted(Counter(cycle_type(g) for g in elements).items()))


def _are_conjugate(group: PermGroup, a: Subgroup, b: Subgroup) -> bool:
    """sigma a sigma^-1 = b 인 sigma가 group에 있는지 (생성원만 검사)"""
    if len(a[0]) != len(b[0]):
        return False
    for sigma in group:
        sigma_inv = sigma.inverse()
        if all(sigma * g * sigma_inv in b[0] for g in a[1]):
            return True
    return False


def _to_group(degree: int, subgroup: Subgroup) -> PermGroup:
    return PermGroup(degree=degree, generators=subgroup[1], elements=tuple(sorted(subgroup[0])))


def enumerate_subgroups(group: PermGroup, up_to_conjugacy: bool = False, max_order: int = None) -> list[PermGroup]:
    """순환 부분군에서 출발해 join을 고정점까지 반복하여 부분군 나열

    up_to_conjugacy=True이면 G-켤레류 대표에 대해서만 join을 반복한다.
    모든 부분군은 순환 부분군의 반복 join이고 그 사슬을 켤레해도 대표 집합에
    머무르므로 모든 켤레류에 도달한다.

    Args:
        group: 부분군을 나열할 군
        up_to_conjugacy: 켤레류마다 대표 하나만 반환할지 여부
        max_order: |G| 한도 (None이면 설정값)

    Returns:
        (크기, 원소) 순으로 정렬된 부분군 목록
    """
    if max_order is None:
        max_order = settings.search.max_subgroup_parent_order
    if group.order > max_order:
        raise BoundExceededError(f"Subgroup enumeration is limited to |G| <= {max_order}. Got: {group.order}")

    degree = group.degree
    cyclics = _cyclic_subgroups(group)
    trivial_subgroup: Subgroup = (frozenset([group.identity]), ())

    found: list[Subgroup] = [trivial_subgroup]
    index: dict[frozenset, int] = {trivial_subgroup[0]: 0}
    by_invariant: dict[tuple, list[int]] = {_conjugacy_invariant(trivial_subgroup[0]): [0]}

    def admit(candidate: Subgroup) -> bool:
        if candidate[0] in index:
            return False
        if up_to_conjugacy:
            bucket = by_invariant.setdefault(_conjugacy_invariant(candidate[0]), [])
            for i in bucket:
                if _are_conjugate(group, candidate, found[i]):
                    index[candidate[0]] = i
                    return False
            bucket.append(len(found))
        index[candidate[0]] = len(found)
        found.append(candidate)
        return True

    queue = deque([trivial_subgroup])
    while queue:
        current = queue.popleft()
        for cyclic in cyclics:
            joined = _join(degree, current, cyclic, group.order)
            if admit(joined):
                queue.append(joined)

    subgroups = sorted(found, key=lambda s: (len(s[0]), sorted(s[0])))
    logger.debug("[Subgroups] |G|=%d -> %d subgroups (up_to_conjugacy=%s)", group.order, len(subgroups), up_to_conjugacy)
    return [_to_group(degree, s) for s in subgroups]


# ---------------------------------------------------------------------------
# 분류
# ---------------------------------------------------------------------------

def _restrict(g: Permutation, part: list[int]) -> Permutation:
    """part를 보존하는 g를 part 위 (오름차순 재번호) 순열로 제한"""
    position = {v: i for i, v in enumerate(part)}
    return Permutation(tuple(position[g(v)] for v in part))


def kstar_membership(graph: SimpleGraph, group: PermGroup) -> Optional[dict]:
    """(graph, group)이 k-star 가족 (S_k x (S_{k+1} wr H))인지 구조적으로 판정

    중심 = 차수 n-1 정점, n = r(k+1)+k, G = S_k x Gbar, Gbar의 호환 성분이
    모두 크기 k+1, k가 짝수이면 블록 작용이 짝순열만 가진다.

    Returns:
        k, r, 블록 작용 정보를 담은 증거 딕셔너리 또는 None
    """
    n = graph.n
    centre = [v for v in range(n) if graph.degree(v) == n - 1]
    k = len(centre)
    if k < 1 or n < 2 * k + 1:
        return None
    points = [v for v in range(n) if v not in centre]
    centre_set = frozenset(centre)
    if any(graph.adjacency[p] != centre_set for p in points):
        return None
    alpha = n - k
    if alpha % (k + 1):
        return None
    r = alpha // (k + 1)

    centre_part = [g for g in group if all(g(p) == p for p in points)]
    point_part = [g for g in group if all(g(c) == c for c in centre)]
    if len(centre_part) != factorial(k) or len(centre_part) * len(point_part) != group.order:
        return None

    uf = UnionFind(points)
    for g in point_part:
        pair = transposition_pair(g)
        if pair is not None:
            uf.union(*pair)
    blocks = uf.classes()
    if any(len(block) != k + 1 for block in blocks):
        return None

    block_of = {v: i for i, block in enumerate(blocks) for v in block}
    top = {Permutation(tuple(block_of[g(block[0])] for block in blocks)) for g in point_part}
    top_has_odd = any(not is_even(h) for h in top)
    if k % 2 == 0 and top_has_odd:
        return None
    return {"k": k, "r": r, "top_order": len(top), "top_has_odd_permutation": top_has_odd}


def _set_partitions(items: list) -> Iterator[list[list]]:
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for partition in _set_partitions(rest):
        for i in range(len(partition)):
            yield partition[:i] + [[first] + partition[i]] + partition[i + 1:]
        yield [[first]] + partition


def _components(graph: SimpleGraph) -> list[list[int]]:
    return sorted(sorted(c) for c in nx.connected_components(to_networkx(graph)))


def _product_witness(report: PairReport, components: list[list[int]]) -> Optional[DecompositionWitness]:
    graph, group = report.graph, report.group
    component_of = {v: i for i, comp in enumerate(components) for v in comp}
    orbits = find_orbits(
        group.generators, range(len(components)), lambda g, i: component_of[g(components[i][0])]
    )
    if len(orbits) < 2:
        return None

    # 가장 잘게 나눈 묶음부터 검사
    for partition in sorted(_set_partitions(orbits), key=lambda p: (-len(p), p)):
        if len(partition) < 2:
            continue
        parts = [sorted(v for orbit_group in part for i in orbit_group for v in components[i]) for part in partition]
        factors = [[g for g in group if all(g(v) == v for v in range(graph.n) if v not in set(part))] for part in parts]
        size = 1
        for factor in factors:
            size *= len(factor)
        if size != group.order:
            continue
        if all(
            is_reciprocal_pair(
                induced_subgraph(graph, part),
                from_elements(len(part), [_restrict(g, part) for g in factor]),
            ).reciprocal
            for part, factor in zip(parts, factors)
        ):
            return DecompositionWitness(kind="product", parts=tuple(tuple(p) for p in sorted(parts)))
    return None


def _identifications(
    graph: SimpleGraph, group: PermGroup, components: list[list[int]], component_of: dict, base_images: list[frozenset]
) -> Optional[list[list[int]]]:
    """각 성분 C_i 에 대해 C_0 의 j번째 정점을 보낼 곳 phi_i(j)"""
    reference = components[0]
    reference_graph = induced_subgraph(graph, reference)
    phis = []
    for i, comp in enumerate(components):
        mover = next((g for g in group if component_of[g(reference[0])] == i), None)
        if mover is not None:
            phis.append([mover(v) for v in reference])
            continue
        # 같은 궤도에 없는 성분은 기저군을 옮겨주는 그래프 동형을 찾는다
        matcher = GraphMatcher(to_networkx(reference_graph), to_networkx(induced_subgraph(graph, comp)))
        chosen = None
        for mapping in sorted(tuple(sorted(m.items())) for m in matcher.isomorphisms_iter()):
            phi = [comp[target] for _, target in mapping]
            position = {v: j for j, v in enumerate(comp)}
            local = [position[v] for v in phi]
            transported = frozenset(
                Permutation(tuple(local[g(local.index(p))] for p in range(len(reference)))) for g in base_images[0]
            )
            if transported == base_images[i]:
                chosen = phi
                break
        if chosen is None:
            return None
        phis.append(chosen)
    return phis


def _wreath_witness(report: PairReport, components: list[list[int]]) -> Optional[DecompositionWitness]:
    graph, group = report.graph, report.group
    m = len(components)
    if m < 2:
        return None
    d = len(components[0])
    reference = to_networkx(induced_subgraph(graph, components[0]))
    if any(len(c) != d or not nx.is_isomorphic(reference, to_networkx(induced_subgraph(graph, c))) for c in components):
        return None

    component_of = {v: i for i, comp in enumerate(components) for v in comp}
    top_elements = {Permutation(tuple(component_of[g(c[0])] for c in components)) for g in group}
    top = from_elements(m, top_elements)
    kernel = [g for g in group if all(component_of[g(c[0])] == i for i, c in enumerate(components))]
    base_images = [frozenset(_restrict(g, comp) for g in kernel) for comp in components]

    size = 1
    for images in base_images:
        size *= len(images)
    if size != len(kernel) or len(base_images[0]) ** m * top.order != group.order:
        return None

    phis = _identifications(graph, group, components, component_of, base_images)
    if phis is None:
        return None

    base = from_elements(d, base_images[0])
    wreath = wreath_product(base, top, max_order=group.order)
    psi = [phis[i][j] for i in range(m) for j in range(d)]
    for w in wreath:
        relabelled = [0] * graph.n
        for p in range(graph.n):
            relabelled[psi[p]] = psi[w(p)]
        if Permutation(tuple(relabelled)) not in group:
            return None

    if not is_reciprocal_pair(induced_subgraph(graph, components[0]), base).reciprocal:
        return None
    return DecompositionWitness(
        kind="wreath",
        parts=tuple(tuple(c) for c in components),
        top_order=top.order,
        top_generators=tuple(format_cycles(h) for h in top.generators),
        top_has_odd_permutation=has_odd_permutation(top),
    )


def is_irreducible(report: PairReport) -> tuple[bool, Optional[DecompositionWitness]]:
    """연결성분 구조로 direct/wreath product 분해가 있는지 판정

    Returns:
        (기약 여부, reducible이면 분해 증거)

    Raises:
        NotReciprocalError: reciprocal이 아닌 쌍
    """
    if not report.reciprocal:
        raise NotReciprocalError("Irreducibility is only defined for reciprocal pairs")
    components = _components(report.graph)
    if len(components) < 2:
        return True, None

    witness = _product_witness(report, components) or _wreath_witness(report, components)
    if witness is not None:
        return False, witness
    return True, None


def _witness_evidence(witness: DecompositionWitness) -> dict:
    evidence = {"parts": [list(p) for p in witness.parts]}
    if witness.kind == "wreath":
        evidence.update(
            top_order=witness.top_order,
            top_generators=list(witness.top_generators),
            top_has_odd_permutation=witness.top_has_odd_permutation,
        )
    return evidence


def classify(report: PairReport) -> Classification:
    """추측의 가족 순서 (null, complete, 4-cycle, k-star, product/wreath)로 첫 일치 분류

    K_1은 null이자 complete이며 TrivialComplete로 분류한다.
    """
    if not report.reciprocal:
        raise NotReciprocalError("Only reciprocal pairs can be classified")
    graph, group = report.graph, report.group
    n = graph.n

    if n == 1:
        return Classification(ClassificationTag.TRIVIAL_COMPLETE, {"note": "K_1 is both null and complete"})
    if graph.num_edges == 0:
        return Classification(ClassificationTag.TRIVIAL_NULL, {"group_order": group.order})
    if graph.num_edges == n * (n - 1) // 2 and group.order == factorial(n):
        return Classification(ClassificationTag.TRIVIAL_COMPLETE, {"group_order": group.order})
    if (
        n == 4
        and graph.num_edges == 4
        and group.order == 8
        and nx.is_isomorphic(to_networkx(graph), to_networkx(cycle_graph(4)))
    ):
        return Classification(ClassificationTag.FOUR_CYCLE, {"group_order": group.order})

    evidence = kstar_membership(graph, group)
    if evidence is not None:
        return Classification(ClassificationTag.K_STAR, evidence)

    _, witness = is_irreducible(report)
    if witness is not None:
        tag = ClassificationTag.PRODUCT_DERIVED if witness.kind == "product" else ClassificationTag.WREATH_DERIVED
        return Classification(tag, _witness_evidence(witness))

    logger.warning("[Search] UNKNOWN reciprocal pair: n=%d edges=%s |G|=%d", n, graph.sorted_edges(), group.order)
    return Classification(ClassificationTag.UNKNOWN, {})


# ---------------------------------------------------------------------------
# 검색
# ---------------------------------------------------------------------------

def _search_graph(task: tuple[int, SimpleGraph]) -> dict:
    """그래프 하나의 자기동형 부분군 (켤레 대표)을 모두 검사 - 워커 작업 단위"""
    index, graph = task
    aut = automorphism_group(graph)
    subgroups = enumerate_subgroups(aut, up_to_conjugacy=True)
    pairs = []
    for subgroup in subgroups:
        report = is_reciprocal_pair(graph, subgroup)
        if not report.reciprocal:
            continue
        report = report.with_classification(classify(report))
        pairs.append(pair_report_to_model(report).model_dump(mode="json"))
    return {"kind": "graph", "index": index, "subgroups": len(subgroups), "pairs": pairs}


def _record_verifies(record: dict) -> bool:
    """캐시된 그래프 레코드의 쌍을 모두 다시 계산해 저장값과 비교"""
    if "subgroups" not in record:
        return False
    try:
        for pair in record["pairs"]:
            stored = pair_report_from_model(PairReportModel.model_validate(pair))
            fresh = is_reciprocal_pair(stored.graph, stored.group)
            if not fresh.reciprocal or (fresh.orbital, fresh.cycle) != (stored.orbital, stored.cycle):
                return False
    except (KeyError, ValueError, ReciprocityError):
        return False
    return True


def search_key(n: int) -> str:
    return cache_service.make_key(
        n=n,
        max_subgroup_parent_order=settings.search.max_subgroup_parent_order,
        automorphism_max_n=settings.graph.automorphism_max_n,
        version=settings.version,
    )


def search_pairs(n: int, jobs: int = None, max_n: int = None) -> SearchResult:
    """n 정점 그래프와 자기동형 부분군 (켤레 대표) 전체에서 reciprocal pair 검색

    켤레인 부분군은 reciprocity 관계의 양변이 같으므로 대표 하나만 검사한다.
    결과 캐시가 있으면 그래프 단위로 이어서 계산한다.

    Args:
        n: 정점 수
        jobs: 워커 수 (None이면 설정값)
        max_n: n 한도 (None이면 설정값)
    """
    if max_n is None:
        max_n = settings.search.max_n
    if n > max_n:
        raise BoundExceededError(f"Search is limited to n <= {max_n}. Got: {n}")

    graphs = enumerate_graphs(n)
    key = search_key(n)
    cached = cache_service.get_records(key)
    records = {r["index"]: r for r in cached if r.get("kind") == "graph" and "index" in r}
    stale = [i for i, r in records.items() if not _record_verifies(r)]
    for i in stale:
        logger.warning("[Search] Cached record for graph %d does not re-verify, recomputing", i)
        del records[i]
    if records:
        logger.info("[Search] Resuming n=%d with %d/%d graphs cached", n, len(records), len(graphs))

    pending = [(i, g) for i, g in enumerate(graphs) if i not in records]
    for record in search_scheduler.imap(_search_graph, pending, jobs=jobs, desc=f"n={n}"):
        cache_service.append(key, record)
        records[record["index"]] = record

    result = SearchResult(n=n, graphs_examined=len(graphs))
    for i in range(len(graphs)):
        record = records[i]
        result.subgroups_examined += record["subgroups"]
        for pair in record["pairs"]:
            result.pairs.append(pair_report_from_model(PairReportModel.model_validate(pair)))

    summary = search_summary(result)
    if pending or cache_service.find_summary(cached) is None:
        cache_service.append(key, summary.model_dump(mode="json"))
    for report in result.unknown_pairs():
        logger.warning("[Search] Unknown pair at n=%d: edges=%s", n, report.graph.sorted_edges())
    logger.info(
        "[Search] n=%d: %d graphs, %d subgroups, %d pairs",
        n, result.graphs_examined, result.subgroups_examined, len(result.pairs),
    )
    return result


def search_summary(result: SearchResult) -> SearchSummaryModel:
    tags = Counter(p.classification.tag.value for p in result.pairs if p.classification is not None)
    return SearchSummaryModel(
        n=result.n,
        graphs_examined=result.graphs_examined,
        subgroups_examined=result.subgroups_examined,
        pairs_found=len(result.pairs),
        unknown_pairs=len(result.unknown_pairs()),
        tag_counts=dict(sorted(tags.items())),
    )
