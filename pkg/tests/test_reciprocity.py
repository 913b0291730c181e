from itertools import product
from math import factorial

import pytest

from app.domain.graph.service import automorphism_group, complete, cycle_graph, disjoint_union, k_star, null
from app.domain.perm.service import (
    alternating,
    cycle_polynomial,
    cyclic,
    dihedral,
    direct_product,
    has_odd_permutation,
    point_stabilizer,
    symmetric,
    transposition_census,
    trivial,
    wreath_product,
)
from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import evaluate, falling_factorial, mul
from app.domain.reciprocity.models import PairReportModel
from app.domain.reciprocity.service import (
    is_reciprocal_pair,
    kstar_orbital_closed_form,
    kstar_reciprocity_equation,
    orbital_chromatic_polynomial,
    pair_report_from_model,
    pair_report_to_model,
    product_pair,
    theorem1_expected,
    theorem1_group,
    verify_theorem1,
    wreath_pair,
)
from app.domain.search.service import enumerate_graphs, enumerate_subgroups
from app.util.exceptions import (
    DegreeMismatchError,
    InvalidArgumentError,
    NotAutomorphismGroupError,
    NotReciprocalError,
    OddPermutationInHError,
)

# k 홀수이면 H = S_r, k 짝수이면 H = A_r. n <= 11, |G| <= 10^5
THEOREM1_GRID = [
    (k, r)
    for k in range(1, 6)
    for r in range(1, 6)
    if r * (k + 1) + k <= 11
    and factorial(k) * factorial(k + 1) ** r * (factorial(r) if k % 2 else max(factorial(r) // 2, 1)) <= 10**5
]


def grid_top(k: int, r: int):
    return symmetric(r) if k % 2 else alternating(r)


def test_four_cycle_with_dihedral_group():
    report = is_reciprocal_pair(cycle_graph(4), dihedral(4))
    assert report.orbital == IntPolynomial((0, -2, 3, -2, 1))
    assert report.cycle == IntPolynomial((0, 2, 3, 2, 1))
    assert report.reciprocal


def test_four_cycle_with_cyclic_group_is_not_reciprocal():
    report = is_reciprocal_pair(cycle_graph(4), cyclic(4))
    assert report.orbital == IntPolynomial((0, -4, 7, -4, 1))
    assert not report.reciprocal


@pytest.mark.parametrize("n", range(1, 6))
def test_complete_graph_with_symmetric_group(n):
    report = is_reciprocal_pair(complete(n), symmetric(n))
    assert report.orbital == falling_factorial(n)
    assert report.reciprocal


def test_null_graph_orbital_is_cycle_polynomial():
    for group in [symmetric(3), cyclic(4), alternating(4), dihedral(5)]:
        assert orbital_chromatic_polynomial(null(group.degree), group) == cycle_polynomial(group)


def test_null_graph_is_reciprocal_iff_group_is_even():
    for n in range(1, 5):
        for group in enumerate_subgroups(symmetric(n)):
            report = is_reciprocal_pair(null(n), group)
            assert report.reciprocal == (not has_odd_permutation(group))


def count_fixed_colourings(graph, group, c: int) -> int:
    """고정되는 (적절한 c-채색, g) 쌍의 개수"""
    total = 0
    for colouring in product(range(c), repeat=graph.n):
        if any(colouring[u] == colouring[v] for u, v in graph.edges):
            continue
        total += sum(1 for g in group if all(colouring[g(v)] == colouring[v] for v in range(graph.n)))
    return total


def _check_orbital_against_colourings(n: int):
    for graph in enumerate_graphs(n):
        for group in enumerate_subgroups(automorphism_group(graph), up_to_conjugacy=True):
            orbital = orbital_chromatic_polynomial(graph, group)
            for c in range(4):
                assert evaluate(orbital, c) == count_fixed_colourings(graph, group, c)


@pytest.mark.parametrize("n", range(1, 5))
def test_orbital_counts_fixed_colourings(n):
    _check_orbital_against_colourings(n)


@pytest.mark.slow
def test_orbital_counts_fixed_colourings_on_five_vertices():
    _check_orbital_against_colourings(5)


def test_orbital_rejects_invalid_pairs():
    with pytest.raises(DegreeMismatchError):
        orbital_chromatic_polynomial(cycle_graph(4), symmetric(3))
    with pytest.raises(NotAutomorphismGroupError):
        orbital_chromatic_polynomial(cycle_graph(4), symmetric(4))


def test_reciprocal_pairs_satisfy_edge_transposition_count():
    pairs = [
        (cycle_graph(4), dihedral(4)),
        (complete(4), symmetric(4)),
        (k_star(1, 3), direct_product(symmetric(1), symmetric(2))),
        (k_star(2, 5), direct_product(symmetric(2), symmetric(3))),
    ]
    for graph, group in pairs:
        assert is_reciprocal_pair(graph, group).reciprocal
        t, t0 = transposition_census(group, graph)
        assert graph.num_edges == t + t0


def test_kstar_closed_form_examples():
    assert kstar_orbital_closed_form(1, 3, symmetric(2)) == IntPolynomial((0, 0, -1, 1))
    assert kstar_orbital_closed_form(1, 3, symmetric(2)) == orbital_chromatic_polynomial(
        k_star(1, 3), direct_product(symmetric(1), symmetric(2))
    )

    expected = mul(falling_factorial(2), falling_factorial(3))
    assert kstar_orbital_closed_form(2, 5, symmetric(3)) == expected
    assert orbital_chromatic_polynomial(k_star(2, 5), direct_product(symmetric(2), symmetric(3))) == expected

    from app.domain.graph.service import chromatic_polynomial

    assert kstar_orbital_closed_form(2, 6, trivial(4)) == chromatic_polynomial(k_star(2, 6))


def test_kstar_closed_form_validation():
    with pytest.raises(InvalidArgumentError):
        kstar_orbital_closed_form(3, 3, trivial(0))
    with pytest.raises(DegreeMismatchError):
        kstar_orbital_closed_form(1, 4, symmetric(2))


@pytest.mark.parametrize(
    "k, r",
    [(k, r) for k in range(1, 5) for r in range(1, 4) if r * (k + 1) + k <= 9],
)
@pytest.mark.parametrize("top_name", ["trivial", "s", "a"])
def test_kstar_closed_form_matches_direct_sum(k, r, top_name):
    top = {"trivial": trivial, "s": symmetric, "a": alternating}[top_name](r)
    n = r * (k + 1) + k
    gbar = wreath_product(symmetric(k + 1), top)
    group = theorem1_group(k, r, top)
    assert orbital_chromatic_polynomial(k_star(k, n), group) == kstar_orbital_closed_form(k, n, gbar)


def test_theorem1_group_examples():
    g = theorem1_group(1, 1, trivial(1))
    assert (g.order, g.degree) == (2, 3)
    g = theorem1_group(2, 1, trivial(1))
    assert (g.order, g.degree) == (12, 5)
    g = theorem1_group(1, 2, symmetric(2))
    assert (g.order, g.degree) == (8, 5)
    with pytest.raises(DegreeMismatchError):
        theorem1_group(1, 2, symmetric(3))
    with pytest.raises(InvalidArgumentError):
        theorem1_group(0, 1, trivial(1))


def test_theorem1_group_centre_is_symmetric():
    k, r = 2, 2
    group = theorem1_group(k, r, alternating(r))
    points = range(k, r * (k + 1) + k)
    assert point_stabilizer(group, points).order == 2
    assert point_stabilizer(group, range(k)).order == group.order // 2


@pytest.mark.slow
@pytest.mark.parametrize("k, r", THEOREM1_GRID)
def test_theorem1_family_is_reciprocal(k, r):
    top = grid_top(k, r)
    assert theorem1_expected(k, top)
    report = verify_theorem1(k, r, top)
    assert report.reciprocal

    gbar = wreath_product(symmetric(k + 1), top)
    assert report.orbital == kstar_orbital_closed_form(k, report.graph.n, gbar)


def test_theorem1_small_members():
    assert verify_theorem1(1, 2, symmetric(2)).reciprocal
    assert verify_theorem1(2, 2, alternating(2)).reciprocal


def test_theorem1_even_centre_with_odd_top_is_not_reciprocal():
    top = symmetric(2)
    assert not theorem1_expected(2, top)
    assert not verify_theorem1(2, 2, top).reciprocal


def test_kstar_reciprocity_equation_tracks_reciprocity():
    cases = [(1, 2, symmetric(2)), (2, 2, alternating(2)), (2, 2, symmetric(2)), (2, 1, trivial(1))]
    for k, r, top in cases:
        gbar = wreath_product(symmetric(k + 1), top)
        assert kstar_reciprocity_equation(k, gbar, symmetric(k)) == verify_theorem1(k, r, top).reciprocal
    with pytest.raises(DegreeMismatchError):
        kstar_reciprocity_equation(2, symmetric(3), symmetric(3))


def test_product_pair_examples():
    k2 = is_reciprocal_pair(complete(2), symmetric(2))
    doubled = product_pair([k2, k2])
    assert doubled.graph == disjoint_union([complete(2), complete(2)])
    assert doubled.group.order == 4
    assert doubled.reciprocal

    k3 = is_reciprocal_pair(complete(3), symmetric(3))
    empty = is_reciprocal_pair(null(2), trivial(2))
    assert product_pair([k3, empty]).reciprocal


def test_product_pair_rejects_bad_input():
    with pytest.raises(InvalidArgumentError):
        product_pair([])
    with pytest.raises(NotReciprocalError):
        product_pair([is_reciprocal_pair(cycle_graph(4), cyclic(4))])


def test_wreath_pair_examples():
    k2 = is_reciprocal_pair(complete(2), symmetric(2))
    tripled = wreath_pair(k2, alternating(3))
    assert tripled.group.order == 24
    assert tripled.graph.n == 6
    assert tripled.reciprocal

    same = wreath_pair(k2, trivial(1))
    assert same.graph == k2.graph
    assert same.group == k2.group

    with pytest.raises(OddPermutationInHError):
        wreath_pair(k2, symmetric(2))


def test_pair_report_json_round_trip():
    report = is_reciprocal_pair(cycle_graph(4), dihedral(4))
    model = pair_report_to_model(report)
    restored = pair_report_from_model(PairReportModel.model_validate_json(model.model_dump_json()))
    assert restored == report


def test_pair_report_from_model_recomputes_missing_polynomials():
    model = pair_report_to_model(is_reciprocal_pair(cycle_graph(4), dihedral(4)))
    bare = PairReportModel(graph=model.graph, group=model.group)
    restored = pair_report_from_model(bare)
    assert restored.reciprocal
    assert restored.orbital == IntPolynomial((0, -2, 3, -2, 1))
