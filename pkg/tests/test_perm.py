from itertools import product
from math import factorial

import pytest

from app.domain.graph.service import complete, k_star, null
from app.domain.perm.models import PermGroup, Permutation
from app.domain.perm.service import (
    alternating,
    close,
    conjugate,
    cycle_count,
    cycle_polynomial,
    cycles,
    cyclic,
    dihedral,
    direct_product,
    format_cycles,
    group_from_spec,
    group_to_spec,
    has_odd_permutation,
    is_even,
    is_subgroup,
    join,
    lemma3_root_propagates,
    parse_cycles,
    point_stabilizer,
    symmetric,
    transposition_census,
    trivial,
    verify_closure,
    wreath_product,
)
from app.domain.poly.models import IntPolynomial
from app.domain.poly.service import mul, rising_factorial, substitute_negate, wreath_cycle_poly
from app.domain.search.service import enumerate_subgroups
from app.util.exceptions import (
    BoundExceededError,
    DegreeMismatchError,
    InvalidArgumentError,
    InvariantViolationError,
)

POOL = {
    "S1": symmetric(1),
    "S2": symmetric(2),
    "S3": symmetric(3),
    "S4": symmetric(4),
    "A3": alternating(3),
    "A4": alternating(4),
    "C2": cyclic(2),
    "C3": cyclic(3),
    "C4": cyclic(4),
}


def perm(n: int, *cycle_list: list[int]) -> Permutation:
    return Permutation.from_cycles(n, list(cycle_list))


def test_composition_applies_right_factor_first():
    g = perm(3, [0, 1])
    h = perm(3, [1, 2])
    assert (g * h).images == (1, 2, 0)
    assert (h * g).images == (2, 0, 1)


def test_permutation_validation():
    with pytest.raises(InvalidArgumentError):
        Permutation((0, 0, 1))
    with pytest.raises(InvalidArgumentError):
        perm(3, [0, 3])
    with pytest.raises(DegreeMismatchError):
        perm(3, [0, 1]) * perm(4, [0, 1])


def test_inverse():
    g = perm(5, [0, 3, 1], [2, 4])
    assert (g * g.inverse()).is_identity()
    assert g.inverse().inverse() == g


@pytest.mark.parametrize(
    "g, count",
    [
        (Permutation.identity(4), 4),
        (perm(4, [0, 1, 2, 3]), 1),
        (perm(4, [0, 1], [2, 3]), 2),
    ],
)
def test_cycle_count(g, count):
    assert cycle_count(g) == count


@pytest.mark.parametrize(
    "g, orbits",
    [
        (Permutation.identity(3), [[0], [1], [2]]),
        (perm(4, [0, 2], [1, 3]), [[0, 2], [1, 3]]),
        (perm(4, [1, 3]), [[0], [1, 3], [2]]),
    ],
)
def test_cycles(g, orbits):
    assert cycles(g) == orbits


def test_parity():
    assert not is_even(perm(3, [0, 1]))
    assert is_even(perm(3, [0, 1, 2]))
    assert not has_odd_permutation(alternating(4))
    assert has_odd_permutation(dihedral(4))
    assert has_odd_permutation(symmetric(3))
    assert not has_odd_permutation(trivial(3))


def test_close_examples():
    assert close(3, [perm(3, [0, 1]), perm(3, [0, 1, 2])]).order == 6
    assert close(4, []).order == 1
    assert close(4, [perm(4, [0, 1, 2, 3]), perm(4, [0, 2])]).order == 8


def test_close_respects_cap():
    with pytest.raises(BoundExceededError):
        close(4, symmetric(4).generators, max_order=10)


def test_close_rejects_wrong_degree():
    with pytest.raises(DegreeMismatchError):
        close(3, [perm(4, [0, 1])])


def test_elements_are_sorted_and_contain_identity():
    group = dihedral(5)
    assert list(group.elements) == sorted(group.elements)
    assert group.identity in group
    assert group.elements[0] == group.identity


@pytest.mark.parametrize(
    "group, order",
    [
        (symmetric(3), 6),
        (alternating(3), 3),
        (alternating(4), 12),
        (cyclic(5), 5),
        (dihedral(4), 8),
        (dihedral(5), 10),
        (trivial(4), 1),
    ],
)
def test_named_group_orders(group, order):
    assert group.order == order
    verify_closure(group)


def test_dihedral_needs_three_points():
    with pytest.raises(InvalidArgumentError):
        dihedral(2)


def test_symmetric_orders():
    for n in range(1, 6):
        assert symmetric(n).order == factorial(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_symmetric_cycle_polynomial_is_rising_factorial(n):
    assert cycle_polynomial(symmetric(n)) == rising_factorial(n)


@pytest.mark.slow
@pytest.mark.parametrize("n", [7, 8])
def test_symmetric_cycle_polynomial_is_rising_factorial_large(n):
    assert cycle_polynomial(symmetric(n)) == rising_factorial(n)


def test_cycle_polynomial_examples():
    assert cycle_polynomial(symmetric(3)) == IntPolynomial((0, 2, 3, 1))
    assert cycle_polynomial(trivial(5)) == IntPolynomial.monomial(5)
    assert cycle_polynomial(dihedral(4)) == IntPolynomial((0, 2, 3, 2, 1))


@pytest.mark.parametrize("name", list(POOL))
def test_cycle_polynomial_at_one_is_group_order(name):
    group = POOL[name]
    assert cycle_polynomial(group)(1) == group.order


def test_has_odd_permutation_reads_elements_not_generators():
    group = symmetric(3)
    bare = PermGroup(degree=3, generators=(), elements=group.elements)
    assert has_odd_permutation(bare)
    even_generators = PermGroup(degree=3, generators=alternating(3).generators, elements=group.elements)
    assert has_odd_permutation(even_generators)


def test_direct_product_examples():
    assert direct_product(symmetric(2), symmetric(1)).order == 2
    assert direct_product(symmetric(2), symmetric(1)).degree == 3
    assert direct_product(symmetric(2), symmetric(2)).order == 4
    s3xs2 = direct_product(symmetric(3), symmetric(2))
    assert (s3xs2.order, s3xs2.degree) == (12, 5)
    assert cycle_polynomial(s3xs2) == mul(rising_factorial(3), rising_factorial(2))
    assert list(s3xs2.elements) == sorted(s3xs2.elements)


def test_wreath_product_examples():
    s2_wr_s2 = wreath_product(symmetric(2), symmetric(2))
    assert (s2_wr_s2.order, s2_wr_s2.degree) == (8, 4)
    assert cycle_polynomial(s2_wr_s2) == cycle_polynomial(dihedral(4))

    s3 = symmetric(3)
    assert wreath_product(s3, trivial(1)) == s3

    s2_wr_a2 = wreath_product(symmetric(2), alternating(2))
    assert s2_wr_a2 == direct_product(symmetric(2), symmetric(2))


def test_wreath_product_blocks_are_consecutive():
    group = wreath_product(symmetric(3), cyclic(2))
    blocks = [{0, 1, 2}, {3, 4, 5}]
    for g in group:
        images = [{g(p) for p in block} for block in blocks]
        assert all(image in blocks for image in images)
    verify_closure(group)


def test_wreath_product_generators_generate():
    group = wreath_product(cyclic(3), symmetric(2))
    assert close(group.degree, group.generators).elements == group.elements


@pytest.mark.parametrize("left, right", list(product(POOL, repeat=2)))
def test_direct_product_factorizes_cycle_polynomial(left, right):
    g1, g2 = POOL[left], POOL[right]
    assert cycle_polynomial(direct_product(g1, g2)) == mul(cycle_polynomial(g1), cycle_polynomial(g2))


@pytest.mark.slow
@pytest.mark.parametrize(
    "base, top",
    [(b, t) for b, t in product(POOL, repeat=2) if POOL[b].degree * POOL[t].degree <= 10],
)
def test_wreath_product_cycle_polynomial_formula(base, top):
    g, h = POOL[base], POOL[top]
    expected = wreath_cycle_poly(cycle_polynomial(g), g.order, cycle_polynomial(h), h.degree)
    assert cycle_polynomial(wreath_product(g, h)) == expected


@pytest.mark.parametrize("group", [alternating(3), alternating(4), alternating(5), cyclic(3), cyclic(5), trivial(4)])
def test_even_groups_have_parity_symmetric_cycle_polynomial(group):
    f = cycle_polynomial(group)
    expected = f if group.degree % 2 == 0 else -f
    assert substitute_negate(f) == expected


def test_roots_propagate_to_supergroups():
    for supergroup in [symmetric(4), dihedral(4), alternating(4)]:
        for sub in enumerate_subgroups(supergroup):
            for a in range(1, 6):
                assert lemma3_root_propagates(sub, supergroup, a)


def test_point_stabilizer_examples():
    assert point_stabilizer(symmetric(3), [0]).order == 2
    assert point_stabilizer(dihedral(4), []) == dihedral(4)
    assert point_stabilizer(dihedral(4), [0, 1]).order == 1
    with pytest.raises(InvalidArgumentError):
        point_stabilizer(symmetric(3), [5])


def test_transposition_census_examples():
    assert transposition_census(symmetric(4), complete(4)) == (6, 0)
    leaves = direct_product(symmetric(1), symmetric(2))
    graph = k_star(1, 3)
    t, t0 = transposition_census(leaves, graph)
    assert (t, t0) == (1, 1)
    assert graph.num_edges == t + t0
    assert transposition_census(trivial(3), null(3)) == (0, 0)


def test_conjugate_and_subgroup_helpers():
    sigma = perm(4, [0, 1])
    conjugated = conjugate(cyclic(4), sigma)
    assert conjugated.order == 4
    assert is_subgroup(conjugated, symmetric(4))
    assert not is_subgroup(symmetric(4), cyclic(4))
    verify_closure(conjugated)

    joined = join(cyclic(4), conjugated)
    assert is_subgroup(cyclic(4), joined)
    assert is_subgroup(conjugated, joined)


def test_verify_closure_detects_missing_inverse():
    identity = Permutation.identity(3)
    rotation = perm(3, [0, 1, 2])
    broken = PermGroup(degree=3, generators=(), elements=(identity, rotation))
    with pytest.raises(InvariantViolationError):
        verify_closure(broken)


def test_verify_closure_samples_large_groups():
    verify_closure(symmetric(6), limit=100, samples=500, seed=7)


def test_parse_and_format_cycles():
    g = parse_cycles("(1,3)(2,4)", 4)
    assert g.images == (2, 3, 0, 1)
    assert format_cycles(g) == "(1,3)(2,4)"
    assert parse_cycles("()", 3).is_identity()
    assert format_cycles(Permutation.identity(3)) == "()"
    assert parse_cycles(" (1, 2, 3) ", 3) == perm(3, [0, 1, 2])


@pytest.mark.parametrize("text", ["1,2", "(1,5)", "(1,a)", "(1,2)(2,3)", ""])
def test_parse_cycles_rejects_malformed_text(text):
    with pytest.raises(InvalidArgumentError):
        parse_cycles(text, 4)


def test_group_spec_round_trip():
    group = wreath_product(symmetric(2), cyclic(3))
    assert group_from_spec(group_to_spec(group)) == group
