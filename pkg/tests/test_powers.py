"""Power family enumeration, containment, and the density property."""

import random
from fractions import Fraction

import pytest

from turanexp import (
    Graph,
    RootedTree,
    balanced_tree,
    check_family_density,
    contains_member,
    cycle_graph,
    density,
    disjoint_power,
    enumerate_power,
    path_graph,
)
from turanexp.errors import CapacityError

from helpers import brute_isomorphic, has_four_cycle, random_bipartite, validate_copy_set


def rooted_path3():
    return RootedTree(path_graph(4), roots=(0, 3))


def t_12():
    return RootedTree(Graph(3, [(0, 1), (0, 2)]), roots=(1, 2))


def star_two_roots():
    return RootedTree(Graph(4, [(0, 1), (0, 2), (0, 3)]), roots=(1, 2))


def test_enumerate_path3_square():
    members = enumerate_power(rooted_path3(), 2)
    sizes = sorted((m.num_vertices, m.num_edges) for m in members)
    assert len(members) == 4
    assert (6, 6) in sizes and (4, 5) in sizes
    six = [m for m in members if m.num_vertices == 6][0]
    assert brute_isomorphic(six.union_graph, cycle_graph(6))


def test_enumerate_t12_square_is_c4():
    members = enumerate_power(t_12(), 2)
    assert len(members) == 1
    assert brute_isomorphic(members[0].union_graph, cycle_graph(4))


def test_enumerate_power_one_copy():
    t = rooted_path3()
    members = enumerate_power(t, 1)
    assert len(members) == 1
    assert brute_isomorphic(members[0].union_graph, t.graph)


def test_enumerate_members_are_valid_unions():
    t = rooted_path3()
    for m in enumerate_power(t, 2):
        assert len(m.roots) == 2
        assert len(m.copies) == 2
        edges = set()
        for img in m.copies:
            for i, r in enumerate(t.root_tuple):
                assert img[r] == m.roots[i]
            edges |= {tuple(sorted((img[u], img[v]))) for u, v in t.graph.edges}
        assert frozenset(edges) == m.union_graph.edges


def test_enumerate_power_capacity():
    with pytest.raises(CapacityError):
        enumerate_power(rooted_path3(), 8)


def test_contains_member_c6():
    host = cycle_graph(6)
    found, wit = contains_member(host, rooted_path3(), 2)
    assert found
    validate_copy_set(host, rooted_path3(), wit, 2)
    assert not contains_member(host, rooted_path3(), 3)[0]


def test_contains_member_edgeless():
    assert not contains_member(Graph(5), t_12(), 1)[0]


def test_contains_member_matches_c4_scanner():
    rng = random.Random(31)
    for _ in range(25):
        host = random_bipartite(5, 5, rng.randrange(5, 20), rng)
        found, wit = contains_member(host, t_12(), 2)
        assert found == has_four_cycle(host)
        if found:
            validate_copy_set(host, t_12(), wit, 2)


def test_check_family_density_star_violator():
    ok, violator = check_family_density(star_two_roots(), 2)
    assert not ok
    # shared-center double star: e(H) = 4 < (3/2) * (5 - 2)
    assert violator.num_edges == 4
    assert violator.num_vertices == 5
    rho = density(star_two_roots())
    assert violator.num_edges < rho * (violator.num_vertices - 2)


def test_check_family_density_t23():
    ok, violator = check_family_density(balanced_tree(2, 3), 2)
    assert ok and violator is None


def test_check_family_density_single_copy_equality():
    for t in (balanced_tree(1, 2), balanced_tree(2, 3), rooted_path3()):
        ok, _ = check_family_density(t, 1)
        assert ok
        assert t.num_edges == density(t) * (t.num_vertices - len(t.roots))


def test_disjoint_power_c6():
    g = disjoint_power(rooted_path3(), 2)
    assert brute_isomorphic(g.union_graph, cycle_graph(6))


def test_disjoint_power_star_is_complete_bipartite():
    # T_{1,k} star with rooted leaves: disjoint p-th power is K_{k,p}
    star3 = RootedTree(Graph(4, [(0, 1), (0, 2), (0, 3)]), roots=(1, 2, 3))
    g = disjoint_power(star3, 2)
    from turanexp import complete_bipartite

    assert brute_isomorphic(g.union_graph, complete_bipartite(3, 2))


def test_disjoint_power_single():
    t = t_12()
    g = disjoint_power(t, 1)
    assert brute_isomorphic(g.union_graph, t.graph)


def test_member_density_fraction_exact():
    # density comparisons are exact rationals, no float rounding
    t = star_two_roots()
    _, violator = check_family_density(t, 2)
    gap = density(t) * (violator.num_vertices - 2) - violator.num_edges
    assert gap == Fraction(1, 2)
