"""Witness finder, exact extremal numbers, containment, slope fitting."""

import itertools
import math
import random

import pytest

from turanexp import (
    Graph,
    RootedTree,
    balanced_tree,
    complete_bipartite,
    contains_member,
    contains_subgraph,
    cycle_graph,
    exact_extremal_number,
    find_power_witness,
    fit_exponent,
    free_graph_classes,
    iter_all_embeddings,
    min_degree_subgraph,
    path_graph,
    witness_edge_threshold,
)
from turanexp.errors import CapacityError

from helpers import (
    brute_canonical,
    brute_count_embeddings,
    brute_isomorphic,
    has_four_cycle,
    random_graph,
    validate_copy_set,
)


def t_12():
    return balanced_tree(1, 2)


def rooted_path3():
    return RootedTree(path_graph(4), roots=(0, 3))


def c4_free(g):
    return not contains_member(g, t_12(), 2)[0]


# ---------------------------------------------------------------------------
# find_power_witness


def test_witness_on_complete_bipartite():
    host = complete_bipartite(2, 3)
    found, wit = find_power_witness(host, t_12(), 3)
    assert found
    assert wit.roots == (0, 1)  # the two left vertices
    assert sorted(img[0] for img in wit.copies) == [2, 3, 4]
    validate_copy_set(host, t_12(), wit, 3)


def test_witness_not_found_on_c6():
    found, wit = find_power_witness(cycle_graph(6), rooted_path3(), 3)
    assert not found and wit is None


def test_witness_edgeless_host():
    assert not find_power_witness(Graph(6), t_12(), 1)[0]


def test_witness_requires_roots():
    rootless = balanced_tree(3, 2)
    with pytest.raises(ValueError):
        find_power_witness(cycle_graph(6), rootless, 1)
    with pytest.raises(ValueError):
        find_power_witness(cycle_graph(6), t_12(), 0)


def test_witness_lexicographically_least_tuple():
    # both (0,1) and (3,4) support two copies; the scan reports the least
    host = Graph(10, [(0, 2), (1, 2), (0, 5), (1, 5), (3, 6), (4, 6), (3, 7), (4, 7)])
    found, wit = find_power_witness(host, t_12(), 2)
    assert found and wit.roots == (0, 1)


def test_witness_agrees_with_containment():
    rng = random.Random(53)
    for _ in range(20):
        host = random_graph(9, rng.randrange(8, 30), rng)
        for p in (1, 2, 3):
            found, wit = find_power_witness(host, t_12(), p)
            assert found == contains_member(host, t_12(), p)[0]
            if found:
                validate_copy_set(host, t_12(), wit, p)


def test_greedy_degree_bound_below_exact_count():
    # the proof's product-of-degrees bound certifies a lower bound on the
    # exact labelled-copy count in a min-degree-delta subgraph
    for host, tree in ((complete_bipartite(5, 5), rooted_path3()),
                       (complete_bipartite(4, 6), t_12()),
                       (cycle_graph(8), balanced_tree(1, 1))):
        sub = min_degree_subgraph(host, 2)
        delta = min(sub.degree(v) for v in range(sub.n))
        v = tree.num_vertices
        bound = sub.n * math.prod(max(delta - i, 0) for i in range(1, v))
        exact = sum(1 for _ in iter_all_embeddings(sub, tree))
        assert bound <= exact


# ---------------------------------------------------------------------------
# exact extremal numbers


def test_extremal_c4_free_n4():
    value, witness = exact_extremal_number(4, c4_free)
    assert value == 4
    triangle_pendant = Graph(4, [(0, 1), (1, 2), (2, 0), (2, 3)])
    assert brute_isomorphic(witness, triangle_pendant)


def test_extremal_c4_free_n5():
    value, witness = exact_extremal_number(5, c4_free)
    assert value == 6
    assert witness.edge_count == 6
    assert not has_four_cycle(witness)


def test_extremal_matches_labelled_brute_force():
    # all 2^6 labelled graphs on 4 vertices, scanner-filtered
    best = 0
    pairs = list(itertools.combinations(range(4), 2))
    for mask in range(2 ** len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        if not has_four_cycle(Graph(4, edges)):
            best = max(best, len(edges))
    assert exact_extremal_number(4, c4_free)[0] == best


def test_extremal_small_host_cannot_fit_family():
    # members of T^2 for T_{1,2} have 4 vertices; K3 is the full host
    value, witness = exact_extremal_number(3, c4_free)
    assert value == 3
    assert brute_isomorphic(witness, cycle_graph(3))


def test_extremal_antitone_in_family():
    def stricter(g):
        return c4_free(g) and not contains_subgraph(g, cycle_graph(3))

    for n in (4, 5):
        assert exact_extremal_number(n, stricter)[0] <= exact_extremal_number(n, c4_free)[0]


def test_extremal_capacity():
    with pytest.raises(CapacityError):
        exact_extremal_number(9, c4_free)


def test_free_graph_classes_total_counts():
    # with no forbidden graphs this enumerates all graphs up to isomorphism
    counts = [len(free_graph_classes(n, lambda g: True)) for n in range(1, 6)]
    assert counts == [1, 2, 4, 11, 34]


def test_free_graph_classes_respects_predicate():
    classes = free_graph_classes(4, c4_free)
    assert all(not has_four_cycle(g) for g in classes)
    # independent count: labelled enumeration deduped by brute canonical form
    pairs = list(itertools.combinations(range(4), 2))
    want = set()
    for mask in range(2 ** len(pairs)):
        edges = [e for i, e in enumerate(pairs) if mask >> i & 1]
        if not has_four_cycle(Graph(4, edges)):
            want.add(brute_canonical(4, edges))
    assert len(classes) == len(want)


# ---------------------------------------------------------------------------
# containment


def test_contains_subgraph_matches_brute():
    rng = random.Random(71)
    patterns = [
        path_graph(3),
        cycle_graph(4),
        Graph(4, [(0, 1), (2, 3)]),  # disconnected
        Graph(3, [(0, 1), (0, 2)]),
    ]
    for _ in range(25):
        host = random_graph(6, rng.randrange(0, 13), rng)
        for pat in patterns:
            want = brute_count_embeddings(host, pat) > 0
            assert contains_subgraph(host, pat) == want


# ---------------------------------------------------------------------------
# slope fitting


def test_fit_exponent_exact_power_law():
    points = [(n, n ** 1.5) for n in (10, 20, 40, 80)]
    fit = fit_exponent(points)
    assert abs(fit.slope - 1.5) < 1e-9
    assert fit.max_residual < 1e-9


def test_fit_exponent_constant():
    fit = fit_exponent([(10, 7.0), (20, 7.0), (40, 7.0)])
    assert abs(fit.slope) < 1e-12


def test_fit_exponent_validation():
    with pytest.raises(ValueError):
        fit_exponent([(10, 5.0), (20, 9.0)])
    with pytest.raises(ValueError):
        fit_exponent([(10, 5.0), (10, 9.0), (20, 4.0)])
    with pytest.raises(ValueError):
        fit_exponent([(10, 5.0), (20, 0.0), (30, 4.0)])


def test_witness_edge_threshold_scales():
    t = t_12()  # rho = 2, exponent 3/2
    assert witness_edge_threshold(t, 100, 2) == pytest.approx(2 * 2 * 100 ** 1.5)
    assert witness_edge_threshold(t, 100, 5) == pytest.approx(2 * 3 * 100 ** 1.5)
