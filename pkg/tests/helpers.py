"""Independent brute-force oracles used to cross-check the library.

Nothing here calls back into turanexp beyond the plain Graph container.
Everything is permutation scans, term-by-term arithmetic, and leaf-grown
tree enumeration: slow on purpose, only meant for tiny inputs.
"""

import heapq
import itertools
from fractions import Fraction

from turanexp import Graph


# ---------------------------------------------------------------------------
# embeddings and isomorphism


def brute_rooted_embeddings(host, tree, roots):
    """All injective maps of the tree into the host hitting the root images."""
    found = []
    for perm in itertools.permutations(range(host.n), tree.graph.n):
        if any(perm[v] != roots[i] for i, v in enumerate(tree.roots)):
            continue
        if all(host.has_edge(perm[u], perm[v]) for u, v in tree.graph.edges):
            found.append(perm)
    return found


def brute_count_embeddings(host, pattern):
    """Number of injective edge-preserving maps of pattern into host."""
    count = 0
    for perm in itertools.permutations(range(host.n), pattern.n):
        if all(host.has_edge(perm[u], perm[v]) for u, v in pattern.edges):
            count += 1
    return count


def brute_isomorphic(g, h):
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    for perm in itertools.permutations(range(g.n)):
        if all(h.has_edge(perm[u], perm[v]) for u, v in g.edges):
            return True
    return False


def brute_canonical(n, edges, roots=()):
    """Lexicographically least relabelling of (edge set, root set)."""
    root_set = set(roots)
    best = None
    for perm in itertools.permutations(range(n)):
        e = tuple(sorted(tuple(sorted((perm[u], perm[v]))) for u, v in edges))
        r = tuple(sorted(perm[v] for v in root_set))
        key = (e, r)
        if best is None or key < best:
            best = key
    return best


# ---------------------------------------------------------------------------
# four-cycle scanner (independent pruning certifier)


def max_common_neighbors(graph):
    """Largest number of common neighbors over all vertex pairs."""
    best = 0
    for u in range(graph.n):
        nu = graph.neighbor_set(u)
        for v in range(u + 1, graph.n):
            best = max(best, len(nu & graph.neighbor_set(v)))
    return best


def has_four_cycle(graph):
    # a C4 is exactly a pair of vertices with two common neighbors
    return max_common_neighbors(graph) >= 2


# ---------------------------------------------------------------------------
# polynomial evaluation


def poly_eval_naive(coeffs, point, q):
    """Term-by-term evaluation of [(exps, coef), ...] at point, mod q."""
    total = 0
    for exps, coef in coeffs:
        term = coef
        for x, e in zip(point, exps):
            term = term * pow(x, e, q) % q
        total = (total + term) % q
    return total


# ---------------------------------------------------------------------------
# rooted-tree enumeration


def all_trees(max_v):
    """One labelled representative per tree isomorphism class, v <= max_v.

    Grown level by level: every tree on n vertices arises by attaching a
    leaf to some tree on n - 1 vertices, so the sweep is exhaustive.
    """
    levels = {1: [(1, ())]}
    for n in range(2, max_v + 1):
        seen = {}
        for _, edges in levels[n - 1]:
            for v in range(n - 1):
                cand = tuple(sorted(edges + ((v, n - 1),)))
                key = brute_canonical(n, cand)
                if key not in seen:
                    seen[key] = (n, cand)
        levels[n] = [seen[k] for k in sorted(seen)]
    return [t for n in range(1, max_v + 1) for t in levels[n]]


def rooted_configs(max_v):
    """All (n, edges, roots) with independent roots, 1 <= |R| <= n - 1.

    Deduplicated up to isomorphisms that preserve the root set.
    """
    configs = []
    seen = set()
    for n, edges in all_trees(max_v):
        if n < 2:
            continue
        for k in range(1, n):
            for roots in itertools.combinations(range(n), k):
                rs = set(roots)
                if any(u in rs and v in rs for u, v in edges):
                    continue
                key = brute_canonical(n, edges, roots)
                if key in seen:
                    continue
                seen.add(key)
                configs.append((n, edges, roots))
    return configs


def brute_balanced(n, edges, roots):
    """Direct subset scan of the balance condition with exact rationals."""
    unrooted = [v for v in range(n) if v not in set(roots)]
    rho = Fraction(len(edges), len(unrooted))
    for k in range(1, len(unrooted) + 1):
        for sub in itertools.combinations(unrooted, k):
            s = set(sub)
            touched = sum(1 for u, v in edges if u in s or v in s)
            if Fraction(touched, k) < rho:
                return False
    return True


# ---------------------------------------------------------------------------
# random hosts and witness validation


def random_graph(n, m, rng):
    """Uniform graph with exactly m edges."""
    pairs = list(itertools.combinations(range(n), 2))
    return Graph(n, rng.sample(pairs, m))


def random_bipartite(n0, n1, m, rng):
    pairs = [(u, n0 + v) for u in range(n0) for v in range(n1)]
    side = [0] * n0 + [1] * n1
    return Graph(n0 + n1, rng.sample(pairs, m), side=side)


def validate_copy_set(host, tree, witness, p):
    """Re-check a witness: p distinct embeddings sharing the root images."""
    assert len(witness.copies) == p
    assert len(set(witness.copies)) == p
    for img in witness.copies:
        assert len(set(img)) == tree.graph.n
        for i, r in enumerate(tree.root_tuple):
            assert img[r] == witness.roots[i]
        for u, v in tree.graph.edges:
            assert host.has_edge(img[u], img[v])
