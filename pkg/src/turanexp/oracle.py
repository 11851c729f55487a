"""Ground truth at small scale: witness search, exact extremal numbers, fits.

find_power_witness runs the constructive upper-bound argument as an
algorithm: peel the host to a subgraph of large minimum degree, then
pigeonhole rooted tree copies over root tuples.  exact_extremal_number
enumerates all graphs on up to 8 vertices one isomorphism class at a time.
Both exist to cross-check the random construction, so they favour
exhaustiveness over speed.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import log

from .errors import CapacityError
from .graphs import (
    Graph,
    canonical_form,
    count_rooted_embeddings,
    induced_subgraph,
    list_rooted_embeddings,
    peel_min_degree,
)
from .powers import RootedCopySet, _iter_root_tuples
from .trees import density


# ---------------------------------------------------------------------------
# witness search


def _scan_root_tuples(host, tree, p):
    """Lexicographically first root tuple carrying >= p copies, with copies."""
    root_degs = [tree.graph.degree(v) for v in tree.root_tuple]
    for tup in _iter_root_tuples(host, root_degs):
        if count_rooted_embeddings(host, tree, tup, limit=p) >= p:
            copies = tuple(list_rooted_embeddings(host, tree, tup)[:p])
            return RootedCopySet(roots=tup, copies=copies)
    return None


def witness_edge_threshold(tree, n, p):
    """Edge count c*n^(2-1/rho) above which find_power_witness must succeed,
    with c = 2*min(v(T), p)."""
    rho = density(tree)
    c = 2 * min(tree.num_vertices, p)
    return c * n ** float(2 - 1 / rho)


def find_power_witness(host, tree, p):
    """Search for p distinct rooted copies of the tree on one root tuple.

    First peels the host to minimum degree at least half the average degree
    and scans root tuples there (the dense regime, where the peeled part is
    nonempty and carries the copies); if that misses, scans the full host.
    Returns (found, witness); the witness tuple is the lexicographically
    least in whichever graph it was found.
    """
    if not tree.roots:
        raise ValueError("witness search needs at least one root")
    if p < 1:
        raise ValueError("need p >= 1")
    if host.n == 0:
        return False, None
    survivors = peel_min_degree(host, Fraction(host.edge_count, host.n))
    if survivors:
        sub, labels = induced_subgraph(host, survivors)
        hit = _scan_root_tuples(sub, tree, p)
        if hit is not None:
            return True, RootedCopySet(
                roots=tuple(labels[v] for v in hit.roots),
                copies=tuple(tuple(labels[v] for v in c) for c in hit.copies),
            )
        if len(survivors) == host.n:
            return False, None
    hit = _scan_root_tuples(host, tree, p)
    if hit is None:
        return False, None
    return True, hit


# ---------------------------------------------------------------------------
# exact extremal numbers


MAX_EXACT_N = 8


def free_graph_classes(n, is_free):
    """All isomorphism classes of n-vertex graphs passing the predicate.

    Orderly generation: extend every (k-1)-vertex class by one vertex with
    every possible neighbourhood, deduplicate by canonical form, and keep
    only graphs passing the predicate.  The predicate must be closed under
    taking subgraphs (freeness predicates are), otherwise the pruning here
    discards valid extensions.
    """
    if n < 1:
        raise ValueError("need n >= 1")
    if n > MAX_EXACT_N:
        raise CapacityError(f"exhaustive enumeration limited to n <= {MAX_EXACT_N}")
    level = [Graph(1)]
    level = [g for g in level if is_free(g)]
    for k in range(2, n + 1):
        seen = {}
        for g in level:
            for mask in range(1 << (k - 1)):
                edges = list(g.edges)
                for u in range(k - 1):
                    if mask >> u & 1:
                        edges.append((u, k - 1))
                cand = Graph(k, edges)
                key = canonical_form(cand)
                if key in seen or not is_free(cand):
                    continue
                seen[key] = cand
        level = list(seen.values())
    return level


def exact_extremal_number(n, is_free):
    """Maximum edges over n-vertex graphs passing the predicate, with witness.

    Ties are broken by canonical form so the witness is deterministic.
    """
    classes = free_graph_classes(n, is_free)
    if not classes:
        raise ValueError("no graph on n vertices passes the predicate")
    best = min(classes, key=lambda g: (-g.edge_count, canonical_form(g)))
    return best.edge_count, best


def contains_subgraph(host, pattern):
    """Subgraph containment (not induced) by plain backtracking.

    Handles disconnected patterns; intended for small inputs such as the
    disjoint power graph inside oracle witnesses.
    """
    if pattern.edge_count == 0:
        return pattern.n <= host.n
    if pattern.n > host.n or pattern.edge_count > host.edge_count:
        return False
    # component-by-component BFS order; every vertex lists its placed
    # pattern neighbours so each pattern edge is checked exactly once
    order = []
    earlier = []
    placed = set()
    for start in range(pattern.n):
        if start in placed:
            continue
        placed.add(start)
        queue = [start]
        order.append(start)
        earlier.append(())
        while queue:
            v = queue.pop(0)
            for u in pattern.neighbors(v):
                if u not in placed:
                    placed.add(u)
                    queue.append(u)
                    order.append(u)
                    earlier.append(tuple(w for w in pattern.neighbors(u) if w in placed and w != u))

    degs = [pattern.degree(v) for v in order]
    assign = {}
    used = [False] * host.n

    def rec(idx):
        if idx == len(order):
            return True
        v = order[idx]
        prev = earlier[idx]
        if prev:
            sets = [host.neighbor_set(assign[w]) for w in prev]
            candidates = [c for c in sets[0] if all(c in s for s in sets[1:])]
        else:
            candidates = range(host.n)
        for c in candidates:
            if used[c] or host.degree(c) < degs[idx]:
                continue
            assign[v] = c
            used[c] = True
            if rec(idx + 1):
                return True
            used[c] = False
            del assign[v]
        return False

    return rec(0)


# ---------------------------------------------------------------------------
# exponent fitting


@dataclass(frozen=True)
class SlopeFit:
    slope: float
    max_residual: float


def fit_exponent(points):
    """Least-squares slope of log(edges) against log(N).

    Returns the slope and the largest absolute residual of the fit.
    """
    pts = [(n, e) for n, e in points]
    if len(pts) < 3:
        raise ValueError("need at least 3 points")
    if len({n for n, _ in pts}) != len(pts):
        raise ValueError("N values must be distinct")
    if any(n <= 0 or e <= 0 for n, e in pts):
        raise ValueError("points must be positive")
    xs = [log(n) for n, _ in pts]
    ys = [log(e) for _, e in pts]
    mx = sum(xs) / len(xs)
    my = sum(ys) / len(ys)
    sxx = sum((x - mx) ** 2 for x in xs)
    sxy = sum((x - mx) * (y - my) for x, y in zip(xs, ys))
    slope = sxy / sxx
    intercept = my - slope * mx
    resid = max(abs(y - (intercept + slope * x)) for x, y in zip(xs, ys))
    return SlopeFit(slope=slope, max_residual=resid)
