"""Power families of a rooted tree.

The p-th power family of a rooted tree (T, R) consists of all unions of p
distinct labelled copies of T that agree pointwise on R.  Unrooted vertices
of different copies may be identified arbitrarily; within one copy the map
is injective, which also rules out identifying an unrooted vertex with a
root.  Shared edges are counted once, so members are simple graphs.

Members are enumerated by adding one copy at a time.  A partial union is a
graph whose vertices 0..r-1 are the root images; a new copy sends each
unrooted tree vertex either to an existing non-root vertex (injectively
within the copy) or to a fresh vertex.  Partial unions are deduplicated by
canonical form with roots individually coloured, which is safe because
extensions transport along root-preserving isomorphisms; the one case that
depends on the copy maps themselves, re-adding a copy inside the same
union H, reduces to asking for count_rooted_embeddings(H, T, R) >= level+1.
Final classes are deduplicated with the roots as a single colour class:
roots are distinguishable from unrooted vertices but not from each other.

For a balanced tree every member H satisfies e(H) >= rho_T (|H| - |R|);
check_family_density verifies this exhaustively at desk scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapacityError
from .graphs import (
    Graph,
    canonical_form,
    count_rooted_embeddings,
    list_rooted_embeddings,
)
from .trees import RootedTree, density

MAX_UNROOTED_TOTAL = 14


@dataclass(frozen=True)
class FamilyMember:
    """One member of a power family.

    union_graph has the common root images at vertices 0..r-1.  copies holds
    one image tuple per copy, indexed by the vertices of the original tree.
    """

    union_graph: Graph
    copies: tuple
    roots: tuple

    @property
    def num_vertices(self):
        return self.union_graph.n

    @property
    def num_edges(self):
        return len(self.union_graph.edges)


@dataclass(frozen=True)
class RootedCopySet:
    """A witness: p distinct copies of a tree sharing one root tuple."""

    roots: tuple
    copies: tuple


class _State:
    """Partial union: vertex count, edge set, and the copy maps so far."""

    __slots__ = ("n", "edges", "maps")

    def __init__(self, n, edges, maps):
        self.n = n
        self.edges = edges
        self.maps = maps


def _relabel(tree):
    """Tree with roots renumbered to 0..r-1, unrooted to r..v-1.

    Returns (relabeled_tree, old_to_new).
    """
    roots = tree.root_tuple
    old2new = {}
    for i, r in enumerate(roots):
        old2new[r] = i
    for j, u in enumerate(tree.unrooted):
        old2new[u] = len(roots) + j
    edges = [(old2new[u], old2new[v]) for u, v in tree.graph.edges]
    rt = RootedTree(Graph(tree.num_vertices, edges), range(len(roots)))
    return rt, old2new


def _assignment_plan(rt, r):
    """Per unrooted vertex (ascending), its tree neighbours of smaller id."""
    plan = []
    for u in range(r, rt.graph.n):
        plan.append((u, tuple(w for w in rt.graph.neighbors(u) if w < u)))
    return plan


def _iter_extensions(state, r, plan):
    """Yield (img, nfresh, added) for every way to glue one more copy.

    img is a reused list mapping relabeled tree vertices to union vertices;
    callers must copy it before storing.  added counts image edges not
    already present in the union.  Existing targets are tried in ascending
    order before a fresh vertex, so the order is deterministic.
    """
    a = len(plan)
    img = list(range(r)) + [-1] * a
    used = [False] * state.n
    edges = state.edges

    def rec(j, nfresh, added):
        if j == a:
            yield img, nfresh, added
            return
        u, earlier = plan[j]
        for x in range(r, state.n):
            if used[x]:
                continue
            extra = 0
            for w in earlier:
                y = img[w]
                pair = (x, y) if x < y else (y, x)
                if pair not in edges:
                    extra += 1
            img[u] = x
            used[x] = True
            yield from rec(j + 1, nfresh, added + extra)
            used[x] = False
            img[u] = -1
        img[u] = state.n + nfresh
        yield from rec(j + 1, nfresh + 1, added + len(earlier))
        img[u] = -1

    yield from rec(0, 0, 0)


def _union_of(state, img, nfresh, rt):
    """Edges of the union after gluing the copy img onto the state."""
    edges = set(state.edges)
    for u, v in rt.graph.edges:
        x, y = img[u], img[v]
        edges.add((x, y) if x < y else (y, x))
    return state.n + nfresh, frozenset(edges)


def _distinct_key(n, edges, r):
    """Canonical key with roots individually coloured (generation dedup)."""
    colors = [i + 1 if i < r else 0 for i in range(n)]
    return canonical_form(Graph(n, edges), colors=colors, max_vertices=n)


def _class_key(member_n, edges, r):
    """Canonical key with roots as one colour class (final dedup)."""
    return canonical_form(
        Graph(member_n, edges), roots=range(r), max_vertices=member_n
    )


def _check_capacity(tree, p, max_unrooted):
    a = len(tree.unrooted)
    if p < 1:
        raise ValueError("need at least one copy")
    if p * a > max_unrooted:
        raise CapacityError(
            f"{p} copies with {a} unrooted vertices exceed the bound {max_unrooted}"
        )


def _initial_state(rt):
    n = rt.graph.n
    edges = frozenset(tuple(sorted(e)) for e in rt.graph.edges)
    return _State(n, edges, (tuple(range(n)),))


def _next_generation(states, rt, r, plan, level):
    """All distinct partial unions with level+1 copies."""
    seen = {}
    for state in states:
        identity_seen = False
        for img, nfresh, added in _iter_extensions(state, r, plan):
            if nfresh == 0 and added == 0:
                identity_seen = True
                continue
            n2, edges2 = _union_of(state, img, nfresh, rt)
            key = _distinct_key(n2, edges2, r)
            if key not in seen:
                seen[key] = _State(n2, edges2, state.maps + (tuple(img),))
        if identity_seen:
            g = Graph(state.n, state.edges)
            if count_rooted_embeddings(g, rt, tuple(range(r))) >= level + 1:
                key = _distinct_key(state.n, state.edges, r)
                if key not in seen:
                    extra = next(
                        tuple(e) for e in list_rooted_embeddings(g, rt, tuple(range(r)))
                        if tuple(e) not in state.maps
                    )
                    seen[key] = _State(state.n, state.edges, state.maps + (extra,))
    return list(seen.values())


def _member_from_state(state, tree, old2new):
    copies = tuple(
        tuple(m[old2new[v]] for v in range(tree.num_vertices)) for m in state.maps
    )
    r = len(tree.roots)
    return FamilyMember(
        union_graph=Graph(state.n, state.edges),
        copies=copies,
        roots=tuple(range(r)),
    )


def enumerate_power(tree, p, max_unrooted=MAX_UNROOTED_TOTAL):
    """All isomorphism classes of unions of p distinct copies of the tree.

    Classes are root-coloured: roots are distinguishable from unrooted
    vertices but not labelled individually.  Output is deterministic,
    sorted by (vertices, edges, canonical form).
    """
    _check_capacity(tree, p, max_unrooted)
    rt, old2new = _relabel(tree)
    r = len(tree.roots)
    plan = _assignment_plan(rt, r)
    states = [_initial_state(rt)]
    for level in range(1, p):
        states = _next_generation(states, rt, r, plan, level)
    classes = {}
    for state in states:
        key = _class_key(state.n, state.edges, r)
        if key not in classes:
            classes[key] = state
    members = [_member_from_state(s, tree, old2new) for s in classes.values()]
    members.sort(
        key=lambda m: (m.num_vertices, m.num_edges,
                       _class_key(m.num_vertices, m.union_graph.edges, len(m.roots)))
    )
    return members


def disjoint_power(tree, p):
    """The member whose unrooted parts are pairwise disjoint."""
    if p < 1:
        raise ValueError("need at least one copy")
    rt, old2new = _relabel(tree)
    r = len(tree.roots)
    a = rt.graph.n - r
    edges = []
    maps = []
    for j in range(p):
        base = r + j * a
        m = list(range(r)) + [base + t for t in range(a)]
        maps.append(tuple(m))
        for u, v in rt.graph.edges:
            edges.append((m[u], m[v]))
    copies = tuple(
        tuple(m[old2new[v]] for v in range(tree.num_vertices)) for m in maps
    )
    return FamilyMember(
        union_graph=Graph(r + p * a, edges),
        copies=copies,
        roots=tuple(range(r)),
    )


def contains_member(host, tree, p):
    """Does the host contain some member of the p-th power family?

    Equivalent to: some tuple of |R| distinct vertices carries at least p
    distinct rooted copies of the tree.  Returns (found, witness) where the
    witness holds the root tuple and the first p copies in lexicographic
    order.  Root tuples are scanned lexicographically, so the witness is
    the least one.
    """
    if p < 1:
        raise ValueError("need at least one copy")
    r = len(tree.roots)
    root_degs = [tree.graph.degree(v) for v in tree.root_tuple]
    for tup in _iter_root_tuples(host, root_degs):
        if count_rooted_embeddings(host, tree, tup, limit=p) >= p:
            copies = tuple(list_rooted_embeddings(host, tree, tup)[:p])
            return True, RootedCopySet(roots=tup, copies=copies)
    return False, None


def _iter_root_tuples(host, root_degs):
    """Distinct-vertex tuples with enough degree per slot, lexicographic.

    Tuples skipped here cannot carry any copy, so scanning only these is
    equivalent to scanning all tuples of distinct vertices.
    """
    r = len(root_degs)
    cands = [[v for v in range(host.n) if host.degree(v) >= d] for d in root_degs]
    tup = [-1] * r
    used = set()

    def rec(i):
        if i == r:
            yield tuple(tup)
            return
        for v in cands[i]:
            if v in used:
                continue
            tup[i] = v
            used.add(v)
            yield from rec(i + 1)
            used.remove(v)

    yield from rec(0)


def check_family_density(tree, s, max_unrooted=MAX_UNROOTED_TOTAL):
    """Verify e(H) >= rho_T (|H| - |R|) for every member of T^1 .. T^s.

    Returns (True, None) or (False, violator).  The inequality is
    isomorphism-invariant, so raw gluing patterns are checked directly and
    only surviving generations are deduplicated; the first violator in
    enumeration order is returned.
    """
    _check_capacity(tree, s, max_unrooted)
    rho = density(tree)
    et = tree.num_edges
    at = tree.num_vertices - len(tree.roots)
    rt, old2new = _relabel(tree)
    r = len(tree.roots)
    plan = _assignment_plan(rt, r)
    states = [_initial_state(rt)]
    # T itself always meets the bound with equality; start at two copies.
    # Repeated-copy unions (nfresh == added == 0) collapse to a graph already
    # checked at a lower level, so they are skipped here, and their onward
    # extensions produce only graphs reachable from the lower level too.
    for level in range(1, s):
        grow = level + 1 < s
        seen = {}
        for state in states:
            base_e = len(state.edges)
            for img, nfresh, added in _iter_extensions(state, r, plan):
                if nfresh == 0 and added == 0:
                    continue
                v2 = state.n + nfresh
                e2 = base_e + added
                if e2 * at < et * (v2 - r):
                    n2, edges2 = _union_of(state, img, nfresh, rt)
                    bad = _State(n2, edges2, state.maps + (tuple(img),))
                    return False, _member_from_state(bad, tree, old2new)
                if grow:
                    n2, edges2 = _union_of(state, img, nfresh, rt)
                    key = _distinct_key(n2, edges2, r)
                    if key not in seen:
                        seen[key] = _State(n2, edges2, state.maps + (tuple(img),))
        states = list(seen.values())
    return True, None
