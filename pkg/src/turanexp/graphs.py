"""Small immutable graphs and rooted embedding search.

Vertices are integers 0..n-1.  Edges are unordered pairs stored as sorted
tuples, at most one per pair, no loops.  An optional bipartition tags each
vertex with side 0 or 1; when present every edge must cross sides.

The embedding routines take a rooted tree pattern (any object with a
``graph`` attribute and a ``roots`` vertex set, see trees.RootedTree) and
search for injective edge-preserving maps into a host graph.  Root images
are pinned: the i-th entry of the ``roots`` argument is the image of the
i-th root of the pattern in ascending vertex order.  Patterns are extended
one vertex at a time along a breadth-first order starting from the roots,
so every pattern edge is checked exactly once and candidates are always
neighbours of an already-placed vertex.
"""

from __future__ import annotations

import heapq
from collections import deque

from .errors import CapacityError


class Graph:
    """Immutable undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "edges", "side", "_nbr_sets", "_nbr_sorted", "_hash")

    def __init__(self, n, edges=(), side=None):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        eset = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            eset.add((u, v) if u < v else (v, u))
        if side is not None:
            side = tuple(side)
            if len(side) != n:
                raise ValueError("bipartition length must equal vertex count")
            if any(s not in (0, 1) for s in side):
                raise ValueError("bipartition tags must be 0 or 1")
            for u, v in eset:
                if side[u] == side[v]:
                    raise ValueError(f"edge ({u},{v}) does not cross the bipartition")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "edges", frozenset(eset))
        object.__setattr__(self, "side", side)
        nbrs = [set() for _ in range(n)]
        for u, v in eset:
            nbrs[u].add(v)
            nbrs[v].add(u)
        object.__setattr__(self, "_nbr_sets", tuple(frozenset(s) for s in nbrs))
        object.__setattr__(self, "_nbr_sorted", tuple(tuple(sorted(s)) for s in nbrs))
        object.__setattr__(self, "_hash", hash((n, self.edges, side)))

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_count(self):
        return len(self.edges)

    def neighbors(self, v):
        """Sorted tuple of neighbours of v."""
        return self._nbr_sorted[v]

    def neighbor_set(self, v):
        return self._nbr_sets[v]

    def degree(self, v):
        return len(self._nbr_sets[v])

    def has_edge(self, u, v):
        return v in self._nbr_sets[u]

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges and self.side == other.side

    def __hash__(self):
        return self._hash

    def __repr__(self):
        tag = "" if self.side is None else ", bipartite"
        return f"Graph(n={self.n}, edges={len(self.edges)}{tag})"


def cycle_graph(n):
    """Cycle on n >= 3 vertices, 0-1-2-..-(n-1)-0."""
    if n < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n):
    """Path on n vertices, 0-1-..-(n-1)."""
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def complete_bipartite(s, t):
    """K_{s,t} with left side 0..s-1, right side s..s+t-1, tagged."""
    edges = [(i, s + j) for i in range(s) for j in range(t)]
    return Graph(s + t, edges, side=[0] * s + [1] * t)


# ---------------------------------------------------------------------------
# embedding search


def _root_extension_plan(tree):
    """BFS order from the roots; each later vertex lists its placed neighbours.

    Returns (sorted_roots, steps) where steps is a list of
    (tree_vertex, earlier_neighbour_tree_vertices) covering every non-root
    vertex.  With no roots the order starts at vertex 0 and the first step
    has an empty neighbour list.
    """
    tg = tree.graph
    roots = sorted(tree.roots)
    order = list(roots) if roots else []
    placed = set(order)
    queue = deque(order)
    if not roots:
        order.append(0)
        placed.add(0)
        queue.append(0)
    steps = []
    head = order[len(roots):]
    for v in head:
        steps.append((v, ()))
    while queue:
        v = queue.popleft()
        for u in tg.neighbors(v):
            if u not in placed:
                placed.add(u)
                queue.append(u)
                earlier = tuple(w for w in tg.neighbors(u) if w in placed and w != u)
                # on a tree all placed neighbours are genuinely earlier
                steps.append((u, earlier))
    if len(placed) != tg.n:
        raise ValueError("pattern is not connected")
    return roots, steps


def _extend(host, steps, assign, used, idx, limit, out, count):
    """Backtracking core.  Returns the updated embedding count."""
    if idx == len(steps):
        if out is not None:
            out.append(tuple(assign))
        return count + 1
    v, earlier = steps[idx]
    if not earlier:
        candidates = range(host.n)
    elif len(earlier) == 1:
        candidates = host.neighbors(assign[earlier[0]])
    else:
        first, *rest = earlier
        sets = [host.neighbor_set(assign[w]) for w in rest]
        candidates = [
            c for c in host.neighbors(assign[first])
            if all(c in s for s in sets)
        ]
    for c in candidates:
        if used[c]:
            continue
        assign[v] = c
        used[c] = True
        count = _extend(host, steps, assign, used, idx + 1, limit, out, count)
        used[c] = False
        assign[v] = -1
        if limit is not None and count >= limit:
            return count
    return count


def _prepare_roots(host, tree, roots, plan_roots):
    roots = tuple(roots)
    if len(roots) != len(plan_roots):
        raise ValueError(f"expected {len(plan_roots)} root images, got {len(roots)}")
    if len(set(roots)) != len(roots):
        raise ValueError("root images must be distinct")
    for w in roots:
        if not (0 <= w < host.n):
            raise ValueError(f"root image {w} out of range")
    assign = [-1] * tree.graph.n
    used = [False] * host.n
    for rv, w in zip(plan_roots, roots):
        assign[rv] = w
        used[w] = True
    return assign, used


def count_rooted_embeddings(host, tree, roots, limit=None):
    """Number of injective edge-preserving maps of ``tree`` into ``host``.

    ``roots`` pins the image of each pattern root (ascending root order).
    ``limit`` stops the count early once reached; the return value is then
    ``limit`` rather than the full count.
    """
    plan_roots, steps = _root_extension_plan(tree)
    assign, used = _prepare_roots(host, tree, roots, plan_roots)
    return _extend(host, steps, assign, used, 0, limit, None, 0)


def list_rooted_embeddings(host, tree, roots):
    """All embeddings as vertex-image tuples, lexicographically sorted.

    Entry i of each tuple is the host image of pattern vertex i.
    """
    plan_roots, steps = _root_extension_plan(tree)
    assign, used = _prepare_roots(host, tree, roots, plan_roots)
    out = []
    _extend(host, steps, assign, used, 0, None, out, 0)
    out.sort()
    return out


def _single_source_plan(tree):
    """BFS order from one vertex; every later vertex has one placed parent."""
    tg = getattr(tree, "graph", tree)
    roots = getattr(tree, "roots", ())
    if len(tg.edges) != tg.n - 1:
        raise ValueError("pattern must be a tree")
    start = min(roots) if roots else 0
    order = [start]
    placed = {start}
    queue = deque(order)
    steps = [(start, ())]
    while queue:
        v = queue.popleft()
        for u in tg.neighbors(v):
            if u not in placed:
                placed.add(u)
                queue.append(u)
                steps.append((u, (v,)))
    if len(placed) != tg.n:
        raise ValueError("pattern is not connected")
    return steps


def iter_all_embeddings(host, tree, cap=None):
    """Yield every embedding of ``tree`` into ``host`` over all root placements.

    ``tree`` may be a RootedTree or a bare tree-shaped Graph.  Yields
    vertex-image tuples (entry i = image of pattern vertex i) in a
    deterministic order.  ``cap`` bounds the number of embeddings produced;
    exceeding it raises CapacityError.
    """
    steps = _single_source_plan(tree)
    assign = [-1] * len(steps)
    used = [False] * host.n
    produced = 0

    def rec(idx):
        nonlocal produced
        v, earlier = steps[idx]
        candidates = host.neighbors(assign[earlier[0]]) if earlier else range(host.n)
        last = idx + 1 == len(steps)
        for c in candidates:
            if used[c]:
                continue
            assign[v] = c
            if last:
                produced += 1
                if cap is not None and produced > cap:
                    raise CapacityError(f"more than {cap} embeddings")
                yield tuple(assign)
            else:
                used[c] = True
                yield from rec(idx + 1)
                used[c] = False
            assign[v] = -1

    yield from rec(0)


# ---------------------------------------------------------------------------
# degree peeling


def peel_min_degree(graph, threshold):
    """Survivors after repeatedly deleting vertices of degree < threshold.

    The worklist pops the lowest-index deletable vertex first; the final
    set is independent of that order.
    """
    deg = [graph.degree(v) for v in range(graph.n)]
    alive = [True] * graph.n
    heap = [v for v in range(graph.n) if deg[v] < threshold]
    heapq.heapify(heap)
    while heap:
        v = heapq.heappop(heap)
        if not alive[v] or deg[v] >= threshold:
            continue
        alive[v] = False
        for u in graph.neighbors(v):
            if alive[u]:
                deg[u] -= 1
                if deg[u] < threshold:
                    heapq.heappush(heap, u)
    return [v for v in range(graph.n) if alive[v]]


def induced_subgraph(graph, vertices):
    """Induced subgraph relabelled to 0..k-1.

    Returns (subgraph, labels) where labels[new] = old vertex id.
    """
    labels = sorted(set(vertices))
    index = {old: new for new, old in enumerate(labels)}
    edges = [
        (index[u], index[v]) for u, v in graph.edges
        if u in index and v in index
    ]
    side = None if graph.side is None else [graph.side[v] for v in labels]
    return Graph(len(labels), edges, side=side), labels


def min_degree_subgraph(graph, threshold):
    """Largest induced subgraph with all degrees >= threshold (may be empty)."""
    sub, _ = induced_subgraph(graph, peel_min_degree(graph, threshold))
    return sub


# ---------------------------------------------------------------------------
# canonical form


def _refine_colors(n, nbr_sets, colors):
    """1-dimensional colour refinement; returns stable per-vertex class ids."""
    ids = list(colors)
    while True:
        sigs = [
            (ids[v], tuple(sorted(ids[u] for u in nbr_sets[v])))
            for v in range(n)
        ]
        ranking = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new_ids = [ranking[sigs[v]] for v in range(n)]
        if new_ids == ids:
            return ids
        ids = new_ids


def canonical_form(graph, roots=None, colors=None, max_vertices=16):
    """Canonical bytes; equal iff the (root-coloured) graphs are isomorphic.

    ``roots`` marks a set of vertices as one colour class.  ``colors`` gives
    full per-vertex integer colours instead (takes precedence).  The form is
    the minimum adjacency encoding over vertex orders compatible with colour
    refinement, so it is exact but only intended for small graphs; sizes
    above ``max_vertices`` raise CapacityError.
    """
    n = graph.n
    if n > max_vertices:
        raise CapacityError(f"canonical form limited to {max_vertices} vertices, got {n}")
    if colors is not None:
        init = list(colors)
        if len(init) != n:
            raise ValueError("colour list length must equal vertex count")
    else:
        init = [0] * n
        for r in roots or ():
            init[r] = 1
    if n == 0:
        return b"0||"
    nbr_sets = graph._nbr_sets
    ids = _refine_colors(n, nbr_sets, init)
    cells = {}
    for v in range(n):
        cells.setdefault(ids[v], []).append(v)
    cell_order = sorted(cells)
    members = [cells[c] for c in cell_order]
    # initial colour is constant on every refined cell
    header = ";".join(f"{len(cells[c])},{init[cells[c][0]]}" for c in cell_order)
    cell_at = []
    for i, ms in enumerate(members):
        cell_at.extend([i] * len(ms))

    order = [-1] * n
    rows = [0] * n
    used = [False] * n
    best = None
    gen = 0

    def place(pos, state):
        # state 0: rows[0:pos] equals best prefix, 1: strictly below it
        nonlocal best, gen
        if pos == n:
            if best is None or state == 1:
                best = rows[:]
                gen += 1
            return
        my_gen = gen
        st = state
        for v in members[cell_at[pos]]:
            if used[v]:
                continue
            if gen != my_gen and st == 1:
                # a new best shares our prefix now, downgrade to equality
                st = 0
                my_gen = gen
            row = 0
            nbr = nbr_sets[v]
            for j in range(pos):
                row = (row << 1) | (1 if order[j] in nbr else 0)
            if best is not None and st == 0:
                if row > best[pos]:
                    continue
                nxt = 1 if row < best[pos] else 0
            else:
                nxt = st
            order[pos] = v
            rows[pos] = row
            used[v] = True
            place(pos + 1, nxt)
            used[v] = False
            order[pos] = -1
        return

    place(0, 0)
    body = ",".join(str(r) for r in best)
    return f"{n}|{header}|{body}".encode()


# ---------------------------------------------------------------------------
# text formats


def write_edge_list(graph):
    """Edge-list text: first line ``n <count>``, then one ``u v`` line per edge."""
    lines = [f"n {graph.n}"]
    lines.extend(f"{u} {v}" for u, v in sorted(graph.edges))
    return "\n".join(lines) + "\n"


def parse_edge_list(text):
    """Inverse of write_edge_list.  The bipartition tag is not stored."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("edge list must start with an 'n <count>' line")
    try:
        n = int(lines[0].split()[1])
    except (IndexError, ValueError) as exc:
        raise ValueError("malformed vertex count line") from exc
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return Graph(n, edges)


def to_dot(graph, roots=()):
    """GraphViz text; root vertices are drawn filled."""
    roots = set(roots)
    lines = ["graph G {"]
    for v in range(graph.n):
        style = ' [style=filled, fillcolor=gray]' if v in roots else ""
        lines.append(f"  {v}{style};")
    for u, v in sorted(graph.edges):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
