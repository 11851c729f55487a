"""Rooted trees, subset densities, and the explicit balanced family.

A rooted tree is a tree together with an independent set R of roots.  Its
density is rho_T = e(T) / (v(T) - |R|).  For a nonempty set S of unrooted
vertices, rho_S = e(S) / |S| where e(S) counts tree edges with at least one
endpoint in S.  The tree is balanced when rho_S >= rho_T for every such S;
balance is what makes the power family of the tree behave like a single
dense forbidden graph.

balanced_tree(a, b) builds the standard balanced witness with a unrooted
vertices and b edges (density b/a): a path of a vertices carrying rooted
leaves, with one extra rooted leaf per path vertex for every additional
full multiple of a in b.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import CapacityError
from .graphs import Graph


@dataclass(frozen=True)
class RootedTree:
    """A tree Graph plus an independent root set."""

    graph: Graph
    roots: frozenset

    def __init__(self, graph, roots=()):
        object.__setattr__(self, "graph", graph)
        object.__setattr__(self, "roots", frozenset(roots))
        self._validate()

    def _validate(self):
        g = self.graph
        if g.n == 0:
            raise ValueError("tree must have at least one vertex")
        if len(g.edges) != g.n - 1:
            raise ValueError(f"a tree on {g.n} vertices needs {g.n - 1} edges")
        if g.n > 1:
            seen = {0}
            stack = [0]
            while stack:
                v = stack.pop()
                for u in g.neighbors(v):
                    if u not in seen:
                        seen.add(u)
                        stack.append(u)
            if len(seen) != g.n:
                raise ValueError("tree must be connected")
        for r in self.roots:
            if not (0 <= r < g.n):
                raise ValueError(f"root {r} out of range")
        for u, v in g.edges:
            if u in self.roots and v in self.roots:
                raise ValueError(f"roots must be independent, edge ({u},{v})")

    @property
    def num_vertices(self):
        return self.graph.n

    @property
    def num_edges(self):
        return len(self.graph.edges)

    @property
    def unrooted(self):
        """Unrooted vertices, ascending."""
        return tuple(v for v in range(self.graph.n) if v not in self.roots)

    @property
    def root_tuple(self):
        """Roots in ascending order; fixes the root order used everywhere."""
        return tuple(sorted(self.roots))

    def two_coloring(self):
        """Proper 2-colouring of the tree, colour 0 at vertex 0."""
        color = [-1] * self.graph.n
        color[0] = 0
        stack = [0]
        while stack:
            v = stack.pop()
            for u in self.graph.neighbors(v):
                if color[u] < 0:
                    color[u] = 1 - color[v]
                    stack.append(u)
        return tuple(color)

    def __repr__(self):
        return f"RootedTree(v={self.graph.n}, e={len(self.graph.edges)}, roots={sorted(self.roots)})"


@dataclass(frozen=True)
class DensityReport:
    """Outcome of a balance check.

    rho_S and worst_subset describe a subset attaining the minimum subset
    density; worst_subset is the witness when the tree is unbalanced.
    """

    rho_T: Fraction
    rho_S: Fraction
    worst_subset: tuple


def density(tree):
    """rho_T = e(T) / (v(T) - |R|), exact."""
    free = tree.num_vertices - len(tree.roots)
    if free == 0:
        raise ValueError("density undefined when every vertex is rooted")
    return Fraction(tree.num_edges, free)


def subset_density(tree, subset):
    """rho_S for a nonempty set S of unrooted vertices.

    e(S) counts tree edges with at least one endpoint in S.
    """
    s = set(subset)
    if not s:
        raise ValueError("subset must be nonempty")
    for v in s:
        if v in tree.roots:
            raise ValueError(f"subset must avoid roots, got {v}")
        if not (0 <= v < tree.num_vertices):
            raise ValueError(f"vertex {v} out of range")
    hit = sum(1 for u, v in tree.graph.edges if u in s or v in s)
    return Fraction(hit, len(s))


def is_balanced(tree, max_unrooted=24):
    """Exhaustive balance check over all nonempty unrooted subsets.

    Returns (balanced, DensityReport).  The report carries a subset of
    minimum density; when the verdict is False that subset is a witness
    violating rho_S >= rho_T.  Subsets are scanned in bitmask order and the
    first strict minimum is kept, so the witness is deterministic.
    """
    free = tree.unrooted
    if len(free) > max_unrooted:
        raise CapacityError(
            f"balance check limited to {max_unrooted} unrooted vertices, got {len(free)}"
        )
    rho = density(tree)
    # incidence masks: edge j hits unrooted vertex i
    index = {v: i for i, v in enumerate(free)}
    vertex_edges = [0] * len(free)
    for j, (u, v) in enumerate(sorted(tree.graph.edges)):
        if u in index:
            vertex_edges[index[u]] |= 1 << j
        if v in index:
            vertex_edges[index[v]] |= 1 << j
    best = None
    best_mask = 0
    for mask in range(1, 1 << len(free)):
        hit = 0
        m = mask
        size = 0
        while m:
            low = (m & -m).bit_length() - 1
            hit |= vertex_edges[low]
            m &= m - 1
            size += 1
        rho_s = Fraction(bin(hit).count("1"), size)
        if best is None or rho_s < best:
            best = rho_s
            best_mask = mask
    subset = tuple(free[i] for i in range(len(free)) if best_mask >> i & 1)
    report = DensityReport(rho_T=rho, rho_S=best, worst_subset=subset)
    return best >= rho, report


def balanced_tree(a, b):
    """The standard balanced tree with a unrooted vertices and b edges.

    Needs a >= 1 and b >= a - 1.  Base range a-1 <= b < 2a-1: a path
    0..a-1 plus i+1 = b-a+1 rooted leaves at the path positions given by
    the floor spacing rule (for b = a the single leaf sits at position 0;
    for b = a-1 there are no leaves and no roots).  For b >= 2a-1 the tree
    is built recursively from balanced_tree(a, b-a) by hanging one more
    rooted leaf on every unrooted vertex.  Leaf vertices are numbered after
    the path in attachment order, so vertex ids are reproducible.
    """
    if a < 1:
        raise ValueError("need at least one unrooted vertex")
    if b < a - 1:
        raise ValueError(f"no tree with {a} unrooted vertices and only {b} edges")
    edges = [(i, i + 1) for i in range(a - 1)]
    roots = []
    lo = b
    while lo >= 2 * a - 1:
        lo -= a
    # base layer: leaves at positions 1, floor(1 + j*a/i) for 0 < j < i, and a
    i = lo - a
    if i == 0:
        positions = [0]
    elif i > 0:
        positions = [0] + [(j * a) // i for j in range(1, i)] + [a - 1]
    else:
        positions = []
    nxt = a
    for p in positions:
        edges.append((p, nxt))
        roots.append(nxt)
        nxt += 1
    layers = (b - lo) // a
    for _ in range(layers):
        for p in range(a):
            edges.append((p, nxt))
            roots.append(nxt)
            nxt += 1
    return RootedTree(Graph(nxt, edges), roots)


# ---------------------------------------------------------------------------
# text format


def write_tree(tree):
    """Tree text: ``n <count>`` line, edge lines, final ``roots: r1 r2 ...``."""
    lines = [f"n {tree.num_vertices}"]
    lines.extend(f"{u} {v}" for u, v in sorted(tree.graph.edges))
    lines.append("roots: " + " ".join(str(r) for r in tree.root_tuple))
    return "\n".join(lines) + "\n"


def parse_tree(text):
    """Inverse of write_tree."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n "):
        raise ValueError("tree file must start with an 'n <count>' line")
    if not lines[-1].startswith("roots:"):
        raise ValueError("tree file must end with a 'roots:' line")
    n = int(lines[0].split()[1])
    edges = []
    for ln in lines[1:-1]:
        parts = ln.split()
        if len(parts) != 2:
            raise ValueError(f"malformed edge line: {ln!r}")
        edges.append((int(parts[0]), int(parts[1])))
    roots = [int(tok) for tok in lines[-1].split()[1:]]
    return RootedTree(Graph(n, edges), roots)
