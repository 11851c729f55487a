"""Random bipartite graphs from vanishing loci, profiling, and pruning.

Both sides of the graph enumerate F_q^b in lexicographic order, N = q^b
vertices per side.  A pair (u, v) is an edge exactly when all `a` sampled
polynomials in the 2b coordinates of (u, v) vanish, so the expected edge
count is q^(2b-a) and the density exponent is 2 - a/b.

The pipeline profiles rooted copies of a balanced tree over all ordered
side-consistent root tuples, picks a count threshold (fixed or via the
gap rule below), removes one vertex from every tuple that exceeds it, and
re-profiles the pruned graph to certify that no surviving tuple carries
more than the threshold number of copies.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import ceil

import numpy as np

from .errors import CapacityError, UnbalancedTreeError
from .fields import (
    MultiPolynomial,
    check_zero_probability_preconditions,
    is_prime,
    sample_polynomial,
)
from .graphs import Graph, iter_all_embeddings
from .powers import contains_member
from .trees import RootedTree, is_balanced

DEGREE_CAP = 8
MAX_SIDE = 4096
EXACT_TUPLE_LIMIT = 10_000_000
SAMPLE_TUPLES = 1_000_000
CROSS_CHECK_SIDE = 128


@dataclass(frozen=True)
class ConstructionParams:
    """Inputs of one construction run.

    The tree supplies a (unrooted vertices), b (edges) and r (roots).  The
    moment order s defaults to 2*b*r and the sampled degree to
    min(s*b, DEGREE_CAP); the untruncated degree s*b is kept in reports.
    threshold None selects the automatic gap rule.
    """

    tree: RootedTree
    q: int
    seed: int = 0
    s: int | None = None
    d: int | None = None
    threshold: int | None = None
    max_side: int = MAX_SIDE

    @property
    def num_unrooted(self):
        return self.tree.num_vertices - len(self.tree.roots)

    @property
    def num_edges(self):
        return self.tree.num_edges

    @property
    def num_roots(self):
        return len(self.tree.roots)

    @property
    def moment_order(self):
        if self.s is not None:
            return self.s
        return 2 * self.num_edges * self.num_roots

    @property
    def degree_full(self):
        return self.moment_order * self.num_edges

    @property
    def degree_used(self):
        if self.d is not None:
            return self.d
        return min(self.degree_full, DEGREE_CAP)

    @property
    def n_side(self):
        return self.q ** self.num_edges

    def validate(self):
        if self.num_roots < 1:
            raise ValueError("construction needs a tree with at least one root")
        if self.num_unrooted < 1:
            raise ValueError("construction needs at least one unrooted vertex")
        if not is_prime(self.q):
            raise ValueError(f"q must be prime, got {self.q}")
        if self.s is not None and self.s < 1:
            raise ValueError("moment order must be positive")
        if self.degree_used < 1:
            raise ValueError("polynomial degree must be positive")
        if self.threshold is not None and self.threshold < 0:
            raise ValueError("threshold must be nonnegative")
        if self.n_side > self.max_side:
            raise CapacityError(
                f"side size {self.n_side} exceeds the capacity {self.max_side}"
            )

    def echo(self):
        """Plain dict of the resolved parameters, for reports."""
        return {
            "a": self.num_unrooted,
            "b": self.num_edges,
            "r": self.num_roots,
            "q": self.q,
            "n_side": self.n_side,
            "s": self.moment_order,
            "d_full": self.degree_full,
            "d_used": self.degree_used,
            "seed": self.seed,
            "threshold_policy": "auto" if self.threshold is None else "fixed",
        }


# ---------------------------------------------------------------------------
# graph construction


def _coordinates(n_side, b, q):
    """Row i = i-th vector of F_q^b in lexicographic order (int64, n x b)."""
    idx = np.arange(n_side, dtype=np.int64)
    cols = [(idx // q ** (b - 1 - k)) % q for k in range(b)]
    return np.stack(cols, axis=1)


def _pattern_columns(coords, patterns, q):
    """Monomial values per vertex: column j = product of coords**patterns[j]."""
    n, b = coords.shape
    tables = []
    for k in range(b):
        top = max(p[k] for p in patterns)
        tab = np.empty((top + 1, n), dtype=np.int64)
        tab[0] = 1
        for e in range(1, top + 1):
            tab[e] = tab[e - 1] * coords[:, k] % q
        tables.append(tab)
    out = np.empty((n, len(patterns)), dtype=np.int64)
    for j, pat in enumerate(patterns):
        col = np.ones(n, dtype=np.int64)
        for k in range(b):
            if pat[k]:
                col = col * tables[k][pat[k]] % q
        out[:, j] = col
    return out


def graph_from_polynomials(polys, b, q):
    """Bipartite graph on two lexicographic copies of F_q^b.

    Vertices 0..N-1 are the u side, N..2N-1 the v side.  (u, v) is an edge
    iff every polynomial vanishes at the concatenated point; variables
    0..b-1 read the u coordinates and b..2b-1 the v coordinates.  Each
    polynomial is evaluated on the whole grid as U @ C @ V.T with the
    monomials split into u and v parts; all products stay below 2^63 for
    q <= 4096.
    """
    n_side = q ** b
    mask = np.ones((n_side, n_side), dtype=bool)
    coords = _coordinates(n_side, b, q)
    for f in polys:
        if f.num_vars != 2 * b:
            raise ValueError(f"polynomial has {f.num_vars} variables, expected {2 * b}")
        if f.modulus != q:
            raise ValueError(f"polynomial modulus {f.modulus} does not match q={q}")
        u_index, v_index = {}, {}
        entries = []
        for exps, c in f.coeffs:
            iu = u_index.setdefault(exps[:b], len(u_index))
            iv = v_index.setdefault(exps[b:], len(v_index))
            entries.append((iu, iv, c))
        if not entries:
            continue  # zero polynomial vanishes everywhere
        cmat = np.zeros((len(u_index), len(v_index)), dtype=np.int64)
        for iu, iv, c in entries:
            cmat[iu, iv] = c
        umat = _pattern_columns(coords, list(u_index), q)
        vmat = _pattern_columns(coords, list(v_index), q)
        left = umat @ cmat % q
        for lo in range(0, n_side, 1024):
            hi = min(lo + 1024, n_side)
            vals = left[lo:hi] @ vmat.T % q
            mask[lo:hi] &= vals == 0
    ii, jj = np.nonzero(mask)
    edges = [(int(u), n_side + int(v)) for u, v in zip(ii, jj)]
    return Graph(2 * n_side, edges, side=[0] * n_side + [1] * n_side)


def sample_system(a, b, q, rng, degree):
    """a independent uniform polynomials in 2b variables of degree <= degree."""
    return [sample_polynomial(2 * b, degree, q, rng) for _ in range(a)]


def random_zero_graph(a, b, q, seed, degree=DEGREE_CAP, max_side=MAX_SIDE):
    """Sample the polynomial system from the seed and build the graph."""
    if a < 0 or b < 1:
        raise ValueError("need a >= 0 polynomials and b >= 1 coordinates")
    if not is_prime(q):
        raise ValueError(f"q must be prime, got {q}")
    if q ** b > max_side:
        raise CapacityError(f"side size {q ** b} exceeds the capacity {max_side}")
    rng = random.Random(seed)
    return graph_from_polynomials(sample_system(a, b, q, rng, degree), b, q)


def build_random_graph(params):
    """Construction graph for the given parameters; returns (graph, system)."""
    params.validate()
    rng = random.Random(params.seed)
    polys = sample_system(
        params.num_unrooted, params.num_edges, params.q, rng, params.degree_used
    )
    return graph_from_polynomials(polys, params.num_edges, params.q), polys


# ---------------------------------------------------------------------------
# rooted copy profile


@dataclass(frozen=True)
class CopyProfile:
    """Rooted copy counts across ordered side-consistent root tuples.

    counts maps every tuple with at least one copy to its exact count (it
    comes from a full enumeration of embeddings, so it is exact even when
    the histogram is sampled).  histogram maps count -> number of tuples;
    when sampled is true it covers sample_size random tuples instead of
    all total_tuples.
    """

    counts: dict
    total_tuples: int
    histogram: dict
    sampled: bool
    sample_size: int | None

    @property
    def max_count(self):
        return max(self.counts.values(), default=0)

    def moment(self, s):
        """Exact s-th moment (1/#tuples) * sum of count^s over all tuples."""
        if self.total_tuples == 0:
            raise ValueError("profile has no tuples")
        return Fraction(sum(c ** s for c in self.counts.values()), self.total_tuples)


def _perm(n, k):
    out = 1
    for i in range(k):
        out *= n - i
    return out


def rooted_copy_profile(graph, tree, rng=None,
                        exact_limit=EXACT_TUPLE_LIMIT, sample_size=SAMPLE_TUPLES):
    """Count rooted copies of the tree per ordered root tuple.

    Tuples are side-consistent: roots in the same colour class of the tree
    land on the same side of the bipartite host, roots in different classes
    on opposite sides, with both orientations allowed.  All embeddings are
    enumerated once and bucketed by root image, so nonzero counts are exact.
    When the tuple space exceeds exact_limit the histogram is taken over
    sample_size distinct random tuples (the zero bucket is what is being
    estimated; nonzero counts stay exact).
    """
    if graph.side is None:
        raise ValueError("profile needs a bipartite host")
    root_order = tree.root_tuple
    if not root_order:
        raise ValueError("profile needs a rooted tree")
    color = tree.two_coloring()
    rc = [color[v] for v in root_order]
    k0 = rc.count(0)
    k1 = len(rc) - k0
    sides = (
        [v for v in range(graph.n) if graph.side[v] == 0],
        [v for v in range(graph.n) if graph.side[v] == 1],
    )
    n0, n1 = len(sides[0]), len(sides[1])
    # orientation o sends colour class c to side c ^ o; the two orientations
    # yield disjoint tuple sets
    weights = (_perm(n0, k0) * _perm(n1, k1), _perm(n1, k0) * _perm(n0, k1))
    total = weights[0] + weights[1]

    counts = {}
    for emb in iter_all_embeddings(graph, tree):
        key = tuple(emb[v] for v in root_order)
        counts[key] = counts.get(key, 0) + 1

    if total <= exact_limit:
        histogram = {}
        for c in counts.values():
            histogram[c] = histogram.get(c, 0) + 1
        zeros = total - len(counts)
        if zeros:
            histogram[0] = histogram.get(0, 0) + zeros
        return CopyProfile(counts, total, histogram, False, None)

    if rng is None:
        rng = random.Random(0)
    seen = set()
    histogram = {}
    while len(seen) < sample_size:
        o = 0 if rng.randrange(total) < weights[0] else 1
        # side s receives the roots of colour class s ^ o
        picks = (
            rng.sample(sides[0], (k0, k1)[o]),
            rng.sample(sides[1], (k1, k0)[o]),
        )
        its = (iter(picks[0]), iter(picks[1]))
        tup = tuple(next(its[rc[i] ^ o]) for i in range(len(rc)))
        if tup in seen:
            continue
        seen.add(tup)
        c = counts.get(tup, 0)
        histogram[c] = histogram.get(c, 0) + 1
    return CopyProfile(counts, total, histogram, True, sample_size)


# ---------------------------------------------------------------------------
# thresholds and pruning


@dataclass(frozen=True)
class ThresholdDecision:
    """Chosen copy-count threshold and the rule that produced it."""

    c: int
    branch: str  # fixed | gap | fallback


def auto_threshold(profile, q):
    """Threshold from the count dichotomy, else a percentile fallback.

    The expected shape has every count either small or at least q/2.  Take
    c = the largest count below q/2; if some integer lies strictly between
    c and q/2 the dichotomy is visible and c is returned (gap branch).
    Otherwise the counts fill the gap (small-q noise) and the fallback
    returns the 99th-percentile count, nearest rank, over the histogram.
    """
    if profile.total_tuples == 0:
        raise ValueError("profile has no tuples")
    observed = set(profile.counts.values())
    if profile.total_tuples > len(profile.counts):
        observed.add(0)
    below = [c for c in observed if 2 * c < q]
    c0 = max(below, default=0)
    if 2 * (c0 + 1) < q:
        return ThresholdDecision(c0, "gap")
    ranked = sorted(profile.histogram.items())
    total = sum(k for _, k in ranked)
    rank = max(1, ceil(0.99 * total))
    running = 0
    for value, k in ranked:
        running += k
        if running >= rank:
            return ThresholdDecision(value, "fallback")
    return ThresholdDecision(ranked[-1][0], "fallback")


def detect_bad_sequences(profile, c):
    """Root tuples carrying more than c copies, sorted."""
    if c < 0:
        raise ValueError("threshold must be nonnegative")
    return sorted(t for t, k in profile.counts.items() if k > c)


def prune(graph, bad):
    """Delete one vertex per bad tuple; returns (pruned graph, removed list).

    Tuples are visited in sorted order; a tuple whose vertices all survive
    with positive degree loses its lowest-indexed vertex.  A tuple already
    damaged by an earlier removal, or containing an isolated vertex, can
    carry no further copies (every root has degree >= 1 in the tree) and is
    skipped.  Removed vertices stay in place as isolated vertices, so vertex
    numbering is preserved and a second run with the same list removes
    nothing.
    """
    alive = [True] * graph.n
    live_deg = [graph.degree(v) for v in range(graph.n)]
    removed = []
    for tup in sorted(bad):
        if all(alive[v] and live_deg[v] > 0 for v in tup):
            victim = min(tup)
            alive[victim] = False
            removed.append(victim)
            for u in graph.neighbors(victim):
                if alive[u]:
                    live_deg[u] -= 1
            live_deg[victim] = 0
    edges = [e for e in graph.edges if alive[e[0]] and alive[e[1]]]
    return Graph(graph.n, edges, side=graph.side), sorted(removed)


# ---------------------------------------------------------------------------
# pipeline


@dataclass(frozen=True)
class ConstructionReport:
    """Everything reproducible about one construction run."""

    params: dict
    edge_count: int
    expected_edges: Fraction
    copy_profile: dict
    profile_total_tuples: int
    profile_sampled: bool
    threshold: int
    threshold_branch: str
    bad_sequences: int
    removed_vertices: int
    final_edge_count: int
    copy_profile_after: dict
    certified_p: int
    pruning_sound: bool
    cross_checked: bool
    cross_check_ok: bool | None
    zero_prob_m: int
    zero_prob_ok: bool
    polynomials: tuple


@dataclass(frozen=True)
class PipelineResult:
    report: ConstructionReport
    graph: Graph
    pruned: Graph


def run_pipeline(params):
    """Build, profile, prune and certify one construction run.

    Rejects unbalanced trees (the moment bound behind the construction
    needs the family density inequality, which needs balance) with the
    violating subset attached to the error.
    """
    params.validate()
    tree = params.tree
    balanced, rep = is_balanced(tree)
    if not balanced:
        raise UnbalancedTreeError(
            f"tree is unbalanced: subset {rep.worst_subset} has density "
            f"{rep.rho_S} < {rep.rho_T}",
            witness=rep.worst_subset,
        )

    graph, polys = build_random_graph(params)
    profile = rooted_copy_profile(
        graph, tree, rng=random.Random(params.seed + 1_000_003)
    )
    if params.threshold is not None:
        decision = ThresholdDecision(params.threshold, "fixed")
    else:
        decision = auto_threshold(profile, params.q)

    bad = detect_bad_sequences(profile, decision.c)
    pruned, removed = prune(graph, bad)
    after = rooted_copy_profile(
        pruned, tree, rng=random.Random(params.seed + 2_000_003)
    )
    certified_p = after.max_count + 1
    max_degree = max((graph.degree(v) for v in range(graph.n)), default=0)
    assert pruned.edge_count >= graph.edge_count - len(removed) * max_degree

    cross_checked = params.n_side <= CROSS_CHECK_SIDE
    cross_check_ok = None
    if cross_checked:
        found, _ = contains_member(pruned, tree, decision.c + 1)
        cross_check_ok = not found

    m = params.moment_order * tree.num_vertices
    report = ConstructionReport(
        params=params.echo(),
        edge_count=graph.edge_count,
        expected_edges=Fraction(params.q) ** (2 * params.num_edges - params.num_unrooted),
        copy_profile=profile.histogram,
        profile_total_tuples=profile.total_tuples,
        profile_sampled=profile.sampled,
        threshold=decision.c,
        threshold_branch=decision.branch,
        bad_sequences=len(bad),
        removed_vertices=len(removed),
        final_edge_count=pruned.edge_count,
        copy_profile_after=after.histogram,
        certified_p=certified_p,
        pruning_sound=after.max_count <= decision.c,
        cross_checked=cross_checked,
        cross_check_ok=cross_check_ok,
        zero_prob_m=m,
        zero_prob_ok=check_zero_probability_preconditions(params.q, m, params.degree_used),
        polynomials=tuple(f.to_json_dict() for f in polys),
    )
    return PipelineResult(report, graph, pruned)


# ---------------------------------------------------------------------------
# scaling experiment


@dataclass(frozen=True)
class ExperimentRow:
    q: int
    n_side: int
    mean_edges: float
    expected_edges: Fraction


@dataclass(frozen=True)
class ExperimentResult:
    """Mean edge counts per q and the fitted log-log slope.

    Means are taken over the raw constructed graphs, before any pruning:
    the expected count q^(2b-a) refers to the raw graph, and the slope of
    the density exponent is a statement about that ensemble.
    """

    a: int
    b: int
    degree: int
    num_seeds: int
    seed_base: int
    rows: tuple
    slope: float
    max_residual: float


def run_scaling_experiment(a, b, q_list, num_seeds, seed=0,
                           degree=DEGREE_CAP, max_side=MAX_SIDE):
    """Mean edge counts over seeds for each q, plus a slope fit vs N."""
    from .oracle import fit_exponent

    q_list = list(q_list)
    if len(set(q_list)) != len(q_list):
        raise ValueError("q values must be distinct")
    if num_seeds < 1:
        raise ValueError("need at least one seed")
    rows = []
    for q in q_list:
        edge_counts = [
            random_zero_graph(a, b, q, seed + i, degree=degree, max_side=max_side).edge_count
            for i in range(num_seeds)
        ]
        rows.append(ExperimentRow(
            q=q,
            n_side=q ** b,
            mean_edges=sum(edge_counts) / num_seeds,
            expected_edges=Fraction(q) ** (2 * b - a),
        ))
    fit = fit_exponent([(row.n_side, row.mean_edges) for row in rows])
    return ExperimentResult(
        a=a, b=b, degree=degree, num_seeds=num_seeds, seed_base=seed,
        rows=tuple(rows), slope=fit.slope, max_residual=fit.max_residual,
    )
