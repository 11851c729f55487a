"""Figures rendered next to the delimited outputs of the CLI."""

from __future__ import annotations

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402  (backend must be set first)


def plot_scaling(result, path):
    """Log-log mean edges vs N with the fitted and reference slopes."""
    ns = [row.n_side for row in result.rows]
    means = [row.mean_edges for row in result.rows]
    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    ax.loglog(ns, means, "o", color="tab:blue", label="mean edges")
    lo, hi = min(ns), max(ns)
    anchor = means[0]
    ax.loglog(
        [lo, hi],
        [anchor, anchor * (hi / lo) ** result.slope],
        "-",
        color="tab:blue",
        alpha=0.6,
        label=f"fit slope {result.slope:.3f}",
    )
    ref = 2 - result.a / result.b
    ax.loglog(
        [lo, hi],
        [anchor, anchor * (hi / lo) ** ref],
        "--",
        color="tab:gray",
        label=f"reference slope {ref:.3f}",
    )
    ax.set_xlabel("N")
    ax.set_ylabel("edges")
    ax.set_title(f"edge scaling, a={result.a} b={result.b}")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def plot_copy_histogram(before, after, path):
    """Copy-count histograms of a run, before and after pruning."""
    values = sorted(set(before) | set(after))
    fig, ax = plt.subplots(figsize=(5.5, 4.2))
    ax.bar(
        [v - 0.2 for v in values],
        [before.get(v, 0) for v in values],
        width=0.4,
        label="before pruning",
        color="tab:blue",
    )
    ax.bar(
        [v + 0.2 for v in values],
        [after.get(v, 0) for v in values],
        width=0.4,
        label="after pruning",
        color="tab:orange",
    )
    if max(list(before.values()) + list(after.values()), default=1) > 50:
        ax.set_yscale("log")
    ax.set_xlabel("rooted copies per tuple")
    ax.set_ylabel("tuples")
    ax.set_title("copy profile")
    ax.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)
