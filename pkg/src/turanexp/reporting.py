"""Stable text renderings of reports: JSON with sorted keys, CSV, fractions.

Exact rationals are rendered as "p/q" strings (or bare integers when the
denominator is 1); statistical quantities are floats rounded to 6 decimals.
All output uses "\n" line endings so identical runs are byte-identical.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction


def frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def exact_number(x):
    """Integers stay integers, other rationals become 'p/q' strings."""
    x = Fraction(x)
    if x.denominator == 1:
        return x.numerator
    return frac_str(x)


def round6(x):
    return round(float(x), 6)


def stable_json(obj):
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def histogram_pairs(hist):
    """Histogram dict as a [[value, tuples], ...] list in value order."""
    return [[int(k), int(v)] for k, v in sorted(hist.items())]


# ---------------------------------------------------------------------------
# construction reports


def construction_report_dict(report):
    return {
        "params": dict(report.params),
        "edge_count": report.edge_count,
        "expected_edges": exact_number(report.expected_edges),
        "copy_profile": histogram_pairs(report.copy_profile),
        "profile_total_tuples": report.profile_total_tuples,
        "profile_sampled": report.profile_sampled,
        "threshold": report.threshold,
        "threshold_branch": report.threshold_branch,
        "bad_sequences": report.bad_sequences,
        "removed_vertices": report.removed_vertices,
        "final_edge_count": report.final_edge_count,
        "copy_profile_after": histogram_pairs(report.copy_profile_after),
        "certified_p": report.certified_p,
        "pruning_sound": report.pruning_sound,
        "cross_checked": report.cross_checked,
        "cross_check_ok": report.cross_check_ok,
        "zero_prob_m": report.zero_prob_m,
        "zero_prob_ok": report.zero_prob_ok,
        "polynomials": [dict(p) for p in report.polynomials],
    }


def render_construction_report(report):
    return stable_json(construction_report_dict(report))


CONSTRUCTION_CSV_COLUMNS = [
    "a", "b", "r", "q", "n_side", "seed", "edge_count", "expected_edges",
    "threshold", "bad_sequences", "removed_vertices", "final_edge_count",
    "certified_p",
]


def construction_csv(report):
    """Header line plus one row summarizing the run."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CONSTRUCTION_CSV_COLUMNS)
    p = report.params
    writer.writerow([
        p["a"], p["b"], p["r"], p["q"], p["n_side"], p["seed"],
        report.edge_count, exact_number(report.expected_edges),
        report.threshold, report.bad_sequences, report.removed_vertices,
        report.final_edge_count, report.certified_p,
    ])
    return buf.getvalue()


# ---------------------------------------------------------------------------
# scaling experiments


def experiment_csv(result):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["q", "N", "mean_edges", "expected_edges", "fitted_slope"])
    for row in result.rows:
        writer.writerow([
            row.q,
            row.n_side,
            f"{row.mean_edges:.6f}",
            exact_number(row.expected_edges),
            f"{result.slope:.6f}",
        ])
    return buf.getvalue()


def experiment_json_dict(result):
    return {
        "a": result.a,
        "b": result.b,
        "degree": result.degree,
        "num_seeds": result.num_seeds,
        "seed_base": result.seed_base,
        "fitted_slope": round6(result.slope),
        "max_residual": round6(result.max_residual),
        "rows": [
            {
                "q": row.q,
                "n_side": row.n_side,
                "mean_edges": round6(row.mean_edges),
                "expected_edges": exact_number(row.expected_edges),
            }
            for row in result.rows
        ],
    }


def render_experiment(result):
    return stable_json(experiment_json_dict(result))


# ---------------------------------------------------------------------------
# tree and family summaries


def balance_json_dict(rho, balanced, witness_subset):
    return {
        "rho_T": frac_str(rho),
        "balanced": balanced,
        "witness_subset": None if balanced else list(witness_subset),
    }


def family_summary_dict(members, density_ok):
    edge_counts = [m.num_edges for m in members]
    return {
        "classes": len(members),
        "min_edges": min(edge_counts) if edge_counts else None,
        "max_edges": max(edge_counts) if edge_counts else None,
        "density_ok": density_ok,
    }
