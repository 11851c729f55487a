"""Command-line front end.

Subcommands: tree build/check, family enumerate, construct, experiment,
oracle exact/witness.  All randomness flows from --seed (default 0), file
outputs go to --out, and figures are rendered next to the CSV/JSON they
describe.  Exit codes: 0 success, 2 argument errors, 3 capacity errors.
The environment variable RE_CAPACITY_N overrides the side-size capacity
of the construction.
"""

from __future__ import annotations

import argparse
import os
import sys

from .construction import (
    DEGREE_CAP,
    MAX_SIDE,
    ConstructionParams,
    run_pipeline,
    run_scaling_experiment,
)
from .errors import CapacityError
from .graphs import parse_edge_list, write_edge_list
from .oracle import exact_extremal_number, find_power_witness
from .powers import check_family_density, contains_member, enumerate_power
from .reporting import (
    balance_json_dict,
    construction_csv,
    experiment_csv,
    family_summary_dict,
    render_construction_report,
    render_experiment,
    stable_json,
)
from .trees import balanced_tree, density, is_balanced, parse_tree, write_tree


def _capacity():
    raw = os.environ.get("RE_CAPACITY_N")
    if raw is None:
        return MAX_SIDE
    try:
        return int(raw)
    except ValueError as exc:
        raise ValueError(f"RE_CAPACITY_N must be an integer, got {raw!r}") from exc


def _read(path):
    with open(path) as fh:
        return fh.read()


def _write(outdir, name, text):
    os.makedirs(outdir, exist_ok=True)
    path = os.path.join(outdir, name)
    with open(path, "w", newline="") as fh:
        fh.write(text)
    return path


def cmd_tree_build(args):
    tree = balanced_tree(args.a, args.b)
    text = write_tree(tree)
    sys.stdout.write(text)
    if args.out:
        _write(args.out, f"tree_{args.a}_{args.b}.txt", text)
    return 0


def cmd_tree_check(args):
    tree = parse_tree(_read(args.file))
    balanced, rep = is_balanced(tree)
    sys.stdout.write(stable_json(balance_json_dict(density(tree), balanced, rep.worst_subset)))
    return 0


def cmd_family_enumerate(args):
    tree = parse_tree(_read(args.treefile))
    members = enumerate_power(tree, args.p)
    blocks = [write_edge_list(m.union_graph) for m in members]
    density_ok, _ = check_family_density(tree, args.p)
    summary = stable_json(family_summary_dict(members, density_ok))
    for block in blocks:
        sys.stdout.write(block)
        sys.stdout.write("\n")
    sys.stdout.write(summary)
    if args.out:
        _write(args.out, "family_members.txt", "\n".join(blocks))
        _write(args.out, "family_summary.json", summary)
    return 0


def cmd_construct(args):
    tree = balanced_tree(args.a, args.b)
    params = ConstructionParams(
        tree=tree,
        q=args.q,
        seed=args.seed,
        s=args.s,
        d=args.d,
        threshold=args.threshold,
        max_side=_capacity(),
    )
    result = run_pipeline(params)
    report_text = render_construction_report(result.report)
    sys.stdout.write(report_text)
    _write(args.out, "graph.txt", write_edge_list(result.graph))
    _write(args.out, "pruned.txt", write_edge_list(result.pruned))
    _write(args.out, "report.json", report_text)
    _write(args.out, "report.csv", construction_csv(result.report))
    from .plots import plot_copy_histogram

    plot_copy_histogram(
        result.report.copy_profile,
        result.report.copy_profile_after,
        os.path.join(args.out, "copy_profile.png"),
    )
    return 0


def cmd_experiment(args):
    qs = [int(tok) for tok in args.qlist.split(",") if tok.strip()]
    if not qs:
        raise ValueError("--qlist must list at least one prime")
    degree = args.d if args.d is not None else DEGREE_CAP
    result = run_scaling_experiment(
        args.a, args.b, qs, args.seeds,
        seed=args.seed, degree=degree, max_side=_capacity(),
    )
    csv_text = experiment_csv(result)
    json_text = render_experiment(result)
    sys.stdout.write(json_text)
    _write(args.out, "experiment.csv", csv_text)
    _write(args.out, "experiment.json", json_text)
    from .plots import plot_scaling

    plot_scaling(result, os.path.join(args.out, "scaling.png"))
    return 0


def cmd_oracle_exact(args):
    tree = parse_tree(_read(args.tree))
    p = args.p

    def is_free(g):
        return not contains_member(g, tree, p)[0]

    value, witness = exact_extremal_number(args.n, is_free)
    payload = {
        "value": value,
        "witness_edges": [[u, v] for u, v in sorted(witness.edges)],
    }
    sys.stdout.write(stable_json(payload))
    return 0


def cmd_oracle_witness(args):
    host = parse_edge_list(_read(args.graph))
    tree = parse_tree(_read(args.tree))
    found, witness = find_power_witness(host, tree, args.p)
    payload = {
        "found": found,
        "roots": list(witness.roots) if found else None,
        "copies": [list(c) for c in witness.copies] if found else None,
    }
    sys.stdout.write(stable_json(payload))
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="turanexp",
        description="balanced rooted trees, power families, and random algebraic graphs",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    tree_p = sub.add_parser("tree", help="build or check rooted trees")
    tree_sub = tree_p.add_subparsers(dest="action", required=True)
    build_p = tree_sub.add_parser("build", help="emit the balanced tree T_{a,b}")
    build_p.add_argument("a", type=int)
    build_p.add_argument("b", type=int)
    build_p.add_argument("--out", default=None)
    build_p.set_defaults(func=cmd_tree_build)
    check_p = tree_sub.add_parser("check", help="density and balance report")
    check_p.add_argument("file")
    check_p.set_defaults(func=cmd_tree_check)

    family_p = sub.add_parser("family", help="enumerate a power family")
    family_sub = family_p.add_subparsers(dest="action", required=True)
    enum_p = family_sub.add_parser("enumerate")
    enum_p.add_argument("treefile")
    enum_p.add_argument("p", type=int)
    enum_p.add_argument("--out", default=None)
    enum_p.set_defaults(func=cmd_family_enumerate)

    cons_p = sub.add_parser("construct", help="one full construction run")
    cons_p.add_argument("--a", type=int, required=True)
    cons_p.add_argument("--b", type=int, required=True)
    cons_p.add_argument("--q", type=int, required=True)
    cons_p.add_argument("--seed", type=int, default=0)
    cons_p.add_argument("--s", type=int, default=None)
    cons_p.add_argument("--d", type=int, default=None)
    cons_p.add_argument("--threshold", type=int, default=None)
    cons_p.add_argument("--out", default=".")
    cons_p.set_defaults(func=cmd_construct)

    exp_p = sub.add_parser("experiment", help="edge scaling over a list of primes")
    exp_p.add_argument("--a", type=int, required=True)
    exp_p.add_argument("--b", type=int, required=True)
    exp_p.add_argument("--qlist", required=True)
    exp_p.add_argument("--seeds", type=int, default=50)
    exp_p.add_argument("--seed", type=int, default=0)
    exp_p.add_argument("--d", type=int, default=None)
    exp_p.add_argument("--out", default=".")
    exp_p.set_defaults(func=cmd_experiment)

    oracle_p = sub.add_parser("oracle", help="brute-force ground truth")
    oracle_sub = oracle_p.add_subparsers(dest="action", required=True)
    exact_p = oracle_sub.add_parser("exact")
    exact_p.add_argument("--n", type=int, required=True)
    exact_p.add_argument("--tree", required=True)
    exact_p.add_argument("--p", type=int, required=True)
    exact_p.set_defaults(func=cmd_oracle_exact)
    wit_p = oracle_sub.add_parser("witness")
    wit_p.add_argument("--graph", required=True)
    wit_p.add_argument("--tree", required=True)
    wit_p.add_argument("--p", type=int, required=True)
    wit_p.set_defaults(func=cmd_oracle_witness)

    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
