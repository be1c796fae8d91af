"""Command-line surface for sampling, extension, oracle, bounds, experiments.

Structured results print as JSON on stdout; graphs and trial records go
to files. Exit status: 0 = ran to completion (per-trial or per-graph
engine failures are data, not errors), 2 = bad configuration or input,
3 = file I/O problem.
"""

import argparse
import json
import math
import sys

import numpy as np

from .bounds import DEFAULT_BETA, DEFAULT_GAMMA, default_params, step_success_bound
from .experiment import ConfigError, ExperimentConfig, run_trials, trial_seed
from .extension import extend
from .graph import load_edge_list, save_edge_list
from .models import (
    ExampleFamilyModel,
    ExplicitModel,
    HomogeneousModel,
    alpha_stats,
    check_condition,
    load_model_spec,
    read_lower_triangular,
    sample_graph,
)
from .oracle import min_extension_exact

__all__ = ["main", "EXIT_OK", "EXIT_BAD_CONFIG", "EXIT_IO"]

EXIT_OK = 0
EXIT_BAD_CONFIG = 2
EXIT_IO = 3


def _add_model_arguments(parser: argparse.ArgumentParser):
    group = parser.add_argument_group("model (spec file or inline flags)")
    group.add_argument("--model", metavar="FILE", help="model spec file (key: value lines)")
    group.add_argument(
        "--model-type",
        choices=("homogeneous", "example_family", "matrix"),
        help="inline model kind; needs --n plus its parameters",
    )
    group.add_argument("--n", type=int, help="vertex count for inline models")
    group.add_argument("--p", type=float, help="edge probability (homogeneous)")
    group.add_argument("--a", type=float, help="last-vertex probability (example family)")
    group.add_argument("--b", type=float, help="background probability (example family)")
    group.add_argument("--matrix-file", metavar="FILE", help="lower-triangular rows (matrix)")


def _build_model(args):
    if args.model is not None:
        return load_model_spec(args.model)
    if args.model_type is None:
        raise ConfigError("provide --model FILE or --model-type with its parameters")
    if args.n is None:
        raise ConfigError("--n is required with --model-type")
    if args.model_type == "homogeneous":
        if args.p is None:
            raise ConfigError("--p is required for a homogeneous model")
        return HomogeneousModel(args.n, args.p)
    if args.model_type == "example_family":
        if args.a is None or args.b is None:
            raise ConfigError("--a and --b are required for an example-family model")
        return ExampleFamilyModel(args.n, args.a, args.b)
    if args.matrix_file is None:
        raise ConfigError("--matrix-file is required for a matrix model")
    return ExplicitModel(args.n, read_lower_triangular(args.matrix_file, args.n))


def _jsonable(value):
    # json.dumps would emit bare Infinity/NaN tokens, which strict parsers
    # reject; strings keep the output plain JSON
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


def _print_json(obj):
    print(json.dumps(_jsonable(obj), indent=2, allow_nan=False))


def _cmd_sample(args) -> int:
    model = _build_model(args)
    seed = trial_seed(args.seed, args.trial_index)
    g = sample_graph(model, np.random.default_rng(seed))
    if args.out is not None:
        save_edge_list(g, args.out)
    _print_json(
        {
            "n": g.n,
            "m": g.m,
            "max_degree": g.max_degree(),
            "t_value": g.t_value(),
            "connected": g.is_connected(),
            "base_seed": args.seed,
            "trial_index": args.trial_index,
            "derived_seed": seed,
            "out": args.out,
        }
    )
    return EXIT_OK


def _cmd_extend(args) -> int:
    g = load_edge_list(args.graph)
    rng = None if args.seed is None else np.random.default_rng(args.seed)
    result = extend(g, rng=rng, max_random_attempts=args.max_attempts)
    written = False
    if result.success:
        extended = g.copy()
        for edge in result.added_edges:
            extended.add_edge(edge.u, edge.v)
        save_edge_list(extended, args.out)
        written = True
    counts = result.phase_counts()
    _print_json(
        {
            "success": result.success,
            "t_input": result.t_input,
            "edges_added": len(result.added_edges),
            "pairing_edges": counts["pairing"],
            "two_path_edges": counts["two_path"],
            "three_path_edges": counts["three_path"],
            "attempts_phase3": result.attempts_phase3,
            "failure_reason": result.failure_reason,
            "failing_pair": list(result.failing_pair) if result.failing_pair else None,
            "added": [[e.u, e.v, e.phase] for e in result.added_edges],
            "out": args.out if written else None,
        }
    )
    return EXIT_OK


def _cmd_oracle(args) -> int:
    g = load_edge_list(args.graph)
    answer = min_extension_exact(g, cap=args.cap)
    _print_json(
        {
            "extendable": answer.extendable,
            "min_edges": answer.min_edges,
            "witness": [list(e) for e in answer.witness] if answer.witness is not None else None,
            "t_value": g.t_value(),
            "cap": args.cap if args.cap is not None else 3 * g.t_value(),
        }
    )
    return EXIT_OK


def _cmd_bounds(args) -> int:
    model = _build_model(args)
    stats = alpha_stats(model)
    # with inline flags --n already is the model size; with a spec file it
    # re-evaluates the size-dependent terms at a different n
    n = args.n if args.n is not None else model.n
    condition = check_condition(stats, n, args.beta, args.gamma)
    params = default_params(n, args.beta, args.gamma)
    step = step_success_bound(stats, n, params, args.t)
    _print_json(
        {
            "n": n,
            "alpha": {
                "alpha_low": stats.alpha_low,
                "alpha_up": stats.alpha_up,
                "alpha_e": stats.alpha_e,
            },
            "condition": {
                "holds": condition.holds,
                "margin": condition.margin,
                "lower_slack": condition.lower_slack,
                "upper_slack": condition.upper_slack,
            },
            "params": {
                "beta": params.beta,
                "gamma": params.gamma,
                "zeta": params.zeta,
                "epsilon": params.epsilon,
            },
            "step_bound": {
                "p_lower": step.p_lower,
                "q_upper": step.q_upper,
                "diff": step.diff,
                "product_log": step.product_log,
                "analytic_floor": step.analytic_floor,
            },
        }
    )
    return EXIT_OK


def _cmd_experiment(args) -> int:
    model = _build_model(args)
    config = ExperimentConfig(
        model=model,
        trials=args.trials,
        base_seed=args.seed,
        beta=args.beta,
        gamma=args.gamma,
        max_random_attempts=args.max_attempts,
        out_path=args.out,
        out_format=args.format,
    )
    _, summary = run_trials(config)
    _print_json({"out": args.out, "format": args.format, "summary": summary.as_dict()})
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerext",
        description="Sample inhomogeneous random graphs and build Eulerian extensions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("sample", help="sample one graph from a model")
    _add_model_arguments(p)
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--trial-index", type=int, default=0, help="index mixed into the seed")
    p.add_argument("--out", metavar="FILE", help="write the sampled graph as an edge list")
    p.set_defaults(func=_cmd_sample)

    p = sub.add_parser("extend", help="make a graph Eulerian by adding complement edges")
    p.add_argument("--graph", metavar="FILE", required=True, help="input edge-list file")
    p.add_argument("--seed", type=int, help="seed for random probing; omit for deterministic scan")
    p.add_argument("--max-attempts", type=int, help="random probes per pair before scanning")
    p.add_argument("--out", metavar="FILE", required=True, help="extended graph (written on success)")
    p.set_defaults(func=_cmd_extend)

    p = sub.add_parser("oracle", help="exact minimum extension for small graphs")
    p.add_argument("--graph", metavar="FILE", required=True, help="input edge-list file")
    p.add_argument("--cap", type=int, help="largest extension size to consider (default 3t)")
    p.set_defaults(func=_cmd_oracle)

    p = sub.add_parser("bounds", help="alpha stats, density window, and step bounds for a model")
    _add_model_arguments(p)
    p.add_argument("--beta", type=float, default=DEFAULT_BETA, help=f"default {DEFAULT_BETA}")
    p.add_argument("--gamma", type=float, default=DEFAULT_GAMMA, help=f"default {DEFAULT_GAMMA}")
    p.add_argument("--t", type=int, default=0, help="repair steps for the product bound (default 0)")
    p.set_defaults(func=_cmd_bounds)

    p = sub.add_parser("experiment", help="seeded Monte Carlo batch with record emission")
    _add_model_arguments(p)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, default=0, help="base seed (default 0)")
    p.add_argument("--beta", type=float, default=DEFAULT_BETA, help=f"default {DEFAULT_BETA}")
    p.add_argument("--gamma", type=float, default=DEFAULT_GAMMA, help=f"default {DEFAULT_GAMMA}")
    p.add_argument("--max-attempts", type=int, help="random probes per pair before scanning")
    p.add_argument("--out", metavar="FILE", required=True, help="trial record file")
    p.add_argument("--format", choices=("csv", "jsonl"), default="csv")
    p.set_defaults(func=_cmd_experiment)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_CONFIG


if __name__ == "__main__":
    sys.exit(main())
