"""Command line front end.

Verbs read JSON from a file argument (default stdin) and write one JSON
object to stdout with "schema": "1".  Exit status: 0 for a completed
query or a passing verdict, 1 for a failing verdict or an exhausted
generator, 2 for unusable input, including statement parameters outside
their windows.

Any JSON object with a "nodes" key in node-set form is accepted where a
node set is expected, so construct output pipes straight into the
analysis verbs.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional

from .constructions import (
    GenerationError,
    PairDivisionInstance,
    chung_yao_lattice,
    extremal_config,
    extremal_seven_config,
    gc_corollary_config,
    independent_set_on_curve,
    pair_division,
    principal_lattice,
    random_independent_set,
    random_line_arrangement,
)
from .curves import curve_to_json, d, find_maximal_curve
from .nodesets import (
    NodeSet,
    fundamental_polynomial,
    is_independent,
    is_poised,
    maximal_independent_indices,
    nodeset_from_json,
    nodeset_to_json,
    vanishing_space,
)
from .poly2 import line_from_json, line_to_json, poly_to_json, space_dimension
from .verify import all_pass, run_trials


def _read_json(path: str) -> object:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def _nodes_from(obj: object) -> NodeSet:
    if not isinstance(obj, dict) or "nodes" not in obj:
        raise ValueError("expected a JSON object with a 'nodes' key")
    return nodeset_from_json({"nodes": obj["nodes"]})


def _emit(payload: dict) -> None:
    print(json.dumps(payload, indent=2, sort_keys=True))


def _require_n(args: argparse.Namespace) -> int:
    if args.n is None:
        raise ValueError("--n is required here")
    return args.n


def _require_k(args: argparse.Namespace) -> int:
    if args.k is None:
        raise ValueError("--k is required here")
    return args.k


def _cmd_analyze(args: argparse.Namespace) -> int:
    xs = _nodes_from(_read_json(args.input))
    n = _require_n(args)
    subset = maximal_independent_indices(xs, n)
    _emit(
        {
            "schema": "1",
            "command": "analyze",
            "n": n,
            "count": len(xs),
            "independent": is_independent(xs, n),
            "poised": is_poised(xs, n),
            "dimension": vanishing_space(xs, n).dimension,
            "max_independent_size": len(subset),
            "max_independent_indices": list(subset),
        }
    )
    return 0


def _cmd_dim(args: argparse.Namespace) -> int:
    xs = _nodes_from(_read_json(args.input))
    space = vanishing_space(xs, args.degree)
    _emit(
        {
            "schema": "1",
            "command": "dim",
            "degree": args.degree,
            "dimension": space.dimension,
            "basis": [poly_to_json(p) for p in space.basis],
        }
    )
    return 0


def _cmd_fundamental(args: argparse.Namespace) -> int:
    xs = _nodes_from(_read_json(args.input))
    n = _require_n(args)
    poly = fundamental_polynomial(xs, args.index, n)
    _emit(
        {
            "schema": "1",
            "command": "fundamental",
            "n": n,
            "index": args.index,
            "polynomial": poly_to_json(poly) if poly is not None else None,
        }
    )
    return 0


def _cmd_find_max_curve(args: argparse.Namespace) -> int:
    xs = _nodes_from(_read_json(args.input))
    n = _require_n(args)
    curve = find_maximal_curve(xs, args.degree, n, args.residual)
    _emit(
        {
            "schema": "1",
            "command": "find-max-curve",
            "n": n,
            "degree": args.degree,
            "residual": args.residual,
            "curve": curve_to_json(curve) if curve is not None else None,
        }
    )
    return 0


def _cmd_construct(args: argparse.Namespace) -> int:
    payload: dict = {"schema": "1", "command": "construct", "config": args.config,
                     "seed": args.seed}
    if args.config == "principal":
        n = _require_n(args)
        xs = principal_lattice(n)
        payload["n"] = n
    elif args.config == "generic":
        n = _require_n(args)
        if args.size is not None:
            size = args.size
        elif args.k is not None:
            size = d(n, args.k - 3) + 3
        else:
            size = space_dimension(n)
        xs = random_independent_set(size, n, args.seed)
        payload["n"] = n
        payload["size"] = size
        if args.k is not None:
            payload["k"] = args.k
    elif args.config == "chung-yao":
        n = _require_n(args)
        lattice = chung_yao_lattice(random_line_arrangement(n + 2, args.seed), n)
        xs = lattice.nodes
        payload["n"] = n
        payload["lines"] = [line_to_json(l) for l in lattice.arrangement.lines]
        payload["node_lines"] = [list(pair) for pair in lattice.node_lines]
        payload["fundamentals"] = [poly_to_json(p) for p in lattice.fundamentals]
    elif args.config == "gc-corollary":
        cfg = gc_corollary_config(args.seed)
        xs = cfg.nodes
        payload["n"] = 5
        payload["ell"] = line_to_json(cfg.ell)
        payload["mu"] = line_to_json(cfg.mu)
        payload["ell_indices"] = list(cfg.ell_indices)
        payload["mu_indices"] = list(cfg.mu_indices)
        payload["s_indices"] = list(cfg.s_indices)
    elif args.config == "ht":
        n, k = _require_n(args), _require_k(args)
        if not 1 <= k <= n:
            raise ValueError("need 1 <= k <= n")
        cfg = independent_set_on_curve(n, k, d(n, k - 1) + 2, args.seed)
        xs = cfg.nodes
        payload["n"], payload["k"] = n, k
        payload["curve"] = curve_to_json(cfg.curve)
        payload["curve_lines"] = [line_to_json(l) for l in cfg.curve_lines]
    else:
        n, k = _require_n(args), _require_k(args)
        if args.config == "extremal7":
            cfg = extremal_seven_config(n, k, args.seed)
        elif args.config == "hk":
            if not 3 <= k <= n - 1:
                raise ValueError("need 3 <= k <= n - 1")
            cfg = extremal_config(n, k - 2, 2, args.seed)
        elif args.config == "ht2":
            if not 2 <= k <= n - 1:
                raise ValueError("need 2 <= k <= n - 1")
            cfg = extremal_config(n, k - 1, 1, args.seed)
        else:
            if not 3 <= k <= n - 2:
                raise ValueError("need 3 <= k <= n - 2")
            cfg = extremal_config(n, k - 2, 3, args.seed)
        xs = cfg.nodes
        payload["n"], payload["k"] = n, k
        payload["curve"] = curve_to_json(cfg.curve)
        payload["curve_lines"] = [line_to_json(l) for l in cfg.curve_lines]
        payload["residual_indices"] = list(cfg.residual_indices)
    payload["nodes"] = nodeset_to_json(xs)["nodes"]
    _emit(payload)
    return 0


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.theorem == "gc":
        n, k = 5, 1
    else:
        n, k = _require_n(args), _require_k(args)
    reports = run_trials(args.theorem, n, k, args.trials, args.seed)
    verdict = all_pass(reports)
    _emit(
        {
            "schema": "1",
            "command": "verify",
            "theorem": args.theorem,
            "n": n,
            "k": k,
            "trials": args.trials,
            "seed": args.seed,
            "verdict": "pass" if verdict else "fail",
            "reports": [r.to_json() for r in reports],
        }
    )
    return 0 if verdict else 1


def _cmd_pair_division(args: argparse.Namespace) -> int:
    obj = _read_json(args.input)
    if not isinstance(obj, dict) or set(obj) != {"lines", "nodes", "assignment"}:
        raise ValueError("expected keys: lines, nodes, assignment")
    if not isinstance(obj["lines"], list):
        raise ValueError("'lines' must be an array")
    lines = tuple(line_from_json(item) for item in obj["lines"])
    nodes = nodeset_from_json({"nodes": obj["nodes"]})
    raw = obj["assignment"]
    if not isinstance(raw, list) or not all(
        isinstance(v, int) and not isinstance(v, bool) for v in raw
    ):
        raise ValueError("'assignment' must be an array of integers")
    instance = PairDivisionInstance(lines, nodes, tuple(raw))
    pairs = pair_division(instance)
    _emit(
        {
            "schema": "1",
            "command": "pair-division",
            "pair_count": instance.pair_count,
            "feasible": pairs is not None,
            "pairs": [list(pair) for pair in pairs] if pairs is not None else None,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nodecurves",
        description="Exact interpolation node-set analysis on rational points.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_input(p: argparse.ArgumentParser) -> None:
        p.add_argument("input", nargs="?", default="-",
                       help="JSON file with a 'nodes' key (default: stdin)")

    p = sub.add_parser("analyze", help="independence, poisedness, dimension")
    add_input(p)
    p.add_argument("--n", type=int, default=None, help="degree bound")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("dim", help="vanishing space at a degree, with basis")
    add_input(p)
    p.add_argument("--degree", type=int, required=True)
    p.set_defaults(func=_cmd_dim)

    p = sub.add_parser("fundamental", help="fundamental polynomial of one node")
    add_input(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--index", type=int, required=True)
    p.set_defaults(func=_cmd_fundamental)

    p = sub.add_parser("find-max-curve",
                       help="search for a maximal curve missing few nodes")
    add_input(p)
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--degree", type=int, required=True, help="curve degree")
    p.add_argument("--residual", type=int, default=0,
                   help="how many nodes may stay off the curve (0-3)")
    p.set_defaults(func=_cmd_find_max_curve)

    p = sub.add_parser("construct", help="seeded configuration generators")
    p.add_argument("--config", required=True,
                   choices=["generic", "extremal7", "hk", "ht2", "hkv", "ht",
                            "gc-corollary", "chung-yao", "principal"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--size", type=int, default=None,
                   help="node count for --config generic")
    p.set_defaults(func=_cmd_construct)

    p = sub.add_parser("verify", help="run seeded statement checks")
    p.add_argument("--theorem", required=True,
                   choices=["main", "hk", "ht2", "hkv", "ht", "gc"])
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("pair-division",
                       help="pair nodes across lines, no pair sharing a line")
    add_input(p)
    p.set_defaults(func=_cmd_pair_division)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GenerationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, KeyError, TypeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
