"""Command-line surface for the congruence-network toolkit.

Exit codes: 0 on success, 2 for argument or validation problems, 3 for an
infeasible (non-coprime) congruence system. Every failure prints a single
diagnostic line prefixed with "error:" to stderr. Randomized subcommands
take an explicit --seed and record it in their output, so identical
invocations produce byte-identical files.
"""

from __future__ import annotations

import argparse
import re
import sys
from contextlib import contextmanager

from .attacks import StaticModelSpec, attack_curve, generate_static_sf
from .control import min_drivers_exact, min_drivers_matching
from .crt import CongruenceSystem, NonCoprimeModuliError, solve_garner, solve_graphical
from .digraph import Digraph, layer_header, read_edge_list, sf_header, write_edge_list
from .layers import (
    LayerSpec,
    average_degree,
    build_layer,
    empirical_distribution,
    theoretical_average_degree,
    write_histogram_csv,
)

_CONGRUENCE = re.compile(r"^\s*(\d+)\s+mod\s+(\d+)\s*$")


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        self.exit(2, f"error: {message}\n")


@contextmanager
def _output(path: str | None):
    if path is None:
        yield sys.stdout
    else:
        with open(path, "w", encoding="utf-8") as fh:
            yield fh


def _load_graph(args: argparse.Namespace) -> tuple[Digraph, str]:
    """Graph plus a stable descriptor, from --r/--n or from --input."""
    if args.input is not None:
        return read_edge_list(args.input), f"input:{args.input}"
    if args.r is None or args.n is None:
        raise ValueError("provide either --input or both --r and --n")
    g = build_layer(LayerSpec(args.r, args.n))
    return g, f"mcn r={args.r} n={args.n}"


def _cmd_build(args: argparse.Namespace) -> int:
    spec = LayerSpec(args.r, args.n)
    g = build_layer(spec)
    with _output(args.out) as fh:
        write_edge_list(g, fh, header=layer_header(spec.r, spec.n))
    return 0


def _cmd_stats(args: argparse.Namespace) -> int:
    spec = LayerSpec(args.r, args.n)
    g = build_layer(spec)
    hist = empirical_distribution(g)
    active = sum(1 for m in g.nodes if g.out_degree(m) > 0)
    with _output(args.csv) as fh:
        fh.write(f"# layer r={spec.r} n={spec.n}\n")
        fh.write(f"# nodes={g.num_nodes} edges={g.num_edges}\n")
        fh.write(f"# average_degree={average_degree(g)!r}\n")
        if active:
            fh.write(f"# average_degree_active={g.num_edges / active!r}\n")
        fh.write(f"# average_degree_theory={theoretical_average_degree(spec)!r}\n")
        write_histogram_csv(hist, spec.r, fh)
    return 0


def _cmd_control(args: argparse.Namespace) -> int:
    g, _ = _load_graph(args)
    if args.method in ("exact", "both"):
        print(min_drivers_exact(g).to_json())
    if args.method in ("matching", "both"):
        print(min_drivers_matching(g).to_json())
    return 0


def _cmd_attack(args: argparse.Namespace) -> int:
    g, source = _load_graph(args)
    if not 0.0 < args.pmax < 1.0:
        raise ValueError(f"--pmax must lie in (0, 1), got {args.pmax}")
    if args.steps < 1:
        raise ValueError(f"--steps must be positive, got {args.steps}")
    grid = [args.pmax * i / args.steps for i in range(args.steps + 1)]
    curve = attack_curve(
        g,
        args.strategy,
        grid,
        trials=args.trials,
        seed=args.seed,
        source=source,
    )
    with _output(args.csv) as fh:
        curve.to_csv(fh)
    return 0


def _cmd_sf(args: argparse.Namespace) -> int:
    spec = StaticModelSpec(n=args.n, gamma=args.gamma, kbar=args.kbar, seed=args.seed)
    g = generate_static_sf(spec)
    with _output(args.out) as fh:
        write_edge_list(g, fh, header=sf_header(spec.gamma, spec.n, spec.seed))
    return 0


def _cmd_crt(args: argparse.Namespace) -> int:
    pairs = []
    for text in args.congruence:
        m = _CONGRUENCE.match(text)
        if not m:
            raise ValueError(f'cannot parse congruence {text!r}; expected "<r> mod <m>"')
        pairs.append((int(m.group(1)), int(m.group(2))))
    system = CongruenceSystem.from_pairs(pairs)
    if args.method in ("graph", "both"):
        print(solve_graphical(system).to_json())
    if args.method in ("garner", "both"):
        print(solve_garner(system).to_json())
    return 0


def _build_parser() -> _Parser:
    parser = _Parser(prog="mcn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build", help="write a congruence layer as an edge list")
    p.add_argument("--r", type=int, required=True, help="layer remainder")
    p.add_argument("--n", type=int, required=True, help="largest node label")
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_build)

    p = sub.add_parser("stats", help="degree histogram and average-degree figures")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("control", help="minimum driver-node report as JSON")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--input", help="edge-list file instead of --r/--n")
    p.add_argument(
        "--method",
        choices=("exact", "matching", "both"),
        default="matching",
        help="rank condition, bipartite matching, or both (default: matching)",
    )
    p.set_defaults(func=_cmd_control)

    p = sub.add_parser("attack", help="driver density under node-removal attacks")
    p.add_argument("--r", type=int)
    p.add_argument("--n", type=int)
    p.add_argument("--input", help="edge-list file instead of --r/--n")
    p.add_argument("--strategy", choices=("random", "targeted"), required=True)
    p.add_argument("--pmax", type=float, default=0.5, help="largest removal fraction")
    p.add_argument(
        "--steps", type=int, default=10,
        help="grid has steps+1 points: 0, pmax/steps, ..., pmax",
    )
    p.add_argument("--trials", type=int, default=50, help="trials per point (random only)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--csv", help="write CSV here instead of stdout")
    p.set_defaults(func=_cmd_attack)

    p = sub.add_parser("sf", help="generate a static-model scale-free digraph")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--gamma", type=float, required=True, help="degree exponent (> 2)")
    p.add_argument("--kbar", type=float, required=True, help="target mean out-degree")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="output file (default stdout)")
    p.set_defaults(func=_cmd_sf)

    p = sub.add_parser("crt", help="solve simultaneous congruences")
    p.add_argument(
        "congruence", nargs="+", metavar='"<r> mod <m>"',
        help='congruences such as "2 mod 3"',
    )
    p.add_argument(
        "--method",
        choices=("graph", "garner", "both"),
        default="both",
        help="graphical search, Garner reconstruction, or both (default: both)",
    )
    p.set_defaults(func=_cmd_crt)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except NonCoprimeModuliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except KeyError as exc:
        print(f"error: {exc.args[0] if exc.args else exc}", file=sys.stderr)
        return 2
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
