"""Command line entry point: ``sccolor {solve,verify,bounds,oracle,gen}``.

Exit codes: 0 success, 1 verification failure or negative oracle answer,
2 solver ran out of rounds, 64 usage or input errors.
"""
import argparse
import sys

from .conflict import verify
from .errors import DomainError, ResourceError
from .generate import gen_degenerate, random_conflicts, random_forests
from .io import emit_coloring, emit_instance, parse_coloring, parse_instance
from .lll import BOUND_MODES, EXHAUSTED, SOLVED, VARIANTS, SolverConfig, min_colors_bound, moser_tardos_solve
from .multigraph import MultiGraph
from .oracle import adversarial_chi_con
from .reductions import adapted_to_scc, coop_to_adapted

EXIT_OK, EXIT_FAIL, EXIT_EXHAUSTED, EXIT_USAGE = 0, 1, 2, 64


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path):
    with open(path, encoding="utf-8") as fh:
        return fh.read()


def _write(path, text):
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_solve(args):
    inst = parse_instance(_read(args.input))
    config = SolverConfig(
        variant=args.variant,
        probability_override=args.p,
        max_rounds=args.max_rounds,
        seed=args.seed,
    )
    report = moser_tardos_solve(inst, config)
    if report.outcome == SOLVED:
        _write(args.output, emit_coloring(report.coloring))
    print("\n".join(report.as_lines()))
    if report.outcome == SOLVED:
        return EXIT_OK
    return EXIT_EXHAUSTED if report.outcome == EXHAUSTED else EXIT_FAIL


def cmd_verify(args):
    inst = parse_instance(_read(args.input))
    col = parse_coloring(_read(args.coloring), inst.n)
    bad = verify(inst, col)
    for e in bad:
        print("arc {} {} {} {}".format(*inst.arcs[e]))
    return EXIT_FAIL if bad else EXIT_OK


def cmd_bounds(args):
    print(min_colors_bound(args.d, args.delta, args.mode, mu=args.mu, r=args.r))
    return EXIT_OK


def cmd_chicon(args):
    inst = parse_instance(_read(args.input))
    try:
        k = adversarial_chi_con(inst.graph, args.max_k, budget=args.budget)
    except ResourceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL
    print("none" if k is None else k)
    return EXIT_FAIL if k is None else EXIT_OK


def _carrier(g):
    return "\n".join(
        ["scc 1", "colors 1", f"vertices {g.n}"] + [f"arc {u} {v} 0 0" for u, v in g.edges]
    ) + "\n"


def cmd_gen_degenerate(args):
    _write(args.output, _carrier(gen_degenerate(args.n, args.d, args.seed)))
    return EXIT_OK


def cmd_gen_conflicts(args):
    src = parse_instance(_read(args.input))
    g = MultiGraph(src.n, src.orientation.direction)
    _write(args.output, emit_instance(random_conflicts(g, args.k, args.seed, mu=args.mu)))
    return EXIT_OK


def cmd_gen_forests(args):
    fam = random_forests(args.count, args.n, args.max_degree, args.seed)
    _write(args.output, emit_instance(adapted_to_scc(coop_to_adapted(fam))))
    return EXIT_OK


def build_parser():
    parser = _Parser(prog="sccolor", description="Single-conflict graph coloring tools.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="solve an instance file")
    p.add_argument("--input", required=True)
    p.add_argument("--output", required=True, help="coloring file to write ('-' for stdout)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-rounds", type=int, default=None)
    p.add_argument("--variant", choices=VARIANTS, default="auto")
    p.add_argument("--p", type=float, default=None, help="override the inclusion probability")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a coloring against an instance")
    p.add_argument("--input", required=True)
    p.add_argument("--coloring", required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bounds", help="print a color-count bound")
    p.add_argument("--mode", choices=BOUND_MODES + ("simple-degenerate",), required=True)
    p.add_argument("--d", type=int, default=None)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--mu", type=int, default=None)
    p.add_argument("--r", type=int, default=None)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", help="exact small-instance computations")
    osub = p.add_subparsers(dest="oracle", required=True, parser_class=_Parser)
    q = osub.add_parser("chicon", help="adversarial single-conflict chromatic number")
    q.add_argument("--input", required=True)
    q.add_argument("--max-k", type=int, required=True)
    q.add_argument("--budget", type=int, default=10**6)
    q.set_defaults(func=cmd_chicon)

    p = sub.add_parser("gen", help="random generators")
    gsub = p.add_subparsers(dest="generator", required=True, parser_class=_Parser)
    q = gsub.add_parser("degenerate")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--d", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--output", default=None)
    q.set_defaults(func=cmd_gen_degenerate)
    q = gsub.add_parser("conflicts")
    q.add_argument("--input", required=True)
    q.add_argument("--k", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--mu", type=int, default=None)
    q.add_argument("--output", default=None)
    q.set_defaults(func=cmd_gen_conflicts)
    q = gsub.add_parser("forests")
    q.add_argument("--count", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--max-degree", type=int, required=True)
    q.add_argument("--seed", type=int, required=True)
    q.add_argument("--output", default=None)
    q.set_defaults(func=cmd_gen_forests)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DomainError, OSError) as exc:
        print(f"sccolor: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
