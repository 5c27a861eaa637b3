"""Command-line front end.

Exit codes: 0 success, 1 I/O or parse error, 2 precondition violation or
refused instance, 3 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import bounds, generators
from .colouring import Options, PrecolouredClique, fragment_colour
from .cycles import circumference, longest_cycle
from .errors import GraphFormatError, InfeasibleError, PreconditionError
from .extremal import build_extremal, check_forced_degree, verify_structural
from .formats import format_colouring, read_colouring
from .graph import Graph, read_edge_list, to_edge_list
from .oracle import optimal_colouring
from .verify import monochromatic_components, verify_fragmentation

EXIT_OK, EXIT_IO, EXIT_PRECONDITION, EXIT_FAILED = 0, 1, 2, 3


class CliError(Exception):
    def __init__(self, code: int, message: str):
        super().__init__(message)
        self.code = code


def _emit(text: str, output: str | None) -> None:
    if output:
        Path(output).write_bytes(text.encode("utf-8"))
    else:
        sys.stdout.write(text)


def _report_stream(output: str | None):
    # reports share stdout only when the main artefact goes to a file
    return sys.stdout if output else sys.stderr


def _load_graph(path: str) -> Graph:
    try:
        return read_edge_list(path)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_IO, f"cannot read graph {path}: {exc}") from None


def _parse_precolour(text: str | None) -> PrecolouredClique:
    if not text:
        return PrecolouredClique()
    mapping = {}
    try:
        for item in text.split(","):
            v, c = item.split(":")
            mapping[int(v)] = int(c)
    except ValueError:
        raise CliError(EXIT_PRECONDITION, f"bad --precolour {text!r}; expected 'v:c,v:c'") from None
    try:
        return PrecolouredClique.from_mapping(mapping)
    except PreconditionError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise CliError(EXIT_PRECONDITION, f"bad --params {text!r}") from None


def cmd_colour(args) -> int:
    G = _load_graph(args.input)
    C = _parse_precolour(args.precolour)
    try:
        C.check(G)
        circ = circumference(G)
        k = max(circ, 2) if args.k is None else args.k
        if circ > k:
            raise PreconditionError(f"circumference {circ} exceeds --k {k}")
        opts = Options(recompute_circumference=not args.no_recompute, emit_trace=args.trace)
        col, trace = fragment_colour(G, k, C, opts)
    except PreconditionError as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _emit(format_colouring(col), args.output)
    largest = max((len(p) for p in monochromatic_components(G, col)), default=0)
    out = _report_stream(args.output)
    print(f"k={k} colours={len(set(col))} maxcomp={largest}", file=out)
    if trace is not None:
        for line in trace.lines():
            print(f"trace {line}", file=out)
    return EXIT_OK


def cmd_verify(args) -> int:
    G = _load_graph(args.input)
    try:
        col = read_colouring(args.colouring)
    except (OSError, GraphFormatError, UnicodeDecodeError) as exc:
        raise CliError(EXIT_IO, f"cannot read colouring {args.colouring}: {exc}") from None
    if len(col) != G.n:
        raise CliError(EXIT_IO, f"colouring has {len(col)} vertices, graph has {G.n}")
    C = _parse_precolour(args.precolour)
    if args.k < 2:
        raise CliError(EXIT_PRECONDITION, "--k must be at least 2")
    report = verify_fragmentation(G, col, args.k, C.as_dict())
    sys.stdout.write(report.to_text())
    return EXIT_OK if report.ok else EXIT_FAILED


def cmd_circumference(args) -> int:
    G = _load_graph(args.input)
    cyc = longest_cycle(G)
    print(2 if cyc is None else len(cyc))
    if args.witness:
        print("none" if cyc is None else " ".join(map(str, cyc)))
    return EXIT_OK


def cmd_extremal(args) -> int:
    try:
        G = build_extremal(args.k, args.d)
    except (InfeasibleError, ValueError) as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _emit(to_edge_list(G), args.output)
    out = _report_stream(args.output)
    print(f"extremal k={args.k} d={args.d} n={G.n} m={G.m}", file=out)
    passed = True
    try:
        if args.check in ("structural", "all"):
            report = verify_structural(args.k, args.d)
            for line in report.lines():
                print(line, file=out)
            passed &= report.ok
        if args.check in ("colourings", "all"):
            result = check_forced_degree(args.k, args.d, jobs=args.jobs)
            if result.holds:
                print(f"colourings forced_degree>={args.d} PASS", file=out)
            else:
                witness = ",".join(map(str, result.counterexample))
                print(f"colourings forced_degree>={args.d} FAIL counterexample {witness}", file=out)
            passed &= result.holds
    except InfeasibleError as exc:
        print(f"refused: {exc}", file=out)
        return EXIT_PRECONDITION
    return EXIT_OK if passed else EXIT_FAILED


def cmd_bounds(args) -> int:
    if args.kmax < 2:
        raise CliError(EXIT_PRECONDITION, "--kmax must be at least 2")
    sys.stdout.write(bounds.bound_table_csv(args.kmax))
    return EXIT_OK


def cmd_oracle(args) -> int:
    G = _load_graph(args.input)
    try:
        c, _ = optimal_colouring(G, args.d, args.mode, jobs=args.jobs)
    except (InfeasibleError, ValueError) as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    print(c)
    return EXIT_OK


FAMILIES = {
    "cycle": (generators.cycle, 1),
    "path": (generators.path, 1),
    "complete": (generators.complete, 1),
    "star": (generators.star, 1),
    "wheel": (generators.wheel, 1),
    "bipartite": (generators.complete_bipartite, 2),
    "treeclosure": (generators.tree_closure, 2),
    "extremal": (build_extremal, 2),
    "petersen": (generators.petersen, 0),
}


def cmd_gen(args) -> int:
    params = _ints(args.params or "")
    try:
        if args.family == "cactus":
            if len(params) not in (1, 2):
                raise ValueError("cactus takes m[,max_cycle]")
            G = generators.random_cactus(*params, seed=args.seed) if len(params) == 1 else \
                generators.random_cactus(params[0], args.seed, params[1])
        else:
            make, arity = FAMILIES[args.family]
            if len(params) != arity:
                raise ValueError(f"{args.family} takes {arity} parameter(s)")
            G = make(*params)
    except (ValueError, InfeasibleError) as exc:
        raise CliError(EXIT_PRECONDITION, str(exc)) from None
    _emit(to_edge_list(G), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=1, help="worker processes for enumerations")

    parser = argparse.ArgumentParser(prog="circol", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colour", parents=[common], help="colour a graph")
    p.add_argument("--input", required=True)
    p.add_argument("--k", type=int)
    p.add_argument("--precolour")
    p.add_argument("--trace", action="store_true")
    p.add_argument("--no-recompute", action="store_true")
    p.add_argument("--output")
    p.set_defaults(func=cmd_colour)

    p = sub.add_parser("verify", parents=[common], help="check a colouring")
    p.add_argument("--input", required=True)
    p.add_argument("--colouring", required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--precolour")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("circumference", parents=[common], help="exact circumference")
    p.add_argument("--input", required=True)
    p.add_argument("--witness", action="store_true")
    p.set_defaults(func=cmd_circumference)

    p = sub.add_parser("extremal", parents=[common], help="build and check G_{k,d}")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--check", choices=["structural", "colourings", "all"])
    p.add_argument("--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("bounds", parents=[common], help="CSV table of the closed-form bounds")
    p.add_argument("--kmax", type=int, required=True)
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("oracle", parents=[common], help="brute-force optimum for small graphs")
    p.add_argument("--input", required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--mode", choices=["fragment", "defective"], default="fragment")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("gen", parents=[common], help="write a generated graph")
    p.add_argument("--family", required=True, choices=sorted([*FAMILIES, "cactus"]))
    p.add_argument("--params", default="")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--output")
    p.set_defaults(func=cmd_gen)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
