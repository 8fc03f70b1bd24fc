# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import argparse
import contextlib
import logging
import sys
from typing import List, Optional, TextIO

from .classifycmd import census, classify
from .decomposecmd import decompose, influence
from .dynamicscmd import dynamics
from .function import ResourceLimitError
from .graphcmd import cycles, graph, path

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_RESOURCE_LIMIT = 2


class UsageError(ValueError):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    """argparse parser that reports usage errors as exceptions instead of exiting with status 2."""

    def error(self, message):
        raise UsageError(message)


def _add_network_source(parser: argparse.ArgumentParser):
    source = parser.add_mutually_exclusive_group(required=True)
    source.add_argument("--network", type=str, help="Network file: 'n=<size>' then one function literal per node.")
    source.add_argument("--rules", type=str, nargs="+", help="Function literals of the nodes, in node order.")


def build_parser() -> argparse.ArgumentParser:
    common = _ArgumentParser(add_help=False)
    common.add_argument("--output", type=str, help="Write the emitted text to this file instead of standard out.")
    common.add_argument("--quiet", action="store_true", help="Suppress progress notes on standard error.")

    parser = _ArgumentParser(prog="boolgraph", description="Decomposition, interaction graphs, function classes and dynamics of Boolean networks.")
    sub_parsers = parser.add_subparsers(dest="command")

    decompose_parser = sub_parsers.add_parser("decompose", parents=[common], help="Fragments of a function with a set of variables fixed.")
    decompose_parser.add_argument("function", help="Function literal: d:<value>@<arity>, b:<bits> or e:<arity>:<expr>.")
    decompose_parser.add_argument("--fix", type=str, required=True, help="Comma separated indices of the variables to fix, e.g. 2,3.")
    decompose_parser.add_argument("--format", type=str, default="text", choices=["text", "json"], help="Output format.")
    decompose_parser.set_defaults(func=decompose)

    influence_parser = sub_parsers.add_parser("influence", parents=[common], help="Influence sign of each variable on a function.")
    influence_parser.add_argument("function", help="Function literal.")
    influence_parser.add_argument("--variable", type=int, help="Only report this variable index.")
    influence_parser.add_argument("--format", type=str, default="text", choices=["text", "json"], help="Output format.")
    influence_parser.set_defaults(func=influence)

    graph_parser = sub_parsers.add_parser("graph", parents=[common], help="Signed interaction graph of a network.")
    _add_network_source(graph_parser)
    graph_parser.add_argument("--format", type=str, default="matrix", choices=["dot", "matrix", "json"], help="Output format. 'matrix' prints M+ then M-.")
    graph_parser.set_defaults(func=graph)

    classify_parser = sub_parsers.add_parser("classify", parents=[common], help="Class memberships of a single function.")
    classify_parser.add_argument("function", help="Function literal.")
    classify_parser.add_argument("--format", type=str, default="text", choices=["text", "json"], help="Output format.")
    classify_parser.set_defaults(func=classify)

    census_parser = sub_parsers.add_parser("census", parents=[common], help="Exhaustive list of a function class for a small arity.")
    census_parser.add_argument("--arity", type=int, required=True, help="Number of variables (1..4).")
    census_parser.add_argument("--class", dest="function_class", type=str, required=True, help="only_positive (pbf), only_negative (nbf), complete_positive, complete_negative or nested_canalizing (ncf).")
    census_parser.add_argument("--format", type=str, default="list", choices=["list", "csv", "count"], help="Output format.")
    census_parser.add_argument("--paired", action="store_true", help="CSV rows pair each positive member with its complement.")
    census_parser.add_argument("--workers", type=int, default=1, help="Threads scanning disjoint decimal ranges.")
    census_parser.set_defaults(func=census)

    dynamics_parser = sub_parsers.add_parser("dynamics", parents=[common], help="Synchronous state transition graph of a network.")
    _add_network_source(dynamics_parser)
    dynamics_parser.add_argument("--report", type=str, default="full", choices=["fixed-points", "attractors", "summary", "full"], help="What to report. 'full' emits JSON.")
    dynamics_parser.set_defaults(func=dynamics)

    cycles_parser = sub_parsers.add_parser("cycles", parents=[common], help="Signed simple cycles (feedback loops) of the interaction graph.")
    _add_network_source(cycles_parser)
    cycles_parser.add_argument("--max-len", type=int, help="Longest cycle to enumerate. Defaults to the network size.")
    cycles_parser.add_argument("--format", type=str, default="list", choices=["list", "count", "json"], help="Output format.")
    cycles_parser.set_defaults(func=cycles)

    path_parser = sub_parsers.add_parser("path", parents=[common], help="Shortest positive or negative walk between two nodes.")
    _add_network_source(path_parser)
    path_parser.add_argument("--from", dest="source", type=int, required=True, help="Source node.")
    path_parser.add_argument("--to", dest="target", type=int, required=True, help="Target node.")
    path_parser.add_argument("--sign", type=str, required=True, choices=["pos", "neg"], help="Requested sign of the walk.")
    path_parser.set_defaults(func=path)

    return parser


def run(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None) -> int:
    """
    Runs one invocation. Returns 0 on success, 1 on usage errors and malformed
    input, 2 when a resource cap is exceeded.
    """
    stdout = stdout if stdout is not None else sys.stdout
    stderr = stderr if stderr is not None else sys.stderr
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(stdout):
            args = parser.parse_args(argv)
    except UsageError as e:
        parser.print_usage(stderr)
        stderr.write(f"invalid argument(s): {e}\n")
        return EXIT_USAGE
    except SystemExit as e:
        # --help
        return e.code or EXIT_OK

    if "func" not in args:
        parser.print_help(stderr)
        return EXIT_USAGE

    logging.basicConfig(
        stream=stderr,
        level=logging.WARNING if args.quiet else logging.INFO,
        format="%(asctime)s %(levelname)-8s %(message)s",
        datefmt="%Y-%m-%d %H:%M:%S",
        force=True,
    )

    try:
        text = args.func(args)
        if args.output is not None:
            with open(args.output, "w") as f:
                f.write(text)
            logging.info(f"output written to {args.output}")
        else:
            stdout.write(text)
    except ResourceLimitError as e:
        stderr.write(f"resource limit exceeded: {e}\n")
        return EXIT_RESOURCE_LIMIT
    except (ValueError, OSError) as e:
        stderr.write(f"invalid argument(s): {e}\n")
        return EXIT_USAGE
    return EXIT_OK


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
