# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import json

from .interactiongraph import NEGATIVE, POSITIVE, build_graph, format_matrix, matrices, to_dot, to_json
from .network import BooleanNetwork, load_network
from .signedpaths import count_cycles_by_sign, enumerate_cycles, shortest_signed_walk

SIGN_NAMES = {"pos": POSITIVE, "neg": NEGATIVE, "+": POSITIVE, "-": NEGATIVE}


def load_network_arg(args) -> BooleanNetwork:
    """Network from --network FILE or from the literals listed with --rules."""
    if args.network is not None:
        return load_network(args.network)
    if args.rules:
        return BooleanNetwork.from_literals(args.rules)
    raise ValueError("either --network or --rules is required")


def graph(args) -> str:
    network = load_network_arg(args)
    signed = build_graph(network)
    if args.format == "dot":
        return to_dot(signed)
    if args.format == "json":
        return to_json(signed) + "\n"
    pair = matrices(signed)
    return format_matrix(pair.positive) + "\n\n" + format_matrix(pair.negative) + "\n"


def cycles(args) -> str:
    _validate(args)
    network = load_network_arg(args)
    signed = build_graph(network)
    max_len = args.max_len if args.max_len is not None else signed.n
    found = enumerate_cycles(signed, max_len)
    if args.format == "count":
        return f"{len(found)}\n"
    if args.format == "json":
        counts = count_cycles_by_sign(found)
        return json.dumps({
            "cycles": [{"vertices": list(c.loop), "signs": list(c.signs), "sign": c.sign} for c in found],
            "positive": counts[POSITIVE],
            "negative": counts[NEGATIVE],
        }) + "\n"
    return "".join(f"{c.sign} {c}\n" for c in found)


def path(args) -> str:
    _validate(args)
    network = load_network_arg(args)
    signed = build_graph(network)
    walk = shortest_signed_walk(signed, args.source, args.target, SIGN_NAMES[args.sign])
    if walk is None:
        return "absent\n"
    return f"{walk.length} {walk}\n"


def _validate(args):
    if getattr(args, "max_len", None) is not None and args.max_len < 1:
        raise ValueError("max-len must be > 0")
    if getattr(args, "source", 1) < 1 or getattr(args, "target", 1) < 1:
        raise ValueError("path endpoints must be > 0")
