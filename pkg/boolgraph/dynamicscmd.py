# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import json

from .dynamics import attractor_summary, render_state, state_graph
from .graphcmd import load_network_arg


def dynamics(args) -> str:
    network = load_network_arg(args)
    system = state_graph(network)
    if args.report == "fixed-points":
        return "".join(f"{render_state(s)}\n" for s in sorted(system.fixed_points))
    if args.report == "attractors":
        return "".join(
            f"{i} " + " ".join(render_state(s) for s in cycle) + "\n"
            for i, cycle in enumerate(system.attractor_states())
        )
    if args.report == "summary":
        return json.dumps(attractor_summary(system)) + "\n"
    return json.dumps(system.to_json_dict()) + "\n"
