# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Set, Tuple

import numpy as np

from .function import ResourceLimitError, assignment_index, index_assignment
from .network import BooleanNetwork

# Full state graphs are built for at most 2^20 states.
STATE_GRAPH_MAX_SIZE = 20

NetworkState = Tuple[int, ...]


def render_state(state: Sequence[int]) -> str:
    """State as a bitstring x_1..x_n."""
    return "".join(str(bit) for bit in state)


@dataclass(frozen=True)
class StateTransitionSystem:
    """
    Synchronous state transition graph of a network. States are identified by
    their index k = sum(x_m * 2^(n-m)), the same encoding truth tables use.
    :param size: number of network nodes.
    :param successors: successors[k] is the index of the successor of state k.
    :param attractors: terminal cycles, each listed from its smallest state in
        successor order; attractor ids follow the order states are first reached
        when scanning states ascending.
    :param attractor_of: attractor id reached from each state.
    :param heights: synchronous steps from each state to its attractor.
    """

    size: int
    successors: np.ndarray
    attractors: Tuple[Tuple[int, ...], ...]
    attractor_of: np.ndarray
    heights: np.ndarray

    @property
    def state_count(self) -> int:
        return 1 << self.size

    def state(self, index: int) -> NetworkState:
        return index_assignment(index, self.size)

    def successor(self, state: Sequence[int]) -> NetworkState:
        return self.state(int(self.successors[assignment_index(state)]))

    @property
    def fixed_points(self) -> List[NetworkState]:
        return [self.state(cycle[0]) for cycle in self.attractors if len(cycle) == 1]

    @property
    def basin_sizes(self) -> List[int]:
        return np.bincount(self.attractor_of, minlength=len(self.attractors)).tolist()

    @property
    def average_height(self) -> float:
        return float(np.mean(self.heights))

    @property
    def max_height(self) -> int:
        return int(np.max(self.heights))

    def attractor_states(self) -> List[List[NetworkState]]:
        return [[self.state(k) for k in cycle] for cycle in self.attractors]

    def to_json_dict(self) -> dict:
        states = [render_state(self.state(k)) for k in range(self.state_count)]
        return {
            "n": self.size,
            "states": states,
            "successors": [states[int(k)] for k in self.successors],
            "attractor": self.attractor_of.tolist(),
            "height": self.heights.tolist(),
            "attractors": [[states[k] for k in cycle] for cycle in self.attractors],
            "fixed_points": [render_state(s) for s in self.fixed_points],
            "basin_sizes": self.basin_sizes,
            "average_height": round(self.average_height, 6),
        }


def _check_state(network: BooleanNetwork, state: Sequence[int]):
    if len(state) != network.size:
        raise ValueError(f"state has {len(state)} bits, network has {network.size} nodes")


def step(network: BooleanNetwork, state: Sequence[int]) -> NetworkState:
    """Synchronous update: component j of the result is rule j evaluated at state."""
    _check_state(network, state)
    return tuple(rule.evaluate(state) for rule in network.rules)


def _check_size(network: BooleanNetwork):
    if network.size > STATE_GRAPH_MAX_SIZE:
        raise ResourceLimitError(f"state graph needs network size <= {STATE_GRAPH_MAX_SIZE}, got {network.size}")


def successor_map(network: BooleanNetwork) -> np.ndarray:
    """
    Successor index of every state. Since every rule is a function of all n
    variables with the state encoding as its input index, bit j of the successor
    of state k is simply bit k of rule j.
    """
    _check_size(network)
    n = network.size
    successors = np.zeros(1 << n, dtype=np.int64)
    for j, rule in enumerate(network.rules, start=1):
        successors |= rule.table().astype(np.int64) << (n - j)
    return successors


def _label_attractors(successors: np.ndarray) -> Tuple[Tuple[Tuple[int, ...], ...], np.ndarray, np.ndarray]:
    count = len(successors)
    unvisited, on_path, done = 0, 1, 2
    status = np.zeros(count, dtype=np.int8)
    attractor_of = np.full(count, -1, dtype=np.int64)
    heights = np.zeros(count, dtype=np.int64)
    attractors: List[Tuple[int, ...]] = []
    for start in range(count):
        if status[start] != unvisited:
            continue
        path = []
        state = start
        while status[state] == unvisited:
            status[state] = on_path
            path.append(state)
            state = int(successors[state])
        if status[state] == on_path:
            # closed a new cycle
            cycle = path[path.index(state):]
            attractor_id = len(attractors)
            smallest = cycle.index(min(cycle))
            attractors.append(tuple(cycle[smallest:] + cycle[:smallest]))
            for k in cycle:
                attractor_of[k] = attractor_id
                heights[k] = 0
                status[k] = done
            path = path[: len(path) - len(cycle)]
            base_height = 0
        else:
            attractor_id = int(attractor_of[state])
            base_height = int(heights[state])
        for offset, k in enumerate(reversed(path), start=1):
            attractor_of[k] = attractor_id
            heights[k] = base_height + offset
            status[k] = done
    return tuple(attractors), attractor_of, heights


def state_graph(network: BooleanNetwork) -> StateTransitionSystem:
    _check_size(network)
    successors = successor_map(network)
    attractors, attractor_of, heights = _label_attractors(successors)
    system = StateTransitionSystem(network.size, successors, attractors, attractor_of, heights)
    logging.info(
        f"state graph: {system.state_count} states, {len(attractors)} attractors, "
        f"{len(system.fixed_points)} fixed points, average height {system.average_height:.3f}"
    )
    return system


def fixed_points(network: BooleanNetwork) -> Set[NetworkState]:
    """States s with step(s) = s."""
    successors = successor_map(network)
    return {index_assignment(k, network.size) for k in np.nonzero(successors == np.arange(len(successors)))[0].tolist()}


def attractor_summary(system: StateTransitionSystem) -> Dict[str, object]:
    return {
        "attractors": [[render_state(s) for s in cycle] for cycle in system.attractor_states()],
        "basin_sizes": system.basin_sizes,
        "average_height": round(system.average_height, 6),
        "max_height": system.max_height,
    }
