# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

import networkx as nx

from .interactiongraph import NEGATIVE, POSITIVE, SIGNS, SignedDigraph


@dataclass(frozen=True)
class SignedPath:
    """
    A walk v_0 -> ... -> v_k (k >= 1) with the sign of every arc it uses.
    """

    vertices: Tuple[int, ...]
    signs: Tuple[str, ...]

    def __post_init__(self):
        if len(self.signs) < 1 or len(self.vertices) != len(self.signs) + 1:
            raise ValueError("a signed path needs k >= 1 arcs and k + 1 vertices")

    @property
    def length(self) -> int:
        return len(self.signs)

    @property
    def sign(self) -> str:
        return NEGATIVE if self.signs.count(NEGATIVE) % 2 else POSITIVE

    def arcs(self) -> List[Tuple[int, int, str]]:
        return [(self.vertices[i], self.vertices[i + 1], self.signs[i]) for i in range(self.length)]

    def is_in(self, graph: SignedDigraph) -> bool:
        return all(graph.has_arc(u, v, s) for u, v, s in self.arcs())

    def __str__(self):
        parts = [str(self.vertices[0])]
        for i, s in enumerate(self.signs):
            parts.append(f"-[{s}]-> {self.vertices[i + 1]}")
        return " ".join(parts)


@dataclass(frozen=True)
class SignedCycle(SignedPath):
    """
    A simple signed cycle in canonical rotation: the smallest vertex comes first
    and v_0 = v_k.
    """

    def __post_init__(self):
        super().__post_init__()
        if self.vertices[0] != self.vertices[-1]:
            raise ValueError("a cycle must end where it starts")

    @property
    def loop(self) -> Tuple[int, ...]:
        return self.vertices[:-1]

    def sort_key(self):
        return (self.length, self.loop, self.signs)


def _canonical_rotation(loop: List[int]) -> List[int]:
    smallest = loop.index(min(loop))
    return loop[smallest:] + loop[:smallest]


def enumerate_cycles(graph: SignedDigraph, max_len: Optional[int] = None) -> List[SignedCycle]:
    """
    All simple signed cycles with at most max_len arcs (default n). Vertex cycles
    come from networkx; each is expanded into one signed cycle per choice of arc
    sign along it, so parallel arcs of opposite sign give distinct cycles.
    Sorted by (length, vertex sequence, sign pattern).
    """
    if max_len is None:
        max_len = graph.n
    if max_len < 1:
        raise ValueError(f"max-len must be >= 1, got {max_len}")
    if max_len < graph.n:
        logging.warning(f"cycle length bound {max_len} is below the vertex count {graph.n}; longer cycles are skipped")
    cycles = []
    for loop in nx.simple_cycles(nx.DiGraph(graph.graph), length_bound=max_len):
        loop = _canonical_rotation(list(loop))
        closed = loop + [loop[0]]
        choices = [graph.signs_between(closed[i], closed[i + 1]) for i in range(len(loop))]
        for signs in itertools.product(*choices):
            cycles.append(SignedCycle(tuple(closed), tuple(signs)))
    cycles.sort(key=SignedCycle.sort_key)
    logging.info(f"enumerated {len(cycles)} signed cycles of length <= {max_len}")
    return cycles


def count_cycles_by_sign(cycles: List[SignedCycle]) -> Dict[str, int]:
    counts = {POSITIVE: 0, NEGATIVE: 0}
    for cycle in cycles:
        counts[cycle.sign] += 1
    return counts


def _check_vertex(graph: SignedDigraph, v: int):
    if not 1 <= v <= graph.n:
        raise ValueError(f"vertex {v} out of range 1..{graph.n}")


def _parity_graph(graph: SignedDigraph) -> nx.DiGraph:
    """Vertex set doubled by the parity of negative arcs walked so far."""
    doubled = nx.DiGraph()
    for v in range(1, graph.n + 1):
        doubled.add_nodes_from([(v, 0), (v, 1)])
    for arc in graph.arcs:
        flip = 1 if arc.sign == NEGATIVE else 0
        for parity in (0, 1):
            doubled.add_edge((arc.source, parity), (arc.target, parity ^ flip), sign=arc.sign)
    return doubled


def shortest_signed_walk(graph: SignedDigraph, source: int, target: int, sign: str) -> Optional[SignedPath]:
    """
    Shortest walk (at least one arc, vertices may repeat) from source to target
    whose product of arc signs equals sign, found by breadth-first search over the
    parity-doubled graph. None when no such walk exists.
    """
    _check_vertex(graph, source)
    _check_vertex(graph, target)
    if sign not in SIGNS:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    doubled = _parity_graph(graph)
    # a virtual start forces at least one arc, so source == target is a real loop
    start = ("start", 0)
    doubled.add_node(start)
    for _, successor, data in doubled.out_edges((source, 0), data=True):
        doubled.add_edge(start, successor, sign=data["sign"])
    goal = (target, 1 if sign == NEGATIVE else 0)
    try:
        nodes = nx.shortest_path(doubled, start, goal)
    except nx.NetworkXNoPath:
        return None
    vertices = (source,) + tuple(v for v, _ in nodes[1:])
    signs = tuple(doubled.edges[nodes[i], nodes[i + 1]]["sign"] for i in range(len(nodes) - 1))
    return SignedPath(vertices, signs)


def shortest_signed_path(graph: SignedDigraph, source: int, target: int, sign: str) -> Optional[int]:
    """Length of the shortest walk with the requested sign, or None when unreachable."""
    walk = shortest_signed_walk(graph, source, target, sign)
    return walk.length if walk else None
