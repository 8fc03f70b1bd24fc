# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import json
import logging
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np

from .decomposition import influences
from .network import BooleanNetwork

POSITIVE = "+"
NEGATIVE = "-"
SIGNS = (POSITIVE, NEGATIVE)


class Arc(NamedTuple):
    source: int
    target: int
    sign: str


@dataclass(frozen=True)
class SignedAdjacencyMatrices:
    """
    Positive (entries 0/1) and negative (entries 0/-1) adjacency matrices.
    Row index is the source variable, column index the target node (both 0-based
    here, vertex i is row i-1).
    """

    positive: np.ndarray
    negative: np.ndarray


class SignedDigraph:
    """
    Signed interaction graph on vertices 1..n. Arcs are stored in a networkx
    MultiDiGraph keyed by sign, so each ordered pair carries at most one arc of
    each sign.
    """

    def __init__(self, n: int, arcs: Iterable[Tuple[int, int, str]] = ()):
        if n < 1:
            raise ValueError(f"graph must have at least one vertex, got {n}")
        self.n = n
        self.graph = nx.MultiDiGraph()
        self.graph.add_nodes_from(range(1, n + 1))
        for source, target, sign in arcs:
            self.add_arc(source, target, sign)

    def add_arc(self, source: int, target: int, sign: str):
        if sign not in SIGNS:
            raise ValueError(f"arc sign must be '+' or '-', got {sign!r}")
        for v in (source, target):
            if not 1 <= v <= self.n:
                raise ValueError(f"vertex {v} out of range 1..{self.n}")
        if not self.graph.has_edge(source, target, key=sign):
            self.graph.add_edge(source, target, key=sign)

    @classmethod
    def from_matrices(cls, matrices: SignedAdjacencyMatrices) -> "SignedDigraph":
        n = matrices.positive.shape[0]
        graph = cls(n)
        for i, j in zip(*np.nonzero(matrices.positive == 1)):
            graph.add_arc(int(i) + 1, int(j) + 1, POSITIVE)
        for i, j in zip(*np.nonzero(matrices.negative == -1)):
            graph.add_arc(int(i) + 1, int(j) + 1, NEGATIVE)
        return graph

    @property
    def arcs(self) -> List[Arc]:
        """All arcs sorted by (source, target, sign)."""
        return sorted(Arc(u, v, sign) for u, v, sign in self.graph.edges(keys=True))

    def has_arc(self, source: int, target: int, sign: str) -> bool:
        return self.graph.has_edge(source, target, key=sign)

    def signs_between(self, source: int, target: int) -> Tuple[str, ...]:
        if not self.graph.has_edge(source, target):
            return ()
        return tuple(sorted(self.graph[source][target]))

    def count_arcs(self, sign: Optional[str] = None) -> int:
        return sum(1 for arc in self.arcs if sign is None or arc.sign == sign)

    def has_only_sign(self, sign: str) -> bool:
        return self.count_arcs() > 0 and self.count_arcs(sign) == self.count_arcs()

    def is_complete(self) -> bool:
        """Every ordered pair of vertices, self-loops included, is joined by an arc."""
        return all(self.graph.has_edge(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1))

    def is_acyclic(self) -> bool:
        """No feedback loop of any sign; self-loops count as cycles."""
        return nx.is_directed_acyclic_graph(nx.DiGraph(self.graph))

    def without_sign(self, sign: str) -> "SignedDigraph":
        return SignedDigraph(self.n, (arc for arc in self.arcs if arc.sign != sign))

    def __eq__(self, other):
        return isinstance(other, SignedDigraph) and self.n == other.n and self.arcs == other.arcs

    def __repr__(self):
        return f"SignedDigraph(n={self.n}, arcs={self.arcs})"


def build_graph(network: BooleanNetwork) -> SignedDigraph:
    """
    Arc i -> j is positive when some 2-bit fragment of rule j in x_i is "01" and
    negative when some fragment is "10"; a variable with both gets both arcs.
    """
    graph = SignedDigraph(network.size)
    for target, rule in enumerate(network.rules, start=1):
        if rule.arity != network.size:
            raise ValueError(f"rule {target} has arity {rule.arity}, network has {network.size} nodes")
        for source, sign in enumerate(influences(rule), start=1):
            if sign.has_positive:
                graph.add_arc(source, target, POSITIVE)
            if sign.has_negative:
                graph.add_arc(source, target, NEGATIVE)
    logging.info(
        f"interaction graph: {network.size} vertices, {graph.count_arcs(POSITIVE)} positive arcs, "
        f"{graph.count_arcs(NEGATIVE)} negative arcs"
    )
    return graph


def matrices(graph: SignedDigraph) -> SignedAdjacencyMatrices:
    positive = np.zeros((graph.n, graph.n), dtype=np.int64)
    negative = np.zeros((graph.n, graph.n), dtype=np.int64)
    for arc in graph.arcs:
        if arc.sign == POSITIVE:
            positive[arc.source - 1, arc.target - 1] = 1
        else:
            negative[arc.source - 1, arc.target - 1] = -1
    return SignedAdjacencyMatrices(positive, negative)


def format_matrix(matrix: np.ndarray) -> str:
    return "\n".join(" ".join(str(int(v)) for v in row) for row in matrix)


def to_dot(graph: SignedDigraph, name: str = "interaction_graph") -> str:
    """
    DOT description with one node statement per vertex and one edge statement per
    arc. Positive arcs are solid and labelled "+", negative arcs dashed and "-".
    """
    lines = [f"digraph {name} {{"]
    for v in range(1, graph.n + 1):
        lines.append(f'  {v} [label="{v}"];')
    for arc in graph.arcs:
        style = "solid" if arc.sign == POSITIVE else "dashed"
        lines.append(f'  {arc.source} -> {arc.target} [label="{arc.sign}", style={style}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json(graph: SignedDigraph) -> str:
    return json.dumps(
        {
            "n": graph.n,
            "arcs": [{"from": arc.source, "to": arc.target, "sign": arc.sign} for arc in graph.arcs],
        }
    )
