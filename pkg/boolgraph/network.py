# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import logging
import re
from dataclasses import dataclass
from typing import Iterable, Sequence, Tuple

from .function import BooleanFunction
from .literals import parse_literal

_SIZE_RE = re.compile(r"^n\s*=\s*(\d+)$")


@dataclass(frozen=True)
class BooleanNetwork:
    """
    An ordered list of n Boolean functions over the same n variables; rule j
    governs node j.
    """

    rules: Tuple[BooleanFunction, ...]

    def __post_init__(self):
        if len(self.rules) == 0:
            raise ValueError("network must have at least one node")
        for j, rule in enumerate(self.rules, start=1):
            if rule.arity != len(self.rules):
                raise ValueError(f"rule {j} has arity {rule.arity}, network has {len(self.rules)} nodes")

    @classmethod
    def of(cls, rules: Iterable[BooleanFunction]) -> "BooleanNetwork":
        return cls(tuple(rules))

    @classmethod
    def from_decimals(cls, decimals: Sequence[int]) -> "BooleanNetwork":
        return cls(tuple(BooleanFunction.from_decimal(len(decimals), d) for d in decimals))

    @classmethod
    def from_literals(cls, literals: Sequence[str]) -> "BooleanNetwork":
        """Parses one literal per node; d: and e: forms may omit the arity."""
        return cls(tuple(parse_literal(text, arity=len(literals)) for text in literals))

    @property
    def size(self) -> int:
        return len(self.rules)

    def __len__(self):
        return self.size

    def __str__(self):
        return "(" + ", ".join(str(rule) for rule in self.rules) + ")"


def parse_network(text: str) -> BooleanNetwork:
    """
    Reads the network text format: a first line "n=<size>" followed by one
    function literal per node. Blank lines and "#" comments are ignored.
    """
    lines = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            lines.append(line)
    if not lines:
        raise ValueError("network file is empty")
    match = _SIZE_RE.match(lines[0])
    if not match:
        raise ValueError(f"network file must start with 'n=<size>', got {lines[0]!r}")
    size = int(match.group(1))
    literals = lines[1:]
    if len(literals) != size:
        raise ValueError(f"network declares n={size} but lists {len(literals)} rules")
    network = BooleanNetwork(tuple(parse_literal(literal, arity=size) for literal in literals))
    logging.info(f"loaded network of {size} nodes: {network}")
    return network


def load_network(path: str) -> BooleanNetwork:
    with open(path) as f:
        return parse_network(f.read())


def format_network(network: BooleanNetwork) -> str:
    lines = [f"n={network.size}"]
    lines.extend(f"b:{rule.render()}" for rule in network.rules)
    return "\n".join(lines) + "\n"
