# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import re
from typing import Optional

from .exprparser import parse_function
from .function import BooleanFunction

_DECIMAL_RE = re.compile(r"^(\d+)(?:@(\d+))?$")
_EXPRESSION_RE = re.compile(r"^(?:(\d+):)?(.+)$", re.DOTALL)


def parse_literal(text: str, arity: Optional[int] = None) -> BooleanFunction:
    """
    Parses a function literal in one of three forms:
      d:<decimal>@<arity>   e.g. d:21@3
      b:<bitstring>         e.g. b:00010101 (MSB-first)
      e:<arity>:<expr>      e.g. e:3:!x2&!x3
    :param arity: default arity for d:/e: forms that omit it (network files).
        When given, the parsed function must have this arity.
    """
    text = text.strip()
    prefix, sep, body = text.partition(":")
    if not sep or not body:
        raise ValueError(f"malformed function literal {text!r}: expected d:, b: or e: prefix")
    if prefix == "d":
        match = _DECIMAL_RE.match(body)
        if not match:
            raise ValueError(f"malformed decimal literal {text!r}: expected d:<value>@<arity>")
        literal_arity = int(match.group(2)) if match.group(2) else arity
        if literal_arity is None:
            raise ValueError(f"decimal literal {text!r} needs an arity (d:<value>@<arity>)")
        function = BooleanFunction.from_decimal(literal_arity, int(match.group(1)))
    elif prefix == "b":
        function = BooleanFunction.from_bitstring(body)
    elif prefix == "e":
        match = _EXPRESSION_RE.match(body)
        literal_arity = int(match.group(1)) if match.group(1) else arity
        if literal_arity is None:
            raise ValueError(f"expression literal {text!r} needs an arity (e:<arity>:<expr>)")
        function = parse_function(match.group(2), literal_arity)
    else:
        raise ValueError(f"unknown function literal prefix {prefix!r} in {text!r}")
    if arity is not None and function.arity != arity:
        raise ValueError(f"literal {text!r} has arity {function.arity}, expected {arity}")
    return function


def format_literal(function: BooleanFunction) -> str:
    return f"d:{function.decimal}@{function.arity}"
