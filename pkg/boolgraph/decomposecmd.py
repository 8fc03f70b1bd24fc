# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import json
import logging

from .decomposition import decompose as decompose_function
from .decomposition import influence as variable_influence
from .decomposition import influences
from .function import check_variable
from .literals import parse_literal


def parse_index_list(text: str) -> list:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise ValueError(f"expected a comma separated list of variable indices, got {text!r}") from None


def decompose(args) -> str:
    """
    Prints one line per assignment of the fixed variables: "<assignment> <fragment>",
    assignments ascending.
    """
    function = parse_literal(args.function)
    fixed = parse_index_list(args.fix)
    _validate_fixed(fixed, function.arity)
    logging.info(f"decomposing {function} (arity {function.arity}) over fixed set {fixed}")
    table = decompose_function(function, fixed)
    if args.format == "json":
        return json.dumps({"decimal": function.decimal, "arity": function.arity, "fixed": list(table.fixed_set), "fragments": table.texts()}) + "\n"
    return "\n".join(table.lines()) + "\n"


def influence(args) -> str:
    function = parse_literal(args.function)
    if args.variable is not None:
        check_variable(function.arity, args.variable)
        signs = {args.variable: variable_influence(function, args.variable)}
    else:
        signs = {i: sign for i, sign in enumerate(influences(function), start=1)}
    if args.format == "json":
        return json.dumps({f"x{i}": sign.value for i, sign in signs.items()}) + "\n"
    return "".join(f"x{i} {sign.value}\n" for i, sign in signs.items())


def _validate_fixed(fixed: list, arity: int):
    if len(fixed) == 0:
        raise ValueError("--fix needs at least one variable index")
    if len(set(fixed)) != len(fixed):
        raise ValueError(f"--fix lists a variable twice: {fixed}")
    for v in fixed:
        check_variable(arity, v)
