# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import json

import pandas as pd
from tabulate import tabulate

from .classification import FunctionClass, classify as classify_function
from .classification import enumerate_class, paired_census
from .function import BooleanFunction
from .literals import parse_literal


def classify(args) -> str:
    function = parse_literal(args.function)
    report = classify_function(function)
    if args.format == "json":
        return json.dumps(report.to_dict()) + "\n"
    rows = [
        [f"x{i}", sign.value, "yes" if i in report.essential else "no"]
        for i, sign in enumerate(report.signs, start=1)
    ]
    lines = [
        f"function: d:{function.decimal}@{function.arity} bits {function.render()}",
        tabulate(rows, headers=["variable", "influence", "essential"], tablefmt="plain"),
    ]
    for function_class in FunctionClass:
        lines.append(f"{function_class.value}: {str(report.member_of(function_class)).lower()}")
    if report.witness is not None:
        w = report.witness
        lines.append(
            "ncf witness: order=" + ",".join(f"x{v}" for v in w.order)
            + " inputs=" + "".join(map(str, w.inputs))
            + " outputs=" + "".join(map(str, w.outputs))
        )
    return "\n".join(lines) + "\n"


def census(args) -> str:
    _validate(args)
    function_class = FunctionClass.from_name(args.function_class)
    if args.paired:
        rows = paired_census(args.arity, function_class, workers=args.workers)
        df = pd.DataFrame(
            [
                (_bits(args.arity, p), p, _bits(args.arity, q), q)
                for p, q in rows
            ],
            columns=["pbf", "pbf_decimal", "nbf", "nbf_decimal"],
        )
        return df.to_csv(index=False, lineterminator="\n")
    members = enumerate_class(args.arity, function_class, workers=args.workers)
    if args.format == "count":
        return f"{len(members)}\n"
    if args.format == "csv":
        df = pd.DataFrame({"decimal": members, "bitstring": [_bits(args.arity, v) for v in members]})
        return df.to_csv(index=False, lineterminator="\n")
    return "".join(f"{v}\n" for v in members)


def _bits(arity: int, value: int) -> str:
    return BooleanFunction.from_decimal(arity, value).render()


def _validate(args):
    if args.arity < 1:
        raise ValueError("arity must be > 0")
    if args.workers < 1:
        raise ValueError("workers must be > 0")
    if args.paired and args.format != "csv":
        raise ValueError("--paired requires --format csv")
