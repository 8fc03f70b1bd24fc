# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import logging
import re
from dataclasses import dataclass
from typing import Callable, Iterator, List, Union

import numpy as np

from .function import BooleanFunction, check_arity

# Unicode glyphs accepted as synonyms of the ASCII operators.
OPERATOR_ALIASES = {"¬": "!", "∧": "&", "∨": "|"}

# Binding power of the binary operators; "!" binds tighter than both.
BINARY_BINDING = {"&": 2, "|": 1}

# Deepest parenthesis nesting the parser accepts.
MAX_NESTING_DEPTH = 100

_TOKEN_RE = re.compile(r"\s*(?:(x(\d+))|([!&|()])|(\S))")


class ExpressionSyntaxError(ValueError):
    """
    Syntax error in a Boolean expression.
    :param message: description of the problem.
    :param column: 1-based column of the offending character.
    """

    def __init__(self, message: str, column: int):
        super().__init__(f"{message} at column {column}")
        self.column = column


@dataclass(frozen=True)
class Var:
    index: int


@dataclass(frozen=True)
class Not:
    operand: "Expression"


@dataclass(frozen=True)
class And:
    left: "Expression"
    right: "Expression"


@dataclass(frozen=True)
class Or:
    left: "Expression"
    right: "Expression"


Expression = Union[Var, Not, And, Or]


@dataclass(frozen=True)
class _Token:
    kind: str
    text: str
    column: int


def _tokenize(text: str) -> Iterator[_Token]:
    for glyph, ascii_op in OPERATOR_ALIASES.items():
        # aliases are single characters, so columns stay aligned
        text = text.replace(glyph, ascii_op)
    position = 0
    while position < len(text):
        if text[position:].strip() == "":
            break
        match = _TOKEN_RE.match(text, position)
        column = match.start(match.lastindex) + 1
        if match.group(1):
            yield _Token("var", match.group(2), column)
        elif match.group(3):
            yield _Token(match.group(3), match.group(3), column)
        else:
            raise ExpressionSyntaxError(f"unexpected character {match.group(4)!r}", column)
        position = match.end()
    yield _Token("end", "", len(text) + 1)


class _Parser:
    """
    Recursive-descent parser with precedence climbing over "!", "&" and "|".
    Runs of "!" are folded by parity; only parentheses nest the call stack.
    """

    def __init__(self, text: str, arity: int):
        self.tokens: List[_Token] = list(_tokenize(text))
        self.position = 0
        self.arity = arity
        self.depth = 0

    @property
    def token(self) -> _Token:
        return self.tokens[self.position]

    def advance(self) -> _Token:
        token = self.token
        self.position += 1
        return token

    def parse(self) -> Expression:
        expr = self.expression(0)
        if self.token.kind != "end":
            raise ExpressionSyntaxError(f"unexpected {self.token.text!r}", self.token.column)
        return expr

    def expression(self, min_binding: int) -> Expression:
        left = self.unary()
        while self.token.kind in BINARY_BINDING and BINARY_BINDING[self.token.kind] > min_binding:
            op = self.advance().kind
            right = self.expression(BINARY_BINDING[op])
            left = And(left, right) if op == "&" else Or(left, right)
        return left

    def unary(self) -> Expression:
        negations = 0
        while self.token.kind == "!":
            self.advance()
            negations += 1
        operand = self.primary()
        return Not(operand) if negations % 2 else operand

    def primary(self) -> Expression:
        token = self.advance()
        if token.kind == "(":
            if self.depth >= MAX_NESTING_DEPTH:
                raise ExpressionSyntaxError(f"parentheses nested deeper than {MAX_NESTING_DEPTH}", token.column)
            self.depth += 1
            inner = self.expression(0)
            closing = self.advance()
            if closing.kind != ")":
                raise ExpressionSyntaxError("expected ')'", closing.column)
            self.depth -= 1
            return inner
        if token.kind == "var":
            index = int(token.text)
            if index < 1:
                raise ExpressionSyntaxError(f"variable x{token.text} does not exist", token.column)
            if index > self.arity:
                raise ExpressionSyntaxError(f"variable x{index} exceeds arity {self.arity}", token.column)
            return Var(index)
        if token.kind == "end":
            raise ExpressionSyntaxError("unexpected end of expression", token.column)
        raise ExpressionSyntaxError(f"unexpected {token.text!r}", token.column)


def parse(text: str, arity: int) -> Expression:
    """
    Parses an expression over x1..x<arity>. "!" binds tightest, then "&", then "|";
    whitespace is ignored and the glyphs ¬ ∧ ∨ are accepted as synonyms.
    """
    check_arity(arity)
    return _Parser(text, arity).parse()


def _fold(expr: Expression, leaf: Callable, negate: Callable, combine: Callable):
    """
    Post-order fold over the tree with an explicit stack; tree depth is unbounded.
    """
    results = []
    stack = [(expr, False)]
    while stack:
        node, expanded = stack.pop()
        if isinstance(node, Var):
            results.append(leaf(node))
        elif not isinstance(node, (Not, And, Or)):
            raise TypeError(f"not an expression node: {node!r}")
        elif not expanded:
            stack.append((node, True))
            if isinstance(node, Not):
                stack.append((node.operand, False))
            else:
                stack.append((node.right, False))
                stack.append((node.left, False))
        elif isinstance(node, Not):
            results.append(negate(results.pop()))
        else:
            right = results.pop()
            left = results.pop()
            results.append(combine(node, left, right))
    return results[0]


def _evaluate_table(expr: Expression, arity: int) -> np.ndarray:
    indices = np.arange(1 << arity, dtype=np.int64)
    return _fold(
        expr,
        lambda var: ((indices >> (arity - var.index)) & 1).astype(bool),
        lambda table: ~table,
        lambda node, left, right: left & right if isinstance(node, And) else left | right,
    )


def compile(expr: Expression, arity: int) -> BooleanFunction:
    """Evaluates expr at every input index and packs the results into a truth table."""
    check_arity(arity)
    if max_variable(expr) > arity:
        raise ValueError(f"expression references x{max_variable(expr)} beyond arity {arity}")
    return BooleanFunction.from_table(_evaluate_table(expr, arity))


def max_variable(expr: Expression) -> int:
    return _fold(expr, lambda var: var.index, lambda index: index, lambda node, left, right: max(left, right))


def render(expr: Expression) -> str:
    """Fully parenthesised ASCII rendering; `parse` reads it back within MAX_NESTING_DEPTH."""
    return _fold(
        expr,
        lambda var: f"x{var.index}",
        lambda text: f"!{text}",
        lambda node, left, right: f"({left} {'&' if isinstance(node, And) else '|'} {right})",
    )


def parse_function(text: str, arity: int) -> BooleanFunction:
    function = compile(parse(text, arity), arity)
    logging.debug(f"compiled expression {text!r} at arity {arity} to decimal {function.decimal}")
    return function
