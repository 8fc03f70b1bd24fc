# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .function import BooleanFunction, check_variable


class InfluenceSign(Enum):
    """
    Sign of a variable's influence on a function, read off its 2-bit fragments:
    "01" witnesses a positive influence and "10" a negative one.
    """

    NONE = "none"
    POSITIVE = "positive"
    NEGATIVE = "negative"
    DUAL = "dual"

    @classmethod
    def from_witnesses(cls, positive: bool, negative: bool) -> "InfluenceSign":
        if positive and negative:
            return cls.DUAL
        if positive:
            return cls.POSITIVE
        if negative:
            return cls.NEGATIVE
        return cls.NONE

    def flipped(self) -> "InfluenceSign":
        if self is InfluenceSign.POSITIVE:
            return InfluenceSign.NEGATIVE
        if self is InfluenceSign.NEGATIVE:
            return InfluenceSign.POSITIVE
        return self

    @property
    def has_positive(self) -> bool:
        return self in (InfluenceSign.POSITIVE, InfluenceSign.DUAL)

    @property
    def has_negative(self) -> bool:
        return self in (InfluenceSign.NEGATIVE, InfluenceSign.DUAL)


def fragment_text(fragment: BooleanFunction) -> str:
    """
    Renders a fragment. A 2-bit fragment (one free variable) is written with the
    free-variable-0 bit first, e.g. "01" for x and "10" for not x; wider fragments
    use the ordinary MSB-first function rendering.
    """
    if fragment.arity == 0:
        return str(fragment.value)
    if fragment.arity == 1:
        return f"{fragment.value & 1}{fragment.value >> 1}"
    return fragment.render()


@dataclass(frozen=True)
class DecompositionTable:
    """
    Fragments of f obtained by fixing the variables in `fixed_set`.
    :param function: the decomposed function.
    :param fixed_set: fixed variable indices, ascending.
    :param entries: one fragment per assignment of the fixed set, keyed by the
        assignment tuple and ordered with lower-numbered variables more significant.
    """

    function: BooleanFunction
    fixed_set: Tuple[int, ...]
    entries: Dict[Tuple[int, ...], BooleanFunction]

    @property
    def free_variables(self) -> Tuple[int, ...]:
        return tuple(v for v in range(1, self.function.arity + 1) if v not in self.fixed_set)

    def fragment(self, assignment: Iterable[int]) -> BooleanFunction:
        return self.entries[tuple(assignment)]

    def texts(self) -> Dict[str, str]:
        return {"".join(map(str, key)): fragment_text(frag) for key, frag in self.entries.items()}

    def lines(self) -> List[str]:
        return [f"{key} {text}" for key, text in self.texts().items()]

    def reassemble(self) -> BooleanFunction:
        """Places every fragment back at its input indices, rebuilding the function."""
        arity = self.function.arity
        tensor = np.zeros((2,) * arity, dtype=np.uint8)
        axes = [v - 1 for v in self.fixed_set]
        free_shape = (2,) * (arity - len(self.fixed_set))
        for assignment, fragment in self.entries.items():
            index = [slice(None)] * arity
            for axis, bit in zip(axes, assignment):
                index[axis] = bit
            tensor[tuple(index)] = fragment.table().reshape(free_shape)
        return BooleanFunction.from_table(tensor.reshape(-1))


def decompose(f: BooleanFunction, fixed_set: Iterable[int]) -> DecompositionTable:
    """
    Segments f by fixing every variable in fixed_set. Each entry is the restriction
    of f at one assignment of the fixed set, over the remaining variables in
    ascending order. Fixing a single variable yields the two cofactors; fixing all
    but one yields the 2-bit fragments.
    """
    fixed = tuple(sorted(set(fixed_set)))
    if not fixed:
        raise ValueError("fixed set must not be empty")
    for v in fixed:
        check_variable(f.arity, v)

    tensor = f.table().reshape((2,) * f.arity)
    axes = [v - 1 for v in fixed]
    entries = {}
    for assignment in itertools.product((0, 1), repeat=len(fixed)):
        index = [slice(None)] * f.arity
        for axis, bit in zip(axes, assignment):
            index[axis] = bit
        entries[assignment] = BooleanFunction.from_table(tensor[tuple(index)].reshape(-1))
    return DecompositionTable(f, fixed, entries)


def influence(f: BooleanFunction, variable: int) -> InfluenceSign:
    """Sign of x_variable's influence on f, from the 2-bit fragments with every other variable fixed."""
    check_variable(f.arity, variable)
    if f.arity == 1:
        texts = [fragment_text(f)]
    else:
        others = [v for v in range(1, f.arity + 1) if v != variable]
        texts = decompose(f, others).texts().values()
    return InfluenceSign.from_witnesses("01" in texts, "10" in texts)


def influences(f: BooleanFunction) -> Tuple[InfluenceSign, ...]:
    """Influence sign of every variable, x_1 first."""
    table = f.table().reshape((2,) * f.arity)
    signs = []
    for axis in range(f.arity):
        low = np.take(table, 0, axis=axis)
        high = np.take(table, 1, axis=axis)
        signs.append(InfluenceSign.from_witnesses(bool(np.any(low < high)), bool(np.any(low > high))))
    return tuple(signs)


def essential_variables(f: BooleanFunction) -> Tuple[int, ...]:
    return tuple(i + 1 for i, sign in enumerate(influences(f)) if sign is not InfluenceSign.NONE)
