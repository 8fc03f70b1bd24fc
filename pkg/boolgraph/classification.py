# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .decomposition import InfluenceSign, influences
from .function import BooleanFunction, ResourceLimitError, index_assignment

# Largest arity scanned exhaustively (2^(2^4) = 65,536 candidates).
CENSUS_MAX_ARITY = 4
CENSUS_CHUNK_SIZE = 16384


class FunctionClass(Enum):
    ONLY_POSITIVE = "only_positive"
    ONLY_NEGATIVE = "only_negative"
    COMPLETE_POSITIVE = "complete_positive"
    COMPLETE_NEGATIVE = "complete_negative"
    NESTED_CANALIZING = "nested_canalizing"

    @classmethod
    def from_name(cls, name: str) -> "FunctionClass":
        key = name.strip().lower().replace("-", "_")
        key = CLASS_ALIASES.get(key, key)
        try:
            return cls(key)
        except ValueError:
            raise ValueError(f"unknown function class {name!r}") from None

    @property
    def complement(self) -> Optional["FunctionClass"]:
        """Class the complements of this class's members form, for the signed classes."""
        return _COMPLEMENT_CLASS.get(self)


CLASS_ALIASES = {
    "pbf": "only_positive",
    "nbf": "only_negative",
    "complete_pbf": "complete_positive",
    "complete_nbf": "complete_negative",
    "ncf": "nested_canalizing",
}

_COMPLEMENT_CLASS = {
    FunctionClass.ONLY_POSITIVE: FunctionClass.ONLY_NEGATIVE,
    FunctionClass.ONLY_NEGATIVE: FunctionClass.ONLY_POSITIVE,
    FunctionClass.COMPLETE_POSITIVE: FunctionClass.COMPLETE_NEGATIVE,
    FunctionClass.COMPLETE_NEGATIVE: FunctionClass.COMPLETE_POSITIVE,
}


@dataclass(frozen=True)
class NestedCanalizingWitness:
    """
    f(x) = b_1 if x_σ1 = a_1, else b_2 if x_σ2 = a_2, ..., else b_n if x_σn = a_n,
    else not b_n.
    :param order: variable order σ (1-based variable indices).
    :param inputs: canalizing inputs a_1..a_n.
    :param outputs: canalized outputs b_1..b_n.
    """

    order: Tuple[int, ...]
    inputs: Tuple[int, ...]
    outputs: Tuple[int, ...]

    def evaluate(self, assignment: Sequence[int]) -> int:
        for variable, a, b in zip(self.order, self.inputs, self.outputs):
            if assignment[variable - 1] == a:
                return b
        return 1 - self.outputs[-1]

    def to_function(self, arity: int) -> BooleanFunction:
        return BooleanFunction.from_table([self.evaluate(index_assignment(k, arity)) for k in range(1 << arity)])

    def to_dict(self) -> dict:
        return {"order": list(self.order), "inputs": list(self.inputs), "outputs": list(self.outputs)}


@dataclass(frozen=True)
class ClassificationReport:
    function: BooleanFunction
    signs: Tuple[InfluenceSign, ...]
    essential: Tuple[int, ...]
    memberships: Dict[FunctionClass, bool]
    witness: Optional[NestedCanalizingWitness]

    def member_of(self, function_class: FunctionClass) -> bool:
        return self.memberships[function_class]

    def to_dict(self) -> dict:
        return {
            "arity": self.function.arity,
            "decimal": self.function.decimal,
            "bitstring": self.function.render(),
            "influences": [sign.value for sign in self.signs],
            "essential": list(self.essential),
            "classes": {cls.value: self.memberships[cls] for cls in FunctionClass},
            "ncf_witness": self.witness.to_dict() if self.witness else None,
        }


def _memberships(signs: Sequence[InfluenceSign], ncf: bool) -> Dict[FunctionClass, bool]:
    any_positive = any(s.has_positive for s in signs)
    any_negative = any(s.has_negative for s in signs)
    return {
        FunctionClass.ONLY_POSITIVE: any_positive and not any_negative,
        FunctionClass.ONLY_NEGATIVE: any_negative and not any_positive,
        FunctionClass.COMPLETE_POSITIVE: all(s is InfluenceSign.POSITIVE for s in signs),
        FunctionClass.COMPLETE_NEGATIVE: all(s is InfluenceSign.NEGATIVE for s in signs),
        FunctionClass.NESTED_CANALIZING: ncf,
    }


@lru_cache(maxsize=65536)
def _witness(f: BooleanFunction) -> Optional[NestedCanalizingWitness]:
    """Witness over the positions 1..arity of f, memoized per subfunction."""
    if f.arity == 1:
        if f.is_constant():
            return None
        return NestedCanalizingWitness((1,), (0,), (f.value & 1,))
    # every variable of an NCF is essential
    if InfluenceSign.NONE in influences(f):
        return None
    for position in range(1, f.arity + 1):
        for a in (0, 1):
            canalized = f.restrict(position, a)
            if not canalized.is_constant():
                continue
            rest = _witness(f.restrict(position, 1 - a))
            if rest is not None:
                return NestedCanalizingWitness(
                    (position,) + tuple(p if p < position else p + 1 for p in rest.order),
                    (a,) + rest.inputs,
                    (canalized.value & 1,) + rest.outputs,
                )
    return None


def nested_canalizing_witness(f: BooleanFunction) -> Optional[NestedCanalizingWitness]:
    """
    Searches variables ascending and canalizing input 0 before 1, so the witness
    returned for a given function is always the same one.
    """
    if f.arity < 1:
        raise ValueError("nested canalizing test needs arity >= 1")
    return _witness(f)


def is_nested_canalizing(f: BooleanFunction) -> bool:
    return nested_canalizing_witness(f) is not None


def classify(f: BooleanFunction) -> ClassificationReport:
    if f.arity < 1:
        raise ValueError("classification needs arity >= 1")
    signs = influences(f)
    witness = nested_canalizing_witness(f)
    essential = tuple(i + 1 for i, s in enumerate(signs) if s is not InfluenceSign.NONE)
    return ClassificationReport(f, signs, essential, _memberships(signs, witness is not None), witness)


def _check_census_arity(arity: int):
    if arity < 1:
        raise ValueError(f"census arity must be >= 1, got {arity}")
    if arity > CENSUS_MAX_ARITY:
        raise ResourceLimitError(f"census arity must be <= {CENSUS_MAX_ARITY}, got {arity}")


@lru_cache(maxsize=None)
def _cofactor_indices(arity: int, variable: int, bit: int) -> np.ndarray:
    shift = arity - variable
    return np.array([k for k in range(1 << arity) if (k >> shift) & 1 == bit], dtype=np.int64)


def _tables(arity: int, values: np.ndarray) -> np.ndarray:
    bits = np.arange(1 << arity, dtype=np.uint64)
    return ((values[:, None] >> bits[None, :]) & np.uint64(1)).astype(bool)


def _cofactor_values(tables: np.ndarray, indices: np.ndarray) -> np.ndarray:
    weights = np.uint64(1) << np.arange(len(indices), dtype=np.uint64)
    return (tables[:, indices].astype(np.uint64) * weights).sum(axis=1)


def _ncf_mask(arity: int, tables: np.ndarray) -> np.ndarray:
    if arity == 1:
        return tables[:, 0] != tables[:, 1]
    smaller = _ncf_lookup(arity - 1)
    full = np.uint64((1 << (1 << (arity - 1))) - 1)
    mask = np.zeros(tables.shape[0], dtype=bool)
    for variable in range(1, arity + 1):
        for a in (0, 1):
            canalized = _cofactor_values(tables, _cofactor_indices(arity, variable, a))
            rest = _cofactor_values(tables, _cofactor_indices(arity, variable, 1 - a))
            mask |= ((canalized == 0) | (canalized == full)) & smaller[rest.astype(np.int64)]
    return mask


@lru_cache(maxsize=None)
def _ncf_lookup(arity: int) -> np.ndarray:
    """NCF membership of every function of the given arity, indexed by decimal."""
    values = np.arange(1 << (1 << arity), dtype=np.uint64)
    return _ncf_mask(arity, _tables(arity, values))


def _class_mask(arity: int, function_class: FunctionClass, values: np.ndarray) -> np.ndarray:
    tables = _tables(arity, values)
    if function_class is FunctionClass.NESTED_CANALIZING:
        return _ncf_mask(arity, tables)
    positive = np.zeros((len(values), arity), dtype=bool)
    negative = np.zeros((len(values), arity), dtype=bool)
    for variable in range(1, arity + 1):
        low = tables[:, _cofactor_indices(arity, variable, 0)]
        high = tables[:, _cofactor_indices(arity, variable, 1)]
        positive[:, variable - 1] = (~low & high).any(axis=1)
        negative[:, variable - 1] = (low & ~high).any(axis=1)
    if function_class is FunctionClass.ONLY_POSITIVE:
        return positive.any(axis=1) & ~negative.any(axis=1)
    if function_class is FunctionClass.ONLY_NEGATIVE:
        return negative.any(axis=1) & ~positive.any(axis=1)
    if function_class is FunctionClass.COMPLETE_POSITIVE:
        return (positive & ~negative).all(axis=1)
    return (negative & ~positive).all(axis=1)


def enumerate_class(arity: int, function_class: FunctionClass, workers: int = 1) -> List[int]:
    """
    Exhaustive scan of all 2^(2^arity) functions, returning the decimals of the
    members of function_class in ascending order. The scan is split into disjoint
    decimal ranges that may run on `workers` threads; results are merged in range
    order.
    """
    _check_census_arity(arity)
    if workers < 1:
        raise ValueError(f"workers must be > 0, got {workers}")
    total = 1 << (1 << arity)
    ranges = [(start, min(start + CENSUS_CHUNK_SIZE, total)) for start in range(0, total, CENSUS_CHUNK_SIZE)]

    def scan(bounds: Tuple[int, int]) -> np.ndarray:
        start, stop = bounds
        mask = _class_mask(arity, function_class, np.arange(start, stop, dtype=np.uint64))
        return np.nonzero(mask)[0] + start

    with ThreadPoolExecutor(max_workers=workers) as executor:
        chunks = list(executor.map(scan, ranges))
    members = [int(v) for chunk in chunks for v in chunk]
    logging.info(f"census arity={arity} class={function_class.value}: scanned {total} functions, {len(members)} members")
    return members


def count_class(arity: int, function_class: FunctionClass, workers: int = 1) -> int:
    return len(enumerate_class(arity, function_class, workers=workers))


def paired_census(arity: int, function_class: FunctionClass, workers: int = 1) -> List[Tuple[int, int]]:
    """
    Rows of (positive member, negative member) joined by complementation, ordered by
    the positive member, the way the positive/negative census tables pair them.
    """
    if function_class.complement is None:
        raise ValueError(f"class {function_class.value} has no complement-paired counterpart")
    positive_class = function_class
    if function_class in (FunctionClass.ONLY_NEGATIVE, FunctionClass.COMPLETE_NEGATIVE):
        positive_class = function_class.complement
    full = (1 << (1 << arity)) - 1
    return [(v, full - v) for v in enumerate_class(arity, positive_class, workers=workers)]
