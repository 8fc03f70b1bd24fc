# Copyright (c) Microsoft Corporation.
# Licensed under the MIT License.

from dataclasses import dataclass
from typing import Sequence, Tuple

import numpy as np

# Single-function truth tables stay at or below 65,536 bits.
MAX_ARITY = 16


class ResourceLimitError(ValueError):
    """
    Raised when a request exceeds one of the resource caps (arity, census arity,
    state-graph size).
    """


def check_arity(arity: int, minimum: int = 1):
    if not isinstance(arity, (int, np.integer)) or isinstance(arity, bool):
        raise ValueError(f"arity must be an integer, got {arity!r}")
    if arity < minimum:
        raise ValueError(f"arity must be >= {minimum}, got {arity}")
    if arity > MAX_ARITY:
        raise ResourceLimitError(f"arity must be <= {MAX_ARITY}, got {arity}")


@dataclass(frozen=True)
class BooleanFunction:
    """
    An n-variable Boolean function stored as a packed truth table.

    Bit k of `value` is f evaluated at the assignment encoded by k, where
    k = sum(x_m * 2^(n-m)), i.e. x_1 is the most significant index bit. The
    decimal identity of the function is `value` itself.
    :param arity: number of variables x_1..x_n. Arity 0 (a bare constant) only
        arises from restricting an arity-1 function.
    :param value: packed table, 0 <= value < 2^(2^arity).
    """

    arity: int
    value: int

    def __post_init__(self):
        check_arity(self.arity, minimum=0)
        if self.value < 0 or self.value >> self.size:
            raise ValueError(f"value {self.value} does not fit a table of arity {self.arity}")

    @classmethod
    def from_decimal(cls, arity: int, value: int) -> "BooleanFunction":
        check_arity(arity)
        if value < 0:
            raise ValueError(f"decimal value must be non-negative, got {value}")
        if value >> (1 << arity):
            raise ValueError(f"decimal value {value} too large for arity {arity} (max {(1 << (1 << arity)) - 1})")
        return cls(arity, int(value))

    @classmethod
    def from_bitstring(cls, text: str) -> "BooleanFunction":
        """Inverse of `render()`: leftmost character is the bit at the highest index."""
        length = len(text)
        if length < 2 or length & (length - 1):
            raise ValueError(f"bitstring length must be a power of two >= 2, got {length}")
        bad = set(text) - {"0", "1"}
        if bad:
            raise ValueError(f"bitstring may only contain '0' and '1', got {''.join(sorted(bad))!r}")
        arity = length.bit_length() - 1
        check_arity(arity)
        return cls(arity, int(text, 2))

    def __repr__(self):
        return f"BooleanFunction(arity={self.arity}, value={self.value}, bits={self.render()})"

    @classmethod
    def from_table(cls, bits: Sequence[int]) -> "BooleanFunction":
        """Builds a function from bits listed in ascending input-index order."""
        length = len(bits)
        if length < 1 or length & (length - 1):
            raise ValueError(f"table length must be a power of two, got {length}")
        arity = length.bit_length() - 1
        check_arity(arity, minimum=0)
        bits = np.asarray(bits, dtype=np.uint8)
        if length < 8:
            return cls(arity, sum(1 << k for k in range(length) if bits[k]))
        packed = np.packbits(bits != 0, bitorder="little")
        return cls(arity, int.from_bytes(packed.tobytes(), "little"))

    @classmethod
    def constant(cls, arity: int, bit: int) -> "BooleanFunction":
        check_arity(arity, minimum=0)
        return cls(arity, (1 << (1 << arity)) - 1 if bit else 0)

    @classmethod
    def variable(cls, arity: int, index: int) -> "BooleanFunction":
        """The projection f(x_1..x_n) = x_index."""
        check_arity(arity)
        check_variable(arity, index)
        shift = arity - index
        return cls.from_table([(k >> shift) & 1 for k in range(1 << arity)])

    @property
    def size(self) -> int:
        return 1 << self.arity

    @property
    def decimal(self) -> int:
        return self.value

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def is_constant(self) -> bool:
        return self.value == 0 or self.value == self.full_mask

    def table(self) -> np.ndarray:
        """Truth table as a uint8 array in ascending input-index order."""
        if self.arity <= 6:
            return ((np.uint64(self.value) >> np.arange(self.size, dtype=np.uint64)) & np.uint64(1)).astype(np.uint8)
        raw = self.value.to_bytes(self.size // 8, "little")
        return np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")

    def render(self) -> str:
        """MSB-first bitstring: leftmost character is the bit at index 2^n - 1."""
        return format(self.value, f"0{self.size}b")

    def evaluate(self, assignment: Sequence[int]) -> int:
        if len(assignment) != self.arity:
            raise ValueError(f"assignment has {len(assignment)} bits, function has arity {self.arity}")
        return (self.value >> assignment_index(assignment)) & 1

    def complement(self) -> "BooleanFunction":
        return BooleanFunction(self.arity, self.full_mask ^ self.value)

    def restrict(self, variable: int, bit: int) -> "BooleanFunction":
        """
        Cofactor of f with x_variable bound to bit. The remaining variables keep
        their relative order, so the result has arity n-1.
        """
        check_variable(self.arity, variable)
        if bit not in (0, 1):
            raise ValueError(f"bit must be 0 or 1, got {bit}")
        tensor = self.table().reshape((2,) * self.arity)
        return BooleanFunction.from_table(np.take(tensor, bit, axis=variable - 1).reshape(-1))

    def __str__(self):
        return f"f_{self.value}"


def assignment_index(assignment: Sequence[int]) -> int:
    index = 0
    for bit in assignment:
        if bit not in (0, 1):
            raise ValueError(f"assignment bits must be 0 or 1, got {bit!r}")
        index = (index << 1) | bit
    return index


def index_assignment(index: int, arity: int) -> Tuple[int, ...]:
    return tuple((index >> (arity - m)) & 1 for m in range(1, arity + 1))


def check_variable(arity: int, variable: int):
    if not 1 <= variable <= arity:
        raise ValueError(f"variable index must be in 1..{arity}, got {variable}")
