"""Classical reference semantics used as verification ground truth.

These are deliberately plain, irreversible computations: the circuits
under test must agree with them, so they never share code with the
builders.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Tuple


class UnknownTargetError(KeyError):
    """Requested target function is not defined."""


def compare_oracle(a: int, b: int, width: int) -> Tuple[int, int, int]:
    """Unsigned comparison of two width-bit values as a (LT, EQ, GT) one-hot."""
    if width < 1:
        raise ValueError("width must be at least 1")
    if not 0 <= a < 1 << width or not 0 <= b < 1 << width:
        raise ValueError(f"operands must fit in {width} bits")
    return (int(a < b), int(a == b), int(a > b))


def decode_oracle(x: int, width: int) -> Tuple[int, ...]:
    """One-hot vector of length 2^width with bit x set."""
    if width < 1:
        raise ValueError("width must be at least 1")
    if not 0 <= x < 1 << width:
        raise ValueError(f"value {x} does not fit in {width} bits")
    return tuple(int(i == x) for i in range(1 << width))


@dataclass(frozen=True)
class TargetFunction:
    """A small combinational function given as a complete code table.

    Input code packs the declared inputs first-listed = LSB; output code
    packs the declared outputs the same way.
    """

    name: str
    inputs: Tuple[str, ...]
    outputs: Tuple[str, ...]
    table: Tuple[int, ...]

    @property
    def arity(self) -> int:
        return len(self.inputs)

    @property
    def out_arity(self) -> int:
        return len(self.outputs)


def _tabulate(inputs, outputs, fn) -> TargetFunction:
    n = len(inputs)
    rows = []
    for code in range(1 << n):
        bits = tuple((code >> i) & 1 for i in range(n))
        out = fn(*bits)
        rows.append(sum(b << i for i, b in enumerate(out)))
    return TargetFunction(fn.__name__, tuple(inputs), tuple(outputs), tuple(rows))


def _full_sub(a, b, bin_):
    diff = a ^ b ^ bin_
    borrow = ((1 - a) & b) | (bin_ & (1 - (a ^ b)))
    return (diff, borrow)


_TARGETS: Dict[str, TargetFunction] = {}


def _register(name, inputs, outputs, fn):
    rows = []
    n = len(inputs)
    for code in range(1 << n):
        bits = tuple((code >> i) & 1 for i in range(n))
        out = fn(*bits)
        rows.append(sum(b << i for i, b in enumerate(out)))
    _TARGETS[name] = TargetFunction(name, tuple(inputs), tuple(outputs), tuple(rows))


_register("AND", ("a", "b"), ("y",), lambda a, b: (a & b,))
_register("NAND", ("a", "b"), ("y",), lambda a, b: (1 - (a & b),))
_register("OR", ("a", "b"), ("y",), lambda a, b: (a | b,))
_register("NOR", ("a", "b"), ("y",), lambda a, b: (1 - (a | b),))
_register("XOR", ("a", "b"), ("y",), lambda a, b: (a ^ b,))
_register("XNOR", ("a", "b"), ("y",), lambda a, b: (1 - (a ^ b),))
_register("HALF_ADDER", ("a", "b"), ("sum", "carry"), lambda a, b: (a ^ b, a & b))
_register("HALF_SUB", ("a", "b"), ("diff", "borrow"), lambda a, b: (a ^ b, (1 - a) & b))
_register(
    "FULL_ADDER",
    ("a", "b", "cin"),
    ("sum", "carry"),
    lambda a, b, c: (a ^ b ^ c, (a & b) | (b & c) | (a & c)),
)
_register("FULL_SUB", ("a", "b", "bin"), ("diff", "borrow"), _full_sub)
_register(
    "COMPARE1",
    ("a", "b"),
    ("lt", "eq", "gt"),
    lambda a, b: compare_oracle(a, b, 1),
)

TARGET_NAMES = tuple(_TARGETS)


def target_function(name: str) -> TargetFunction:
    """Look up a canonical target table by name."""
    try:
        return _TARGETS[name]
    except KeyError:
        raise UnknownTargetError(f"unknown target {name!r}") from None
