"""One-hot n-to-2^n decoder builder.

The 2-bit base cell wires the INVENTIVE gate with constants (c,d)=(0,1):
its R output is already ~a.~b (= d0), two NOTs recover a.~b (= d1) and
xnor(a,b) from S and P, and one Feynman gate turns xnor ^ ~a.~b into
a.b (= d3); Q is ~a.b (= d2) as-is. Each extension to one more input
bit x routes every existing output d_i through a Fredkin gate controlled
by x with a fresh 0 line, splitting it into ~x.d_i and x.d_i; the spent
control line is the extension's single garbage.

Measured cost: 2^n gates, n-2 garbage, 2^n - 2 constants, all within
the claimed bounds of 2^n + 1 gates and n garbage.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from revlogic.circuit import (
    Circuit,
    ConstantInput,
    Exhaustive,
    GARBAGE,
    PrimaryInput,
    PrimaryOutput,
    RandomTrials,
    Strategy,
    VerificationReport,
    append_gate,
    metrics,
    new_circuit,
    set_output,
    verify_against,
)
from revlogic.gates import gate_by_name, inventive_gate

MAX_DECODER_BITS = 12  # 2^12 output lines; keeps exhaustive checks desk scale

_NOT = gate_by_name("NOT")
_FG = gate_by_name("FG")
_FRG = gate_by_name("FRG")

_INPUT_LETTERS = "abcdefghijkl"


class ContractError(ValueError):
    """The circuit handed to extend_decoder is not a decoder."""


def build_base_decoder(a: str = "a", b: str = "b") -> Circuit:
    """2-to-4 one-hot decoder around a single INVENTIVE gate."""
    c = new_circuit(
        "decoder2",
        (PrimaryInput(a), PrimaryInput(b), ConstantInput(0), ConstantInput(1)),
    )
    c = append_gate(c, inventive_gate(), (0, 1, 2, 3))
    c = append_gate(c, _NOT, (3,))
    c = append_gate(c, _NOT, (0,))
    c = append_gate(c, _FG, (2, 0))
    c = set_output(c, 2, PrimaryOutput("d0"))
    c = set_output(c, 3, PrimaryOutput("d1"))
    c = set_output(c, 1, PrimaryOutput("d2"))
    c = set_output(c, 0, PrimaryOutput("d3"))
    return c


def _decoder_output_lines(circuit: Circuit) -> List[int]:
    """Lines of d0..d(2^y-1), or raise ContractError."""
    names = {}
    for line in circuit.output_lines():
        names[circuit.output_roles[line].name] = line
    count = len(names)
    if count < 2 or count & (count - 1):
        raise ContractError(f"{count} primary outputs, expected a power of two")
    expected = [f"d{i}" for i in range(count)]
    if set(names) != set(expected):
        raise ContractError("primary outputs are not named d0..d{2^y-1}")
    return [names[name] for name in expected]


def extend_decoder(circuit: Circuit, new_input: str) -> Circuit:
    """Grow a y-bit decoder to y+1 bits with 2^y Fredkin gates.

    The new input becomes the most significant bit. Adds 2^y constant-0
    lines; the threaded control line ends as one garbage output.
    """
    d_lines = _decoder_output_lines(circuit)
    half = len(d_lines)
    base = circuit.line_count
    x_line = base
    roles = list(circuit.input_roles)
    roles.append(PrimaryInput(new_input))
    roles += [ConstantInput(0)] * half

    gates = list(circuit.gates)
    for i in range(half):
        gates.append((_FRG, (x_line, d_lines[i], base + 1 + i)))

    out_roles = list(circuit.output_roles)
    out_roles.append(GARBAGE)
    for i in range(half):
        out_roles.append(PrimaryOutput(f"d{half + i}"))
    name = f"decoder{int(math.log2(half)) + 1}"
    return Circuit(name, tuple(roles), tuple(gates), tuple(out_roles))


def build_decoder(n: int) -> Circuit:
    """n-to-2^n decoder, bit 0 = input 'a', growing by one letter per bit."""
    if not 2 <= n <= MAX_DECODER_BITS:
        raise ValueError(f"decoder bits must be in 2..{MAX_DECODER_BITS}")
    c = build_base_decoder(_INPUT_LETTERS[0], _INPUT_LETTERS[1])
    for bit in range(2, n):
        c = extend_decoder(c, _INPUT_LETTERS[bit])
    return c


def decoder_reference(circuit: Circuit) -> Callable[[int], int]:
    """Oracle adapter: input code x -> output code with only d_x set.

    Input pack order is line order, which by construction is bit
    significance order, so the packed input code is the decoded value.
    """
    pos_of = {}
    for pos, line in enumerate(circuit.output_lines()):
        pos_of[circuit.output_roles[line].name] = pos

    def reference(code: int) -> int:
        return 1 << pos_of[f"d{code}"]

    return reference


def verify_decoder(n: int, strategy: Optional[Strategy] = None,
                   seed: int = 2014) -> VerificationReport:
    """Check a built decoder against the one-hot oracle."""
    circuit = build_decoder(n)
    if strategy is None:
        strategy = Exhaustive() if n <= 5 else RandomTrials(min(1 << n, 1024), seed)
    return verify_against(circuit, decoder_reference(circuit), strategy)


def decoder_claimed_bounds(n: int) -> Tuple[int, int]:
    """Claimed upper bounds (gates, garbage) for the recursive build."""
    if n < 2:
        raise ValueError("decoder bits must be at least 2")
    return (2 ** n + 1, n)


@dataclass(frozen=True)
class DecoderConformance:
    n: int
    claimed_gates: int
    claimed_garbage: int
    measured_gates: int
    measured_garbage: int
    measured_constants: int
    notes: Tuple[str, ...]

    @property
    def within_bounds(self) -> bool:
        return (
            self.measured_gates <= self.claimed_gates
            and self.measured_garbage <= self.claimed_garbage
        )

    def render(self) -> str:
        lines = [
            f"conformance: {self.n}-to-{2 ** self.n} decoder",
            f"  claimed bounds:  gates<={self.claimed_gates} garbage<={self.claimed_garbage}",
            f"  measured:        gates={self.measured_gates} garbage={self.measured_garbage} "
            f"constants={self.measured_constants}",
            f"  within bounds: {'yes' if self.within_bounds else 'NO'}",
            "  notes:",
        ]
        for note in self.notes:
            lines.append(f"    - {note}")
        return "\n".join(lines)


def conformance_report(n: int) -> DecoderConformance:
    measured = metrics(build_decoder(n))
    claimed_gates, claimed_garbage = decoder_claimed_bounds(n)
    notes = (
        "base cell uses 4 gates (1 INVENTIVE + 2 NOT + 1 FG) with 0 garbage, "
        "below the quoted 2-to-4 cost of 5 gates with 2 garbage; the quoted "
        "gate list includes a TG this construction does not need",
        "constant-input count has no claimed target; measured value reported only",
    )
    return DecoderConformance(
        n=n,
        claimed_gates=claimed_gates,
        claimed_garbage=claimed_garbage,
        measured_gates=measured.gate_count,
        measured_garbage=measured.garbage_outputs,
        measured_constants=measured.constant_inputs,
        notes=notes,
    )
