"""Group-based n-bit magnitude comparator builder.

The construction chains three cell types MSB-first. The input cell turns
the most significant operand bits into the seed flags GT (a.~b) and EQ
(xnor(a,b)); each chain cell folds in the next bit pair through the
recurrences

    Q_j = Q_(j+1) . xnor(a_j, b_j)
    P_j = Q_(j+1) . (a_j . ~b_j)  xor  P_(j+1)

(P = greater-so-far, Q = equal-so-far, never both 1); the output cell
derives LT = ~(P xor Q). The chain cell is realized as 1 TR + 2 TG +
1 NOT: the 4x4 BME gate its usual description calls for is not a
bijection (see gates.bme_candidate_table), and no 4x4 bijection can emit
both AB^C and AD^C, so the cell keeps the documented I/O contract and
cost with a different gate set.

Cost of the assembly: gates 6+4(n-1), garbage 1+4(n-1), constants 2n+1.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence, Tuple

import numpy as np

from revlogic import engine
from revlogic.circuit import (
    Circuit,
    ConstantInput,
    AuxiliaryOutput,
    Exhaustive,
    PrimaryInput,
    PrimaryOutput,
    RandomTrials,
    Strategy,
    VerificationReport,
    Vectors,
    initial_states,
    metrics,
    new_circuit,
    append_gate,
    set_output,
    with_annotations,
)
from revlogic.gates import gate_by_name, inventive_gate
from revlogic.oracles import compare_oracle

_NOT = gate_by_name("NOT")
_FG = gate_by_name("FG")
_TG = gate_by_name("TG")
_TR = gate_by_name("TR")


@dataclass(frozen=True)
class CellTargets:
    """Per-cell cost targets (gate count, constant inputs, garbage)."""

    gates: int
    constants: int
    garbage: int


CELL_TARGETS = {
    "IN": CellTargets(gates=3, constants=2, garbage=1),
    "CHAIN": CellTargets(gates=4, constants=2, garbage=4),
    "FINAL": CellTargets(gates=3, constants=1, garbage=0),
}

CHAIN_CELL_NOTE = (
    "chain cell realized as 1 TR + 2 TG + 1 NOT instead of the quoted "
    "1 TR + 1 BME + 1 FG + 1 NOT: the quoted BME output table is not a "
    "bijection (input codes 0 and 10 collide), and no 4x4 bijection can "
    "emit both AB^C and AD^C, so the cell keeps the documented I/O "
    "contract at the documented cost (4 gates, 2 constants, 4 garbage) "
    "with a different gate set"
)


def build_in_cell(a: str = "a", b: str = "b") -> Circuit:
    """1-bit comparator cell: EQ = xnor(a,b), LT = ~a.b, GT = a.~b.

    Wiring the INVENTIVE gate with constants (c,d) = (0,1) gives
    P = a^b, Q = ~a.b, R = ~a.~b, S = ~(a.~b); two NOT gates recover
    EQ from P and GT from S. R is the single garbage line.
    """
    c = new_circuit(
        f"in_cell_{a}_{b}",
        (PrimaryInput(a), PrimaryInput(b), ConstantInput(0), ConstantInput(1)),
    )
    c = append_gate(c, inventive_gate(), (0, 1, 2, 3))
    c = append_gate(c, _NOT, (0,))
    c = append_gate(c, _NOT, (3,))
    c = set_output(c, 0, PrimaryOutput("EQ"))
    c = set_output(c, 1, PrimaryOutput("LT"))
    c = set_output(c, 3, PrimaryOutput("GT"))
    return c


def build_chain_cell() -> Circuit:
    """Standalone 1-bit match/larger cell over (a, b, Q_in, P_in).

    TR(a, b, 0) leaves (a, a^b, a.~b); TG folds a.~b into the P thread;
    a NOT turns a^b into xnor(a,b); a second TG writes Q_in.xnor onto a
    fresh line as Q_out. Garbage: a, xnor, a.~b and the spent Q_in.
    """
    c = new_circuit(
        "chain_cell",
        (
            PrimaryInput("a"),
            PrimaryInput("b"),
            ConstantInput(0),
            PrimaryInput("Q_in"),
            PrimaryInput("P_in"),
            ConstantInput(0),
        ),
    )
    c = append_gate(c, _TR, (0, 1, 2))
    c = append_gate(c, _TG, (3, 2, 4))
    c = append_gate(c, _NOT, (1,))
    c = append_gate(c, _TG, (3, 1, 5))
    c = set_output(c, 4, PrimaryOutput("P_out"))
    c = set_output(c, 5, PrimaryOutput("Q_out"))
    return c


def build_final_cell() -> Circuit:
    """Output cell: copies Q, forms P^Q, inverts it to LT."""
    c = new_circuit(
        "final_cell",
        (PrimaryInput("P"), PrimaryInput("Q"), ConstantInput(0)),
    )
    c = append_gate(c, _FG, (1, 2))
    c = append_gate(c, _FG, (0, 2))
    c = append_gate(c, _NOT, (2,))
    c = set_output(c, 0, PrimaryOutput("GT"))
    c = set_output(c, 1, PrimaryOutput("EQ"))
    c = set_output(c, 2, PrimaryOutput("LT"))
    return c


def build_comparator(n: int) -> Circuit:
    """n-bit group-based comparator with outputs LT, EQ, GT.

    Operand bits are consumed MSB-first; line j of operand x is named
    f"{x}{j}" with j the bit significance. For n >= 2 the input cell's
    unused LT line is kept as the auxiliary output "msb_lt"; the chain
    cell boundaries are recorded in the annotations under
    "chain_boundaries" as (gates_done, p_line, q_line) triples.
    """
    if n < 1:
        raise ValueError("comparator width must be at least 1")
    if n == 1:
        return build_in_cell("a0", "b0")

    roles: List = []
    msb = n - 1
    roles += [PrimaryInput(f"a{msb}"), PrimaryInput(f"b{msb}"),
              ConstantInput(0), ConstantInput(1)]
    for j in range(n - 2, -1, -1):
        roles += [PrimaryInput(f"a{j}"), PrimaryInput(f"b{j}"),
                  ConstantInput(0), ConstantInput(0)]
    roles.append(ConstantInput(0))
    c = new_circuit(f"comparator{n}", roles)

    # input cell on the MSB pair: EQ thread on line 0, GT thread on line 3
    c = append_gate(c, inventive_gate(), (0, 1, 2, 3))
    c = append_gate(c, _NOT, (0,))
    c = append_gate(c, _NOT, (3,))
    p_line, q_line = 3, 0
    boundaries = [(3, p_line, q_line)]

    for cell in range(n - 1):
        base = 4 + 4 * cell
        c = append_gate(c, _TR, (base, base + 1, base + 2))
        c = append_gate(c, _TG, (q_line, base + 2, p_line))
        c = append_gate(c, _NOT, (base + 1,))
        c = append_gate(c, _TG, (q_line, base + 1, base + 3))
        q_line = base + 3
        boundaries.append((3 + 4 * (cell + 1), p_line, q_line))

    final = 4 * n
    c = append_gate(c, _FG, (q_line, final))
    c = append_gate(c, _FG, (p_line, final))
    c = append_gate(c, _NOT, (final,))

    c = set_output(c, p_line, PrimaryOutput("GT"))
    c = set_output(c, q_line, PrimaryOutput("EQ"))
    c = set_output(c, final, PrimaryOutput("LT"))
    c = set_output(c, 1, AuxiliaryOutput("msb_lt"))
    return with_annotations(c, chain_boundaries=tuple(boundaries))


def operand_bit_positions(circuit: Circuit) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int]]]:
    """(pack position, bit significance) pairs for operands a and b."""
    a_bits, b_bits = [], []
    for pos, name in enumerate(circuit.input_pack_names()):
        bucket = a_bits if name[0] == "a" else b_bits
        bucket.append((pos, int(name[1:])))
    return a_bits, b_bits


def pack_operands(circuit: Circuit, a: int, b: int) -> int:
    """Packed primary-input code carrying the two operand values."""
    a_bits, b_bits = operand_bit_positions(circuit)
    code = 0
    for pos, bit in a_bits:
        code |= ((a >> bit) & 1) << pos
    for pos, bit in b_bits:
        code |= ((b >> bit) & 1) << pos
    return code


def comparator_reference(circuit: Circuit, n: int) -> Callable[[int], int]:
    """Oracle adapter: packed input code -> expected packed output code."""
    a_bits, b_bits = operand_bit_positions(circuit)
    pos_of = {name: i for i, name in enumerate(circuit.output_pack_names())}
    lt_pos, eq_pos, gt_pos = pos_of["LT"], pos_of["EQ"], pos_of["GT"]

    def reference(code: int) -> int:
        a = 0
        for pos, bit in a_bits:
            a |= ((code >> pos) & 1) << bit
        b = 0
        for pos, bit in b_bits:
            b |= ((code >> pos) & 1) << bit
        lt, eq, gt = compare_oracle(a, b, n)
        return (lt << lt_pos) | (eq << eq_pos) | (gt << gt_pos)

    return reference


def edge_vectors(n: int) -> List[int]:
    """Mandatory trial pairs: extremes, equal pairs, single-bit flips."""
    top = (1 << n) - 1
    circuit = build_comparator(n)
    pairs = [(0, 0), (top, top)]
    for k in range(n):
        bit = 1 << k
        pairs += [(bit, 0), (0, bit), (top ^ bit, top), (top, top ^ bit)]
    return [pack_operands(circuit, a, b) for a, b in pairs]


def _run_trials(circuit: Circuit, n: int, codes: Sequence[int], label: str) -> VerificationReport:
    """Equality against the oracle plus the one-hot output invariant."""
    reference = comparator_reference(circuit, n)
    out_lines = circuit.output_lines()
    prog = engine.compile_circuit(circuit)
    chunk_size = 1 << 15
    trials = 0
    for start in range(0, len(codes), chunk_size):
        chunk = codes[start : start + chunk_size]
        states = initial_states(circuit, chunk)
        engine.run_batch(prog, states)
        out_bits = states[:, out_lines]
        hot = out_bits.sum(axis=1)
        got = engine.bits_to_codes(out_bits)
        for i, (code, g) in enumerate(zip(chunk, got)):
            trials += 1
            expected = reference(int(code))
            if hot[i] != 1 or g != expected:
                return VerificationReport(False, trials, label, (int(code), g, expected))
    return VerificationReport(True, trials, label)


def verify_comparator(n: int, strategy: Optional[Strategy] = None,
                      seed: int = 2014) -> VerificationReport:
    """Check an n-bit comparator against the integer-comparison oracle.

    Exhaustive when the operand pair fits the exhaustive bound (2n <= 24
    input bits); otherwise seeded random trials plus the mandatory edge
    vectors. Every trial also asserts the one-hot output invariant.
    """
    circuit = build_comparator(n)
    if strategy is None:
        strategy = Exhaustive() if 2 * n <= 24 else RandomTrials(100_000, seed)
    if isinstance(strategy, Exhaustive):
        codes = np.arange(1 << (2 * n), dtype=np.int64)
        return _run_trials(circuit, n, codes, f"exhaustive({1 << (2 * n)})")
    if isinstance(strategy, RandomTrials):
        rng = random.Random(strategy.seed)
        codes = [rng.getrandbits(2 * n) for _ in range(strategy.count)]
        report = _run_trials(circuit, n, codes,
                             f"random({strategy.count},seed={strategy.seed})")
        edges = edge_vectors(n)
        return report.merged(_run_trials(circuit, n, edges, f"edges({len(edges)})"))
    if isinstance(strategy, Vectors):
        return _run_trials(circuit, n, list(strategy.codes), f"vectors({len(strategy.codes)})")
    raise TypeError(f"unknown strategy {strategy!r}")


def predicted_comparator_metrics(n: int) -> Tuple[int, int, int]:
    """Closed-form (gates, garbage, constants) for the assembly."""
    if n < 1:
        raise ValueError("comparator width must be at least 1")
    if n == 1:
        return (3, 1, 2)
    return (6 + 4 * (n - 1), 1 + 4 * (n - 1), 2 * n + 1)


@dataclass(frozen=True)
class ConformanceReport:
    """Target-versus-measured cost ledger for one built comparator."""

    n: int
    cells: Tuple[Tuple[str, int, CellTargets], ...]  # kind, multiplicity, targets
    target_gates: int
    target_garbage: int
    target_constants: int
    measured_gates: int
    measured_garbage: int
    measured_constants: int
    deviations: Tuple[str, ...]

    @property
    def conformant(self) -> bool:
        return (
            self.target_gates == self.measured_gates
            and self.target_garbage == self.measured_garbage
            and self.target_constants == self.measured_constants
        )

    def render(self) -> str:
        lines = [f"conformance: {self.n}-bit comparator"]
        for kind, count, t in self.cells:
            lines.append(
                f"  cell {kind} x{count}: target gates={t.gates} "
                f"constants={t.constants} garbage={t.garbage}"
            )
        lines.append(
            f"  totals target:   gates={self.target_gates} "
            f"garbage={self.target_garbage} constants={self.target_constants}"
        )
        lines.append(
            f"  totals measured: gates={self.measured_gates} "
            f"garbage={self.measured_garbage} constants={self.measured_constants}"
        )
        lines.append(f"  conformant: {'yes' if self.conformant else 'NO'}")
        lines.append("  structural deviations:")
        for note in self.deviations:
            lines.append(f"    - {note}")
        return "\n".join(lines)


def conformance_report(n: int) -> ConformanceReport:
    """Build, measure, and compare against the closed-form targets."""
    measured = metrics(build_comparator(n))
    gates, garbage, constants = predicted_comparator_metrics(n)
    if n == 1:
        cells = (("IN", 1, CELL_TARGETS["IN"]),)
    else:
        cells = (
            ("IN", 1, CELL_TARGETS["IN"]),
            ("CHAIN", n - 1, CELL_TARGETS["CHAIN"]),
            ("FINAL", 1, CELL_TARGETS["FINAL"]),
        )
    deviations = [CHAIN_CELL_NOTE]
    if n >= 2:
        deviations.append(
            'the input cell\'s unused LT line is kept as auxiliary output "msb_lt" '
            "(a valid per-bit comparison), keeping its garbage count at 1"
        )
    return ConformanceReport(
        n=n,
        cells=cells,
        target_gates=gates,
        target_garbage=garbage,
        target_constants=constants,
        measured_gates=measured.gate_count,
        measured_garbage=measured.garbage_outputs,
        measured_constants=measured.constant_inputs,
        deviations=tuple(deviations),
    )
