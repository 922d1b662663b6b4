"""Cascade netlist model.

A circuit is a fixed set of lines with an ordered sequence of reversible
gates applied to subsets of them. Each line enters as either a named
primary input or a constant (0/1), and terminates as a named primary
output, a named auxiliary output, or garbage. Because every gate is a
bijection, the induced map on full line-states is a bijection.

Circuits are immutable; the builder functions return new values. Code
packing for truth maps is positional: bit i of an input (output) code is
the value of the i-th primary input (output) line in increasing line
order.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

import numpy as np

from revlogic import engine
from revlogic.gates import ReversibleGate

EXHAUSTIVE_INPUT_LIMIT = 24  # 16M simulations is still desk scale
_CHUNK = 1 << 15


class DuplicateNameError(ValueError):
    """A line or terminal name is used twice."""


class WiringError(ValueError):
    """Gate arity/line-index violation."""


class AssignmentError(ValueError):
    """Simulation assignment does not cover exactly the primary inputs."""


# Input roles
@dataclass(frozen=True)
class PrimaryInput:
    name: str


@dataclass(frozen=True)
class ConstantInput:
    value: int


# Output roles
@dataclass(frozen=True)
class PrimaryOutput:
    name: str


@dataclass(frozen=True)
class AuxiliaryOutput:
    name: str


@dataclass(frozen=True)
class Garbage:
    pass


GARBAGE = Garbage()

InputRole = Union[PrimaryInput, ConstantInput]
OutputRole = Union[PrimaryOutput, AuxiliaryOutput, Garbage]
GateInstance = Tuple[ReversibleGate, Tuple[int, ...]]


@dataclass(frozen=True)
class Circuit:
    name: str
    input_roles: Tuple[InputRole, ...]
    gates: Tuple[GateInstance, ...]
    output_roles: Tuple[OutputRole, ...]
    annotations: Mapping = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        n = len(self.input_roles)
        if n < 1:
            raise ValueError("a circuit needs at least one line")
        if len(self.output_roles) != n:
            raise ValueError("output role list must cover every line")
        names = [r.name for r in self.input_roles if isinstance(r, PrimaryInput)]
        if len(set(names)) != len(names):
            raise DuplicateNameError("duplicate primary input name")
        for r in self.input_roles:
            if isinstance(r, ConstantInput) and r.value not in (0, 1):
                raise ValueError(f"constant input must be 0 or 1, got {r.value}")
        out_names = [
            r.name for r in self.output_roles if isinstance(r, (PrimaryOutput, AuxiliaryOutput))
        ]
        if len(set(out_names)) != len(out_names):
            raise DuplicateNameError("duplicate output name")
        for gate, idx in self.gates:
            if len(idx) != gate.width:
                raise WiringError(
                    f"gate {gate.name} has width {gate.width} but {len(idx)} lines given"
                )
            if len(set(idx)) != len(idx):
                raise WiringError(f"gate {gate.name}: line indices must be distinct")
            if any(not 0 <= i < n for i in idx):
                raise WiringError(f"gate {gate.name}: line index out of range 0..{n - 1}")

    @property
    def line_count(self) -> int:
        return len(self.input_roles)

    @property
    def gate_count(self) -> int:
        return len(self.gates)

    def input_lines(self) -> List[int]:
        """Primary input line indices, increasing (the code pack order)."""
        return [i for i, r in enumerate(self.input_roles) if isinstance(r, PrimaryInput)]

    def output_lines(self) -> List[int]:
        """Primary output line indices, increasing (the code pack order)."""
        return [i for i, r in enumerate(self.output_roles) if isinstance(r, PrimaryOutput)]

    def aux_lines(self) -> List[int]:
        return [i for i, r in enumerate(self.output_roles) if isinstance(r, AuxiliaryOutput)]

    def input_pack_names(self) -> List[str]:
        return [self.input_roles[i].name for i in self.input_lines()]

    def output_pack_names(self) -> List[str]:
        return [self.output_roles[i].name for i in self.output_lines()]

    def line_of_output(self, name: str) -> int:
        for i, r in enumerate(self.output_roles):
            if isinstance(r, (PrimaryOutput, AuxiliaryOutput)) and r.name == name:
                return i
        raise KeyError(f"no output named {name!r}")


def same_structure(a: Circuit, b: Circuit) -> bool:
    """Structural identity: everything except the name and annotations."""
    return (
        a.input_roles == b.input_roles
        and a.gates == b.gates
        and a.output_roles == b.output_roles
    )


def new_circuit(name: str, input_roles: Sequence[InputRole]) -> Circuit:
    """A gate-free circuit; every terminal starts as garbage."""
    roles = tuple(input_roles)
    return Circuit(name, roles, (), tuple(GARBAGE for _ in roles))


def append_gate(circuit: Circuit, gate: ReversibleGate, lines: Sequence[int]) -> Circuit:
    return Circuit(
        circuit.name,
        circuit.input_roles,
        circuit.gates + ((gate, tuple(lines)),),
        circuit.output_roles,
        circuit.annotations,
    )


def set_output(circuit: Circuit, line: int, role: OutputRole) -> Circuit:
    if not 0 <= line < circuit.line_count:
        raise WiringError(f"line {line} out of range")
    roles = list(circuit.output_roles)
    roles[line] = role
    return Circuit(circuit.name, circuit.input_roles, circuit.gates, tuple(roles),
                   circuit.annotations)


def with_annotations(circuit: Circuit, **notes) -> Circuit:
    merged = dict(circuit.annotations)
    merged.update(notes)
    return Circuit(circuit.name, circuit.input_roles, circuit.gates, circuit.output_roles, merged)


@dataclass(frozen=True)
class MetricsReport:
    gate_count: int
    garbage_outputs: int
    constant_inputs: int
    auxiliary_outputs: int
    line_count: int
    depth: int


def metrics(circuit: Circuit) -> MetricsReport:
    """Count the standard reversible-circuit cost figures.

    Depth is the longest chain of gates linked by shared lines
    (informational; every port of a reversible gate is both read and
    written, so any two gates on a common line are ordered).
    """
    line_depth = [0] * circuit.line_count
    depth = 0
    for gate, idx in circuit.gates:
        d = 1 + max(line_depth[i] for i in idx)
        for i in idx:
            line_depth[i] = d
        depth = max(depth, d)
    return MetricsReport(
        gate_count=len(circuit.gates),
        garbage_outputs=sum(isinstance(r, Garbage) for r in circuit.output_roles),
        constant_inputs=sum(isinstance(r, ConstantInput) for r in circuit.input_roles),
        auxiliary_outputs=sum(isinstance(r, AuxiliaryOutput) for r in circuit.output_roles),
        line_count=circuit.line_count,
        depth=depth,
    )


@dataclass(frozen=True)
class SimResult:
    line_values: Tuple[int, ...]
    outputs: Dict[str, int]
    aux: Dict[str, int]


def initial_states(circuit: Circuit, codes, prog: Optional[engine.CompiledCircuit] = None
                   ) -> np.ndarray:
    """State matrix with constants loaded and input bits from packed codes."""
    batch = len(codes)
    states = np.zeros((batch, circuit.line_count), dtype=np.uint8)
    for i, role in enumerate(circuit.input_roles):
        if isinstance(role, ConstantInput) and role.value:
            states[:, i] = 1
    in_lines = circuit.input_lines()
    if in_lines:
        bits = engine.codes_to_bits(codes, len(in_lines))
        for pos, line in enumerate(in_lines):
            states[:, line] = bits[:, pos]
    return states


def simulate(circuit: Circuit, assignment: Mapping[str, int]) -> SimResult:
    """Load constants, apply the assignment, run all gates.

    The assignment must cover exactly the primary input names, each with
    a 0/1 value.
    """
    names = circuit.input_pack_names()
    missing = set(names) - set(assignment)
    extra = set(assignment) - set(names)
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {sorted(missing)}")
        if extra:
            parts.append(f"unexpected {sorted(extra)}")
        raise AssignmentError("assignment does not match primary inputs: " + ", ".join(parts))
    for name, v in assignment.items():
        if v not in (0, 1):
            raise AssignmentError(f"line {name!r} must be assigned 0 or 1, got {v}")
    code = sum(assignment[name] << pos for pos, name in enumerate(names))
    states = initial_states(circuit, [code])
    engine.run_batch(engine.compile_circuit(circuit), states)
    row = states[0]
    outputs = {circuit.output_roles[i].name: int(row[i]) for i in circuit.output_lines()}
    aux = {circuit.output_roles[i].name: int(row[i]) for i in circuit.aux_lines()}
    return SimResult(tuple(int(v) for v in row), outputs, aux)


def _batched_codes(circuit: Circuit, codes: Sequence[int], columns: Sequence[int]):
    """Yield (chunk_codes, packed column codes) over the batch, chunked."""
    prog = engine.compile_circuit(circuit)
    for start in range(0, len(codes), _CHUNK):
        chunk = codes[start : start + _CHUNK]
        states = initial_states(circuit, chunk)
        engine.run_batch(prog, states)
        yield chunk, states[:, columns]


def truth_map(circuit: Circuit) -> List[int]:
    """Complete primary-input -> primary-output code table."""
    p = len(circuit.input_lines())
    if p > EXHAUSTIVE_INPUT_LIMIT:
        raise ValueError(
            f"{p} primary inputs exceed the exhaustive bound of {EXHAUSTIVE_INPUT_LIMIT}"
        )
    out_lines = circuit.output_lines()
    table: List[int] = []
    codes = np.arange(1 << p, dtype=np.int64)
    for start in range(0, len(codes), _CHUNK):
        chunk = codes[start : start + _CHUNK]
        states = initial_states(circuit, chunk)
        engine.run_batch(engine.compile_circuit(circuit), states)
        table.extend(engine.bits_to_codes(states[:, out_lines]))
    return table


def full_state_map(circuit: Circuit, limit: int = 16) -> List[int]:
    """Map every full line-state through the circuit (roles ignored)."""
    n = circuit.line_count
    if n > limit:
        raise ValueError(f"{n} lines exceed the full-state bound of {limit}")
    prog = engine.compile_circuit(circuit)
    result: List[int] = []
    for start in range(0, 1 << n, _CHUNK):
        codes = np.arange(start, min(start + _CHUNK, 1 << n), dtype=np.int64)
        states = engine.codes_to_bits(codes, n)
        states = np.ascontiguousarray(states)
        engine.run_batch(prog, states)
        result.extend(engine.bits_to_codes(states))
    return result


def is_line_bijective(circuit: Circuit, limit: int = 16) -> bool:
    """Exhaustively confirm the full line-state map is a permutation."""
    m = full_state_map(circuit, limit)
    return sorted(m) == list(range(len(m)))


# Verification strategies
@dataclass(frozen=True)
class Exhaustive:
    pass


@dataclass(frozen=True)
class RandomTrials:
    count: int
    seed: int


@dataclass(frozen=True)
class Vectors:
    codes: Tuple[int, ...]


Strategy = Union[Exhaustive, RandomTrials, Vectors]


@dataclass(frozen=True)
class VerificationReport:
    passed: bool
    trials: int
    strategy: str
    counterexample: Optional[Tuple[int, int, int]] = None  # input, got, expected

    def merged(self, other: "VerificationReport") -> "VerificationReport":
        """Associative combination of partial reports."""
        counter = self.counterexample or other.counterexample
        return VerificationReport(
            passed=self.passed and other.passed,
            trials=self.trials + other.trials,
            strategy=f"{self.strategy}+{other.strategy}",
            counterexample=counter,
        )


def verify_against(circuit: Circuit, reference: Callable[[int], int],
                   strategy: Strategy) -> VerificationReport:
    """Compare the circuit against a reference code mapping.

    The reference takes a packed primary-input code and returns the
    expected packed primary-output code (pack order: increasing line
    index). Failures are report content, never exceptions.
    """
    p = len(circuit.input_lines())
    if isinstance(strategy, Exhaustive):
        if p > EXHAUSTIVE_INPUT_LIMIT:
            raise ValueError(
                f"{p} primary inputs exceed the exhaustive bound; use RandomTrials"
            )
        codes: Sequence[int] = np.arange(1 << p, dtype=np.int64)
        label = f"exhaustive({1 << p})"
    elif isinstance(strategy, RandomTrials):
        rng = random.Random(strategy.seed)
        codes = [rng.getrandbits(p) for _ in range(strategy.count)]
        label = f"random({strategy.count},seed={strategy.seed})"
    elif isinstance(strategy, Vectors):
        codes = list(strategy.codes)
        label = f"vectors({len(strategy.codes)})"
    else:
        raise TypeError(f"unknown strategy {strategy!r}")

    out_lines = circuit.output_lines()
    trials = 0
    for chunk, out_bits in _batched_codes(circuit, codes, out_lines):
        got = engine.bits_to_codes(out_bits)
        for code, g in zip(chunk, got):
            expected = reference(int(code))
            trials += 1
            if g != expected:
                return VerificationReport(False, trials, label, (int(code), g, expected))
    return VerificationReport(True, trials, label)
