"""Brute-force single-gate realization search.

Given one reversible gate, find a wiring that computes a small target
function: each target variable goes to exactly one gate port, the
remaining ports are tied to constants, each target output is read from
one gate output, optionally through a NOT. The whole candidate space is
enumerated, so a miss is a proof that no such wiring exists, and the
returned hit is minimal under (constant count, NOT count) with a fixed
lexicographic tie-break over the enumeration encoding.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Dict, List, Optional, Tuple, Union

from revlogic.gates import ReversibleGate
from revlogic.oracles import TARGET_NAMES, TargetFunction, target_function

PortBinding = Tuple[str, Union[str, int]]  # ("var", name) or ("const", 0/1)


@dataclass(frozen=True)
class OutputPick:
    port: str
    inverted: bool


@dataclass(frozen=True)
class Realization:
    """A verified wiring of one gate computing a target function."""

    gate_name: str
    target_name: str
    ports: Tuple[PortBinding, ...]  # one entry per gate input port
    outputs: Tuple[OutputPick, ...]  # one entry per target output
    constant_count: int
    not_count: int

    def describe(self) -> str:
        port_s = ", ".join(
            f"{kind[1]}" if kind[0] == "var" else str(kind[1]) for kind in self.ports
        )
        out_s = ", ".join(
            ("~" if pick.inverted else "") + pick.port for pick in self.outputs
        )
        return (
            f"{self.target_name} = {self.gate_name}({port_s}) -> ({out_s}) "
            f"[constants={self.constant_count}, nots={self.not_count}]"
        )


def realized_table(gate: ReversibleGate, target: TargetFunction,
                   realization: Realization) -> Tuple[int, ...]:
    """Re-simulate a realization row by row through the gate itself."""
    out_index = {p: i for i, p in enumerate(gate.ports_out)}
    rows = []
    var_pos = {name: i for i, name in enumerate(target.inputs)}
    for code in range(1 << target.arity):
        in_code = 0
        for port, binding in enumerate(realization.ports):
            kind, value = binding
            bit = (code >> var_pos[value]) & 1 if kind == "var" else value
            in_code |= bit << port
        out = gate.apply(in_code)
        row = 0
        for j, pick in enumerate(realization.outputs):
            bit = (out >> out_index[pick.port]) & 1
            row |= (bit ^ int(pick.inverted)) << j
        rows.append(row)
    return tuple(rows)


def _gate_output_vectors(gate: ReversibleGate, positions: Tuple[int, ...],
                         const_bits: int, arity: int) -> List[int]:
    """Per gate output, the truth vector over all 2^arity variable rows."""
    width = gate.width
    free_ports = [p for p in range(width) if p not in positions]
    base = 0
    for k, port in enumerate(free_ports):
        base |= ((const_bits >> k) & 1) << port
    vectors = [0] * width
    for row in range(1 << arity):
        in_code = base
        for var, port in enumerate(positions):
            in_code |= ((row >> var) & 1) << port
        out = gate.apply(in_code)
        for o in range(width):
            vectors[o] |= ((out >> o) & 1) << row
    return vectors


def search_realization(gate: ReversibleGate,
                       target: TargetFunction) -> Optional[Realization]:
    """Exhaustively search the placement space for a minimal realization.

    Returns None when the space is exhausted without a hit; in
    particular a target with more variables than the gate has ports has
    an empty space and is reported unrealizable.
    """
    arity = target.arity
    width = gate.width
    if arity > width:
        return None
    full = (1 << (1 << arity)) - 1
    target_vectors = []
    for j in range(target.out_arity):
        vec = 0
        for row, out in enumerate(target.table):
            vec |= ((out >> j) & 1) << row
        target_vectors.append(vec)

    best = None
    best_key = None
    n_const = width - arity
    for positions in permutations(range(width), arity):
        for const_bits in range(1 << n_const):
            vectors = _gate_output_vectors(gate, positions, const_bits, arity)
            picks: List[Tuple[int, bool]] = []
            for tv in target_vectors:
                pick = None
                for o, gv in enumerate(vectors):
                    if gv == tv:
                        pick = (o, False)
                        break
                if pick is None:
                    for o, gv in enumerate(vectors):
                        if gv ^ full == tv:
                            pick = (o, True)
                            break
                if pick is None:
                    break
                picks.append(pick)
            if len(picks) != target.out_arity:
                continue
            nots = len({o for o, inv in picks if inv})
            key = (n_const, nots, positions, const_bits, tuple(picks))
            if best_key is None or key < best_key:
                best_key = key
                best = (positions, const_bits, tuple(picks), nots)

    if best is None:
        return None
    positions, const_bits, picks, nots = best
    free_ports = [p for p in range(width) if p not in positions]
    bindings: List[PortBinding] = [("const", 0)] * width
    for var, port in enumerate(positions):
        bindings[port] = ("var", target.inputs[var])
    for k, port in enumerate(free_ports):
        bindings[port] = ("const", (const_bits >> k) & 1)
    realization = Realization(
        gate_name=gate.name,
        target_name=target.name,
        ports=tuple(bindings),
        outputs=tuple(OutputPick(gate.ports_out[o], inv) for o, inv in picks),
        constant_count=n_const,
        not_count=nots,
    )
    # self-check: the reported wiring must reproduce the target exactly
    if realized_table(gate, target, realization) != target.table:
        raise AssertionError(f"search self-check failed for {target.name}")
    return realization


def enumerate_utilities(gate: ReversibleGate) -> Dict[str, Optional[Realization]]:
    """Run the search for every target function in declaration order."""
    return {name: search_realization(gate, target_function(name)) for name in TARGET_NAMES}


def render_capability_matrix(gate: ReversibleGate,
                             results: Dict[str, Optional[Realization]]) -> str:
    """Text table: one row per target, Y/N plus the found wiring."""
    lines = [f"capability matrix for {gate.name}"]
    name_w = max(len(n) for n in results)
    for name, found in results.items():
        if found is None:
            lines.append(f"  {name:<{name_w}}  N")
        else:
            lines.append(f"  {name:<{name_w}}  Y  {found.describe()}")
    return "\n".join(lines)
