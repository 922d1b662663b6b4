""".rnl text serialization for cascade netlists.

One directive per line, '#' starts a comment, tokens are
whitespace-separated, indices are 0-based:

    rnl 1
    lines <L>
    in <idx> <name>        # primary input
    const <idx> <0|1>      # constant input
    gate <GATE> <idx...>   # NOT FG TG FRG PG TR INVENTIVE, ports in order
    out <idx> <name>       # primary output
    aux <idx> <name>       # auxiliary output
    end

Undesignated terminals are garbage. The parser is case-insensitive for
directives and gate names and also accepts a bare gate name as shorthand
for `gate NAME ...`; the exporter always writes the canonical long form,
so export is byte-stable.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from revlogic.circuit import (
    AuxiliaryOutput,
    Circuit,
    ConstantInput,
    GARBAGE,
    Garbage,
    PrimaryInput,
    PrimaryOutput,
)
from revlogic.gates import GATE_NAMES, UnknownGateError, gate_by_name

RNL_VERSION = 1


class RnlSyntaxError(ValueError):
    """Malformed .rnl text; carries the 1-based source line number."""

    def __init__(self, line_no: Optional[int], message: str):
        where = f"line {line_no}: " if line_no is not None else ""
        super().__init__(where + message)
        self.line_no = line_no


def export_rnl(circuit: Circuit) -> str:
    """Serialize a circuit. Every gate must be a named library gate."""
    out = [f"rnl {RNL_VERSION}", f"lines {circuit.line_count}"]
    for i, role in enumerate(circuit.input_roles):
        if isinstance(role, PrimaryInput):
            out.append(f"in {i} {role.name}")
        else:
            out.append(f"const {i} {role.value}")
    for gate, idx in circuit.gates:
        if gate.name not in GATE_NAMES or gate_by_name(gate.name).perm != gate.perm:
            raise UnknownGateError(
                f"gate {gate.name!r} is not a library gate and cannot be serialized"
            )
        out.append("gate " + gate.name + " " + " ".join(str(i) for i in idx))
    for i, role in enumerate(circuit.output_roles):
        if isinstance(role, PrimaryOutput):
            out.append(f"out {i} {role.name}")
        elif isinstance(role, AuxiliaryOutput):
            out.append(f"aux {i} {role.name}")
    out.append("end")
    return "\n".join(out) + "\n"


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise RnlSyntaxError(line_no, f"{what} must be an integer, got {token!r}") from None


def parse_rnl(text: str) -> Circuit:
    """Parse .rnl text into a Circuit (named 'rnl')."""
    n_lines: Optional[int] = None
    in_roles: Dict[int, object] = {}
    out_roles: Dict[int, object] = {}
    gates: List[Tuple[object, Tuple[int, ...]]] = []
    names_seen = set()
    out_names_seen = set()
    saw_header = False
    saw_end = False

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if saw_end:
            raise RnlSyntaxError(line_no, "content after end directive")
        tokens = line.split()
        word = tokens[0].lower()

        if not saw_header:
            if word != "rnl":
                raise RnlSyntaxError(line_no, "file must start with the rnl header")
            if len(tokens) != 2 or _parse_int(tokens[1], line_no, "version") != RNL_VERSION:
                raise RnlSyntaxError(line_no, f"unsupported version, expected rnl {RNL_VERSION}")
            saw_header = True
            continue

        if word == "lines":
            if n_lines is not None:
                raise RnlSyntaxError(line_no, "duplicate lines directive")
            if len(tokens) != 2:
                raise RnlSyntaxError(line_no, "usage: lines <count>")
            n_lines = _parse_int(tokens[1], line_no, "line count")
            if n_lines < 1:
                raise RnlSyntaxError(line_no, "line count must be at least 1")
            continue

        if word == "end":
            saw_end = True
            continue

        if n_lines is None:
            raise RnlSyntaxError(line_no, "lines directive must come before circuit content")

        def check_index(token: str) -> int:
            idx = _parse_int(token, line_no, "line index")
            if not 0 <= idx < n_lines:
                raise RnlSyntaxError(line_no, f"line index {idx} out of range 0..{n_lines - 1}")
            return idx

        if word == "in":
            if len(tokens) != 3:
                raise RnlSyntaxError(line_no, "usage: in <idx> <name>")
            idx = check_index(tokens[1])
            if idx in in_roles:
                raise RnlSyntaxError(line_no, f"line {idx} already has an input role")
            if tokens[2] in names_seen:
                raise RnlSyntaxError(line_no, f"duplicate input name {tokens[2]!r}")
            names_seen.add(tokens[2])
            in_roles[idx] = PrimaryInput(tokens[2])
        elif word == "const":
            if len(tokens) != 3 or tokens[2] not in ("0", "1"):
                raise RnlSyntaxError(line_no, "usage: const <idx> <0|1>")
            idx = check_index(tokens[1])
            if idx in in_roles:
                raise RnlSyntaxError(line_no, f"line {idx} already has an input role")
            in_roles[idx] = ConstantInput(int(tokens[2]))
        elif word in ("out", "aux"):
            if len(tokens) != 3:
                raise RnlSyntaxError(line_no, f"usage: {word} <idx> <name>")
            idx = check_index(tokens[1])
            if idx in out_roles:
                raise RnlSyntaxError(line_no, f"line {idx} already has an output role")
            if tokens[2] in out_names_seen:
                raise RnlSyntaxError(line_no, f"duplicate output name {tokens[2]!r}")
            out_names_seen.add(tokens[2])
            role = PrimaryOutput(tokens[2]) if word == "out" else AuxiliaryOutput(tokens[2])
            out_roles[idx] = role
        else:
            if word == "gate":
                if len(tokens) < 3:
                    raise RnlSyntaxError(line_no, "usage: gate <GATE> <idx...>")
                gate_name, idx_tokens = tokens[1], tokens[2:]
            else:
                gate_name, idx_tokens = tokens[0], tokens[1:]
            try:
                gate = gate_by_name(gate_name.upper())
            except UnknownGateError:
                raise RnlSyntaxError(line_no, f"unknown gate {gate_name!r}") from None
            idx = tuple(check_index(t) for t in idx_tokens)
            if len(idx) != gate.width:
                raise RnlSyntaxError(
                    line_no,
                    f"gate {gate.name} needs {gate.width} line indices, got {len(idx)}",
                )
            if len(set(idx)) != len(idx):
                raise RnlSyntaxError(line_no, f"gate {gate.name}: line indices must be distinct")
            gates.append((gate, idx))

    if not saw_header:
        raise RnlSyntaxError(None, "empty file, expected rnl header")
    if not saw_end:
        raise RnlSyntaxError(None, "unexpected end of file, missing end directive")
    if n_lines is None:
        raise RnlSyntaxError(None, "missing lines directive")
    missing = [i for i in range(n_lines) if i not in in_roles]
    if missing:
        raise RnlSyntaxError(None, f"lines without input role: {missing}")

    input_roles = tuple(in_roles[i] for i in range(n_lines))
    output_roles = tuple(out_roles.get(i, GARBAGE) for i in range(n_lines))
    return Circuit("rnl", input_roles, tuple(gates), output_roles)
