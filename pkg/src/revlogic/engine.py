"""Batch simulation engine.

Compiles a circuit's gate list into flat arrays and runs them over
batches of full line-states (one uint8 per line). The inner loop comes
from the compiled extension revlogic._kernels when available, otherwise
from the numpy fallback; set REVLOGIC_FORCE_PY=1 to force the fallback.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from typing import List, Sequence, Union

import numpy as np

from revlogic import _kernels_py

if os.environ.get("REVLOGIC_FORCE_PY"):
    _kernels = _kernels_py
    _BACKEND = "python"
else:
    try:
        from revlogic import _kernels  # type: ignore[attr-defined]

        _BACKEND = "compiled"
    except ImportError:
        _kernels = _kernels_py
        _BACKEND = "python"


def backend_name() -> str:
    """Which kernel is active: 'compiled' or 'python'."""
    return _BACKEND


def get_kernel(name: str):
    """Fetch a kernel module by name (for benchmarks and parity tests)."""
    if name == "python":
        return _kernels_py
    if name == "compiled":
        from revlogic import _kernels as compiled  # raises if not built

        return compiled
    raise ValueError(f"unknown kernel {name!r}")


@dataclass(frozen=True)
class CompiledCircuit:
    """Flat gate program: per-gate width, line indices and perm tables."""

    n_lines: int
    n_gates: int
    widths: np.ndarray
    line_off: np.ndarray
    lines: np.ndarray
    perm_off: np.ndarray
    perms: np.ndarray


def compile_circuit(circuit) -> CompiledCircuit:
    """Flatten a Circuit's gate list into kernel-ready arrays."""
    widths: List[int] = []
    line_off = [0]
    lines: List[int] = []
    perm_off = [0]
    perms: List[int] = []
    for gate, idx in circuit.gates:
        widths.append(gate.width)
        lines.extend(idx)
        line_off.append(len(lines))
        perms.extend(gate.perm)
        perm_off.append(len(perms))
    i32 = np.int32
    return CompiledCircuit(
        n_lines=circuit.line_count,
        n_gates=len(widths),
        widths=np.asarray(widths, dtype=i32),
        line_off=np.asarray(line_off, dtype=i32),
        lines=np.asarray(lines, dtype=i32),
        perm_off=np.asarray(perm_off, dtype=i32),
        perms=np.asarray(perms, dtype=i32),
    )


def run_batch(prog: CompiledCircuit, states: np.ndarray, g_start: int = 0, g_stop: int = None,
              kernel=None) -> np.ndarray:
    """Run gates [g_start, g_stop) over the state matrix, in place.

    states must be (batch, n_lines) uint8 and C-contiguous.
    """
    if g_stop is None:
        g_stop = prog.n_gates
    if not 0 <= g_start <= g_stop <= prog.n_gates:
        raise ValueError(f"gate range [{g_start}, {g_stop}) out of bounds")
    if states.ndim != 2 or states.shape[1] != prog.n_lines:
        raise ValueError("state matrix shape does not match the circuit")
    k = kernel if kernel is not None else _kernels
    k.run_gates(prog.widths, prog.line_off, prog.lines, prog.perm_off, prog.perms,
                states, g_start, g_stop)
    return states


def codes_to_bits(codes: Union[Sequence[int], np.ndarray], width: int) -> np.ndarray:
    """Expand packed codes into a (batch, width) uint8 bit matrix, LSB first."""
    if width == 0:
        return np.zeros((len(codes), 0), dtype=np.uint8)
    if isinstance(codes, np.ndarray) and codes.dtype != object and width <= 63:
        arr = codes.astype(np.int64)
        shifts = np.arange(width, dtype=np.int64)
        return ((arr[:, None] >> shifts) & 1).astype(np.uint8)
    nbytes = (width + 7) // 8
    buf = b"".join(int(c).to_bytes(nbytes, "little") for c in codes)
    raw = np.frombuffer(buf, dtype=np.uint8).reshape(len(codes), nbytes)
    return np.unpackbits(raw, axis=1, bitorder="little")[:, :width]


def bits_to_codes(bits: np.ndarray) -> List[int]:
    """Pack a (batch, width) bit matrix back into ints, LSB first."""
    width = bits.shape[1]
    if width == 0:
        return [0] * bits.shape[0]
    if width <= 62:
        shifts = np.arange(width, dtype=np.int64)
        packed = (bits.astype(np.int64) << shifts).sum(axis=1)
        return [int(v) for v in packed]
    raw = np.packbits(bits, axis=1, bitorder="little")
    return [int.from_bytes(row.tobytes(), "little") for row in raw]
