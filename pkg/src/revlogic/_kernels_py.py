"""Numpy fallback for the simulation kernel.

Same interface as the compiled revlogic._kernels module. Vectorizes over
the batch axis; the per-gate loop stays in Python.
"""

import numpy as np


def run_gates(widths, line_off, lines, perm_off, perms, states, g_start, g_stop):
    """Apply gates [g_start, g_stop) to every row of ``states`` in place.

    states: (batch, n_lines) uint8, one bit per cell.
    """
    for g in range(g_start, g_stop):
        w = int(widths[g])
        lo = int(line_off[g])
        idx = lines[lo : lo + w]
        code = states[:, idx[0]].astype(np.int32)
        for j in range(1, w):
            code |= states[:, idx[j]].astype(np.int32) << j
        table = perms[int(perm_off[g]) : int(perm_off[g + 1])]
        out = table[code]
        for j in range(w):
            states[:, idx[j]] = (out >> j) & 1
