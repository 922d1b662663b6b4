# cython: boundscheck=False, wraparound=False, initializedcheck=False
"""Compiled simulation kernel: the gate-application inner loop in C."""


def run_gates(const int[::1] widths, const int[::1] line_off, const int[::1] lines,
              const int[::1] perm_off, const int[::1] perms,
              unsigned char[:, ::1] states, Py_ssize_t g_start, Py_ssize_t g_stop):
    """Apply gates [g_start, g_stop) to every row of ``states`` in place."""
    cdef Py_ssize_t batch = states.shape[0]
    cdef Py_ssize_t g, r, j
    cdef int w, lo, po, code
    with nogil:
        for g in range(g_start, g_stop):
            w = widths[g]
            lo = line_off[g]
            po = perm_off[g]
            for r in range(batch):
                code = 0
                for j in range(w):
                    code |= states[r, lines[lo + j]] << j
                code = perms[po + code]
                for j in range(w):
                    states[r, lines[lo + j]] = (code >> j) & 1
