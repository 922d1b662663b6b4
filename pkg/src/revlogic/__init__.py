"""revlogic: reversible-logic circuit toolkit.

Gate library of verified bijections, cascade netlists with garbage and
constant-input accounting, generators for group-based n-bit comparators
and one-hot decoders, oracle-based equivalence checking, a single-gate
realization search, and closed-form cost models with discrepancy
flagging.
"""

from revlogic.circuit import (
    AssignmentError,
    AuxiliaryOutput,
    Circuit,
    ConstantInput,
    DuplicateNameError,
    Exhaustive,
    GARBAGE,
    MetricsReport,
    PrimaryInput,
    PrimaryOutput,
    RandomTrials,
    Vectors,
    VerificationReport,
    WiringError,
    append_gate,
    full_state_map,
    is_line_bijective,
    metrics,
    new_circuit,
    same_structure,
    set_output,
    simulate,
    truth_map,
    verify_against,
)
from revlogic.engine import backend_name
from revlogic.gates import (
    BijectivityVerdict,
    NotBijectiveError,
    ReversibleGate,
    UnknownGateError,
    bme_candidate_table,
    check_bijective,
    gate_by_name,
    gate_from_table,
    inventive_gate,
    library_gates,
    standard_gate,
)
from revlogic.rnl import RnlSyntaxError, export_rnl, parse_rnl

__version__ = "0.1.0"

__all__ = [
    "AssignmentError",
    "AuxiliaryOutput",
    "BijectivityVerdict",
    "Circuit",
    "ConstantInput",
    "DuplicateNameError",
    "Exhaustive",
    "GARBAGE",
    "MetricsReport",
    "NotBijectiveError",
    "PrimaryInput",
    "PrimaryOutput",
    "RandomTrials",
    "ReversibleGate",
    "RnlSyntaxError",
    "UnknownGateError",
    "Vectors",
    "VerificationReport",
    "WiringError",
    "append_gate",
    "backend_name",
    "bme_candidate_table",
    "check_bijective",
    "export_rnl",
    "full_state_map",
    "gate_by_name",
    "gate_from_table",
    "inventive_gate",
    "is_line_bijective",
    "library_gates",
    "metrics",
    "new_circuit",
    "parse_rnl",
    "same_structure",
    "set_output",
    "simulate",
    "standard_gate",
    "truth_map",
    "verify_against",
]
