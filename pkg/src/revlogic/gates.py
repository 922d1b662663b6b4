"""Reversible gate library.

Every gate is a verified bijection over packed bit-codes. The packing
convention is fixed throughout the package: for a gate with input ports
p1..pk in declaration order, the input code is sum(bit(p_i) << (i-1)),
i.e. the first declared port is the least significant bit. Output codes
pack the declared outputs the same way.

The library covers NOT, the Feynman (FG/CNOT), Toffoli (TG), Fredkin
(FRG), Peres (PG) and TR gates, plus the 4x4 INVENTIVE gate defined by
its 16-row truth table. The 4x4 BME gate, whose usual algebraic form
(P=A, Q=AB^C, R=AD^C, S=~A.B^C^D) is not a bijection, is kept only as a
tabulation that the constructor must refuse.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Tuple

MAX_GATE_WIDTH = 8


class UnknownGateError(KeyError):
    """Requested gate name is not in the library."""


class NotBijectiveError(ValueError):
    """A candidate output table is not a permutation.

    Carries the refuting :class:`BijectivityVerdict` as ``verdict``.
    """

    def __init__(self, message: str, verdict: "BijectivityVerdict"):
        super().__init__(message)
        self.verdict = verdict


@dataclass(frozen=True)
class BijectivityVerdict:
    """Outcome of a bijectivity check.

    ``witness`` is present only for a collision: the lexicographically
    first pair of distinct input codes mapping to the same output code.
    """

    bijective: bool
    witness: Optional[Tuple[int, int]] = None

    def __bool__(self) -> bool:
        return self.bijective


def check_bijective(outputs: Sequence[int]) -> BijectivityVerdict:
    """Check whether a code table is a permutation of {0..len-1}.

    The table length must be a power of two and every entry a valid code
    (0 <= entry < len). Returns a collision verdict with the
    lexicographically first witness pair (i, j), i < j, when two inputs
    share an output.
    """
    size = len(outputs)
    if size == 0 or size & (size - 1):
        raise ValueError(f"table length {size} is not a power of two")
    first_seen = [-1] * size
    second_seen = [-1] * size
    for i, code in enumerate(outputs):
        if not 0 <= code < size:
            raise ValueError(f"entry {code} at index {i} is out of range 0..{size - 1}")
        if first_seen[code] < 0:
            first_seen[code] = i
        elif second_seen[code] < 0:
            second_seen[code] = i
    # The smallest first occurrence among duplicated values gives the
    # lexicographically first (i, j) witness.
    witness = None
    for code in range(size):
        if second_seen[code] >= 0:
            pair = (first_seen[code], second_seen[code])
            if witness is None or pair < witness:
                witness = pair
    if witness is not None:
        return BijectivityVerdict(bijective=False, witness=witness)
    return BijectivityVerdict(bijective=True)


@dataclass(frozen=True)
class ReversibleGate:
    """A named k-input/k-output bijection, 1 <= k <= 8.

    ``perm[x]`` is the packed output code for packed input code ``x``.
    Instances are immutable and safe to share between workers.
    """

    name: str
    width: int
    ports_in: Tuple[str, ...]
    ports_out: Tuple[str, ...]
    perm: Tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.width <= MAX_GATE_WIDTH:
            raise ValueError(f"gate width {self.width} outside 1..{MAX_GATE_WIDTH}")
        if len(self.ports_in) != self.width or len(self.ports_out) != self.width:
            raise ValueError("port lists must match the gate width")
        if len(self.perm) != 1 << self.width:
            raise ValueError(
                f"permutation table has {len(self.perm)} entries, expected {1 << self.width}"
            )
        verdict = check_bijective(self.perm)
        if not verdict:
            raise NotBijectiveError(
                f"gate {self.name!r}: table is not bijective, "
                f"inputs {verdict.witness[0]} and {verdict.witness[1]} collide",
                verdict,
            )

    @property
    def size(self) -> int:
        return 1 << self.width

    def apply(self, code: int) -> int:
        """Map a packed input code through the gate."""
        if not 0 <= code < self.size:
            raise ValueError(f"input code {code} out of range for width {self.width}")
        return self.perm[code]

    def inverse(self) -> "ReversibleGate":
        """The gate computing the inverse bijection (ports swapped)."""
        inv = [0] * self.size
        for i, j in enumerate(self.perm):
            inv[j] = i
        name = self.name if tuple(inv) == self.perm else self.name + "_inv"
        return ReversibleGate(name, self.width, self.ports_out, self.ports_in, tuple(inv))

    def output_index(self, port: str) -> int:
        return self.ports_out.index(port)

    def __repr__(self) -> str:
        return f"ReversibleGate({self.name!r}, width={self.width})"


def gate_from_table(
    name: str,
    width: int,
    outputs: Sequence[int],
    ports_in: Optional[Sequence[str]] = None,
    ports_out: Optional[Sequence[str]] = None,
) -> ReversibleGate:
    """Build a gate from an explicit output table.

    This is the only construction path; a non-bijective table raises
    :class:`NotBijectiveError` carrying the witness pair.
    """
    if len(outputs) != 1 << width:
        raise ValueError(f"table needs {1 << width} entries for width {width}")
    if ports_in is None:
        ports_in = _DEFAULT_IN[:width] if width <= 4 else tuple(f"i{k}" for k in range(width))
    if ports_out is None:
        ports_out = _DEFAULT_OUT[:width] if width <= 4 else tuple(f"o{k}" for k in range(width))
    return ReversibleGate(name, width, tuple(ports_in), tuple(ports_out), tuple(outputs))


_DEFAULT_IN = ("A", "B", "C", "D")
_DEFAULT_OUT = ("P", "Q", "R", "S")


def _tabulate(width, fn):
    """Tabulate fn over all input codes; fn maps a bit tuple to a bit tuple."""
    table = []
    for code in range(1 << width):
        bits = tuple((code >> i) & 1 for i in range(width))
        out = fn(*bits)
        table.append(sum(b << i for i, b in enumerate(out)))
    return tuple(table)


def _build_standard_gates():
    gates = {}
    gates["NOT"] = ReversibleGate("NOT", 1, ("A",), ("P",), _tabulate(1, lambda a: (1 - a,)))
    gates["FG"] = ReversibleGate(
        "FG", 2, ("A", "B"), ("P", "Q"), _tabulate(2, lambda a, b: (a, a ^ b))
    )
    gates["TG"] = ReversibleGate(
        "TG", 3, ("A", "B", "C"), ("P", "Q", "R"),
        _tabulate(3, lambda a, b, c: (a, b, (a & b) ^ c)),
    )
    gates["FRG"] = ReversibleGate(
        "FRG", 3, ("A", "B", "C"), ("P", "Q", "R"),
        _tabulate(3, lambda a, b, c: (a, c if a else b, b if a else c)),
    )
    gates["PG"] = ReversibleGate(
        "PG", 3, ("A", "B", "C"), ("P", "Q", "R"),
        _tabulate(3, lambda a, b, c: (a, a ^ b, (a & b) ^ c)),
    )
    gates["TR"] = ReversibleGate(
        "TR", 3, ("A", "B", "C"), ("P", "Q", "R"),
        _tabulate(3, lambda a, b, c: (a, a ^ b, (a & (1 - b)) ^ c)),
    )
    return gates


STANDARD_GATE_NAMES = ("NOT", "FG", "TG", "FRG", "PG", "TR")

_STANDARD = _build_standard_gates()


def standard_gate(name: str) -> ReversibleGate:
    """Return one of NOT, FG, TG, FRG, PG, TR by name."""
    try:
        return _STANDARD[name]
    except KeyError:
        raise UnknownGateError(f"unknown gate {name!r}") from None


# Defining truth table of the 4x4 INVENTIVE gate, rows listed in (d,c,b,a)
# binary order, entries (P,Q,R,S). The table is the authoritative
# definition; the algebraic forms usually quoted for R and S do not
# reproduce it and are deliberately not used here.
_INVENTIVE_ROWS = (
    # d c b a    P  Q  R  S
    (0, 0, 1, 0),  # 0 0 0 0
    (1, 0, 0, 1),  # 0 0 0 1
    (1, 0, 1, 0),  # 0 0 1 0
    (0, 1, 0, 0),  # 0 0 1 1
    (1, 0, 1, 1),  # 0 1 0 0
    (0, 1, 0, 1),  # 0 1 0 1
    (0, 1, 1, 0),  # 0 1 1 0
    (1, 1, 1, 0),  # 0 1 1 1
    (0, 0, 1, 1),  # 1 0 0 0
    (1, 0, 0, 0),  # 1 0 0 1
    (1, 1, 0, 1),  # 1 0 1 0
    (0, 0, 0, 1),  # 1 0 1 1
    (1, 1, 0, 0),  # 1 1 0 0
    (0, 0, 0, 0),  # 1 1 0 1
    (0, 1, 1, 1),  # 1 1 1 0
    (1, 1, 1, 1),  # 1 1 1 1
)


def _inventive_perm():
    # Row index in _INVENTIVE_ROWS is d*8 + c*4 + b*2 + a; the packed
    # input code is a + 2b + 4c + 8d, so the row for code x sits at the
    # bit-reversed index.
    perm = [0] * 16
    for row, (p, q, r, s) in enumerate(_INVENTIVE_ROWS):
        d, c, b, a = (row >> 3) & 1, (row >> 2) & 1, (row >> 1) & 1, row & 1
        code = a | (b << 1) | (c << 2) | (d << 3)
        perm[code] = p | (q << 1) | (r << 2) | (s << 3)
    return tuple(perm)


_INVENTIVE = ReversibleGate(
    "INVENTIVE", 4, ("a", "b", "c", "d"), ("P", "Q", "R", "S"), _inventive_perm()
)


def inventive_gate() -> ReversibleGate:
    """The 4x4 INVENTIVE gate, defined row-for-row by its truth table."""
    return _INVENTIVE


def bme_candidate_table() -> Tuple[int, ...]:
    """Tabulate the algebraic form usually given for the 4x4 BME gate.

    P=A, Q=AB^C, R=AD^C, S=~A.B^C^D over ports (A,B,C,D). The result is
    not a permutation (inputs 0 and 10 collide), so it cannot back a
    ReversibleGate; it exists as a negative fixture for the bijectivity
    checker. The chain comparator cell is realized without it.
    """
    return _tabulate(
        4,
        lambda a, b, c, d: (
            a,
            (a & b) ^ c,
            (a & d) ^ c,
            ((1 - a) & b) ^ c ^ d,
        ),
    )


_BY_NAME = dict(_STANDARD)
_BY_NAME["INVENTIVE"] = _INVENTIVE

GATE_NAMES = STANDARD_GATE_NAMES + ("INVENTIVE",)


def gate_by_name(name: str) -> ReversibleGate:
    """Look up any library gate (standard set plus INVENTIVE)."""
    try:
        return _BY_NAME[name]
    except KeyError:
        raise UnknownGateError(f"unknown gate {name!r}") from None


def library_gates() -> Tuple[ReversibleGate, ...]:
    """All library gates in declaration order."""
    return tuple(_BY_NAME[n] for n in GATE_NAMES)
