"""Gate library tests: the defining tables, packing, and bijectivity."""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from revlogic.gates import (
    GATE_NAMES,
    NotBijectiveError,
    UnknownGateError,
    bme_candidate_table,
    check_bijective,
    gate_by_name,
    gate_from_table,
    inventive_gate,
    library_gates,
    standard_gate,
)

# Defining truth table of the INVENTIVE gate, rows in (d,c,b,a) order,
# outputs (P,Q,R,S). Transcribed independently of the implementation.
INVENTIVE_TABLE = [
    ((0, 0, 0, 0), (0, 0, 1, 0)),
    ((0, 0, 0, 1), (1, 0, 0, 1)),
    ((0, 0, 1, 0), (1, 0, 1, 0)),
    ((0, 0, 1, 1), (0, 1, 0, 0)),
    ((0, 1, 0, 0), (1, 0, 1, 1)),
    ((0, 1, 0, 1), (0, 1, 0, 1)),
    ((0, 1, 1, 0), (0, 1, 1, 0)),
    ((0, 1, 1, 1), (1, 1, 1, 0)),
    ((1, 0, 0, 0), (0, 0, 1, 1)),
    ((1, 0, 0, 1), (1, 0, 0, 0)),
    ((1, 0, 1, 0), (1, 1, 0, 1)),
    ((1, 0, 1, 1), (0, 0, 0, 1)),
    ((1, 1, 0, 0), (1, 1, 0, 0)),
    ((1, 1, 0, 1), (0, 0, 0, 0)),
    ((1, 1, 1, 0), (0, 1, 1, 1)),
    ((1, 1, 1, 1), (1, 1, 1, 1)),
]

# Re-packing the table with the first-port-least-significant convention.
INVENTIVE_PERM = [4, 9, 5, 2, 13, 10, 6, 7, 12, 1, 11, 8, 3, 0, 14, 15]


class TestInventive:
    def test_all_rows(self):
        gate = inventive_gate()
        for (d, c, b, a), (p, q, r, s) in INVENTIVE_TABLE:
            code = a | (b << 1) | (c << 2) | (d << 3)
            expected = p | (q << 1) | (r << 2) | (s << 3)
            assert gate.apply(code) == expected, f"row dcba={d}{c}{b}{a}"

    def test_perm_array(self):
        assert list(inventive_gate().perm) == INVENTIVE_PERM

    def test_first_and_last_row(self):
        gate = inventive_gate()
        assert gate.apply(0b0000) == 0b0100  # (P,Q,R,S)=(0,0,1,0)
        assert gate.apply(0b1111) == 0b1111

    def test_single_one_input(self):
        # (a,b,c,d)=(1,0,0,0) -> (P,Q,R,S)=(1,0,0,1)
        assert inventive_gate().apply(0b0001) == 0b1001

    def test_bijective(self):
        assert check_bijective(inventive_gate().perm).bijective

    def test_restriction_c0_d1(self):
        """With (c,d)=(0,1): P=a^b, Q=~a.b, R=~a.~b, S=~(a.~b)."""
        gate = inventive_gate()
        for a in (0, 1):
            for b in (0, 1):
                out = gate.apply(a | (b << 1) | (1 << 3))
                p, q, r, s = (out >> 0) & 1, (out >> 1) & 1, (out >> 2) & 1, (out >> 3) & 1
                assert p == a ^ b
                assert q == (1 - a) & b
                assert r == (1 - a) & (1 - b)
                assert s == 1 - (a & (1 - b))

    def test_restriction_c0_d0(self):
        """With (c,d)=(0,0): P=a^b, Q=a.b (half adder)."""
        gate = inventive_gate()
        for a in (0, 1):
            for b in (0, 1):
                out = gate.apply(a | (b << 1))
                assert (out >> 0) & 1 == a ^ b
                assert (out >> 1) & 1 == a & b


class TestStandardGates:
    def test_names(self):
        for name in ("NOT", "FG", "TG", "FRG", "PG", "TR"):
            assert standard_gate(name).name == name

    def test_unknown(self):
        with pytest.raises(UnknownGateError):
            standard_gate("BME")

    def test_not(self):
        assert standard_gate("NOT").apply(0) == 1
        assert standard_gate("NOT").apply(1) == 0

    def test_fg_equal_bits(self):
        # (A=1,B=1) -> (P=1,Q=0)
        assert standard_gate("FG").apply(0b11) == 0b01

    def test_tr_example(self):
        # (A=1,B=0,C=0) -> (P=1, Q=1, R=A.~B^C=1)
        assert standard_gate("TR").apply(0b001) == 0b111

    def test_tr_algebra(self):
        tr = standard_gate("TR")
        for code in range(8):
            a, b, c = code & 1, (code >> 1) & 1, (code >> 2) & 1
            out = tr.apply(code)
            assert out == (a | ((a ^ b) << 1) | (((a & (1 - b)) ^ c) << 2))

    def test_fredkin_control_zero(self):
        frg = standard_gate("FRG")
        for x in (0, 1):
            for y in (0, 1):
                code = (x << 1) | (y << 2)
                assert frg.apply(code) == code

    def test_fredkin_control_one_swaps(self):
        frg = standard_gate("FRG")
        for x in (0, 1):
            for y in (0, 1):
                out = frg.apply(1 | (x << 1) | (y << 2))
                assert out == (1 | (y << 1) | (x << 2))

    def test_peres_algebra(self):
        pg = standard_gate("PG")
        for code in range(8):
            a, b, c = code & 1, (code >> 1) & 1, (code >> 2) & 1
            assert pg.apply(code) == (a | ((a ^ b) << 1) | (((a & b) ^ c) << 2))

    def test_toffoli_algebra(self):
        tg = standard_gate("TG")
        for code in range(8):
            a, b, c = code & 1, (code >> 1) & 1, (code >> 2) & 1
            assert tg.apply(code) == (a | (b << 1) | (((a & b) ^ c) << 2))


class TestBmeRefutation:
    def test_collision_witness(self):
        verdict = check_bijective(bme_candidate_table())
        assert not verdict.bijective
        assert verdict.witness == (0, 10)  # (A,B,C,D)=(0,0,0,0) and (0,1,0,1)

    def test_witness_outputs_equal(self):
        table = bme_candidate_table()
        i, j = check_bijective(table).witness
        assert i != j and table[i] == table[j]

    def test_constructor_refuses(self):
        with pytest.raises(NotBijectiveError) as exc:
            gate_from_table("BME", 4, bme_candidate_table())
        assert exc.value.verdict.witness == (0, 10)


class TestCheckBijective:
    def test_identity(self):
        assert check_bijective([0, 1, 2, 3]).bijective

    def test_simple_collision(self):
        assert check_bijective([0, 0, 1, 1]).witness == (0, 1)

    def test_constant_zero(self):
        verdict = check_bijective([0] * 8)
        assert not verdict.bijective and verdict.witness == (0, 1)

    def test_bad_length(self):
        with pytest.raises(ValueError):
            check_bijective([0, 1, 2])

    def test_out_of_range_entry(self):
        with pytest.raises(ValueError):
            check_bijective([0, 1, 2, 5])

    @given(st.permutations(list(range(16))))
    def test_accepts_any_permutation(self, perm):
        assert check_bijective(perm).bijective

    @given(st.lists(st.integers(0, 7), min_size=8, max_size=8))
    def test_witness_is_valid_or_table_is_permutation(self, table):
        verdict = check_bijective(table)
        if verdict.bijective:
            assert sorted(table) == list(range(8))
        else:
            i, j = verdict.witness
            assert i < j and table[i] == table[j]


class TestConstruction:
    def test_gate_from_table_identity(self):
        gate = gate_from_table("ID2", 2, [0, 1, 2, 3])
        assert gate.width == 2 and gate.apply(2) == 2

    def test_wrong_table_size(self):
        with pytest.raises(ValueError):
            gate_from_table("BAD", 2, [0, 1, 2, 3, 4, 5, 6, 7])

    def test_width_bounds(self):
        with pytest.raises(ValueError):
            gate_from_table("W0", 0, [0])
        with pytest.raises(ValueError):
            gate_from_table("W9", 9, list(range(512)))

    def test_apply_range(self):
        with pytest.raises(ValueError):
            standard_gate("FG").apply(4)


class TestInversion:
    def test_not_is_involution(self):
        g = standard_gate("NOT")
        assert g.inverse().perm == g.perm

    def test_fg_self_inverse(self):
        g = standard_gate("FG")
        assert g.inverse().perm == g.perm
        assert g.inverse().name == "FG"

    def test_inventive_roundtrip(self):
        gate = inventive_gate()
        inv = gate.inverse()
        for code in range(16):
            assert inv.apply(gate.apply(code)) == code

    def test_all_library_gates_invert(self):
        for gate in library_gates():
            inv = gate.inverse()
            for code in range(gate.size):
                assert inv.apply(gate.apply(code)) == code
                assert gate.apply(inv.apply(code)) == code

    def test_library_covers_expected_names(self):
        assert GATE_NAMES == ("NOT", "FG", "TG", "FRG", "PG", "TR", "INVENTIVE")
        assert gate_by_name("INVENTIVE").width == 4
