"""Comparator builder tests: cells, assembly, metrics, oracle equivalence."""

import numpy as np
import pytest

from revlogic import engine
from revlogic.circuit import (
    Exhaustive,
    Vectors,
    append_gate,
    initial_states,
    metrics,
    simulate,
    truth_map,
    verify_against,
)
from revlogic.comparator import (
    CELL_TARGETS,
    CHAIN_CELL_NOTE,
    build_chain_cell,
    build_comparator,
    build_final_cell,
    build_in_cell,
    comparator_reference,
    conformance_report,
    edge_vectors,
    operand_bit_positions,
    pack_operands,
    predicted_comparator_metrics,
    verify_comparator,
)
from revlogic.gates import gate_by_name
from revlogic.oracles import compare_oracle


class TestInCell:
    def test_semantics_exhaustive(self):
        c = build_in_cell()
        for a in (0, 1):
            for b in (0, 1):
                out = simulate(c, {"a": a, "b": b}).outputs
                lt, eq, gt = compare_oracle(a, b, 1)
                assert (out["LT"], out["EQ"], out["GT"]) == (lt, eq, gt)

    def test_greater(self):
        out = simulate(build_in_cell(), {"a": 1, "b": 0}).outputs
        assert (out["GT"], out["EQ"], out["LT"]) == (1, 0, 0)

    def test_less(self):
        assert simulate(build_in_cell(), {"a": 0, "b": 1}).outputs["LT"] == 1

    def test_metrics(self):
        m = metrics(build_in_cell())
        t = CELL_TARGETS["IN"]
        assert (m.gate_count, m.constant_inputs, m.garbage_outputs) == (
            t.gates, t.constants, t.garbage,
        )

    def test_truth_map_matches_oracle_table(self):
        c = build_in_cell()
        pos = {name: i for i, name in enumerate(c.output_pack_names())}
        table = truth_map(c)
        for code in range(4):
            a, b = code & 1, (code >> 1) & 1
            lt, eq, gt = compare_oracle(a, b, 1)
            expected = (lt << pos["LT"]) | (eq << pos["EQ"]) | (gt << pos["GT"])
            assert table[code] == expected


class TestChainCell:
    def test_recurrence_exhaustive(self):
        """P_out = Q_in.(a.~b) ^ P_in and Q_out = Q_in.xnor(a,b), all 16 cases."""
        c = build_chain_cell()
        for code in range(16):
            a, b = code & 1, (code >> 1) & 1
            q_in, p_in = (code >> 2) & 1, (code >> 3) & 1
            out = simulate(c, {"a": a, "b": b, "Q_in": q_in, "P_in": p_in}).outputs
            assert out["P_out"] == (q_in & a & (1 - b)) ^ p_in
            assert out["Q_out"] == q_in & (1 - (a ^ b))

    def test_equal_bits_keep_flags(self):
        c = build_chain_cell()
        for bit in (0, 1):
            out = simulate(c, {"a": bit, "b": bit, "Q_in": 1, "P_in": 0}).outputs
            assert (out["P_out"], out["Q_out"]) == (0, 1)

    def test_first_difference_sets_greater(self):
        out = simulate(build_chain_cell(), {"a": 1, "b": 0, "Q_in": 1, "P_in": 0}).outputs
        assert (out["P_out"], out["Q_out"]) == (1, 0)

    def test_dead_chain_passes_p(self):
        c = build_chain_cell()
        for code in range(4):
            a, b = code & 1, (code >> 1) & 1
            for p in (0, 1):
                out = simulate(c, {"a": a, "b": b, "Q_in": 0, "P_in": p}).outputs
                assert (out["P_out"], out["Q_out"]) == (p, 0)

    def test_metrics(self):
        m = metrics(build_chain_cell())
        t = CELL_TARGETS["CHAIN"]
        assert (m.gate_count, m.constant_inputs, m.garbage_outputs) == (
            t.gates, t.constants, t.garbage,
        )


class TestFinalCell:
    @pytest.mark.parametrize(
        "p,q,expected",
        [
            ((0), (0), {"GT": 0, "EQ": 0, "LT": 1}),
            ((1), (0), {"GT": 1, "EQ": 0, "LT": 0}),
            ((0), (1), {"GT": 0, "EQ": 1, "LT": 0}),
        ],
    )
    def test_semantics(self, p, q, expected):
        out = simulate(build_final_cell(), {"P": p, "Q": q}).outputs
        assert out == expected

    def test_metrics(self):
        m = metrics(build_final_cell())
        t = CELL_TARGETS["FINAL"]
        assert (m.gate_count, m.constant_inputs, m.garbage_outputs) == (
            t.gates, t.constants, t.garbage,
        )


class TestAssemblyMetrics:
    @pytest.mark.parametrize(
        "n,expected",
        [(1, (3, 1, 2)), (2, (10, 5, 5)), (8, (34, 29, 17)), (16, (66, 61, 33)),
         (32, (130, 125, 65))],
    )
    def test_exact_values(self, n, expected):
        m = metrics(build_comparator(n))
        assert (m.gate_count, m.garbage_outputs, m.constant_inputs) == expected

    def test_formulas_up_to_64(self):
        for n in range(2, 65):
            m = metrics(build_comparator(n))
            assert m.gate_count == 6 + 4 * (n - 1)
            assert m.garbage_outputs == 1 + 4 * (n - 1)
            assert m.constant_inputs == 2 * n + 1
            assert (m.gate_count, m.garbage_outputs, m.constant_inputs) == (
                predicted_comparator_metrics(n)
            )

    def test_sum_law(self):
        for n in (1, 2, 5, 9):
            c = build_comparator(n)
            m = metrics(c)
            assert (
                m.garbage_outputs + m.auxiliary_outputs + len(c.output_lines())
                == m.line_count
            )

    def test_cell_decomposition(self):
        t_in, t_chain, t_final = CELL_TARGETS["IN"], CELL_TARGETS["CHAIN"], CELL_TARGETS["FINAL"]
        for n in (2, 8, 32):
            assert t_in.gates + t_chain.gates * (n - 1) + t_final.gates == 6 + 4 * (n - 1)
            assert t_in.garbage + t_chain.garbage * (n - 1) + t_final.garbage == 1 + 4 * (n - 1)
            assert t_in.constants + t_chain.constants * (n - 1) + t_final.constants == 2 * n + 1

    def test_width_zero_rejected(self):
        with pytest.raises(ValueError):
            build_comparator(0)


class TestOracleEquivalence:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_exhaustive_small(self, n):
        report = verify_comparator(n)
        assert report.passed and report.trials == 1 << (2 * n)

    def test_simulated_values(self):
        c = build_comparator(4)
        out = simulate(
            c,
            {"a3": 0, "a2": 0, "a1": 1, "a0": 0, "b3": 0, "b2": 1, "b1": 1, "b0": 1},
        ).outputs
        assert (out["LT"], out["EQ"], out["GT"]) == (1, 0, 0)  # 2 < 7

    def test_corrupted_comparator_detected(self):
        c = build_comparator(3)
        c = append_gate(c, gate_by_name("NOT"), (c.line_of_output("GT"),))
        report = verify_against(c, comparator_reference(c, 3), Exhaustive())
        assert not report.passed and report.counterexample is not None

    def test_edge_vector_count(self):
        assert len(edge_vectors(32)) == 130

    def test_edge_vectors_pass(self):
        report = verify_comparator(16, Vectors(tuple(edge_vectors(16))))
        assert report.passed and report.trials == 2 + 4 * 16


class TestChainInvariants:
    @pytest.mark.parametrize("n", [2, 3, 8])
    def test_exclusivity_at_every_boundary(self, n):
        """GT-so-far and EQ-so-far are never both 1, for every input."""
        c = build_comparator(n)
        bounds = c.annotations["chain_boundaries"]
        prog = engine.compile_circuit(c)
        codes = np.arange(1 << (2 * n), dtype=np.int64)
        states = initial_states(c, codes)
        done = 0
        for gate_end, p_line, q_line in bounds:
            engine.run_batch(prog, states, done, gate_end)
            done = gate_end
            assert not np.any(states[:, p_line] & states[:, q_line])

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_msb_lt_aux(self, n):
        """The auxiliary output equals LT of the most significant pair."""
        c = build_comparator(n)
        aux_line = c.aux_lines()[0]
        assert c.output_roles[aux_line].name == "msb_lt"
        prog = engine.compile_circuit(c)
        codes = np.arange(1 << (2 * n), dtype=np.int64)
        states = initial_states(c, codes)
        engine.run_batch(prog, states)
        a_bits, b_bits = operand_bit_positions(c)
        pos_a = {bit: pos for pos, bit in a_bits}
        pos_b = {bit: pos for pos, bit in b_bits}
        for code in range(1 << (2 * n)):
            a_msb = (code >> pos_a[n - 1]) & 1
            b_msb = (code >> pos_b[n - 1]) & 1
            lt, _, _ = compare_oracle(a_msb, b_msb, 1)
            assert states[code, aux_line] == lt

    def test_symmetry_randomized(self):
        """Swapping operands swaps LT and GT and fixes EQ (10^4 trials)."""
        n = 16
        c = build_comparator(n)
        rng = np.random.default_rng(2014)
        pairs = rng.integers(0, 1 << n, size=(10_000, 2), dtype=np.int64)
        fwd = [pack_operands(c, int(a), int(b)) for a, b in pairs]
        rev = [pack_operands(c, int(b), int(a)) for a, b in pairs]
        prog = engine.compile_circuit(c)
        pos = {name: c.line_of_output(name) for name in ("LT", "EQ", "GT")}
        s_fwd = initial_states(c, fwd)
        s_rev = initial_states(c, rev)
        engine.run_batch(prog, s_fwd)
        engine.run_batch(prog, s_rev)
        assert np.array_equal(s_fwd[:, pos["LT"]], s_rev[:, pos["GT"]])
        assert np.array_equal(s_fwd[:, pos["GT"]], s_rev[:, pos["LT"]])
        assert np.array_equal(s_fwd[:, pos["EQ"]], s_rev[:, pos["EQ"]])


class TestConformance:
    def test_report_is_conformant(self):
        for n in (1, 2, 8, 32):
            assert conformance_report(n).conformant

    def test_report_lists_replacement(self):
        text = conformance_report(8).render()
        assert CHAIN_CELL_NOTE in text
        assert "1 TR + 2 TG + 1 NOT" in text
        assert "msb_lt" in text

    def test_report_totals(self):
        rep = conformance_report(8)
        assert (rep.target_gates, rep.target_garbage, rep.target_constants) == (34, 29, 17)
        assert (rep.measured_gates, rep.measured_garbage, rep.measured_constants) == (34, 29, 17)
