"""Command-line interface.

Subcommands: gates, build, simulate, verify, metrics, synth, tables.
Exit codes: 0 success, 1 verification/search failure, 2 usage error,
3 I/O error. All randomized verification is explicitly seeded and the
seed is printed, so identical invocations give identical output.
"""

from __future__ import annotations

import argparse
import sys
from typing import Dict, List, Optional

from revlogic import circuit as cir
from revlogic import comparator, costmodel, decoder, rnl, synth
from revlogic.engine import backend_name
from revlogic.gates import UnknownGateError, gate_by_name, library_gates
from revlogic.oracles import UnknownTargetError, target_function

DEFAULT_SEED = 2014


def _write_output(text: str, path: Optional[str]) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(text)


def _load_circuit(path: str) -> cir.Circuit:
    with open(path, "r", encoding="ascii") as fh:
        return rnl.parse_rnl(fh.read())


def _parse_value(token: str) -> int:
    return int(token, 0)  # accepts decimal and 0x-prefixed hex


def _expand_assignment(circuit: cir.Circuit, pairs: List[str]) -> Dict[str, int]:
    """Turn --set name=value pairs into per-line bit assignments.

    A name matching a primary input line sets that bit; otherwise it is
    a vector name and lines called f"{name}{k}" receive bit k of value.
    """
    names = set(circuit.input_pack_names())
    assignment: Dict[str, int] = {}
    for pair in pairs:
        if "=" not in pair:
            raise ValueError(f"--set expects name=value, got {pair!r}")
        name, _, raw = pair.partition("=")
        value = _parse_value(raw)
        if name in names:
            if value not in (0, 1):
                raise ValueError(f"line {name!r} takes a single bit, got {value}")
            assignment[name] = value
            continue
        members = sorted(
            (int(nm[len(name):]), nm)
            for nm in names
            if nm.startswith(name) and nm[len(name):].isdigit()
        )
        if not members:
            raise ValueError(f"no input line or vector named {name!r}")
        width = members[-1][0] + 1
        if not 0 <= value < 1 << width:
            raise ValueError(f"value {value:#x} does not fit vector {name!r} ({width} bits)")
        for bit, nm in members:
            assignment[nm] = (value >> bit) & 1
    return assignment


def _infer_operand_width(circuit: cir.Circuit) -> int:
    a_bits, b_bits = comparator.operand_bit_positions(circuit)
    if not a_bits or not b_bits:
        raise ValueError("circuit inputs are not an a*/b* operand pair")
    n = max(bit for _, bit in a_bits) + 1
    if len(a_bits) != n or len(b_bits) != n or max(bit for _, bit in b_bits) + 1 != n:
        raise ValueError("operand bit lines do not form two complete vectors")
    return n


def _cmd_gates(args) -> int:
    for gate in library_gates():
        ports = ",".join(gate.ports_in) + " -> " + ",".join(gate.ports_out)
        print(f"{gate.name:<10} width={gate.width}  {ports}")
        print(f"{'':<10} perm={list(gate.perm)}")
    return 0


def _cmd_build(args) -> int:
    if args.what == "comparator":
        built = comparator.build_comparator(args.bits)
    elif args.what == "decoder":
        built = decoder.build_decoder(args.bits)
    else:
        if args.kind == "in":
            built = comparator.build_in_cell()
        elif args.kind == "chain":
            built = comparator.build_chain_cell()
        else:
            built = comparator.build_final_cell()
    _write_output(rnl.export_rnl(built), args.output)
    if args.output:
        print(f"wrote {built.name} to {args.output}")
    return 0


def _cmd_simulate(args) -> int:
    circuit = _load_circuit(args.file)
    assignment = _expand_assignment(circuit, args.set or [])
    result = cir.simulate(circuit, assignment)
    for line in circuit.output_lines():
        name = circuit.output_roles[line].name
        print(f"{name}={result.outputs[name]}")
    for line in circuit.aux_lines():
        name = circuit.output_roles[line].name
        print(f"aux {name}={result.aux[name]}")
    if args.full:
        print("lines=" + "".join(str(v) for v in result.line_values))
    return 0


def _cmd_verify(args) -> int:
    circuit = _load_circuit(args.file)
    if args.oracle == "compare":
        n = _infer_operand_width(circuit)
        reference = comparator.comparator_reference(circuit, n)
    else:
        reference = decoder.decoder_reference(circuit)
    p = len(circuit.input_lines())
    if args.random is not None:
        strategy = cir.RandomTrials(args.random, args.seed)
        print(f"seed: {args.seed}")
    elif args.exhaustive or p <= cir.EXHAUSTIVE_INPUT_LIMIT:
        strategy = cir.Exhaustive()
    else:
        strategy = cir.RandomTrials(100_000, args.seed)
        print(f"seed: {args.seed}")
    report = cir.verify_against(circuit, reference, strategy)
    print(f"strategy: {report.strategy}")
    if report.passed:
        print(f"result: PASS ({report.trials}/{report.trials})")
        return 0
    code, got, expected = report.counterexample
    print(f"result: FAIL after {report.trials} trials")
    print(f"counterexample: input={code:#x} got={got:#x} expected={expected:#x}")
    return 1


def _cmd_metrics(args) -> int:
    circuit = _load_circuit(args.file)
    m = cir.metrics(circuit)
    print(f"lines:             {m.line_count}")
    print(f"gates:             {m.gate_count}")
    print(f"garbage outputs:   {m.garbage_outputs}")
    print(f"constant inputs:   {m.constant_inputs}")
    print(f"auxiliary outputs: {m.auxiliary_outputs}")
    print(f"depth:             {m.depth}")
    if args.targets:
        names = set(circuit.output_pack_names())
        if {"LT", "EQ", "GT"} <= names:
            n = _infer_operand_width(circuit)
            gates, garbage, constants = comparator.predicted_comparator_metrics(n)
            print(f"targets ({n}-bit comparator): gates={gates} "
                  f"garbage={garbage} constants={constants}")
            print(f"deltas: gates={m.gate_count - gates:+d} "
                  f"garbage={m.garbage_outputs - garbage:+d} "
                  f"constants={m.constant_inputs - constants:+d}")
            print(comparator.conformance_report(n).render())
        elif names and all(nm.startswith("d") for nm in names):
            bits = len(circuit.input_lines())
            claim_gates, claim_garbage = decoder.decoder_claimed_bounds(bits)
            print(f"targets ({bits}-bit decoder): gates<={claim_gates} garbage<={claim_garbage}")
            print(decoder.conformance_report(bits).render())
        else:
            print("targets: none known for this circuit shape")
    return 0


def _cmd_synth(args) -> int:
    gate = gate_by_name(args.gate.upper())
    if args.matrix:
        results = synth.enumerate_utilities(gate)
        print(synth.render_capability_matrix(gate, results))
        return 0
    target = target_function(args.target.upper())
    found = synth.search_realization(gate, target)
    if found is None:
        print(f"{target.name}: NOT FOUND (search space exhausted)")
        return 1
    print(found.describe())
    return 0


def _cmd_tables(args) -> int:
    widths = [int(w) for w in args.widths.split(",") if w]
    text = costmodel.render_tables(widths, args.format)
    _write_output(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="revlogic",
        description="Reversible comparator/decoder toolkit "
                    f"(simulation backend: {backend_name()})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gates", help="list the gate library")
    p.add_argument("--list", action="store_true", help="accepted for symmetry; implied")
    p.set_defaults(fn=_cmd_gates)

    p = sub.add_parser("build", help="generate a circuit as .rnl")
    p.add_argument("what", choices=("comparator", "decoder", "cell"))
    p.add_argument("--bits", type=int, default=2, help="operand/input width")
    p.add_argument("--kind", choices=("in", "chain", "final"), default="in",
                   help="cell kind when building a cell")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(fn=_cmd_build)

    p = sub.add_parser("simulate", help="simulate a .rnl file")
    p.add_argument("file")
    p.add_argument("--set", action="append", metavar="NAME=VALUE",
                   help="bit or vector assignment, hex or decimal")
    p.add_argument("--full", action="store_true", help="also print the raw line state")
    p.set_defaults(fn=_cmd_simulate)

    p = sub.add_parser("verify", help="check a .rnl file against an oracle")
    p.add_argument("file")
    p.add_argument("--oracle", choices=("compare", "decode"), required=True)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--random", type=int, metavar="N", help="number of random trials")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=_cmd_verify)

    p = sub.add_parser("metrics", help="cost figures of a .rnl file")
    p.add_argument("file")
    p.add_argument("--targets", action="store_true",
                   help="also show closed-form targets and the conformance report")
    p.set_defaults(fn=_cmd_metrics)

    p = sub.add_parser("synth", help="single-gate realization search")
    p.add_argument("--gate", required=True)
    p.add_argument("--target", help="target function name")
    p.add_argument("--matrix", action="store_true", help="run every target")
    p.set_defaults(fn=_cmd_synth)

    p = sub.add_parser("tables", help="cost model comparison tables")
    p.add_argument("--widths", default="8,16,32", help="comma-separated operand widths")
    p.add_argument("--format", choices=("csv", "markdown"), default="markdown")
    p.add_argument("-o", "--output", help="output path (default stdout)")
    p.set_defaults(fn=_cmd_tables)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.command == "synth" and not args.matrix and not args.target:
        print("error: synth needs --target or --matrix", file=sys.stderr)
        return 2
    try:
        return args.fn(args)
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return 3
    except rnl.RnlSyntaxError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (UnknownGateError, UnknownTargetError) as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
