#!/usr/bin/env python3
"""Benchmark the compiled simulation kernel against the numpy fallback.

Runs the same random batch through a comparator circuit with both
kernels, checks they agree bit for bit, and reports throughput.

    python benchmarks/bench_kernels.py [--bits 32] [--rows 100000] [--repeat 3]
"""

import argparse
import time

import numpy as np

from revlogic import engine
from revlogic.circuit import metrics
from revlogic.comparator import build_comparator


def bench(kernel, prog, states, repeat):
    best = float("inf")
    for _ in range(repeat):
        work = states.copy()
        t0 = time.perf_counter()
        engine.run_batch(prog, work, kernel=kernel)
        best = min(best, time.perf_counter() - t0)
    return best, work


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--bits", type=int, default=32)
    parser.add_argument("--rows", type=int, default=100_000)
    parser.add_argument("--repeat", type=int, default=3)
    parser.add_argument("--seed", type=int, default=2014)
    args = parser.parse_args()

    circuit = build_comparator(args.bits)
    prog = engine.compile_circuit(circuit)
    m = metrics(circuit)
    rng = np.random.default_rng(args.seed)
    states = rng.integers(0, 2, size=(args.rows, m.line_count), dtype=np.uint8)

    print(f"circuit: {circuit.name} ({m.gate_count} gates, {m.line_count} lines)")
    print(f"batch:   {args.rows} rows, best of {args.repeat}")

    results = {}
    outputs = {}
    for name in ("python", "compiled"):
        try:
            kernel = engine.get_kernel(name)
        except ImportError:
            print(f"{name:<9} not available (extension not built)")
            continue
        dt, out = bench(kernel, prog, states, args.repeat)
        results[name] = dt
        outputs[name] = out
        rate = args.rows * m.gate_count / dt
        print(f"{name:<9} {dt * 1e3:9.1f} ms   {rate / 1e6:8.1f} M gate-applications/s")

    if len(outputs) == 2:
        assert np.array_equal(outputs["python"], outputs["compiled"]), "kernels disagree"
        print(f"agreement: identical output states")
        print(f"speedup:   {results['python'] / results['compiled']:.1f}x compiled over python")


if __name__ == "__main__":
    main()
