"""Time the compiled and pure-Python simulators on the shipped feature maps.

Usage: python benchmarks/bench_backends.py [--samples 200] [--qubits 10] [--repeats 3]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from qff import zoo
from qff.simulator import BACKENDS, CompiledProgram, simulate_states


def best_time(fn, repeats: int) -> tuple[float, np.ndarray]:
    timings, out = [], None
    for _ in range(repeats):
        start = time.perf_counter()
        out = fn()
        timings.append(time.perf_counter() - start)
    return min(timings), out


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--samples", type=int, default=200)
    parser.add_argument("--qubits", type=int, default=10)
    parser.add_argument("--input-dim", type=int, default=80)
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args(argv)

    if "compiled" not in BACKENDS:
        print("compiled backend not built; only the python backend is available")
    X = np.random.default_rng(args.seed).random((args.samples, args.input_dim))

    print(f"{'map':<16}{'gates':>7}{'backend':>10}{'seconds':>10}{'speedup':>9}{'max |diff|':>12}")
    for name in zoo.QUANTUM_MAPS:
        program = zoo.build(name, args.qubits, args.input_dim)
        compiled_program = CompiledProgram.from_program(program)
        results = {}
        for backend in sorted(BACKENDS, reverse=True):  # python first as the reference
            results[backend] = best_time(
                lambda b=backend: simulate_states(compiled_program, X, backend=b), args.repeats)
        ref_seconds, ref_states = results["python"]
        for backend, (seconds, states) in results.items():
            diff = float(np.max(np.abs(states - ref_states)))
            print(f"{name:<16}{len(program.gates):>7}{backend:>10}{seconds:>10.3f}"
                  f"{ref_seconds / seconds:>8.1f}x{diff:>12.2e}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
