#!/usr/bin/env python3
"""Produce the convergence report tables for all fixture pairs.

Writes CSV sweeps (uniform and jittered) into reports/ and prints a
summary with the fitted log-log error rates.
"""

import itertools
from pathlib import Path

from ftlshape.convergence import (SamplingMode, emit_report, estimate_rate,
                                  sweep_ftl, sweep_shape_sum)
from ftlshape.gesture import fixtures

NS = [100, 300, 1000, 3000, 10000]
OUT = Path(__file__).resolve().parents[1] / "reports"


def main():
    OUT.mkdir(exist_ok=True)
    table = fixtures()
    modes = {
        "uniform": SamplingMode.uniform(),
        "jitter": SamplingMode.jitter(seed=1, strength=0.3),
    }
    print(f"{'sweep':<28} {'mode':<8} {'final abs err':>14} {'rate':>7}")
    for (a, b) in itertools.combinations(sorted(table), 2):
        for mode_name, mode in modes.items():
            rows = sweep_ftl(table[a], table[b], NS, mode)
            path = OUT / f"ftl_{a}_{b}_{mode_name}.csv"
            path.write_bytes(emit_report(rows, "csv"))
            rate = estimate_rate(rows)
            rate_s = f"{rate:7.3f}" if rate is not None else "    n/a"
            print(f"{a + ':' + b:<28} {mode_name:<8} "
                  f"{rows[-1].abs_error:14.3e} {rate_s}")
    for name in sorted(table):
        for mode_name, mode in modes.items():
            rows = sweep_shape_sum(table[name], NS, mode)
            path = OUT / f"shapesum_{name}_{mode_name}.csv"
            path.write_bytes(emit_report(rows, "csv"))
            rate = estimate_rate(rows)
            rate_s = f"{rate:7.3f}" if rate is not None else "    n/a"
            print(f"{'sum ' + name:<28} {mode_name:<8} "
                  f"{rows[-1].abs_error:14.3e} {rate_s}")
    print(f"\nreports written to {OUT}")


if __name__ == "__main__":
    main()
