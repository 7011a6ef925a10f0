#!/usr/bin/env python3
"""Error table for the three-point shape-curvature estimator.

For each fixture, prints how fast the windowed estimate of g''/(2 g')
approaches the exact value as the window halves, for symmetric and
asymmetric windows.
"""

from ftlshape.convergence import divided_difference_check
from ftlshape.gesture import fixtures

WINDOWS_SYM = [(h, h) for h in (1e-2 / 2 ** k for k in range(10))]
WINDOWS_ASYM = [(h, 2 * h) for h in (1e-2 / 2 ** k for k in range(10))]


def main():
    t = 0.37
    for name, g in sorted(fixtures().items()):
        print(f"\n{name} at t = {t}")
        print(f"  {'h0':>10} {'h1':>10} {'sym err':>12} {'asym err':>12}")
        sym = divided_difference_check(g, t, WINDOWS_SYM)
        asym = divided_difference_check(g, t, WINDOWS_ASYM)
        for ((h0, h1), es), (_, ea) in zip(sym, asym):
            print(f"  {h0:10.2e} {h1:10.2e} {es:12.3e} {ea:12.3e}")


if __name__ == "__main__":
    main()
