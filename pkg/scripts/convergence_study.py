#!/usr/bin/env python3
"""Record per-stage p-adic valuations of the Volkenborn Riemann sums.

No convergence *rate* is asserted anywhere in the package (only that the
valuations are nondecreasing), so this script records the observed per-N
valuations as regression data.  Small experiments suggest the single-variable
family satisfies v_p(S_N - closed form) = N exactly; the last column tracks
whether that pattern held for each run.
"""

import argparse
import math
import sys
from fractions import Fraction

from qsym.volkenborn import PadicContext, convergence_report, default_q0


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--primes", type=lambda s: tuple(int(t) for t in s.split(",")),
                        default=(2, 3, 5))
    parser.add_argument("--max-n", type=int, default=3)
    parser.add_argument("--nmax", type=int, default=4, help="largest stage for r = 1")
    args = parser.parse_args()

    print(f"{'p':>3} {'q0':>4} {'family':<9} {'n':>2} {'r':>2} {'x':>2}  valuations        v=N?")
    for p in args.primes:
        q0 = default_q0(p)
        ctx1 = PadicContext(p=p, q0=q0, Nmax=args.nmax)
        nmax2 = args.nmax
        while p ** (2 * nmax2) > ctx1.budget:
            nmax2 -= 1
        ctx2 = PadicContext(p=p, q0=q0, Nmax=nmax2)
        for n in range(args.max_n + 1):
            for x in (0, 1):
                runs = [
                    ("single", {"n": n, "x": x}, ctx1),
                    ("multi", {"n": n, "r": 2, "x": x}, ctx2),
                    ("weighted", {"n": n, "h": 2, "r": 1, "x": x}, ctx1),
                ]
                for family, params, ctx in runs:
                    rep = convergence_report(family, params, ctx)
                    vals = " ".join(
                        "inf" if v == math.inf else str(v) for _, v in rep.points
                    )
                    exact_rate = all(v == N for N, v in rep.points)
                    r = params.get("r", 1)
                    print(
                        f"{p:>3} {str(Fraction(q0)):>4} {family:<9} {n:>2} {r:>2} {x:>2}"
                        f"  {vals:<16}  {'yes' if exact_rate else 'no'}"
                        + ("" if rep.monotone else "  NOT MONOTONE")
                    )
    return 0


if __name__ == "__main__":
    sys.exit(main())
