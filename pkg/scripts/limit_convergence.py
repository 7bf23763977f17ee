#!/usr/bin/env python3
"""Tabulate the masked-limit convergence D(y) -> Gamma(s) Phi.

Prints, for a few parameter triples, the residual |D(y) - target| on a
dyadic ladder together with the fitted decay slope and the Richardson
estimate, illustrating the y^-2 error model.
"""

import argparse
import math

import numpy as np

from efetzeta import (DEFAULT_CONFIG, InterpParams, PhiArgs, complex_gamma,
                      decay_slope, extract_limit, F_ksv, lerch_phi,
                      masked_point)

TRIPLES = [
    (1, 1.5, 1.0),
    (1, 1.5, 0.5),
    (0, 1.5, 1.0),
    (1, 0.5 + 3.0j, 0.5),
]


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--ymax", type=float, default=320.0)
    args = ap.parse_args()

    for k, s, v in TRIPLES:
        params = InterpParams(k, s, v)
        target = complex_gamma(s) * lerch_phi(PhiArgs(-1 if k else 1, s, v))
        print(f"\nk={k} s={s} v={v}   target={target:.10f}")
        y = args.ymax
        ladder = []
        while y >= 19.0:
            ladder.append(masked_point(y, k))
            y /= 2.0
        for yy in reversed(ladder):
            d = F_ksv(params, yy)
            print(f"  y={yy:8.2f}  |D-target| = {abs(d - target):.3e}")
        est, err = extract_limit(params, y_max=args.ymax)
        slope = decay_slope(params, y_max=args.ymax)
        print(f"  richardson: |est-target| = {abs(est - target):.3e} "
              f"(reported {err:.1e}), slope = {slope:+.3f}")


if __name__ == "__main__":
    main()
