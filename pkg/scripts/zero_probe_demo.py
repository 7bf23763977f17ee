#!/usr/bin/env python3
"""Zero-consistency probes on the critical line.

Runs the L_p probe at the first ordinate where the alternating zeta sum
vanishes, at a nearby non-vanishing ordinate, and for the beta-function
chain at the same ordinate, then prints the three reports.
"""

import argparse
import time

from efetzeta import InterpParams, riemann_zeta, dirichlet_beta, zero_probe

FIRST_ZERO_T = 14.134725141734695


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--p", type=float, default=1.0)
    ap.add_argument("--ymax", type=float, default=512.0)
    args = ap.parse_args()

    cases = [
        ("zeta at its first critical zero", 0.5 + 1j * FIRST_ZERO_T, 1.0),
        ("zeta off-zero", 0.5 + 10.0j, 1.0),
        ("beta at the zeta-zero ordinate", 0.5 + 1j * FIRST_ZERO_T, 0.5),
    ]
    for label, s, v in cases:
        mag = abs(riemann_zeta(s) if v == 1.0 else dirichlet_beta(s))
        t0 = time.time()
        rep = zero_probe(InterpParams(1, s, v), p=args.p, y_max=args.ymax)
        print(f"{label}: |value| = {mag:.3e}")
        print(f"  -> {rep.classification.value}  "
              f"amp = {rep.amplitude_estimate:.3e} (tol {rep.amp_tol:.3e}), "
              f"L_{args.p:g} growth exponent = {rep.lp_growth_exponent:.3f} "
              f"[{time.time() - t0:.1f}s]")


if __name__ == "__main__":
    main()
