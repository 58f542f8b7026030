"""Solve the sharpness family for a range of exponents and check the counts.

For distinct primes p_1 < ... < p_n (each above 2n) the polynomial
zeta_{p_1} + ... + zeta_{p_n} + x_1^{d_1} + ... + x_n^{d_n} has exactly
n! * d_1 * ... * d_n isolated torsion points and no positive-dimensional
cosets.  The sweep solves each instance and reports count and wall time.

    python3 scripts/family_sweep.py --primes 5,7 --max-degree 4
"""

import argparse
import sys
import time

sys.path.insert(0, "src")

from torcosets.linsums import cj_family
from torcosets.solver import descent_solve


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--primes", default="5,7", help="comma-separated distinct primes")
    ap.add_argument("--max-degree", type=int, default=3)
    args = ap.parse_args()

    primes = [int(p) for p in args.primes.split(",")]
    print(f"{'d':>4} {'expected':>9} {'isolated':>9} {'cosets':>7} {'secs':>8}")
    bad = 0
    for d in range(1, args.max_degree + 1):
        f, expected = cj_family(primes, d)
        start = time.monotonic()
        report = descent_solve(f)
        secs = time.monotonic() - start
        ok = len(report.isolated) == expected and not report.cosets
        bad += not ok
        flag = "" if ok else "  <- MISMATCH"
        print(
            f"{d:>4} {expected:>9} {len(report.isolated):>9} "
            f"{len(report.cosets):>7} {secs:>8.2f}{flag}"
        )
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
