"""Trace how the integer simplex embedding converges as the scale grows.

At scale l the rounded matrix M_l approximates l * M^-1, so the ratio
det(M_l) * det(M) / l^n should approach 1.  The script prints that ratio
together with the verification flag across a grid of scales; scales where
rounding collapses the matrix are reported and skipped.

    python3 scripts/embedding_limits.py --points "0,0 3,0 0,2" --scales 10,30,100,300,1000
"""

import argparse
import sys

sys.path.insert(0, "src")

from torcosets.errors import ScaleTooSmall
from torcosets.geom import LatticePolytope, simplex_embed


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument(
        "--points",
        default="0,0 3,0 0,2",
        help="space-separated lattice points, each a comma pair or triple",
    )
    ap.add_argument("--scales", default="10,30,100,300,1000,3000")
    args = ap.parse_args()

    pts = [tuple(int(v) for v in p.split(",")) for p in args.points.split()]
    P = LatticePolytope.from_points(pts)
    n = len(pts[0])

    print(f"{'l':>7} {'det(M_l)':>14} {'ratio':>12} {'verified':>9}")
    for l in (int(s) for s in args.scales.split(",")):
        try:
            emb = simplex_embed(P, l)
        except ScaleTooSmall:
            print(f"{l:>7} {'-':>14} {'-':>12} {'collapsed':>9}")
            continue
        ratio = emb.det_m_l * emb.ellipsoid.det_factor / float(l) ** n
        print(f"{l:>7} {emb.det_m_l:>14} {ratio:>12.6f} {str(emb.verified):>9}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
