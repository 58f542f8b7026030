"""Tabulate the refined degree bound against published alternatives.

Prints, for each total degree delta in the requested range, the refined
bound for isolated points in n variables next to the published counting
bounds that accept the same parameters.  Values too large to expand are
shown as powers of two.

    python3 scripts/bound_table.py -n 2 --deltas 1,2,3,4,5
"""

import argparse
import math
import sys

sys.path.insert(0, "src")

from torcosets.bounds import bound_competitors, bound_main


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("-n", type=int, default=2, help="ambient dimension")
    ap.add_argument("--deltas", default="1,2,3,4,5", help="total degrees to tabulate")
    ap.add_argument("--csv", action="store_true")
    ap.add_argument("--log2", action="store_true", help="compact table of log2 values")
    args = ap.parse_args()

    deltas = [int(d) for d in args.deltas.split(",")]
    rows = []
    for delta in deltas:
        refined = bound_main(args.n, args.n - 1, delta, 0).refined
        row = {"delta": str(delta)}
        if args.log2:
            row["refined"] = f"{math.log2(refined):.2f}"
            for rep in bound_competitors(args.n, delta=delta, k=1):
                row[rep.name] = f"{rep.log2:.2f}"
        else:
            row["refined"] = str(refined)
            for rep in bound_competitors(args.n, delta=delta, k=1):
                row[rep.name] = rep.render()
        rows.append(row)

    cols = ["delta", "refined"] + [k for k in rows[0] if k not in ("delta", "refined")]
    if args.csv:
        print(",".join(cols))
        for row in rows:
            print(",".join(row.get(c, "") for c in cols))
        return 0
    widths = {c: max(len(c), max(len(row.get(c, "")) for row in rows)) for c in cols}
    print("  ".join(c.rjust(widths[c]) for c in cols))
    for row in rows:
        print("  ".join(row.get(c, "").rjust(widths[c]) for c in cols))
    return 0


if __name__ == "__main__":
    sys.exit(main())
