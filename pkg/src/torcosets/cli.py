"""Command-line front end.

Every subcommand validates its inputs against hard caps, emits either
human-readable text or machine-readable JSON, and signals failure through
the exit status: 0 on success, 1 for a domain error (reported as a
structured error object), 2 for a usage error (argparse's own behaviour).
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from concurrent.futures import ThreadPoolExecutor

from .arith import Q
from .bounds import (
    bound_competitors,
    bound_main,
    bound_theta,
    bound_theta0,
    bound_volume,
)
from .cyclo import RootOfUnity, set_max_conductor
from .errors import CapExceeded, ParseError, ToolError
from .geom import newton_polytope, polytope_stats, simplex_embed
from .linsums import (
    cj_conductors,
    cj_family,
    minimal_vanishing_sums,
    psi,
    solve_linear_torsion,
)
from .parser import parse_poly, poly_to_string
from .solver import (
    bruteforce_oracle,
    coset_points_up_to,
    descent_solve,
)

HARD_MAX_CONDUCTOR = 10_000
HARD_MAX_ORDER = 240
HARD_MAX_DEPTH = 64


def _fmt_root(r: RootOfUnity) -> str:
    if r.is_one:
        return "1"
    if r.ord == 2:
        return "-1"
    return f"z{r.ord}" + (f"^{r.num}" if r.num != 1 else "")


def _fmt_point(p) -> str:
    return "(" + ", ".join(_fmt_root(r) for r in p) + ")"


def _point_json(p) -> list:
    return [r.to_json() for r in p]


def _sort_points(points):
    return sorted(points, key=lambda p: tuple(r.sort_key() for r in p))


# -- argument helpers -----------------------------------------------------------


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip() != ""]
    except ValueError:
        raise ParseError(f"expected a comma-separated integer list, got {text!r}", 0)


_FIXED_RE = re.compile(r"([+-]?)(\d+)?(\*)?(?:z(\d+)(?:\^(-?\d+))?)?")


def _parse_fixed(text: str) -> list[tuple[int, RootOfUnity]]:
    """Comma-separated terms COEFF, zN^K or COEFF*zN^K."""
    out = []
    for piece in text.split(","):
        piece = piece.replace(" ", "")
        if not piece:
            continue
        m = _FIXED_RE.fullmatch(piece)
        if not m or (m.group(2) is None and m.group(4) is None):
            raise ParseError(f"cannot read fixed term {piece!r}", 0)
        if m.group(3) and (m.group(2) is None or m.group(4) is None):
            raise ParseError(f"misplaced * in fixed term {piece!r}", 0)
        coeff = int(m.group(2) or 1) * (-1 if m.group(1) == "-" else 1)
        if m.group(4):
            root = RootOfUnity.make(int(m.group(5) or 1), int(m.group(4)))
        else:
            root = RootOfUnity.one()
        out.append((coeff, root))
    if not out:
        raise ParseError("no fixed terms given", 0)
    return out


def _apply_caps(args) -> None:
    cap = getattr(args, "max_conductor", None)
    if cap is not None:
        if not 1 <= cap <= HARD_MAX_CONDUCTOR:
            raise CapExceeded(
                f"the conductor cap must stay within 1..{HARD_MAX_CONDUCTOR}"
            )
        set_max_conductor(cap)
    else:
        set_max_conductor(HARD_MAX_CONDUCTOR)


def _check_order(m: int, cap: int) -> None:
    if not 1 <= cap <= HARD_MAX_ORDER:
        raise CapExceeded(f"the order cap must stay within 1..{HARD_MAX_ORDER}")
    if not 1 <= m <= cap:
        raise CapExceeded(f"the order must stay within 1..{cap}")


# -- subcommands ----------------------------------------------------------------


def _cmd_solve(args) -> dict:
    if not 1 <= args.max_depth <= HARD_MAX_DEPTH:
        raise CapExceeded(f"the depth cap must stay within 1..{HARD_MAX_DEPTH}")
    f = parse_poly(args.poly, args.nvars)
    report = descent_solve(f, max_depth=args.max_depth)
    if args.json:
        return report.to_json()
    lines = [f"isolated points: {report.counts['j0']}"]
    lines += [f"  {_fmt_point(p)}" for p in report.isolated]
    lines.append(f"one-dimensional cosets: {report.counts['j1']}")
    for c in report.cosets:
        rel = " ".join(str(x) for x in c.lattice[0]) if c.lattice else ""
        lines.append(f"  base {_fmt_point(c.base)} lattice [{rel}]")
    return {"text": "\n".join(lines)}


def _cmd_oracle(args) -> dict:
    _check_order(args.order, args.max_order)
    f = parse_poly(args.poly, args.nvars)
    if args.threads > 1:
        levels = list(range(1, args.order + 1))
        chunks = [levels[i :: args.threads] for i in range(args.threads)]
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            parts = pool.map(
                lambda ch: bruteforce_oracle(f, args.order, orders=ch), chunks
            )
            points = _sort_points([p for part in parts for p in part])
    else:
        points = bruteforce_oracle(f, args.order)
    if args.json:
        return {"max_order": args.order, "points": [_point_json(p) for p in points]}
    lines = [f"torsion zeros with order lcm <= {args.order}: {len(points)}"]
    lines += [f"  {_fmt_point(p)}" for p in points]
    return {"text": "\n".join(lines)}


def _cmd_linsolve(args) -> dict:
    fixed = _parse_fixed(args.fixed) if args.fixed else []
    coeffs = _int_list(args.coeffs) if args.coeffs else [1] * args.unknowns
    if len(coeffs) != args.unknowns:
        raise ParseError(
            f"{args.unknowns} unknowns but {len(coeffs)} coefficients", 0
        )
    cosets = solve_linear_torsion(fixed, coeffs, collapse_symmetry=args.collapse)
    if args.json:
        return {"cosets": [c.to_json() for c in cosets]}
    lines = [f"solution cosets: {len(cosets)}"]
    for c in cosets:
        lines.append(
            f"  dim {c.dim} base {_fmt_point(c.base)} lattice "
            + "; ".join(" ".join(str(x) for x in row) for row in c.lattice)
        )
    return {"text": "\n".join(lines)}


def _cmd_family(args) -> dict:
    primes = _int_list(args.primes)
    d = _int_list(args.degrees)
    exponents = d[0] if len(d) == 1 else tuple(d)
    f, expected = cj_family(primes, exponents)
    if args.verify:
        report = descent_solve(f)
        ok = len(report.isolated) == expected and not report.cosets
        if args.json:
            return {
                "poly": poly_to_string(f),
                "expected": expected,
                "found": len(report.isolated),
                "cosets": len(report.cosets),
                "status": "ok" if ok else "mismatch",
                "failed": not ok,
            }
        status = "ok" if ok else "MISMATCH"
        return {
            "text": f"{poly_to_string(f)}\nexpected {expected} isolated points, "
            f"found {len(report.isolated)}, cosets {len(report.cosets)}: {status}",
            "failed": not ok,
        }
    if args.json:
        return {"poly": poly_to_string(f), "expected": expected, "nvars": f.nvars}
    return {"text": f"{poly_to_string(f)}\nexpected isolated points: {expected}"}


def _cmd_polytope(args) -> dict:
    f = parse_poly(args.poly, args.nvars)
    P = newton_polytope(f)
    out: dict = {}
    if args.stats or not args.embed:
        s = polytope_stats(P)
        out["stats"] = {
            "volume": str(s.volume),
            "diam1": s.diam1,
            "multidegree": list(s.multidegree),
            "vertices": None if P.vertices is None else [list(v) for v in P.vertices],
        }
    if args.embed:
        out["embedding"] = simplex_embed(P, args.embed).to_json()
    if args.json:
        if list(out) == ["embedding"]:
            return out["embedding"]
        return out
    lines = []
    if "stats" in out:
        s = out["stats"]
        lines.append(
            f"volume {s['volume']}  l1-diameter {s['diam1']}  "
            f"multidegree {tuple(s['multidegree'])}"
        )
        if s["vertices"] is not None:
            lines.append("vertices " + " ".join(str(tuple(v)) for v in s["vertices"]))
    if "embedding" in out:
        e = out["embedding"]
        lines.append(json.dumps(e))
    return {"text": "\n".join(lines)}


def _cmd_bounds(args) -> dict:
    reports = []
    if args.set == "main":
        mb = bound_main(args.n, args.d, args.delta, args.j)
        rows = [("main-intro", mb.intro), ("main-refined", mb.refined)]
    elif args.set == "theta0":
        rows = [("theta0", bound_theta0(args.n, args.k, args.d, args.delta0))]
    elif args.set == "theta":
        rows = [("theta", bound_theta(args.n, args.k0, args.k1, args.delta))]
    elif args.set == "volume":
        if args.vol is None:
            raise ValueError("the volume set needs --vol")
        rep = bound_volume(args.n, args.j, Q(args.vol), digits=args.digits)
        reports = [rep]
        rows = [(rep.name, rep.render())]
    else:
        reports = bound_competitors(
            args.n,
            delta=args.delta,
            multidegree=tuple(_int_list(args.multidegree)) if args.multidegree else None,
            vol=Q(args.vol) if args.vol is not None else None,
            k=args.k,
            j=args.j,
            exact=args.exact,
        )
        rows = [(r.name, r.render()) for r in reports]
    if args.json:
        if reports:
            return {"bounds": [r.to_json() for r in reports]}
        return {"bounds": [{"name": n, "value": str(v)} for n, v in rows]}
    if args.csv:
        lines = ["name,value"]
        lines += [f"{n},{v}" for n, v in rows]
        return {"text": "\n".join(lines)}
    width = max(len(n) for n, _ in rows)
    return {"text": "\n".join(f"{n:<{width}}  {v}" for n, v in rows)}


def _cmd_psi(args) -> dict:
    value = psi(args.m)
    return {"psi": value} if args.json else {"text": str(value)}


def _cmd_cjconductors(args) -> dict:
    cs = cj_conductors(args.k)
    if args.json:
        return {"conductors": cs}
    return {"text": " ".join(str(m) for m in cs)}


def _cmd_minsums(args) -> dict:
    coeffs = _int_list(args.coeffs)
    sums = minimal_vanishing_sums(coeffs)
    if args.json:
        return {"sums": [v.to_json() for v in sums]}
    lines = [f"minimal vanishing sums: {len(sums)}"]
    for v in sums:
        lines.append(
            "  " + " + ".join(
                (f"{c}*" if c != 1 else "") + _fmt_root(r) for c, r in v.terms
            )
        )
    return {"text": "\n".join(lines)}


# -- wiring ---------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="torcosets",
        description="Torsion points and torsion cosets of hypersurfaces in the torus.",
    )
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p, conductor=True):
        p.add_argument("--json", action="store_true", help="machine-readable output")
        if conductor:
            p.add_argument(
                "--max-conductor",
                type=int,
                default=None,
                help=f"lower the conductor cap (hard cap {HARD_MAX_CONDUCTOR})",
            )

    p = sub.add_parser("solve", help="maximal torsion cosets of a plane curve")
    p.add_argument("-f", "--poly", required=True, help="polynomial expression")
    p.add_argument("-n", "--nvars", type=int, default=2)
    p.add_argument("--max-depth", type=int, default=HARD_MAX_DEPTH)
    common(p)
    p.set_defaults(run=_cmd_solve)

    p = sub.add_parser("oracle", help="brute-force torsion zeros up to an order")
    p.add_argument("-f", "--poly", required=True)
    p.add_argument("-n", "--nvars", type=int, default=2)
    p.add_argument("-M", "--order", type=int, required=True)
    p.add_argument("--max-M", dest="max_order", type=int, default=HARD_MAX_ORDER)
    p.add_argument("--threads", type=int, default=1)
    common(p)
    p.set_defaults(run=_cmd_oracle)

    p = sub.add_parser("linsolve", help="solve a linear equation over torsion points")
    p.add_argument("--fixed", default="", help="fixed terms, e.g. '1*z5,-2,z7^3'")
    p.add_argument("-u", "--unknowns", type=int, required=True)
    p.add_argument("--coeffs", default="", help="unknown coefficients (default all 1)")
    p.add_argument("--collapse", action="store_true",
                   help="fold solutions equal up to permuting like-coefficient unknowns")
    common(p)
    p.set_defaults(run=_cmd_linsolve)

    p = sub.add_parser("family", help="sharpness family with prescribed point count")
    p.add_argument("--primes", required=True, help="comma-separated distinct primes")
    p.add_argument("-d", "--degrees", default="1", help="degree or comma list per variable")
    p.add_argument("--verify", action="store_true", help="solve and compare the count")
    common(p)
    p.set_defaults(run=_cmd_family)

    p = sub.add_parser("polytope", help="Newton polytope stats and simplex embedding")
    p.add_argument("-f", "--poly", required=True)
    p.add_argument("-n", "--nvars", type=int, default=2)
    p.add_argument("--stats", action="store_true")
    p.add_argument("--embed", type=int, metavar="L", help="embed at scale L")
    common(p)
    p.set_defaults(run=_cmd_polytope)

    p = sub.add_parser("bounds", help="degree bounds and published comparisons")
    p.add_argument("--set", required=True,
                   choices=["main", "volume", "theta0", "theta", "competitors"])
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-d", type=int, default=1)
    p.add_argument("-j", type=int, default=0)
    p.add_argument("-k", type=int, default=None)
    p.add_argument("--k0", type=int, default=None)
    p.add_argument("--k1", type=int, default=None)
    p.add_argument("--delta", type=int, default=None)
    p.add_argument("--delta0", type=int, default=1)
    p.add_argument("--vol", default=None, help="polytope volume, e.g. 3/2")
    p.add_argument("--multidegree", default=None, help="e.g. 2,3")
    p.add_argument("--digits", type=int, default=30)
    p.add_argument("--exact", action="store_true", help="expand huge values exactly")
    p.add_argument("--csv", action="store_true")
    common(p, conductor=False)
    p.set_defaults(run=_cmd_bounds)

    p = sub.add_parser("psi", help="2 plus the sum of p-2 over prime divisors")
    p.add_argument("m", type=int)
    common(p, conductor=False)
    p.set_defaults(run=_cmd_psi)

    p = sub.add_parser("cjconductors", help="squarefree conductors admissible for k terms")
    p.add_argument("k", type=int)
    common(p, conductor=False)
    p.set_defaults(run=_cmd_cjconductors)

    p = sub.add_parser("minsums", help="minimal vanishing sums for given coefficients")
    p.add_argument("coeffs", help="comma-separated positive integers")
    common(p, conductor=False)
    p.set_defaults(run=_cmd_minsums)

    return ap


def main(argv=None) -> int:
    ap = _build_parser()
    args = ap.parse_args(argv)
    try:
        _apply_caps(args)
        out = args.run(args)
    except ToolError as exc:
        _emit_error(args, exc.payload())
        return 1
    except ValueError as exc:
        _emit_error(args, {"error": {"type": "invalid-parameter", "message": str(exc)}})
        return 1
    failed = bool(out.pop("failed", False))
    if args.json:
        print(json.dumps(out, indent=2, sort_keys=True))
    else:
        print(out["text"])
    return 1 if failed else 0


def _emit_error(args, payload: dict) -> None:
    if getattr(args, "json", False):
        print(json.dumps(payload, sort_keys=True))
    else:
        print(f"error: {payload['error']['message']}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
