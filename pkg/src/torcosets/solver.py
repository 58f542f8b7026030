"""Torsion points and maximal torsion cosets of curves in the 2-torus.

descent_solve computes, exactly, every maximal torsion coset of the zero
set of f in G_m^2: isolated torsion points plus one-dimensional cosets
{x : x^lam = s}.  The method is a Galois descent.  A torsion zero of f is
also a zero of one of finitely many explicit transforms of f: sign twists,
and a coefficient automorphism combined with coordinate squaring (odd
conductor) or with sign twists (conductor divisible by 4).  A common
component with a transform splits f; once no component is shared the
pairwise intersections are finite and resultants plus univariate root
extraction enumerate the candidates, which are confirmed exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from math import gcd

from .cyclo import CycloNum, GaloisAut, RootOfUnity, join_conductors
from .errors import (
    DegenerateDescent,
    DegenerateInput,
    DescentDepthExceeded,
    UnsupportedDimension,
)
from .lattice import (
    det_int,
    hnf_rows,
    identity_mat,
    invert_unimodular,
    kernel_cols,
    lattice_index,
    snf_transforms,
    unimodular_with_row,
)
from .modular import mod_context, reduce_cyclo
from .poly import MPoly, evaluate_at_torsion, primitive_exponent
from .resultant import gcd_mpoly, resultant_bivar
from .roots import cyclotomic_roots_univar

__all__ = [
    "TorsionCoset",
    "SolveReport",
    "descent_solve",
    "bruteforce_oracle",
    "coset_verify",
    "binomial_classify",
    "symmetry_reduce",
    "descent_transforms",
    "minimal_field",
    "monomial_preimages",
    "point_pow",
]

Point = tuple[RootOfUnity, ...]

_SIGNS2 = tuple(
    (RootOfUnity.make(a, 2), RootOfUnity.make(b, 2)) for a in (0, 1) for b in (0, 1)
)


def point_pow(point: Point, mat) -> Point:
    """Image of a point under the monomial map x -> x^mat (column action)."""
    n = len(point)
    out = []
    for j in range(n):
        r = RootOfUnity.one()
        for i in range(n):
            if mat[i][j]:
                r = r * point[i] ** mat[i][j]
        out.append(r)
    return tuple(out)


def _point_key(p: Point):
    return tuple(r.sort_key() for r in p)


@dataclass(frozen=True)
class TorsionCoset:
    """A torsion coset base * {x : x^lam = 1 for every lattice row lam}.

    The lattice rows are a Hermite-form basis of a saturated sublattice,
    so equal cosets have equal keys.
    """

    base: Point
    lattice: tuple[tuple[int, ...], ...]

    @property
    def dim(self) -> int:
        return len(self.base) - len(self.lattice)

    def values(self) -> tuple[RootOfUnity, ...]:
        """x^lam for each lattice row; constant on the coset."""
        out = []
        for row in self.lattice:
            r = RootOfUnity.one()
            for x, e in zip(self.base, row):
                r = r * x**e
            out.append(r)
        return tuple(out)

    def key(self):
        return self.lattice, tuple(r.sort_key() for r in self.values())

    def contains(self, point: Point) -> bool:
        if len(point) != len(self.base):
            return False
        for row, want in zip(self.lattice, self.values()):
            r = RootOfUnity.one()
            for x, e in zip(point, row):
                r = r * x**e
            if r != want:
                return False
        return True

    def to_json(self) -> dict:
        return {
            "base": [r.to_json() for r in self.base],
            "lattice": [list(row) for row in self.lattice],
        }

    @staticmethod
    def from_json(obj: dict) -> "TorsionCoset":
        return TorsionCoset(
            tuple(RootOfUnity.from_json(r) for r in obj["base"]),
            tuple(tuple(int(v) for v in row) for row in obj["lattice"]),
        )


def coset_from_relation(lam, value: RootOfUnity) -> TorsionCoset:
    """The coset {x : x^lam = value} for a primitive exponent vector lam.

    The stored base point is canonical: extend lam to a basis P of Z^n and
    pull (value, 1, ..., 1) back through the monomial isomorphism.
    """
    lam = tuple(lam)
    canon = primitive_exponent(lam)
    if canon != lam:
        if tuple(-v for v in canon) != lam:
            raise ValueError("exponent vector must be primitive")
        value = value.inverse()
        lam = canon
    p = unimodular_with_row(lam)
    pinv = invert_unimodular(p)
    base = tuple(value ** pinv[j][0] for j in range(len(lam)))
    return TorsionCoset(base, hnf_rows((lam,)))


def _binomial_cosets(w, s: RootOfUnity) -> list[TorsionCoset]:
    """All solutions of x^w = s (w a nonzero integer vector) as cosets."""
    w0 = primitive_exponent(w)
    i = next(i for i, v in enumerate(w0) if v)
    c = w[i] // w0[i]
    if c < 0:
        s = s.inverse()
        c = -c
    # x^w = s becomes (x^w0)^c = s: one coset per c-th root of s
    out = []
    for j in range(c):
        t = RootOfUnity.make(s.num + j * s.ord, c * s.ord)
        out.append(coset_from_relation(w0, t))
    return out


@dataclass
class SolveReport:
    isolated: list[Point] = field(default_factory=list)
    cosets: list[TorsionCoset] = field(default_factory=list)

    @property
    def counts(self) -> dict:
        return {"j0": len(self.isolated), "j1": len(self.cosets)}

    def to_json(self) -> dict:
        return {
            "isolated": [[r.to_json() for r in p] for p in self.isolated],
            "cosets": [c.to_json() for c in self.cosets],
            "counts": self.counts,
        }

    def normalized(self) -> "SolveReport":
        """Deduplicate, drop points lying on cosets, sort deterministically."""
        seen = set()
        cosets = []
        for c in self.cosets:
            k = c.key()
            if k not in seen:
                seen.add(k)
                cosets.append(c)
        cosets.sort(key=TorsionCoset.key)
        pts = []
        pseen = set()
        for p in self.isolated:
            k = _point_key(p)
            if k in pseen:
                continue
            pseen.add(k)
            if any(c.contains(p) for c in cosets):
                continue
            pts.append(p)
        pts.sort(key=_point_key)
        return SolveReport(pts, cosets)


def _merge(*reports: SolveReport) -> SolveReport:
    out = SolveReport()
    for r in reports:
        out.isolated.extend(r.isolated)
        out.cosets.extend(r.cosets)
    return out.normalized()


def _translate(report: SolveReport, shift: Point) -> SolveReport:
    """Report for Z(f) = shift o Z(g) from the report for g."""
    pts = [tuple(a * b for a, b in zip(shift, p)) for p in report.isolated]
    cosets = [
        TorsionCoset(tuple(a * b for a, b in zip(shift, c.base)), c.lattice)
        for c in report.cosets
    ]
    return SolveReport(pts, cosets).normalized()


# -- building blocks ----------------------------------------------------------


def minimal_field(f: MPoly) -> tuple[MPoly, int]:
    """Rewrite every coefficient at its minimal conductor; return their join."""
    g = f.map_coeffs(lambda c: c.reduce_conductor())
    return g, g.coefficient_conductor()


def binomial_classify(f: MPoly) -> list[TorsionCoset]:
    """Maximal torsion cosets of a monomial or binomial (complete answer)."""
    terms = list(f.terms.items())
    if len(terms) == 1:
        return []
    if len(terms) != 2:
        raise ValueError("binomial_classify expects at most two terms")
    (u, a), (v, b) = terms
    ratio = -b / a
    root = ratio.as_root_of_unity()
    if root is None:
        return []  # the ratio is no root of unity: no torsion zeros at all
    w = tuple(x - y for x, y in zip(u, v))
    return _binomial_cosets(w, root)


def descent_transforms(f: MPoly, conductor: int) -> list[MPoly]:
    """The transform family whose zero sets jointly cover Z_tor(f).

    Odd conductor: sign twists f(eta o x) for eta != 1, plus
    f^sigma(eta o x^2) for every eta, where sigma squares the generator of
    the coefficient field.  Conductor divisible by 4: sign twists for
    eta != 1, plus f^tau(eta o x) for every eta, where tau raises the
    generator to 1 + conductor/2.
    """
    if f.nvars != 2:
        raise UnsupportedDimension("descent transforms are for two variables")
    out = [f.scale_vars(eta) for eta in _SIGNS2 if not all(r.is_one for r in eta)]
    if conductor % 2:
        sigma = GaloisAut.make(conductor, 2 % conductor)
        fs = f.galois_map(sigma)
        out.extend(fs.scale_vars(eta).power_vars(2) for eta in _SIGNS2)
    elif conductor % 4 == 0:
        tau = GaloisAut.make(conductor, 1 + conductor // 2)
        ft = f.galois_map(tau)
        out.extend(ft.scale_vars(eta) for eta in _SIGNS2)
    else:
        raise ValueError("conductor 2 mod 4 should have been normalized away")
    return out


def symmetry_reduce(f: MPoly):
    """Detect monomial symmetry and compress f through a monomial map.

    Let E be the lattice spanned by the exponent differences of f.  When E
    has full rank and index 1 there is nothing to compress and None is
    returned.  Otherwise returns (h, e0, R, rank) with
    f(x) = x^e0 * h(x^R), where the first `rank` columns of the integer
    matrix R span E after scaling, h uses only its first `rank` variables,
    and the exponent differences of h span all of Z^rank.
    """
    if f.is_zero() or len(f.terms) < 2:
        return None
    support = f.support()
    e0 = support[0]
    diffs = tuple(tuple(a - b for a, b in zip(e, e0)) for e in support[1:])
    n = f.nvars
    if len(hnf_rows(diffs)) == n and lattice_index(diffs, n) == 1:
        return None
    _, d, v = snf_transforms(diffs)
    basis = invert_unimodular(v)  # rows b_k: E = sum_k scale_k * b_k * Z
    scales = [d[k][k] for k in range(min(len(d), n)) if d[k][k] != 0]
    rank = len(scales)
    new_terms = []
    for e, c in f.terms.items():
        vec = tuple(a - b for a, b in zip(e, e0))
        coords = tuple(sum(vec[i] * v[i][j] for i in range(n)) for j in range(n))
        ne = []
        for k in range(rank):
            q, r = divmod(coords[k], scales[k])
            if r:
                raise ArithmeticError("exponent outside its own difference lattice")
            ne.append(q)
        if any(coords[rank:]):
            raise ArithmeticError("exponent outside the lattice span")
        new_terms.append((tuple(ne) + (0,) * (n - rank), c))
    h = MPoly.from_terms(n, new_terms)
    r_mat = tuple(
        tuple(scales[k] * basis[k][i] if k < rank else 0 for k in range(n))
        for i in range(n)
    )
    return h, e0, r_mat, rank


def monomial_preimages(target: Point, mat) -> list[Point]:
    """All torsion solutions of x^mat = target, mat a nonsingular integer
    matrix.  There are exactly |det mat| of them."""
    n = len(target)
    if det_int(mat) == 0:
        raise ValueError("monomial map must be nonsingular")
    u, d, v = snf_transforms(mat)
    # u mat v = d, so with z = x^(u^-1) the equation is z^d = target^v
    t = point_pow(target, v)
    choices: list[list[RootOfUnity]] = []
    for j in range(n):
        dj = d[j][j]
        tj = t[j]
        choices.append(
            [RootOfUnity.make(tj.num + k * tj.ord, dj * tj.ord) for k in range(dj)]
        )
    out = []
    idx = [0] * n
    while True:
        z = tuple(choices[j][idx[j]] for j in range(n))
        out.append(point_pow(z, u))
        j = n - 1
        while j >= 0:
            idx[j] += 1
            if idx[j] < len(choices[j]):
                break
            idx[j] = 0
            j -= 1
        if j < 0:
            return out


def coset_verify(f: MPoly, coset: TorsionCoset) -> bool:
    """Exact check that f vanishes identically on the coset.

    The coset is parametrized over a kernel basis of its lattice; grouping
    the substituted monomials by parameter exponent must leave zero sums.
    """
    if f.nvars != len(coset.base):
        return False
    kernel = kernel_cols(coset.lattice)
    buckets: dict[tuple[int, ...], CycloNum] = {}
    for e, c in f.terms.items():
        r = RootOfUnity.one()
        for x, k in zip(coset.base, e):
            r = r * x**k
        n = join_conductors(c.conductor, r.field_conductor)
        val = c.embed(n) * r.as_cyclonum(n)
        key = tuple(sum(a * b for a, b in zip(e, mu)) for mu in kernel)
        prev = buckets.get(key)
        buckets[key] = val if prev is None else prev + val
    return all(v.is_zero() for v in buckets.values())


# -- the solver ---------------------------------------------------------------


def _tau_rescale(f: MPoly, conductor: int):
    """Resolve f^tau(eta o x) proportional to f by a torsion rescale.

    When a sign twist of the tau transform reproduces f, descent cannot
    split anything off.  But f is then a unit multiple of g(xi^-1 o x) for
    an explicit 2-power torsion point xi and a tau-fixed g, whose
    conductor is strictly smaller.  Returns (g, xi) with Z(f) = xi o Z(g),
    or None when no twist is proportional.
    """
    ref = f.terms[min(f.terms)]
    inv = ref.inverse()
    f = f.map_coeffs(lambda c: c * inv)
    tau = GaloisAut.make(conductor, 1 + conductor // 2)
    ft = f.galois_map(tau)
    two_part = conductor & -conductor
    for eta in _SIGNS2:
        cand = ft.scale_vars(eta)
        if cand == f:
            eps = 1
        elif cand == -f:
            eps = -1
        else:
            continue
        bits = [0 if r.is_one else 1 for r in eta]
        xi = tuple(RootOfUnity.make(b, two_part) for b in bits)
        g = f.scale_vars(xi)
        if eps == -1:
            unit = RootOfUnity.make(1, two_part).as_cyclonum()
            g = g.map_coeffs(lambda c: c * unit)
        return g, xi
    return None


def _line_coset(var: int, nvars: int, value: RootOfUnity) -> TorsionCoset:
    lam = tuple(1 if i == var else 0 for i in range(nvars))
    return coset_from_relation(lam, value)


def _univar_report(f: MPoly, nvars: int) -> SolveReport:
    var = f.variables_used()[0]
    roots = cyclotomic_roots_univar(f, var)
    if nvars == 1:
        return SolveReport([(r,) for r in roots], []).normalized()
    return SolveReport([], [_line_coset(var, nvars, r) for r in roots]).normalized()


def descent_solve(f: MPoly, max_depth: int = 64) -> SolveReport:
    """All maximal torsion cosets of Z(f) in G_m^nvars (nvars <= 2)."""
    if f.nvars > 2:
        raise UnsupportedDimension(
            f"solver handles at most 2 variables, got {f.nvars}"
        )
    if f.is_zero():
        raise DegenerateInput("the zero polynomial vanishes on the whole torus")
    return _solve(f, max_depth)


def _solve(f: MPoly, depth: int) -> SolveReport:
    if depth <= 0:
        raise DescentDepthExceeded("descent recursion exceeded the depth cap")
    depth -= 1
    f = f.content_strip()
    if f.is_constant():
        return SolveReport()
    used = f.variables_used()
    if len(used) == 1:
        return _univar_report(f, f.nvars)
    if len(f.terms) == 2:
        return SolveReport([], binomial_classify(f)).normalized()
    f, conductor = minimal_field(f)

    reduced = symmetry_reduce(f)
    if reduced is not None:
        return _solve_symmetric(reduced, depth)

    if conductor % 4 == 0:
        hit = _tau_rescale(f, conductor)
        if hit is not None:
            g, xi = hit
            return _translate(_solve(g, depth), xi)

    # squarefree reduction: same zero set, smaller degree
    d = gcd_mpoly(gcd_mpoly(f, f.derivative(0)), f.derivative(1))
    if not d.is_constant():
        return _solve(f.exact_div(d), depth)

    transforms = descent_transforms(f, conductor)
    degenerate = False
    for g in transforms:
        h = gcd_mpoly(f, g)
        if h.is_constant():
            continue
        if h.total_degree() == f.total_degree():
            degenerate = True  # f divides the transform: nothing to split
            continue
        return _merge(_solve(h, depth), _solve(f.exact_div(h), depth))
    if degenerate:
        raise DegenerateDescent(
            "every remaining transform shares a full-degree factor with the input"
        )
    return _isolated_by_resultants(f, transforms, depth)


def _solve_symmetric(reduced, depth: int) -> SolveReport:
    h, _, r_mat, rank = reduced
    n = h.nvars
    if rank == n:
        sub = _solve(h, depth)
        out = SolveReport()
        for p in sub.isolated:
            out.isolated.extend(monomial_preimages(p, r_mat))
        for c in sub.cosets:
            for lam, val in zip(c.lattice, c.values()):
                w = tuple(
                    sum(r_mat[i][j] * lam[j] for j in range(n)) for i in range(n)
                )
                out.cosets.extend(_binomial_cosets(w, val))
        return out.normalized()
    # rank 1: h is univariate and each of its roots pulls back to cosets
    roots = cyclotomic_roots_univar(h, 0)
    w = tuple(r_mat[i][0] for i in range(n))
    out = SolveReport()
    for r in roots:
        out.cosets.extend(_binomial_cosets(w, r))
    return out.normalized()


def _isolated_by_resultants(
    f: MPoly, transforms: list[MPoly], depth: int
) -> SolveReport:
    """No transform shares a component: every coset is a point; list them."""
    xs: dict[tuple, RootOfUnity] = {}
    for g in transforms:
        r = resultant_bivar(f, g, 1)
        if r.is_zero():
            raise DegenerateDescent("vanishing resultant after constant gcd")
        if r.is_constant():
            continue
        for root in cyclotomic_roots_univar(r, 0):
            xs.setdefault(root.sort_key(), root)
    report = SolveReport()
    for _, x_root in sorted(xs.items()):
        spec = f.specialize(0, x_root)
        if spec.is_zero():
            # a vertical line divides f after all: split it off
            line = MPoly.from_terms(
                2, [((1, 0), CycloNum.one()), ((0, 0), -x_root.as_cyclonum())]
            )
            rest = _solve(f.exact_div(line), depth)
            rest.cosets.append(_line_coset(0, 2, x_root))
            return _merge(rest, report)
        for y_root in cyclotomic_roots_univar(spec, 1):
            report.isolated.append((x_root, y_root))
    return report.normalized()


def coset_points_up_to(coset: TorsionCoset, max_order: int) -> list[Point]:
    """Torsion points on a coset whose coordinate orders have lcm at most
    max_order.

    Points with every coordinate of order dividing L and lcm exactly L are
    exponent vectors a with lattice * a = value exponents (mod L); the Smith
    form turns that into independent diagonal congruences, one residue class
    or a full free axis per coordinate.
    """
    n = len(coset.base)
    if n == 0:
        return [()] if max_order >= 1 else []
    rows = coset.lattice
    vals = list(coset.values())
    k = len(rows)
    if k:
        u, d, v = snf_transforms(rows)
        diag = [d[i][i] for i in range(min(k, n))]
        rank = sum(1 for x in diag if x)
    else:
        u, v, diag, rank = [], identity_mat(n), [], 0
    out = []
    for level in range(1, max_order + 1):
        if any(level % r.ord for r in vals):
            continue
        c = [r.as_pair_mod(level) for r in vals]
        uc = [sum(u[i][j] * c[j] for j in range(k)) % level for i in range(k)]
        if any(uc[rank:]):
            continue
        axes = []
        solvable = True
        for i in range(rank):
            g = gcd(diag[i], level)
            if uc[i] % g:
                solvable = False
                break
            step = level // g
            y0 = (uc[i] // g) * pow(diag[i] // g, -1, step) % step if step > 1 else 0
            axes.append([y0 + t * step for t in range(g)])
        if not solvable:
            continue
        axes.extend(range(level) for _ in range(n - rank))
        for ys in itertools.product(*axes):
            a = [sum(v[i][j] * ys[j] for j in range(n)) % level for i in range(n)]
            shared = level
            for x in a:
                shared = gcd(shared, x)
            if shared == 1:
                out.append(tuple(RootOfUnity.make(x, level) for x in a))
    return sorted(out, key=_point_key)


def torsion_points_up_to(report: SolveReport, max_order: int) -> list[Point]:
    """The set a brute-force sweep up to max_order would find, reassembled
    from a solve report: isolated points plus the points on every coset."""
    keep = {}
    for p in report.isolated:
        if _order_lcm(p) <= max_order:
            keep[_point_key(p)] = p
    for c in report.cosets:
        for p in coset_points_up_to(c, max_order):
            keep[_point_key(p)] = p
    return [keep[k] for k in sorted(keep)]


def _order_lcm(p: Point) -> int:
    out = 1
    for r in p:
        out = out * r.ord // gcd(out, r.ord)
    return out


# -- reference enumeration ----------------------------------------------------


def bruteforce_oracle(f: MPoly, max_order: int, orders=None) -> list[Point]:
    """Every torsion point with coordinate-order lcm at most max_order where
    f vanishes, by a sound modular prescreen plus exact confirmation.

    The prescreen maps Z[zeta] into a prime field; a nonzero image
    certifies a nonzero value, so only modular zeros reach the exact
    evaluator and the result equals plain exact evaluation everywhere.

    orders restricts the sweep to a subset of lcm levels, so independent
    workers can split the range and merge their results.
    """
    if f.nvars != 2:
        raise UnsupportedDimension("the oracle enumerates points in two variables")
    f, conductor = minimal_field(f)
    terms = sorted(f.terms.items())
    found: list[Point] = []
    for order in orders if orders is not None else range(1, max_order + 1):
        step_c = conductor * order // gcd(conductor, order)
        images = None
        for index in range(3):
            try:
                ctx = mod_context(step_c, index)
                images = [(e, reduce_cyclo(c, ctx)) for e, c in terms]
                break
            except ValueError:
                continue  # a denominator collided with this prime
        if images is not None:
            scale = step_c // order
            p = ctx.prime
            wpow = [ctx.root_power(k * scale) for k in range(order)]
        for a in range(order):
            for b in range(order):
                if gcd(gcd(a, b), order) != 1:
                    continue  # the coordinate orders have a smaller lcm
                if images is not None:
                    acc = 0
                    for e, c in images:
                        acc += c * wpow[(a * e[0] + b * e[1]) % order]
                    if acc % p:
                        continue
                point = (RootOfUnity.make(a, order), RootOfUnity.make(b, order))
                if evaluate_at_torsion(f, point).is_zero():
                    found.append(point)
    return sorted(found, key=_point_key)
