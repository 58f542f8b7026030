"""Vanishing sums of roots of unity and linear equations over the torsion group.

A vanishing sum c_1*xi_1 + ... + c_k*xi_k = 0 with integer coefficients and
root-of-unity values is *minimal* when no proper nonempty subsum vanishes.
For a minimal sum, the lcm m of the orders of the ratios xi_i/xi_1 is
squarefree and satisfies psi(m) <= k, which makes exhaustive search over a
finite list of conductors complete.
"""

from __future__ import annotations

import cmath
import itertools
from dataclasses import dataclass
from math import factorial, lcm

from .arith import is_probable_prime, is_squarefree, primes_up_to
from .cyclo import CycloNum, RootOfUnity
from .errors import CapExceeded
from .lattice import hnf_rows
from .poly import MPoly
from .solver import TorsionCoset

TERM_CAP = 8

# float prune slack; partial sums of <= TERM_CAP unit vectors with integer
# weights carry rounding error many orders of magnitude below this
_MARGIN = 1e-6


def psi(m: int) -> int:
    """2 plus the sum of p - 2 over the distinct prime divisors of m."""
    if m < 1:
        raise ValueError("psi expects a positive integer")
    total = 2
    p = 2
    while p * p <= m:
        if m % p == 0:
            total += p - 2
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        total += m - 2
    return total


def cj_conductors(k: int) -> list[int]:
    """All squarefree m with psi(m) <= k, ascending.

    Finite because every prime divisor p contributes p - 2, so p <= k.
    """
    if k < 2:
        raise ValueError("the bound is vacuous below 2")
    primes = primes_up_to(k)
    found = [1]
    def extend(idx: int, m: int, cost: int) -> None:
        for i in range(idx, len(primes)):
            p = primes[i]
            c = cost + (p - 2)
            if c > k:
                continue
            found.append(m * p)
            extend(i + 1, m * p, c)
    extend(0, 1, 2)
    return sorted(found)


def _maximal_conductors(k: int) -> list[int]:
    cs = cj_conductors(k)
    return [m for m in cs if not any(m != d and d % m == 0 for d in cs)]


@dataclass(frozen=True)
class VanishingSum:
    """A vanishing integer combination of roots of unity with its block split.

    Every block of minimal_partition must itself vanish with no vanishing
    proper subsum, and obey the squarefree conductor bound.
    """

    terms: tuple[tuple[int, RootOfUnity], ...]
    minimal_partition: tuple[tuple[int, ...], ...]

    def validate(self) -> None:
        indices = sorted(i for block in self.minimal_partition for i in block)
        if indices != list(range(len(self.terms))):
            raise ValueError("blocks must partition the term indices")
        for block in self.minimal_partition:
            vals = [self.terms[i] for i in block]
            if not _exact_sum(vals).is_zero():
                raise ValueError(f"block {block} does not vanish")
            if not _is_minimal(vals):
                raise ValueError(f"block {block} has a vanishing proper subsum")
            anchor = vals[0][1]
            m = 1
            for _, r in vals[1:]:
                m = lcm(m, (r * anchor.inverse()).ord)
            if not is_squarefree(m) or psi(m) > len(block):
                raise ValueError(f"block {block} violates the conductor bound")

    def to_json(self) -> dict:
        return {
            "terms": [{"coeff": c, "root": r.to_json()} for c, r in self.terms],
            "blocks": [list(b) for b in self.minimal_partition],
        }


def _exact_sum(terms) -> CycloNum:
    total = CycloNum.zero()
    for c, r in terms:
        total = total + r.as_cyclonum() * c
    return total


def _is_minimal(terms) -> bool:
    """No proper nonempty subset of the terms sums to zero."""
    vals = [r.as_cyclonum() * c for c, r in terms]
    n = len(vals)
    for mask in range(1, (1 << n) - 1):
        s = CycloNum.zero()
        for i in range(n):
            if mask >> i & 1:
                s = s + vals[i]
        if s.is_zero():
            return False
    return True


def _assignments(coeffs, fixed, m: int, sort_runs: bool):
    """Exact solutions w in mu_m^k of sum(c_i * w_i) = 0 with pinned positions.

    fixed maps position -> RootOfUnity (its order must divide m, checked by
    the caller). With sort_runs, consecutive free positions carrying equal
    coefficients are forced nondecreasing in exponent, so permutations of
    interchangeable positions collapse to one representative.

    The search walks exponents t_i with a sound magnitude prune (a partial
    sum farther from zero than the total remaining weight cannot recover)
    and the last free position is solved by angle rather than scanned.
    Every candidate is confirmed by exact arithmetic before being returned.
    """
    k = len(coeffs)
    unit = [cmath.exp(2j * cmath.pi * t / m) for t in range(m)]
    free = [i for i in range(k) if i not in fixed]
    tail_weight = [0.0] * (k + 1)
    for i in range(k - 1, -1, -1):
        tail_weight[i] = tail_weight[i + 1] + abs(coeffs[i])
    out = []
    expo = {}

    def to_root(t: int) -> RootOfUnity:
        return RootOfUnity.make(t, m)

    def confirm(assign: dict) -> None:
        terms = [(coeffs[i], assign[i]) for i in range(k)]
        if _exact_sum(terms).is_zero():
            out.append(tuple(assign[i] for i in range(k)))

    def walk(pos: int, partial: complex) -> None:
        if abs(partial) > tail_weight[pos] + _MARGIN:
            return
        if pos == k:
            if abs(partial) <= _MARGIN:
                confirm({i: fixed[i] if i in fixed else to_root(expo[i]) for i in range(k)})
            return
        if pos in fixed:
            r = fixed[pos]
            walk(pos + 1, partial + coeffs[pos] * unit[r.as_pair_mod(m)])
            return
        if pos == free[-1]:
            # c*w = -partial pins the angle; nudge one step either way to
            # absorb float rounding, exact confirmation rejects impostors
            if abs(abs(partial) - abs(coeffs[pos])) > _MARGIN:
                return
            want = -partial / coeffs[pos]
            t0 = round(cmath.phase(want) * m / (2 * cmath.pi))
            for t in {(t0 - 1) % m, t0 % m, (t0 + 1) % m}:
                if sort_runs and not _run_ok(pos, t):
                    continue
                expo[pos] = t
                if abs(partial + coeffs[pos] * unit[t]) <= _MARGIN:
                    confirm({i: fixed[i] if i in fixed else to_root(expo[i]) for i in range(k)})
            expo.pop(pos, None)
            return
        for t in range(m):
            if sort_runs and not _run_ok(pos, t):
                continue
            expo[pos] = t
            walk(pos + 1, partial + coeffs[pos] * unit[t])
        expo.pop(pos, None)

    def _run_ok(pos: int, t: int) -> bool:
        prev = pos - 1
        if prev < 0 or prev in fixed or coeffs[prev] != coeffs[pos]:
            return True
        return t >= expo[prev]

    walk(0, 0.0)
    return out


def minimal_vanishing_sums(coeffs, max_terms: int = TERM_CAP) -> list[VanishingSum]:
    """All minimal vanishing sums with the given positive coefficients.

    Normalized so the first root is 1 (a global rotation moves any solution
    there) and so roots at equal-coefficient positions appear in
    nondecreasing order; each equivalence class appears once.
    """
    coeffs = tuple(int(c) for c in coeffs)
    k = len(coeffs)
    if k < 2:
        raise ValueError("a vanishing sum needs at least two terms")
    if any(c <= 0 for c in coeffs):
        raise ValueError("coefficients must be positive")
    if k > max_terms:
        raise CapExceeded(f"{k} terms exceed the cap {max_terms}")
    seen = set()
    found = []
    for m in _maximal_conductors(k):
        for roots in _assignments(coeffs, {0: RootOfUnity.one()}, m, sort_runs=True):
            if roots in seen:
                continue
            seen.add(roots)
            terms = tuple(zip(coeffs, roots))
            if not _is_minimal(terms):
                continue
            vs = VanishingSum(terms, (tuple(range(k)),))
            vs.validate()
            found.append(vs)
    found.sort(key=lambda v: tuple(r.sort_key() for _, r in v.terms))
    return found


# -- linear equations over torsion points --------------------------------------


def _set_partitions(items):
    """All partitions of a list, as tuples of index blocks."""
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    for part in _set_partitions(rest):
        for i, block in enumerate(part):
            yield part[:i] + (block + (first,),) + part[i + 1 :]
        yield part + ((first,),)


def _block_solutions(block, fixed, coeffs):
    """Solutions of one partition block, or None when it cannot vanish.

    Returns a list of dicts {unknown index -> RootOfUnity} for anchored
    blocks, or ('free', base dict) entries when the block has no fixed term
    and keeps one global rotation of freedom.
    """
    if len(block) < 2:
        return None
    bl_coeffs = []
    bl_fixed = {}
    unknown_pos = {}
    anchored = [i for i in block if i < len(fixed)]
    for slot, i in enumerate(block):
        if i < len(fixed):
            bl_coeffs.append(fixed[i][0])
        else:
            bl_coeffs.append(coeffs[i - len(fixed)])
            unknown_pos[slot] = i - len(fixed)
    if anchored:
        anchor = fixed[anchored[0]][1]
        inv = anchor.inverse()
        for slot, i in enumerate(block):
            if i < len(fixed):
                bl_fixed[slot] = fixed[i][1] * inv
    else:
        anchor = RootOfUnity.one()
        bl_fixed[0] = RootOfUnity.one()
    solutions = []
    seen = set()
    for m in _maximal_conductors(len(block)):
        if any(m % r.ord for r in bl_fixed.values()):
            continue
        for roots in _assignments(bl_coeffs, bl_fixed, m, sort_runs=False):
            if roots in seen:
                continue
            seen.add(roots)
            if not _is_minimal(tuple(zip(bl_coeffs, roots))):
                continue
            assign = {unknown_pos[s]: anchor * roots[s] for s in unknown_pos}
            solutions.append(assign)
    if not solutions:
        return None
    if anchored:
        return [("pinned", a) for a in solutions]
    return [("free", a) for a in solutions]


def _coset_contains(outer: TorsionCoset, inner: TorsionCoset) -> bool:
    if not outer.contains(inner.base):
        return False
    # every relation of the outer lattice must hold on the inner coset:
    # rows of the outer basis must lie in the inner lattice
    inner_rows = list(inner.lattice)
    for row in outer.lattice:
        if not _in_row_span(row, inner_rows):
            return False
    return True


def _in_row_span(vec, rows) -> bool:
    if not rows:
        return all(v == 0 for v in vec)
    h = hnf_rows(tuple(rows))
    v = list(vec)
    for row in h:
        p = next((j for j, x in enumerate(row) if x), None)
        if p is None:
            continue
        if v[p] % row[p]:
            return False
        q = v[p] // row[p]
        for j in range(len(v)):
            v[j] -= q * row[j]
    return all(x == 0 for x in v)


def solve_linear_torsion(
    fixed,
    unknown_coeffs,
    *,
    collapse_symmetry: bool = False,
    max_terms: int = TERM_CAP,
) -> list[TorsionCoset]:
    """Complete solution set of sum(fixed) + sum(c_i * x_i) = 0 over torsion.

    fixed is a list of (integer coefficient, RootOfUnity) terms; each unknown
    x_i ranges over all roots of unity. The result is a finite list of
    torsion cosets: any solution splits the terms into blocks that vanish
    minimally, blocks touching a fixed term pin their unknowns and blocks of
    unknowns alone keep one rotation parameter each.

    With collapse_symmetry, solutions equivalent under permuting unknowns
    that carry equal coefficients are reported once.
    """
    fixed = [(int(c), r) for c, r in fixed]
    coeffs = [int(c) for c in unknown_coeffs]
    if any(c == 0 for c, _ in fixed) or any(c == 0 for c in coeffs):
        raise ValueError("coefficients must be nonzero")
    u = len(coeffs)
    total = len(fixed) + u
    if total > max_terms:
        raise CapExceeded(f"{total} terms exceed the cap {max_terms}")
    if u == 0:
        if not fixed or _exact_sum(fixed).is_zero():
            return [TorsionCoset((), ())]
        return []

    cosets = {}
    for part in _set_partitions(list(range(total))):
        per_block = []
        for block in part:
            sols = _block_solutions(tuple(sorted(block)), fixed, coeffs)
            if sols is None:
                per_block = None
                break
            per_block.append((tuple(sorted(block)), sols))
        if per_block is None:
            continue
        for combo in itertools.product(*(s for _, s in per_block)):
            base = [None] * u
            rows = []
            for (block, _), (kind, assign) in zip(per_block, combo):
                idxs = sorted(assign)
                for i in idxs:
                    base[i] = assign[i]
                if kind == "pinned":
                    for i in idxs:
                        rows.append(tuple(1 if j == i else 0 for j in range(u)))
                else:
                    for a, b in zip(idxs, idxs[1:]):
                        rows.append(
                            tuple(
                                (1 if j == a else 0) - (1 if j == b else 0)
                                for j in range(u)
                            )
                        )
            coset = TorsionCoset(tuple(base), hnf_rows(tuple(rows)))
            cosets.setdefault(coset.key(), coset)

    found = list(cosets.values())
    found = [
        c
        for c in found
        if not any(o is not c and _coset_contains(o, c) for o in found)
    ]
    if collapse_symmetry:
        found = _collapse_by_coefficient_symmetry(found, coeffs)
    found.sort(key=TorsionCoset.key)
    return found


def _collapse_by_coefficient_symmetry(cosets, coeffs):
    groups = {}
    for i, c in enumerate(coeffs):
        groups.setdefault(c, []).append(i)
    perms = [[]]
    for idxs in groups.values():
        perms = [p + list(q) for p in perms for q in itertools.permutations(idxs)]
    orderings = []
    for p in perms:
        order = [None] * len(coeffs)
        spots = [i for g in groups.values() for i in g]
        for src, dst in zip(p, spots):
            order[dst] = src
        orderings.append(order)
    kept = {}
    for c in cosets:
        keys = []
        for order in orderings:
            base = tuple(c.base[i] for i in order)
            rows = tuple(tuple(row[i] for i in order) for row in c.lattice)
            keys.append(TorsionCoset(base, hnf_rows(rows)).key())
        kept.setdefault(min(keys), c)
    return list(kept.values())


# -- the sharpness family -------------------------------------------------------


def cj_family(primes, d) -> tuple[MPoly, int]:
    """The hypersurface zeta_{p_1}+...+zeta_{p_n} + x_1^{d_1}+...+x_n^{d_n}.

    Every torsion zero pairs each x_i^{d_i} against one -zeta_{p_j}, so the
    isolated count is exactly n! * d_1 * ... * d_n. Requires distinct primes
    with p_i > 2n, which forces the pairing.
    """
    primes = tuple(int(p) for p in primes)
    n = len(primes)
    if n == 0:
        raise ValueError("at least one prime is required")
    if len(set(primes)) != n:
        raise ValueError("primes must be distinct")
    exps = (int(d),) * n if isinstance(d, int) else tuple(int(x) for x in d)
    if len(exps) != n:
        raise ValueError("one exponent per variable")
    if any(e < 1 for e in exps):
        raise ValueError("exponents must be positive")
    for p in primes:
        if not is_probable_prime(p):
            raise ValueError(f"{p} is not prime")
        if p <= 2 * n:
            raise ValueError(f"prime {p} must exceed {2 * n}")
    const = CycloNum.zero()
    for p in primes:
        const = const + RootOfUnity.make(1, p).as_cyclonum()
    items = [((0,) * n, const)]
    for i, e in enumerate(exps):
        items.append((tuple(e if j == i else 0 for j in range(n)), CycloNum.one()))
    expected = factorial(n)
    for e in exps:
        expected *= e
    return MPoly.from_terms(n, items), expected
