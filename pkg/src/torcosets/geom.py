"""Newton polytopes, exact convex hulls through dimension 3, enclosing
ellipsoids, and integer embeddings into a dilated standard simplex.

Hulls, volumes and diameters are exact integer or rational arithmetic on
the support exponents. Floats appear only in the ellipsoid solver and in
the rounded data of an embedding, whose containment claim is then checked
back in exact integer arithmetic.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .arith import Q
from .errors import DegenerateInput, ScaleTooSmall, UnsupportedDimension
from .lattice import det_int, hnf_rows
from .poly import MPoly

IntVec = tuple[int, ...]


def _affine_rank(points) -> int:
    base = points[0]
    diffs = tuple(
        tuple(p[i] - base[i] for i in range(len(base))) for p in points[1:]
    )
    if not diffs:
        return 0
    return len(hnf_rows(diffs))


def _cross2(o, a, b) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def _hull_2d(points) -> list[IntVec]:
    """Vertices of the 2D hull, counterclockwise; collinear points dropped."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross2(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross2(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return lower[:-1] + upper[:-1]


def _sub(a, b):
    return tuple(x - y for x, y in zip(a, b))


def _dot(a, b) -> int:
    return sum(x * y for x, y in zip(a, b))


def _cross3(a, b) -> IntVec:
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _facet_planes(pts) -> list[tuple[IntVec, int]]:
    """Supporting planes (outward primitive normal n, offset h) with every
    point on n.x <= h; assumes affine rank 3."""
    facets = {}
    for a, b, c in itertools.combinations(pts, 3):
        n = _cross3(_sub(b, a), _sub(c, a))
        if n == (0, 0, 0):
            continue
        h = _dot(n, a)
        hi = lo = False
        for p in pts:
            s = _dot(n, p) - h
            hi = hi or s > 0
            lo = lo or s < 0
            if hi and lo:
                break
        if hi and lo:
            continue
        if not hi:
            facets[_primitive_plane(n, h)] = None
        if not lo:
            facets[_primitive_plane(tuple(-x for x in n), -h)] = None
    return list(facets)


def _primitive_plane(n, h):
    g = math.gcd(math.gcd(abs(n[0]), abs(n[1])), abs(n[2]))
    return tuple(x // g for x in n), h // g


def _hull_3d(points) -> list[IntVec]:
    """Vertices of a full-dimensional 3D hull: points incident to three
    facets with independent normals."""
    pts = sorted(set(points))
    facets = _facet_planes(pts)
    verts = []
    for p in pts:
        normals = tuple(n for n, h in facets if _dot(n, p) == h)
        if len(normals) >= 3 and len(hnf_rows(normals)) == 3:
            verts.append(p)
    return verts


def _extreme_on_line(points) -> list[IntVec]:
    """Endpoints of a rank-1 point set in any ambient dimension."""
    pts = sorted(set(points))
    return [pts[0], pts[-1]] if len(pts) > 1 else pts


def _hull_planar_in_3d(points) -> list[IntVec]:
    """Vertices of a rank-2 set in 3 variables via a coordinate projection."""
    pts = sorted(set(points))
    base = pts[0]
    diffs = [_sub(p, base) for p in pts[1:]]
    n = (0, 0, 0)
    for a, b in itertools.combinations(diffs, 2):
        n = _cross3(a, b)
        if n != (0, 0, 0):
            break
    drop = max(range(3), key=lambda i: abs(n[i]))
    keep = [i for i in range(3) if i != drop]
    flat = {(p[keep[0]], p[keep[1]]): p for p in pts}
    return sorted(flat[q] for q in _hull_2d(flat))


@dataclass(frozen=True)
class LatticePolytope:
    """Convex hull of integer exponent vectors.

    points holds the full generating set; vertices is the exact hull vertex
    list when the ambient dimension is at most 3 and None above that.
    """

    points: tuple[IntVec, ...]
    vertices: tuple[IntVec, ...] | None
    dim: int

    @staticmethod
    def from_points(points) -> "LatticePolytope":
        pts = tuple(sorted({tuple(int(x) for x in p) for p in points}))
        if not pts:
            raise DegenerateInput("a polytope needs at least one point")
        n = len(pts[0])
        if any(len(p) != n for p in pts):
            raise ValueError("points have mixed dimensions")
        if n > 3:
            return LatticePolytope(pts, None, n)
        rank = _affine_rank(pts)
        if rank == 0:
            verts = [pts[0]]
        elif rank == 1:
            verts = _extreme_on_line(pts)
        elif n == 2:
            verts = _hull_2d(pts)
        elif rank == 2:
            verts = _hull_planar_in_3d(pts)
        else:
            verts = _hull_3d(pts)
        return LatticePolytope(pts, tuple(verts), n)

    def affine_rank(self) -> int:
        return _affine_rank(self.points)

    def to_json(self) -> dict:
        return {
            "dim": self.dim,
            "points": [list(p) for p in self.points],
            "vertices": None if self.vertices is None else [list(v) for v in self.vertices],
        }


def newton_polytope(f: MPoly) -> LatticePolytope:
    """Convex hull of the support of f."""
    if f.is_zero():
        raise DegenerateInput("the zero polynomial has empty support")
    return LatticePolytope.from_points(f.support())


class PolytopeStats(NamedTuple):
    volume: Q
    diam1: int
    multidegree: IntVec


def _volume_3d(pts) -> Q:
    facets = _facet_planes(pts)
    ref = pts[0]
    total = 0
    for n, h in facets:
        if _dot(n, ref) == h:
            continue
        on = [p for p in pts if _dot(n, p) == h]
        drop = max(range(3), key=lambda i: abs(n[i]))
        keep = [i for i in range(3) if i != drop]
        flat = {(p[keep[0]], p[keep[1]]): p for p in on}
        cycle = [flat[q] for q in _hull_2d(flat)]
        signed = 0
        v0 = _sub(cycle[0], ref)
        for a, b in zip(cycle[1:], cycle[2:]):
            signed += _dot(v0, _cross3(_sub(a, ref), _sub(b, ref)))
        total += abs(signed)
    return Q(total, 6)


def polytope_stats(P: LatticePolytope) -> PolytopeStats:
    """Exact volume, l1-diameter and coordinatewise degree vector.

    The volume is the full-dimensional lattice volume: zero whenever the
    points do not affinely span the ambient space.
    """
    n = P.dim
    if n > 3:
        raise UnsupportedDimension("exact volume is implemented through dimension 3")
    pts = P.points
    rank = _affine_rank(pts)
    if rank < n:
        vol = Q(0)
    elif n == 1:
        vol = Q(pts[-1][0] - pts[0][0])
    elif n == 2:
        cyc = P.vertices
        s = 0
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            s += a[0] * b[1] - a[1] * b[0]
        vol = Q(abs(s), 2)
    else:
        vol = _volume_3d(pts)
    diam = 0
    ext = P.vertices if P.vertices else pts
    for a, b in itertools.combinations(ext, 2):
        diam = max(diam, sum(abs(x - y) for x, y in zip(a, b)))
    multi = tuple(max(p[i] for p in pts) for i in range(n))
    return PolytopeStats(vol, diam, multi)


# -- enclosing ellipsoid --------------------------------------------------------


@dataclass(frozen=True)
class Ellipsoid:
    """E = {center + factor @ u : |u| <= 1}, factor = shape**(-1/2)."""

    center: tuple[float, ...]
    shape: tuple[tuple[float, ...], ...]
    factor: tuple[tuple[float, ...], ...]
    det_factor: float

    def quad(self, point) -> float:
        d = np.asarray(point, float) - np.asarray(self.center)
        return float(d @ np.asarray(self.shape) @ d)


def mvee(points, eps: float = 1e-8, max_iter: int = 100_000) -> Ellipsoid:
    """Minimum-volume enclosing ellipsoid, by coordinate ascent on the dual.

    Containment is not left to convergence: the optimal shape is rescaled so
    every input point satisfies the quadratic inequality, so the result is
    always a true enclosing ellipsoid, only its volume is approximate.
    """
    pts = [tuple(p) for p in points]
    P = np.array(pts, float)
    m, n = P.shape
    if all(isinstance(x, int) for p in pts for x in p):
        spanning = _affine_rank(pts) == n
    else:
        spanning = np.linalg.matrix_rank(P - P[0]) == n
    if not spanning:
        raise DegenerateInput("points do not affinely span the space")
    lifted = np.column_stack([P, np.ones(m)])
    u = np.full(m, 1.0 / m)
    for _ in range(max_iter):
        X = lifted.T @ (lifted * u[:, None])
        w = np.einsum("ij,jk,ik->i", lifted, np.linalg.inv(X), lifted)
        j = int(np.argmax(w))
        if w[j] <= (n + 1) * (1 + eps):
            break
        step = (w[j] - n - 1) / ((n + 1) * (w[j] - 1))
        u *= 1 - step
        u[j] += step
    center = u @ P
    A = np.linalg.inv(P.T @ (P * u[:, None]) - np.outer(center, center)) / n
    A = (A + A.T) / 2
    worst = max(float((p - center) @ A @ (p - center)) for p in P)
    if worst > 1:
        A /= worst * (1 + 1e-12)
    evals, evecs = np.linalg.eigh(A)
    factor = evecs @ np.diag(evals**-0.5) @ evecs.T
    return Ellipsoid(
        tuple(center),
        tuple(map(tuple, A)),
        tuple(map(tuple, factor)),
        float(np.prod(evals**-0.5)),
    )


# -- integer embedding into a dilated simplex -----------------------------------


def round_ties_to_zero(x: float) -> int:
    return math.ceil(x - 0.5) if x >= 0 else -math.ceil(-x - 0.5)


@dataclass(frozen=True)
class SimplexEmbedding:
    """Integer affine map u -> m_l @ u + tau_l sending the translated
    polytope into {w >= 0, sum(w) <= bound}, checked exactly on vertices."""

    l: int
    m_l: tuple[IntVec, ...]
    tau_l: IntVec
    bound: int
    verified: bool
    violations: tuple
    det_m_l: int
    ellipsoid: Ellipsoid
    shift: IntVec

    def to_json(self) -> dict:
        return {
            "l": self.l,
            "M_l": [list(r) for r in self.m_l],
            "tau_l": list(self.tau_l),
            "bound": self.bound,
            "verified": self.verified,
        }


def simplex_embed(P: LatticePolytope, l: int) -> SimplexEmbedding:
    """Round l * factor**-1 of the enclosing ellipsoid to an integer matrix
    and pick an integer translation placing the polytope inside the standard
    simplex dilated by 2n(l + n*diam1 + n).

    The growing part of the translation dominates both the rounding error
    (below 1 per coordinate for unit directions) and the ellipsoid radius,
    which is what makes the simple vertex check pass once l is moderate; the
    check itself is exact integer arithmetic either way.
    """
    if l < 1:
        raise ValueError("the scale must be a positive integer")
    n = P.dim
    if P.vertices is None:
        raise UnsupportedDimension("embedding needs the exact vertex list")
    if _affine_rank(P.points) < n:
        raise DegenerateInput("embedding needs a full-dimensional polytope")
    shift = tuple(-min(v[i] for v in P.vertices) for i in range(n))
    tverts = [tuple(v[i] + shift[i] for i in range(n)) for v in P.vertices]
    diam = polytope_stats(P).diam1
    ell = mvee(tverts)
    inv = np.linalg.inv(np.asarray(ell.factor))
    vv = inv @ np.asarray(ell.center)
    m_l = tuple(
        tuple(round_ties_to_zero(l * inv[i][j]) for j in range(n)) for i in range(n)
    )
    v_l = tuple(round_ties_to_zero(l * vv[i]) for i in range(n))
    grow = l + n * diam + n
    tau_l = tuple(grow - v_l[i] for i in range(n))
    bound = 2 * n * grow
    det_ml = det_int(m_l)
    if det_ml == 0:
        raise ScaleTooSmall(f"rounded matrix is singular at scale {l}")
    violations = []
    for tv in tverts:
        w = tuple(sum(m_l[i][j] * tv[j] for j in range(n)) + tau_l[i] for i in range(n))
        if any(x < 0 for x in w) or sum(w) > bound:
            violations.append((tv, w))
    return SimplexEmbedding(
        l,
        m_l,
        tau_l,
        bound,
        not violations,
        tuple(violations),
        det_ml,
        ell,
        shift,
    )
