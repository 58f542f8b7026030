"""Degree bounds for the torsion part of a hypersurface in the n-torus.

Everything here is plain integer and rational arithmetic. The one
transcendental constant, pi, enters only through the unit-ball volume and
is handled by a directed rational enclosure, so reported values are honest
upper bounds at every precision and tighten monotonically as the precision
grows. Astronomically large values are reported in log2 form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import Q

RENDER_BITS = 4096


def _log2_int(x: int) -> float:
    b = x.bit_length()
    if b <= 53:
        return math.log2(x)
    return math.log2(x >> (b - 53)) + (b - 53)


def _log2_q(x) -> float:
    x = Q(x)
    return _log2_int(x.numerator) - _log2_int(x.denominator)


@dataclass(frozen=True)
class BoundReport:
    """One named bound: exact value when feasible, log2 always."""

    name: str
    params: dict
    value: int | Q | None
    log2: float
    note: str = ""

    def render(self) -> str:
        if self.value is not None and self.log2 <= RENDER_BITS:
            if isinstance(self.value, Q) and self.value.denominator != 1:
                return f"{self.value.numerator}/{self.value.denominator}"
            return str(int(self.value))
        return f"2^{self.log2:.3f}"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "params": {k: str(v) for k, v in self.params.items()},
            "value": None if self.value is None else self.render(),
            "log2": self.log2,
            "note": self.note,
        }


def base_factor(n: int) -> int:
    """(2n-1)(n-1)(2^(2n) + 2^(n+1) - 2), the descent constant per step."""
    if n < 2:
        raise ValueError("at least two variables are required")
    return (2 * n - 1) * (n - 1) * (2 ** (2 * n) + 2 ** (n + 1) - 2)


@dataclass(frozen=True)
class MainBounds:
    intro: int
    refined: int


def bound_main(n: int, d: int, delta: int, j: int) -> MainBounds:
    """Bounds on the degree of the j-dimensional torsion part of a variety
    of dimension d and degree delta in the n-torus.

    intro uses the blanket exponent n*d; refined tracks only the n-j
    codimension steps that can actually contribute.
    """
    if n < 2:
        raise ValueError("at least two variables are required")
    if not 0 <= j <= d < n:
        raise ValueError("need 0 <= j <= d < n")
    if delta < 1:
        raise ValueError("the degree must be positive")
    b = base_factor(n)
    return MainBounds(
        intro=b ** (n * d) * delta ** (n - j),
        refined=b ** (d * (n - j)) * delta ** (n - j),
    )


def bound_theta0(n: int, k: int, d: int, delta0: int) -> int:
    """Isolated-point sharpening for a complete intersection slice: one
    descent step costs k(2^(2n)+2^(n+1)-2)(2d+1) per unit of degree."""
    if n < 2:
        raise ValueError("at least two variables are required")
    if k != n - d:
        raise ValueError("the codimension must be n - d")
    if k < 1:
        raise ValueError("the codimension must be positive")
    if delta0 < 1:
        raise ValueError("the degree must be positive")
    return k * (2 ** (2 * n) + 2 ** (n + 1) - 2) * (2 * d + 1) * delta0


def bound_theta(n: int, k0: int, k1: int, delta: int) -> int:
    """Chain bound between codimensions k0 and k1."""
    if n < 2:
        raise ValueError("at least two variables are required")
    if not 1 <= k1 <= k0 <= n:
        raise ValueError("need 1 <= k1 <= k0 <= n")
    if delta < 1:
        raise ValueError("the degree must be positive")
    step = (2 * n - 1) * k0 * (2 ** (2 * n) + 2 ** (n + 1) - 2)
    return step ** (k0 - k1 + 1) * delta


# -- unit balls and the volume-form bound ---------------------------------------


def pi_bounds(digits: int = 30) -> tuple[Q, Q]:
    """Rational lo < pi < hi with about `digits` decimal digits of slack,
    from the 16*atan(1/5) - 4*atan(1/239) identity; the alternating tails
    bracket each series, so the enclosure is exact."""
    if digits < 1:
        raise ValueError("precision must be positive")

    def atan_brackets(inv_x: int, pairs: int) -> tuple[Q, Q]:
        # an even count of alternating terms undershoots; the next term
        # bounds the tail
        s = Q(0)
        x2 = inv_x * inv_x
        term = Q(1, inv_x)
        for k in range(2 * pairs):
            s = s + term / (2 * k + 1) if k % 2 == 0 else s - term / (2 * k + 1)
            term = term / x2
        return s, s + term / (4 * pairs + 1)

    a_lo, a_hi = atan_brackets(5, max(2, int(0.36 * digits) + 2))
    b_lo, b_hi = atan_brackets(239, max(1, int(0.11 * digits) + 2))
    return 16 * a_lo - 4 * b_hi, 16 * a_hi - 4 * b_lo


def unit_ball_volume(n: int) -> tuple[Q, int]:
    """(q, e) with vol(B_n) = q * pi^e."""
    if n < 1:
        raise ValueError("dimension must be positive")
    if n % 2 == 0:
        return Q(1, math.factorial(n // 2)), n // 2
    dfac = 1
    for m in range(n, 0, -2):
        dfac *= m
    return Q(2 ** ((n + 1) // 2), dfac), n // 2


def bound_volume(n: int, j: int, vol, digits: int = 30) -> BoundReport:
    """Isolated-to-j-dimensional count bound proportional to the volume of
    the Newton polytope, an upper rounding of rational * pi^(-e).

    More digits can only shrink the reported value: the lower pi bracket
    increases with precision and sits in the denominator.
    """
    if n < 2:
        raise ValueError("at least two variables are required")
    if not 0 <= j < n:
        raise ValueError("need 0 <= j < n")
    vol = Q(vol)
    if vol < 0:
        raise ValueError("the volume must be nonnegative")
    q, e = unit_ball_volume(n)
    rational = base_factor(n) ** ((n - 1) * (n - j)) * 2**n * n ** (2 * n) / q * vol
    pi_lo, _ = pi_bounds(digits)
    value = rational / pi_lo**e
    return BoundReport(
        name="volume",
        params={"n": n, "j": j, "vol": vol, "rational_factor": rational, "pi_power": e},
        value=value,
        log2=_log2_q(value) if value else float("-inf"),
        note=f"upper rounding of {rational}/pi^{e} at {digits} digits",
    )


# -- published bounds for comparison tables -------------------------------------


def _report(name, params, value, log2=None, note=""):
    if log2 is None:
        log2 = _log2_q(value) if value else float("-inf")
    return BoundReport(name=name, params=params, value=value, log2=log2, note=note)


def bound_competitors(
    n: int,
    *,
    delta: int | None = None,
    multidegree=None,
    vol=None,
    k: int | None = None,
    j: int = 0,
    exact: bool = False,
) -> list[BoundReport]:
    """Every published bound the given parameters can feed.

    delta is the total degree, multidegree the coordinatewise degree vector,
    vol the Newton polytope volume, k the codimension of the variety and j
    the dimension of the torsion stratum being counted. Bounds whose
    parameters are missing are skipped. Values beyond roughly a megabit are
    reported in log2 form only, unless exact forces the computation.
    """
    if n < 2:
        raise ValueError("at least two variables are required")
    out = []
    if delta is not None and delta >= 1:
        out.append(_schmidt(n, delta, exact))
        out.append(_aliev_smyth(n, delta, exact))
        if k is not None:
            out.append(_amoroso_viada(n, delta, k, j))
            out.append(
                _report(
                    "nonabelian-field",
                    {"n": n, "delta": delta, "k": k},
                    (2 * (2 * n - 1) * (n - 1)) ** (n * (n - k)) * delta**n,
                    note="valid without any rationality assumption on the field",
                )
            )
    if multidegree is not None:
        ds = tuple(int(x) for x in multidegree)
        if len(ds) != 2 or min(ds) < 1:
            raise ValueError("the curve bound needs two positive degrees")
        out.append(
            _report(
                "ruppert",
                {"multidegree": ds},
                22 * max(ds) * min(ds),
                note="isolated points of a curve with the given bidegree",
            )
        )
    if vol is not None:
        v = Q(vol)
        out.append(
            _report(
                "beukers-smyth",
                {"vol": v},
                22 * v,
                note="isolated points of a plane curve by Newton volume",
            )
        )
    return out


def _schmidt(n: int, delta: int, exact: bool) -> BoundReport:
    c = math.comb(n + delta, delta)
    expo = 3 * c * c
    log2 = n * n * math.log2(11 * delta) + expo * math.log2(c)
    params = {"n": n, "delta": delta}
    if exact or log2 <= 2**20:
        value = (11 * delta) ** (n * n) * c**expo
        return _report("schmidt", params, value, _log2_int(value), "combinatorial count bound")
    return _report("schmidt", params, None, log2, "too large to expand; log2 only")


def _aliev_smyth(n: int, d: int, exact: bool) -> BoundReport:
    c1_log2 = 1.5 * (2 + n) * 5**n * math.log2(n)
    c2 = Q(49 * d ** (n - 2) - 4 * n - 9, 16)
    log2 = c1_log2 + float(c2) * math.log2(d)
    params = {"n": n, "d": d, "exponent": c2}
    e1 = Q(3, 2) * (2 + n) * 5**n
    if e1.denominator == 1 and c2.denominator == 1 and (exact or log2 <= 2**20):
        value = n ** int(e1) * d ** int(c2)
        return _report("aliev-smyth", params, value, _log2_int(value), "degree-power point bound")
    return _report("aliev-smyth", params, None, log2, "irrational constant; log2 only")


def _amoroso_viada(n: int, delta: int, k: int, j: int) -> BoundReport:
    if not 0 <= j < n or not 1 <= k <= n:
        raise ValueError("need 0 <= j < n and 1 <= k <= n")
    # natural log rounded up so the reported exponent is an upper bound
    ln = math.log(n * n * delta) * (1 + 2**-40) + 2**-40
    inner = math.log2(delta) + (n - k) * n * (n - 1) * math.log2(200 * n**5 * ln)
    log2 = (n - j) * inner
    return _report(
        "amoroso-viada",
        {"n": n, "delta": delta, "k": k, "j": j},
        None,
        log2,
        "height-theoretic bound; upward-rounded logarithm",
    )
