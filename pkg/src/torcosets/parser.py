"""Parser for torus polynomial expressions.

Grammar, whitespace-insensitive:

    expr   := [sign] term ((+|-) term)*
    term   := factor ([*] factor)*
    factor := base [^ [-] digits]
    base   := rational | root | variable | ( expr )
    root   := z digits          e.g. z6 is the root of unity of order 6
    var    := x [digits] | y    x = x1, y = x2; xk is the k-th coordinate

The * in a product may be omitted: 2x, z3y and (x+1)(y+1) are products.
Digits directly after x bind as the coordinate index, so x2 is the second
coordinate, never x*2.  Rationals are digit strings with an optional
/denominator.  Negative exponents are allowed on single-term bases
(monomials and roots), matching what makes sense on the torus.
"""

from __future__ import annotations

from .arith import Q
from .cyclo import CycloNum, RootOfUnity
from .errors import ParseError
from .poly import MPoly

__all__ = ["parse_poly", "poly_to_string"]


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> str:
        self.skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self) -> str:
        c = self.peek()
        self.pos += 1
        return c

    def digits(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise ParseError("expected digits", start)
        return int(self.text[start : self.pos])

    def fail(self, message: str):
        raise ParseError(message, self.pos)


def parse_poly(text: str, nvars: int | None = None) -> MPoly:
    """Parse an expression into a polynomial.

    The variable count is inferred from the highest coordinate mentioned
    (at least 2 when y appears) unless nvars forces it.
    """
    sc = _Scanner(text)
    max_var = [0]
    poly = _expr(sc, max_var)
    sc.skip_ws()
    if sc.pos != len(sc.text):
        sc.fail(f"unexpected character {sc.text[sc.pos]!r}")
    inferred = max_var[0]
    if nvars is None:
        nvars = max(inferred, 1)
    elif inferred > nvars:
        raise ParseError(f"expression uses {inferred} variables, nvars={nvars} given", 0)
    return _pad_vars(poly, nvars)


def _pad_vars(p: MPoly, nvars: int) -> MPoly:
    """Widen or narrow the variable count; narrowed positions must be unused."""
    if p.nvars == nvars:
        return p
    if nvars > p.nvars:
        return MPoly(nvars, {e + (0,) * (nvars - p.nvars): c for e, c in p.terms.items()})
    if any(any(e[nvars:]) for e in p.terms):
        raise ValueError("cannot drop variables that are in use")
    return MPoly(nvars, {e[:nvars]: c for e, c in p.terms.items()})


_MAXV = 8  # parse-time width; trimmed to the inferred count afterwards


def _expr(sc: _Scanner, max_var: list[int]) -> MPoly:
    if sc.peek() == "+":
        sc.take()
    if sc.peek() == "-":
        sc.take()
        out = -_term(sc, max_var)
    else:
        out = _term(sc, max_var)
    while sc.peek() in ("+", "-"):
        op = sc.take()
        t = _term(sc, max_var)
        out = out + t if op == "+" else out - t
    return out


def _term(sc: _Scanner, max_var: list[int]) -> MPoly:
    out = _factor(sc, max_var)
    while True:
        c = sc.peek()
        if c == "*":
            sc.take()
        elif not (c.isdigit() or c in ("z", "x", "y", "(")):
            return out
        out = out * _factor(sc, max_var)


def _factor(sc: _Scanner, max_var: list[int]) -> MPoly:
    base = _base(sc, max_var)
    if sc.peek() == "^":
        sc.take()
        neg = False
        if sc.peek() == "-":
            sc.take()
            neg = True
        k = sc.digits()
        return _power(base, -k if neg else k, sc)
    return base


def _power(base: MPoly, k: int, sc: _Scanner) -> MPoly:
    if k >= 0:
        return base**k
    if len(base.terms) != 1:
        sc.fail("negative exponent on a non-monomial")
    # (c*x^e)^k with k < 0: c^k * x^(k*e), which needs 1/c
    [(e, c)] = base.terms.items()
    scale = c.inverse() ** (-k)
    return MPoly(base.nvars, {tuple(k * v for v in e): scale})


def _base(sc: _Scanner, max_var: list[int]) -> MPoly:
    c = sc.peek()
    if c == "(":
        sc.take()
        inner = _expr(sc, max_var)
        if sc.peek() != ")":
            sc.fail("expected )")
        sc.take()
        return inner
    if c.isdigit():
        num = sc.digits()
        if sc.peek() == "/":
            sc.take()
            den = sc.digits()
            if den == 0:
                sc.fail("zero denominator")
            return MPoly.constant(_MAXV, Q(num, den))
        return MPoly.constant(_MAXV, Q(num))
    if c == "z":
        sc.take()
        order = sc.digits()
        if order < 1:
            sc.fail("root order must be positive")
        return MPoly.constant(_MAXV, RootOfUnity.zeta(order).as_cyclonum())
    if c == "x":
        sc.take()
        idx = 1
        if sc.peek().isdigit():
            idx = sc.digits()
            if idx < 1:
                sc.fail("variable index must be at least 1")
            if idx > _MAXV:
                sc.fail(f"at most {_MAXV} variables supported")
        max_var[0] = max(max_var[0], idx)
        return MPoly.variable(_MAXV, idx - 1)
    if c == "y":
        sc.take()
        max_var[0] = max(max_var[0], 2)
        return MPoly.variable(_MAXV, 1)
    sc.fail(f"unexpected character {c!r}" if c else "unexpected end of input")


def poly_to_string(f: MPoly) -> str:
    """Readable rendering, mainly for logs and CLI echoes."""
    if f.is_zero():
        return "0"
    names = ["x", "y"] if f.nvars == 2 else [f"x{i+1}" for i in range(f.nvars)]
    if f.nvars == 1:
        names = ["x"]
    bits = []
    for e, c in sorted(f.terms.items(), reverse=True):
        mono = "*".join(
            f"{names[i]}^{v}" if v != 1 else names[i] for i, v in enumerate(e) if v
        )
        root = c.as_root_of_unity()
        if root is not None and root.is_one:
            coeff = "" if mono else "1"
        elif root is not None and root == RootOfUnity.minus_one():
            coeff = "-" if mono else "-1"
        elif c.is_rational():
            coeff = str(c.rational_value())
        elif root is not None:
            coeff = f"z{root.ord}" + (f"^{root.num}" if root.num != 1 else "")
        else:
            coeff = "(" + " + ".join(f"{v}*z{c.conductor}^{i}" if i else str(v) for i, v in enumerate(c.coeffs) if v != 0) + ")"
        if mono and coeff not in ("", "-"):
            bits.append(f"{coeff}*{mono}")
        else:
            bits.append(f"{coeff}{mono}")
    out = " + ".join(bits).replace("+ -", "- ")
    return out
