from __future__ import annotations

import pytest
from hypothesis import strategies as st

from torcosets.arith import Q, euler_phi
from torcosets.cyclo import CycloNum, RootOfUnity
from torcosets.poly import MPoly


@st.composite
def small_cyclonums(draw, conductors=(1, 3, 4)):
    n = draw(st.sampled_from(conductors))
    phi = euler_phi(n)
    nums = draw(st.lists(st.integers(-4, 4), min_size=phi, max_size=phi))
    return CycloNum(n, tuple(Q(a) for a in nums))


@st.composite
def mpolys(draw, nvars=2, max_terms=5, max_exp=3, conductors=(1, 3, 4)):
    nterms = draw(st.integers(0, max_terms))
    items = []
    for _ in range(nterms):
        e = tuple(draw(st.integers(0, max_exp)) for _ in range(nvars))
        items.append((e, draw(small_cyclonums(conductors))))
    return MPoly.from_terms(nvars, items)


@st.composite
def torsion_points(draw, nvars=2, max_order=12):
    return tuple(
        RootOfUnity.make(draw(st.integers(0, 24)), draw(st.integers(1, max_order)))
        for _ in range(nvars)
    )


def poly_from_string(expr: str) -> MPoly:
    from torcosets.parser import parse_poly

    return parse_poly(expr)


@pytest.fixture(scope="session")
def corpus():
    """Bivariate polynomials with known or cross-checkable torsion behaviour."""
    from torcosets.parser import parse_poly

    return {name: parse_poly(src) for name, src in CORPUS_SOURCES.items()}


# name -> source; spans conductors 1, 3, 4, 5, 8, 12, reducible products,
# binomials, repeated factors, and empty zero sets
CORPUS_SOURCES = {
    "line_hex": "x + y - 1",
    "line_empty": "x + y - 3",
    "line_gauss": "x + z4*y - 1",
    "product_line_hyper": "(x + y - 1)*(x*y - 1)",
    "binomial_plain": "x*y - 1",
    "binomial_twisted": "x^2*y - z3",
    "binomial_offset": "x^2 - z8*y",
    "squared_binomial": "(x*y - z8)^2",
    "checkerboard": "x^2 + x*y + 1",
    "fermat_cubic_shift": "x^3 + y^3 - 2",
    "hex_conic": "x^2 + y^2 - x*y - 1",
    "five_sparse": "x^2*y - z5*x + y^3",
    "twelve_mix": "z12*x^2 + y^2 - 1 - x",
    "unit_circle_pair": "(x - z12^7)*(y - z3)",
    "dense_deg3": "x^3 + 2*x^2*y - x*y + y^3 - 1 + x - y",
    "cusp_like": "x^2*y^2 - 2*x*y + 1",
    "asym_monomial": "x^3*y - 1",
    "rational_only": "3*x - 2*y",
    "high_order_line": "x + z8*y",
    "tau_degenerate": "z4*x + y - 1",
    "tau_partner": "x - y + 1",
    "sum_of_roots": "x + y + 1",
    "const_shift_five": "x*y^2 + z5*y - 1 - z5^3*x",
}
