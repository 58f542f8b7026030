"""Exact computation of torsion points and maximal torsion cosets
on hypersurfaces of the algebraic torus over cyclotomic fields."""

from .arith import Q
from .bounds import (
    BoundReport,
    MainBounds,
    base_factor,
    bound_competitors,
    bound_main,
    bound_theta,
    bound_theta0,
    bound_volume,
    pi_bounds,
    unit_ball_volume,
)
from .cyclo import (
    CycloNum,
    GaloisAut,
    RootOfUnity,
    get_max_conductor,
    set_max_conductor,
)
from .errors import (
    CapExceeded,
    DegenerateInput,
    ParseError,
    ScaleTooSmall,
    ToolError,
    UnsupportedDimension,
)
from .geom import (
    Ellipsoid,
    LatticePolytope,
    PolytopeStats,
    SimplexEmbedding,
    mvee,
    newton_polytope,
    polytope_stats,
    round_ties_to_zero,
    simplex_embed,
)
from .linsums import (
    VanishingSum,
    cj_conductors,
    cj_family,
    minimal_vanishing_sums,
    psi,
    solve_linear_torsion,
)
from .parser import parse_poly, poly_to_string
from .poly import MPoly
from .solver import (
    SolveReport,
    TorsionCoset,
    bruteforce_oracle,
    coset_from_relation,
    coset_points_up_to,
    descent_solve,
    descent_transforms,
    minimal_field,
    torsion_points_up_to,
)

__version__ = "0.1.0"

__all__ = [
    "BoundReport",
    "CapExceeded",
    "CycloNum",
    "DegenerateInput",
    "Ellipsoid",
    "GaloisAut",
    "LatticePolytope",
    "MPoly",
    "MainBounds",
    "ParseError",
    "PolytopeStats",
    "Q",
    "RootOfUnity",
    "ScaleTooSmall",
    "SimplexEmbedding",
    "SolveReport",
    "ToolError",
    "TorsionCoset",
    "UnsupportedDimension",
    "VanishingSum",
    "base_factor",
    "bound_competitors",
    "bound_main",
    "bound_theta",
    "bound_theta0",
    "bound_volume",
    "bruteforce_oracle",
    "cj_conductors",
    "cj_family",
    "coset_from_relation",
    "coset_points_up_to",
    "descent_solve",
    "descent_transforms",
    "get_max_conductor",
    "minimal_field",
    "minimal_vanishing_sums",
    "mvee",
    "newton_polytope",
    "parse_poly",
    "pi_bounds",
    "poly_to_string",
    "polytope_stats",
    "psi",
    "round_ties_to_zero",
    "set_max_conductor",
    "simplex_embed",
    "solve_linear_torsion",
    "torsion_points_up_to",
    "unit_ball_volume",
]
