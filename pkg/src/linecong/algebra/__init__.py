"""Exact polynomial arithmetic and the Gröbner-basis toolbox."""

from .groebner import GBConfig, GBStats
from .hilbert import HilbertPolynomial
from .ideal import (
    Ideal,
    eliminate,
    general_element,
    groebner_basis,
    ideal_arithmetic,
    intersect,
    linear_section,
    invariants,
    macaulay_rank,
    monomials_of_degree,
    normal_form,
    quotient,
    saturate,
)
from .poly import Polynomial
from .ring import (
    DEFAULT_CHARACTERISTIC,
    GenericityError,
    GREVLEX,
    LEX,
    CoefficientField,
    MonomialOrder,
    PolyRing,
    ResourceError,
    UsageError,
    make_ring,
)

__all__ = [
    "CoefficientField", "DEFAULT_CHARACTERISTIC", "GBConfig", "GBStats", "GenericityError", "GREVLEX", "HilbertPolynomial",
    "Ideal", "LEX", "MonomialOrder", "PolyRing", "Polynomial", "ResourceError", "UsageError",
    "eliminate", "general_element", "groebner_basis", "ideal_arithmetic", "intersect", "invariants", "linear_section",
    "macaulay_rank", "make_ring", "monomials_of_degree", "normal_form", "quotient", "saturate",
]
