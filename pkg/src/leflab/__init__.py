"""Exact Gröbner / generic-initial-ideal toolkit for Lefschetz properties of
graded algebras, with hyperplane arrangement Jacobian algebras as the main
application."""

from .gin import GinError, is_saturated, regularity, rgin, saturation
from .groebner import Ideal, MonomialIdeal, ideal_quotient, normal_form, saturate
from .hilbert import hilbert_function, hilbert_series
from .lefschetz import aci_analyze, classify_quotient, has_slp, has_wlp
from .polyring import LinearChange, Polynomial, parse_polynomial, parse_polynomials

__version__ = "0.1.0"

__all__ = [
    "GinError", "Ideal", "LinearChange", "MonomialIdeal", "Polynomial", "aci_analyze",
    "classify_quotient", "has_slp", "has_wlp", "hilbert_function", "hilbert_series",
    "ideal_quotient", "is_saturated", "normal_form", "parse_polynomial", "parse_polynomials",
    "regularity", "rgin", "saturate", "saturation",
]
