"""Symbolic tools for the C2-equivariant mod 2 Steenrod algebra and the
RO(C2)-graded cohomology of equivariant Eilenberg-Mac Lane spaces."""

from .coefficients import CoeffElement, Laurent, LaurentMonomial, NegMonomial, PosMonomial, binom_mod2
from .grading import RHO, SIGMA, BigradedSeries, RepDegree, actual_leq, collapse, series_mul
from .steenrod import Config, SteenrodElement, adem_reduce, multiply

__all__ = [
    "BigradedSeries", "CoeffElement", "Config", "Laurent", "LaurentMonomial", "NegMonomial",
    "PosMonomial", "RHO", "RepDegree", "SIGMA", "SteenrodElement", "actual_leq", "adem_reduce",
    "binom_mod2", "collapse", "multiply", "series_mul",
]
