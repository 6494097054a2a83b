"""
__init__.py file to make the gleason directory a proper package.
"""

from gleason.bigpoly import BigPoly
from gleason.parametric import GleasonRangeError, ParametricEnumerator, gleason_basis, parametric_near_extremal
from gleason.theorems import AlphaRange, alpha_range, divisibility_check, extremal_enumerator, known_alpha_report, sweep

__all__ = [
    "AlphaRange",
    "BigPoly",
    "GleasonRangeError",
    "ParametricEnumerator",
    "alpha_range",
    "divisibility_check",
    "extremal_enumerator",
    "gleason_basis",
    "known_alpha_report",
    "parametric_near_extremal",
    "sweep",
]
