"""Jet (truncated Taylor series) arithmetic and Bell polynomials."""

from ldeconf.jetcalc.bell import (
    bell_polynomial,
    bell_polynomial_recurrence,
    bell_polynomial_table,
    faa_di_bruno,
)
from ldeconf.jetcalc.exceptions import (
    BellIndexError,
    BranchError,
    CenterMismatchError,
    JetError,
    JetOrderError,
    ZeroConstantTermError,
)
from ldeconf.jetcalc.jet import (
    ComplexJet,
    jet_add,
    jet_compose,
    jet_derivative,
    jet_div,
    jet_evaluate,
    jet_exp,
    jet_log,
    jet_mul,
    jet_pow,
    jet_recenter,
    jet_scale,
    jet_sub,
)
from ldeconf.jetcalc.linalg import jet_det, jet_solve

__all__ = [
    "BellIndexError",
    "BranchError",
    "CenterMismatchError",
    "ComplexJet",
    "JetError",
    "JetOrderError",
    "ZeroConstantTermError",
    "bell_polynomial",
    "bell_polynomial_recurrence",
    "bell_polynomial_table",
    "faa_di_bruno",
    "jet_add",
    "jet_compose",
    "jet_derivative",
    "jet_det",
    "jet_div",
    "jet_evaluate",
    "jet_exp",
    "jet_log",
    "jet_mul",
    "jet_pow",
    "jet_recenter",
    "jet_scale",
    "jet_sub",
    "jet_solve",
]
