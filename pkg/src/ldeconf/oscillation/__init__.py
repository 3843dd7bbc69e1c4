"""Zero counting, Nevanlinna functionals, coefficient integrals and growth reports."""

from ldeconf.oscillation.counting import (
    CountingFunction,
    contour_argument,
    count_on_grid,
    count_zeros,
    counting_grid,
    integrated_count,
    integrated_counting,
)
from ldeconf.oscillation.directions import exp_sum_directions
from ldeconf.oscillation.exceptions import (
    FitError,
    OscillationError,
    QuadratureConvergenceError,
    ZeroCountingError,
)
from ldeconf.oscillation.fitting import (
    growth_exponent_fit,
    increment_exponent_fit,
    windowed_exponent,
)
from ldeconf.oscillation.nevanlinna import (
    characteristic_exponent,
    jensen_counting,
    nevanlinna_characteristic,
    proximity_m,
)
from ldeconf.oscillation.quadrature import coefficient_integral, image_side_integral
from ldeconf.oscillation.report import (
    OscillationReport,
    RadialGrid,
    ReportRow,
    exponent_summary,
    theorem2_report,
)

__all__ = [
    "CountingFunction",
    "FitError",
    "OscillationError",
    "OscillationReport",
    "QuadratureConvergenceError",
    "RadialGrid",
    "ReportRow",
    "ZeroCountingError",
    "characteristic_exponent",
    "coefficient_integral",
    "contour_argument",
    "count_on_grid",
    "count_zeros",
    "counting_grid",
    "exp_sum_directions",
    "exponent_summary",
    "growth_exponent_fit",
    "image_side_integral",
    "increment_exponent_fit",
    "integrated_count",
    "integrated_counting",
    "jensen_counting",
    "nevanlinna_characteristic",
    "proximity_m",
    "theorem2_report",
    "windowed_exponent",
]
