"""Nevanlinna functionals of analytic functions on circles."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence

import numpy as np
from numpy.typing import NDArray

from ldeconf.lde.functions import Evaluator
from ldeconf.oscillation.exceptions import OscillationError, QuadratureConvergenceError
from ldeconf.oscillation.fitting import windowed_exponent
from ldeconf.utils.config_loader import CountingConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

# Node doublings tried before giving up on a circle average.
MAX_DOUBLINGS = 10


def circle_average(
    integrand: Callable[[NDArray[np.complex128]], NDArray[np.float64]],
    r: float,
    nodes: int,
    tol: float,
) -> float:
    """Trapezoid mean of ``integrand(r e^{i theta})`` with node doubling.

    Raises:
        QuadratureConvergenceError: Relative change stays above tol
    """
    previous = current = math.nan
    count = nodes
    for _ in range(MAX_DOUBLINGS + 1):
        theta = 2 * math.pi * np.arange(count) / count
        current = float(np.mean(integrand(r * np.exp(1j * theta))))
        if not math.isfinite(current):
            raise OscillationError("Circle average is not finite", {"radius": r})
        if math.isfinite(previous):
            change = abs(current - previous)
            if change <= tol * max(abs(current), 1e-300) or change == 0.0:
                return current
        previous = current
        count *= 2
    raise QuadratureConvergenceError("Circle average did not converge", (previous, current))


def proximity_m(
    g: Evaluator, r: float, nodes: int | None = None, config: CountingConfig | None = None
) -> float:
    """``m(r, g) = (1/2 pi) int log+ |g(r e^{i theta})| d theta``."""
    cfg = config or CountingConfig()
    start = max(nodes or cfg.proximity_nodes, 256)
    return circle_average(
        lambda z: np.maximum(g.log_abs(z), 0.0), r, start, cfg.proximity_tol
    )


def nevanlinna_characteristic(
    g: Evaluator, r: float, config: CountingConfig | None = None
) -> float:
    """``T(r, g)``; equal to ``m(r, g)`` for analytic g."""
    return proximity_m(g, r, config=config)


def jensen_counting(g: Evaluator, r: float, config: CountingConfig | None = None) -> float:
    """``N(r, 0, g)`` from Jensen's formula.

    Raises:
        OscillationError: g(0) = 0
    """
    cfg = config or CountingConfig()
    at_origin = float(g.log_abs(np.array([0.0 + 0.0j]))[0])
    if not math.isfinite(at_origin):
        raise OscillationError("Jensen's formula needs g(0) != 0")
    mean = circle_average(g.log_abs, r, cfg.proximity_nodes, cfg.proximity_tol)
    return mean - at_origin


def characteristic_exponent(
    g: Evaluator, radii: Sequence[float], config: CountingConfig | None = None
) -> float | None:
    """Growth exponent of ``T(r, g)`` over the fit window of the given radii.

    T is nondecreasing in r, so it is fitted through its increments; a
    bounded characteristic gives 0.
    """
    values = [nevanlinna_characteristic(g, float(r), config) for r in radii]
    exponent = windowed_exponent(radii, values, increments=True)
    logger.debug("characteristic_exponent", radii=len(values), exponent=exponent)
    return exponent
