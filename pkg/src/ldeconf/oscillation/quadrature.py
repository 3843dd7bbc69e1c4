"""Area integrals of coefficient growth over discs and their conformal images.

The quantity of interest is

    I_j(r) = int_{T(D(0,r))} |a_j(w)|^(1/(k-j)) dm(w) / |T'(T^{-1}(w))|

which the substitution ``w = T(z)`` turns into the disc integral

    int_{D(0,r)} |a_j(T(z)) T'(z)^(k-j)|^(1/(k-j)) dm(z).

Both forms are evaluated with a polar midpoint-by-trapezoid rule whose grid
is doubled until consecutive results agree.
"""

from __future__ import annotations

import math
from collections.abc import Callable

import numpy as np
from numpy.typing import NDArray

from ldeconf.conformal.maps import ConformalMapBase
from ldeconf.lde.functions import Evaluator
from ldeconf.oscillation.exceptions import OscillationError, QuadratureConvergenceError
from ldeconf.utils.config_loader import QuadratureConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

Integrand = Callable[[NDArray[np.complex128]], NDArray[np.float64]]


def polar_sum(integrand: Integrand, r: float, radial: int, angular: int, chunk_rows: int) -> float:
    """Midpoint rule in the radius times trapezoid rule in the angle over ``|z| < r``."""
    dr = r / radial
    dtheta = 2 * math.pi / angular
    rho = dr * (np.arange(radial) + 0.5)
    phases = np.exp(1j * dtheta * np.arange(angular))
    total = 0.0
    for start in range(0, radial, chunk_rows):
        rows = rho[start : start + chunk_rows]
        values = integrand(rows[:, None] * phases[None, :])
        total += float(np.sum(values.sum(axis=1) * rows))
    return total * dr * dtheta


def refine(integrand: Integrand, r: float, config: QuadratureConfig, label: str = "") -> float:
    """Double the polar grid until the relative change drops below ``rel_tol``.

    Raises:
        QuadratureConvergenceError: Still changing after ``max_refinements`` doublings
    """
    radial, angular = config.radial_nodes, config.angular_nodes
    previous = polar_sum(integrand, r, radial, angular, config.chunk_rows)
    if not math.isfinite(previous):
        raise OscillationError("Quadrature integrand is not finite", {"radius": r})
    for level in range(1, config.max_refinements + 1):
        radial, angular = 2 * radial, 2 * angular
        current = polar_sum(integrand, r, radial, angular, config.chunk_rows)
        change = abs(current - previous)
        logger.debug(
            "quadrature_refined", label=label, radius=r, level=level, value=current, change=change
        )
        if change <= config.rel_tol * abs(current) or current == previous:
            return current
        previous = current
    if config.max_refinements == 0:
        return previous
    raise QuadratureConvergenceError(
        "Polar quadrature did not converge", (previous, current)
    )


def _exponent(j: int, k: int) -> float:
    if not 0 <= j <= k - 2:
        raise OscillationError("Coefficient index out of range", {"j": j, "k": k})
    return 1.0 / (k - j)


def coefficient_integral(
    coefficient: Evaluator,
    j: int,
    r: float,
    k: int,
    T: ConformalMapBase | None = None,
    config: QuadratureConfig | None = None,
) -> float:
    """Disc-side integral of ``|a_j(T) (T')^(k-j)|^(1/(k-j))`` over ``D(0, r)``.

    Without T the coefficient lives on the disc and ``|a_j|^(1/(k-j))`` is
    integrated directly.
    """
    cfg = config or QuadratureConfig()
    if not 0 < r < 1:
        raise OscillationError("Radius must lie in (0, 1)", {"radius": r})
    p = _exponent(j, k)

    def integrand(z: NDArray[np.complex128]) -> NDArray[np.float64]:
        if T is None:
            return np.abs(coefficient.values(z)) ** p
        return np.abs(coefficient.values(T.eval_array(z))) ** p * np.abs(T.derivative_array(z))

    return refine(integrand, r, cfg, label=f"I_{j}")


def image_side_integral(
    coefficient: Evaluator,
    j: int,
    r: float,
    k: int,
    T: ConformalMapBase,
    config: QuadratureConfig | None = None,
) -> float:
    """``int_{T(D(0,r))} |a_j|^(1/(k-j)) dm / |T'(T^{-1})|`` parameterized through T.

    Uses the closed-form ``|T'(T^{-1}(w))|`` of the map kind instead of T'.
    """
    cfg = config or QuadratureConfig()
    if not 0 < r < 1:
        raise OscillationError("Radius must lie in (0, 1)", {"radius": r})
    p = _exponent(j, k)
    image_derivative = np.vectorize(T.image_derivative, otypes=[float])

    def integrand(z: NDArray[np.complex128]) -> NDArray[np.float64]:
        w = T.eval_array(z)
        jacobian = np.abs(T.derivative_array(z)) ** 2
        return np.abs(coefficient.values(w)) ** p * jacobian / image_derivative(w)

    return refine(integrand, r, cfg, label=f"image_I_{j}")
