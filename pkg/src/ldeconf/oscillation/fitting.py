"""Power-law growth exponents near the unit circle."""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy import stats

from ldeconf.oscillation.exceptions import FitError

MIN_SAMPLES = 5

# Increments below this fraction of the largest value count as flat.
INCREMENT_FLOOR = 1e-12


def growth_exponent_fit(samples: Sequence[tuple[float, float]]) -> float:
    """Least-squares slope of ``log v`` against ``log(1 / (1 - r))``.

    A return value ``p`` means ``v`` grows like ``(1 - r)^(-p)``.

    Raises:
        FitError: Fewer than five samples, a radius outside ``[0, 1)`` or a
            nonpositive value
    """
    if len(samples) < MIN_SAMPLES:
        raise FitError("Growth fit needs at least five samples", {"given": len(samples)})
    radii = np.array([float(r) for r, _ in samples])
    values = np.array([float(v) for _, v in samples])
    if np.any((radii < 0) | (radii >= 1)):
        raise FitError("Fit radii must lie in [0, 1)", {"radii": radii.tolist()})
    if np.any(~np.isfinite(values)) or np.any(values <= 0):
        raise FitError("Fit values must be positive and finite", {"values": values.tolist()})
    x = -np.log1p(-radii)
    if np.ptp(x) == 0:
        raise FitError("Fit radii must not all coincide")
    result = stats.linregress(x, np.log(values))
    slope = float(result.slope)
    if not math.isfinite(slope):
        raise FitError("Growth fit produced a non-finite slope")
    return slope


def increment_exponent_fit(samples: Sequence[tuple[float, float]]) -> float:
    """Exponent of a cumulative quantity ``v = A (1 - r)^(-p) + B`` from its increments.

    With ``u = 1 - r`` the difference quotients ``dv / du`` between
    neighbouring samples behave like ``u^(-p - 1)`` at the geometric midpoint
    ``sqrt(u_i u_(i+1))``, so the bounded offset ``B`` drops out. The fit is
    exact for pure powers sampled on a geometric grid.

    Returns 0.0 when the quantity does not increase, and clamps negative
    exponents (convergent quantities) to 0.0.

    Raises:
        FitError: Fewer than five samples, a radius outside ``[0, 1)``,
            repeated radii or a non-finite value
    """
    if len(samples) < MIN_SAMPLES:
        raise FitError("Growth fit needs at least five samples", {"given": len(samples)})
    ordered = sorted((float(r), float(v)) for r, v in samples)
    radii = np.array([r for r, _ in ordered])
    values = np.array([v for _, v in ordered])
    if np.any((radii < 0) | (radii >= 1)):
        raise FitError("Fit radii must lie in [0, 1)", {"radii": radii.tolist()})
    if np.any(~np.isfinite(values)):
        raise FitError("Fit values must be finite", {"values": values.tolist()})
    u = 1.0 - radii
    du = -np.diff(u)
    if np.any(du <= 0):
        raise FitError("Fit radii must be distinct", {"radii": radii.tolist()})
    dv = np.diff(values)
    floor = INCREMENT_FLOOR * max(1.0, float(np.max(np.abs(values))))
    rising = dv > floor
    if np.count_nonzero(rising) < 2:
        return 0.0
    midpoints = np.sqrt(u[:-1] * u[1:])[rising]
    result = stats.linregress(-np.log(midpoints), np.log(dv[rising] / du[rising]))
    slope = float(result.slope)
    if not math.isfinite(slope):
        raise FitError("Growth fit produced a non-finite slope")
    return max(slope - 1.0, 0.0)


def fit_window(
    radii: Sequence[float],
    values: Sequence[float],
    low: float = 0.01,
    high: float = 0.1,
    positive: bool = True,
) -> list[tuple[float, float]]:
    """Pairs ``(r, v)`` with ``1 - r`` in ``[low, high]`` and finite ``v``.

    ``positive`` additionally drops ``v <= 0``, which a log-log fit cannot use.
    """
    return [
        (float(r), float(v))
        for r, v in zip(radii, values, strict=True)
        if low - 1e-12 <= 1 - r <= high + 1e-12 and math.isfinite(v) and (v > 0 or not positive)
    ]


def windowed_exponent(
    radii: Sequence[float],
    values: Sequence[float],
    low: float = 0.01,
    high: float = 0.1,
    increments: bool = False,
) -> float | None:
    """Fitted exponent over the asymptotic window, or None with too few samples.

    ``increments`` selects :func:`increment_exponent_fit` for cumulative
    quantities; otherwise the log-log slope of the values themselves is used.
    """
    window = fit_window(radii, values, low, high, positive=not increments)
    if len(window) < MIN_SAMPLES:
        return None
    if increments:
        return increment_exponent_fit(window)
    return growth_exponent_fit(window)
