"""Zero counting on circles and the integrated counting function.

``n(r)`` is the argument-principle integral ``(1/2 pi i) \\oint g'/g dz`` over
``|z| = r``, computed with adaptive Gauss-Legendre panels in the angle. The
integrated count is

    N(r) = sum_{0 < |z_i| < r} log(r / |z_i|) + n(0) log r

with the zero moduli located by bisection on count changes between samples.
"""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from functools import lru_cache

import numpy as np
from numpy.typing import NDArray
from pydantic import BaseModel, ConfigDict, Field
from scipy import special

from ldeconf.conformal.domains import UnitDisc
from ldeconf.lde.functions import Evaluator
from ldeconf.oscillation.exceptions import OscillationError, ZeroCountingError
from ldeconf.utils.config_loader import CountingConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

FArray = NDArray[np.float64]


@lru_cache(maxsize=8)
def _gauss_legendre(n: int) -> tuple[FArray, FArray]:
    nodes, weights = np.polynomial.legendre.leggauss(n)
    return nodes, weights


def _panel_integrals(
    g: Evaluator, r: float, a: FArray, b: FArray, nodes: FArray, weights: FArray
) -> NDArray[np.complex128]:
    half = (b - a) / 2
    theta = (a + b)[:, None] / 2 + half[:, None] * nodes[None, :]
    z = r * np.exp(1j * theta)
    with np.errstate(all="ignore"):
        integrand = g.log_derivative(z) * z
    return half * (integrand @ weights)


# Successive attempts shift the panel edges by multiples of the golden ratio.
PHASE_STEP = 0.6180339887498949


def panel_phase(attempt: int) -> float:
    """Offset of the initial panel edges, as a fraction of one panel."""
    return math.fmod(PHASE_STEP * (attempt + 1), 1.0)


def contour_argument(
    g: Evaluator, r: float, config: CountingConfig | None = None, phase: float | None = None
) -> complex:
    """``(1/2 pi i) \\oint_{|z|=r} g'/g dz``; NaN when the integrand is not finite.

    Panels are halved until the Gauss estimates of a panel and of its halves
    agree to ``panel_tol`` times the panel's share of the circle on two
    consecutive levels. The initial edges are shifted by ``phase`` panels
    (``panel_phase(0)`` by default), so features on the real axis do not sit
    on an edge.
    """
    cfg = config or CountingConfig()
    nodes, weights = _gauss_legendre(cfg.gauss_nodes)
    width = 2 * math.pi / cfg.initial_panels
    shift = width * (panel_phase(0) if phase is None else phase)
    edges = shift + np.linspace(0.0, 2 * math.pi, cfg.initial_panels + 1)
    a, b = edges[:-1], edges[1:]
    coarse = _panel_integrals(g, r, a, b, nodes, weights)
    confirmed = np.zeros(a.size, dtype=bool)
    total = 0j
    used = a.size
    while a.size:
        mid = (a + b) / 2
        left = _panel_integrals(g, r, a, mid, nodes, weights)
        right = _panel_integrals(g, r, mid, b, nodes, weights)
        fine = left + right
        if not (np.all(np.isfinite(fine)) and np.all(np.isfinite(coarse))):
            return complex(math.nan, math.nan)
        agree = np.abs(fine - coarse) < cfg.panel_tol * (b - a) / (2 * math.pi)
        accepted = agree & confirmed
        total += complex(np.sum(fine[accepted]))
        rest = ~accepted
        a = np.concatenate([a[rest], mid[rest]])
        b = np.concatenate([mid[rest], b[rest]])
        coarse = np.concatenate([left[rest], right[rest]])
        confirmed = np.concatenate([agree[rest], agree[rest]])
        used += a.size
        if used > cfg.max_panels:
            logger.debug("contour_panel_budget_exhausted", radius=r, panels=used)
            return complex(math.nan, math.nan)
    return total / (2 * math.pi)


def count_zeros(g: Evaluator, r: float, config: CountingConfig | None = None) -> int:
    """Number of zeros of g in ``|z| < r``.

    The contour value must lie within ``integer_tol`` of an integer; otherwise
    the radius is moved by multiples of ``perturbation * (1 - r)`` alternately
    outward and inward, and the panel edges are rotated on every attempt.

    Raises:
        ZeroCountingError: No perturbed radius gives an integer
        OscillationError: Radius outside the domain of g
    """
    cfg = config or CountingConfig()
    if r <= 0 or (isinstance(g.domain, UnitDisc) and r >= 1.0):
        raise OscillationError("Counting radius outside the domain", {"radius": r})
    delta = cfg.perturbation * ((1.0 - r) if r < 1.0 else r)
    candidates = [r]
    for m in range(1, cfg.retries + 1):
        step = delta * ((m + 1) // 2)
        candidates.append(r + step if m % 2 else r - step)
    last = complex(math.nan)
    for attempt, radius in enumerate(candidates):
        value = contour_argument(g, radius, cfg, phase=panel_phase(attempt))
        last = value
        if math.isfinite(value.real) and math.isfinite(value.imag):
            nearest = round(value.real)
            if abs(value - nearest) < cfg.integer_tol:
                if radius != r:
                    logger.debug("zero_count_perturbed", radius=r, used=radius, count=nearest)
                return int(nearest)
        logger.debug("zero_count_retry", radius=radius, value=str(value))
    raise ZeroCountingError(
        "Argument principle did not give an integer", radius=r, details={"value": last}
    )


class CountingFunction(BaseModel):
    """Zero counts and integrated counts of one function on a radial grid."""

    model_config = ConfigDict(frozen=True)

    radii: list[float] = Field(..., description="Increasing sample radii")
    counts: list[int] = Field(..., description="n(r) at the radii")
    integrated: list[float] = Field(..., description="N(r) at the radii")
    zero_radii: list[float] = Field(default_factory=list, description="Moduli of nonzero zeros")
    n0: int = Field(default=0, ge=0, description="Multiplicity of the zero at the origin")

    def counting(self, r: float) -> float:
        """N(r) from the located zero moduli."""
        return integrated_count(self.zero_radii, r, self.n0)

    def integral_over_one_minus_t(self, s: float) -> float:
        """``int_0^s N(t) / (1 - t) dt`` for the piecewise-linear interpolant of N.

        The interpolant is linear between grid values. Below the first radius
        the part ``n0 log t`` of a zero at the origin is integrated exactly and
        only the rest is interpolated from ``0`` at ``t = 0``.
        """
        if s > self.radii[-1] + 1e-15:
            raise OscillationError(
                "Integration limit beyond the counting grid", {"s": s, "max": self.radii[-1]}
            )
        first = self.radii[0]
        head = self.integrated[0]
        total = 0.0
        if self.n0 and first > 0:
            # int_0^x log t / (1 - t) dt = spence(x) - pi^2 / 6
            end = min(max(s, 0.0), first)
            total += self.n0 * (float(special.spence(end)) - math.pi**2 / 6)
            head -= self.n0 * math.log(first)
        total += _linear_segment_integral(0.0, first, 0.0, head, s)
        for t0, t1, n0, n1 in zip(
            self.radii[:-1], self.radii[1:], self.integrated[:-1], self.integrated[1:], strict=True
        ):
            total += _linear_segment_integral(t0, t1, n0, n1, s)
        return total


def _linear_segment_integral(t0: float, t1: float, n0: float, n1: float, s: float) -> float:
    """``int_t0^min(t1, s)`` of the line through ``(t0, n0), (t1, n1)`` over ``1 - t``."""
    if t0 >= s or t1 <= t0:
        return 0.0
    slope = (n1 - n0) / (t1 - t0)
    end = min(t1, s)
    offset = n0 + slope * (1 - t0)
    return offset * math.log((1 - t0) / (1 - end)) - slope * (end - t0)


def integrated_count(zero_radii: Sequence[float], r: float, n0: int = 0) -> float:
    radii = np.asarray(zero_radii, dtype=float)
    inside = radii[radii < r]
    total = float(np.sum(np.log(r / inside))) if inside.size else 0.0
    return total + (n0 * math.log(r) if n0 else 0.0)


def integrated_counting(
    samples: Sequence[tuple[float, int]],
    counter: Callable[[float], int] | None = None,
    n0: int = 0,
    config: CountingConfig | None = None,
) -> CountingFunction:
    """Integrated counting function from sampled zero counts.

    Zero moduli between neighbouring samples are located by bisection with
    ``counter`` to ``bisection_tol`` while the evaluation budget lasts, and
    spread evenly over the bracket otherwise.

    Args:
        samples: ``(r, n(r))`` pairs
        counter: Callable returning n at a radius, used for bisection
        n0: Multiplicity of a zero at the origin
        config: Counting settings
    """
    cfg = config or CountingConfig()
    ordered = sorted((float(r), int(n)) for r, n in samples)
    if not ordered:
        raise OscillationError("Integrated counting needs samples")
    radii = [r for r, _ in ordered]
    raw = np.array([n for _, n in ordered])
    counts = np.maximum.accumulate(np.maximum(raw, n0))
    if np.any(counts != raw):
        logger.warning("zero_counts_made_monotone", adjusted=int(np.sum(counts != raw)))
    budget = [cfg.max_bisections]

    def spread(lo: float, hi: float, d: int) -> list[float]:
        return [lo + (hi - lo) * (i + 0.5) / d for i in range(d)]

    def locate(lo: float, hi: float, n_lo: int, n_hi: int) -> list[float]:
        d = n_hi - n_lo
        if d <= 0:
            return []
        if counter is None or budget[0] <= 0 or hi - lo <= cfg.bisection_tol:
            return spread(lo, hi, d)
        mid = (lo + hi) / 2
        budget[0] -= 1
        try:
            n_mid = min(max(counter(mid), n_lo), n_hi)
        except ZeroCountingError:
            return spread(lo, hi, d)
        return locate(lo, mid, n_lo, n_mid) + locate(mid, hi, n_mid, n_hi)

    zero_radii: list[float] = []
    lo, n_lo = 0.0, n0
    for r, n in zip(radii, counts.tolist(), strict=True):
        zero_radii.extend(locate(lo, r, n_lo, n))
        lo, n_lo = r, n
    integrated = [integrated_count(zero_radii, r, n0) for r in radii]
    return CountingFunction(
        radii=radii,
        counts=[int(n) for n in counts],
        integrated=integrated,
        zero_radii=zero_radii,
        n0=n0,
    )


def counting_grid(radii: Sequence[float], shrink_b: float, extra_points: int) -> list[float]:
    """Radii where zeros are counted: the grid, its ``s(r)`` and geometric fill-in."""
    grid = [float(r) for r in radii]
    shrunk = [1 - shrink_b * (1 - r) for r in grid]
    top = max(shrunk)
    fill = 1 - np.geomspace(1 - min(grid) / 2, 1 - top, extra_points)
    points = sorted({round(p, 15) for p in [*grid, *shrunk, *fill.tolist()] if 0 < p < 1})
    return points


def count_on_grid(
    g: Evaluator, radii: Sequence[float], config: CountingConfig | None = None, n0: int = 0
) -> CountingFunction:
    """Count zeros of g at every radius and integrate."""
    cfg = config or CountingConfig()
    samples = [(r, count_zeros(g, r, cfg)) for r in radii]
    return integrated_counting(samples, lambda r: count_zeros(g, r, cfg), n0, cfg)
