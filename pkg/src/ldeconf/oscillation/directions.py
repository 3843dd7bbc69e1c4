"""Directions along which zeros of exponential sums accumulate.

The zeros of ``sum C_j exp(r_j w)`` lie asymptotically along rays whose
directions are the outer normals of the convex hull of the conjugated
exponents.
"""

from __future__ import annotations

import math
from collections.abc import Sequence

import numpy as np
from scipy.spatial import ConvexHull

from ldeconf.oscillation.exceptions import OscillationError

COLLINEAR_TOL = 1e-12


def _normalize(angle: float) -> float:
    """Angle in ``(-pi, pi]``."""
    wrapped = math.remainder(angle, 2 * math.pi)
    return math.pi if wrapped <= -math.pi else wrapped


def _unique_sorted(angles: Sequence[float]) -> list[float]:
    out: list[float] = []
    for angle in sorted(_normalize(a) for a in angles):
        if not out or abs(angle - out[-1]) > 1e-12:
            out.append(angle)
    if len(out) > 1 and abs(out[0] + math.pi) < 1e-12 and abs(out[-1] - math.pi) < 1e-12:
        out.pop(0)
    return out


def exp_sum_directions(roots: Sequence[complex]) -> list[float]:
    """Outer-normal angles of the hull of the conjugated roots, sorted in ``(-pi, pi]``.

    A segment hull yields its two perpendicular directions.

    Raises:
        OscillationError: Fewer than two roots, or all roots equal
    """
    points = np.array([[z.real, -z.imag] for z in map(complex, roots)], dtype=float)
    if points.shape[0] < 2:
        raise OscillationError("Direction set needs at least two roots")
    centered = points - points.mean(axis=0)
    scale = float(np.max(np.abs(centered)))
    if scale == 0.0:
        raise OscillationError("All roots coincide", {"roots": [complex(z) for z in roots]})
    singular = np.linalg.svd(centered / scale, compute_uv=False)
    if singular.size < 2 or singular[1] <= COLLINEAR_TOL * singular[0]:
        _, _, vt = np.linalg.svd(centered)
        dx, dy = vt[0]
        base = math.atan2(dy, dx)
        return _unique_sorted([base + math.pi / 2, base - math.pi / 2])
    hull = ConvexHull(points)
    vertices = points[hull.vertices]  # counter-clockwise in 2-D
    angles = []
    for start, end in zip(vertices, np.roll(vertices, -1, axis=0), strict=True):
        dx, dy = end - start
        angles.append(math.atan2(-dx, dy))
    return _unique_sorted(angles)
