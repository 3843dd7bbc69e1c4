"""Taylor-series continuation for normalized linear ODEs.

At a center ``z_c`` with coefficient jets ``b_j(z) = sum_p beta_{j,p} (z - z_c)^p``
the Taylor coefficients of a solution satisfy

    c_{m+k} (m+k)!/m! = - sum_j sum_{p<=m} beta_{j,p} c_{m-p+j} (m-p+j)!/(m-p)!

so the series is fixed by the k initial values. The continuation steps from
disc to disc along a polyline; a step never exceeds ``safety`` times the
distance of the center to the domain boundary, and is further limited so that
the last kept terms stay below ``tolerance`` relative to the series size.
"""

from __future__ import annotations

import math
import threading
from collections.abc import Sequence
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ldeconf.jetcalc.jet import ComplexJet
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.exceptions import LDEError, StepUnderflowError
from ldeconf.lde.functions import Evaluator
from ldeconf.utils.config_loader import SolverConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

CArray = NDArray[np.complex128]


@lru_cache(maxsize=64)
def _falling(j: int, size: int) -> NDArray[np.float64]:
    """``(q + j)! / q!`` for ``q = 0..size-1``."""
    return np.array([math.perm(q + j, j) for q in range(size)], dtype=float)


@lru_cache(maxsize=64)
def _inverse_factorials(size: int) -> NDArray[np.float64]:
    return np.array([1.0 / math.factorial(n) for n in range(size)], dtype=float)


def taylor_series(
    ode: LinearODE, center: complex, initial: ArrayLike, order: int
) -> CArray:
    """Taylor coefficients ``c_0..c_order`` of solutions at ``center``.

    Args:
        ode: Equation of order k
        center: Expansion point inside the ODE domain
        initial: ``(k,)`` or ``(k, n)`` derivative values ``g^(i)(center)``
        order: Highest coefficient to compute

    Returns:
        Array of shape ``(order + 1,)`` or ``(order + 1, n)``
    """
    k = ode.order
    data = np.asarray(initial, dtype=np.complex128)
    single = data.ndim == 1
    data = data.reshape(k, -1)
    size = max(order, k - 1) + 1
    c = np.zeros((size, data.shape[1]), dtype=np.complex128)
    c[:k] = data * _inverse_factorials(k)[:, None]
    if order >= k:
        jets = ode.coefficient_jets(complex(center), order - k)
        for m in range(order - k + 1):
            q = np.arange(m, -1, -1)
            acc = np.zeros(data.shape[1], dtype=np.complex128)
            for j, jet in enumerate(jets):
                beta = jet.coeffs[: m + 1]
                weights = beta * _falling(j, order + 1)[q]
                acc += weights @ c[q + j]
            c[m + k] = -acc / math.perm(m + k, k)
    c = c[: order + 1]
    return c[:, 0] if single else c


def _derivatives_at(series: CArray, delta: complex, count: int) -> CArray:
    """Values of the first ``count`` derivatives at ``center + delta``."""
    n_terms = series.shape[0]
    powers = delta ** np.arange(n_terms)
    out = np.zeros((count, series.shape[1]), dtype=np.complex128)
    for d in range(count):
        weights = _falling(d, n_terms)[: n_terms - d] * powers[: n_terms - d]
        out[d] = weights @ series[d:]
    return out


@dataclass(frozen=True)
class _Disc:
    center: complex
    radius: float
    series: CArray


class TaylorContinuation:
    """Shared continuation of one or more solutions of an ODE.

    Discs are appended lazily behind a lock; each stored disc is immutable.
    """

    def __init__(
        self,
        ode: LinearODE,
        z0: complex,
        initial: ArrayLike,
        config: SolverConfig | None = None,
    ) -> None:
        self.ode = ode
        self.config = config or SolverConfig()
        self.z0 = complex(z0)
        data = np.asarray(initial, dtype=np.complex128).reshape(ode.order, -1)
        if not ode.domain.contains(self.z0):
            raise LDEError("Initial point is outside the ODE domain", {"z0": self.z0})
        self.initial = data
        self._lock = threading.Lock()
        self._discs: list[_Disc] = [self._make_disc(self.z0, data)]

    @property
    def columns(self) -> int:
        return int(self.initial.shape[1])

    @property
    def discs(self) -> list[_Disc]:
        return list(self._discs)

    def _step_radius(self, center: complex, series: CArray) -> float:
        cfg = self.config
        distance = self.ode.domain.boundary_distance(center)
        boundary_step = cfg.safety * distance
        reference = boundary_step if math.isfinite(boundary_step) and boundary_step > 0 else 1.0
        magnitudes = np.max(np.abs(series), axis=1)
        nonzero = magnitudes > 0
        if not np.any(nonzero):
            return boundary_step
        n = magnitudes.size - 1
        # sizes of the series terms at the reference radius, in logs
        orders = np.arange(n + 1)
        log_terms = np.log(magnitudes[nonzero]) + orders[nonzero] * math.log(reference)
        log_scale = float(np.max(log_terms))
        tail_step = math.inf
        for j in (n - 1, n):
            if magnitudes[j] > 0:
                exponent = (math.log(cfg.tolerance) + log_scale - math.log(magnitudes[j])) / j
                tail_step = min(tail_step, math.exp(min(exponent, 700.0)))
        return min(boundary_step, tail_step)

    def _make_disc(self, center: complex, values: CArray) -> _Disc:
        series = taylor_series(self.ode, center, values, self.config.order)
        series = series.reshape(self.config.order + 1, -1)
        return _Disc(center, self._step_radius(center, series), series)

    def _walk(self, disc: _Disc, target: complex, budget: list[int]) -> _Disc:
        """Step toward target, spending from the request's remaining step budget."""
        k = self.ode.order
        while True:
            remaining = abs(target - disc.center)
            if remaining == 0:
                return disc
            if disc.radius < self.config.min_step or budget[0] <= 0:
                logger.debug(
                    "taylor_step_underflow",
                    center=str(disc.center),
                    radius=disc.radius,
                    discs=len(self._discs),
                )
                raise StepUnderflowError(
                    "Taylor continuation cannot advance toward the target",
                    last_point=disc.center,
                    step=disc.radius,
                    details={"target": target},
                )
            if remaining <= disc.radius:
                new_center = target
            else:
                new_center = disc.center + disc.radius * (target - disc.center) / remaining
            values = _derivatives_at(disc.series, new_center - disc.center, k)
            disc = self._make_disc(new_center, values)
            self._discs.append(disc)
            budget[0] -= 1

    def follow(self, path: Sequence[complex]) -> None:
        """Continue from z0 through the polyline vertices in order."""
        with self._lock:
            disc = self._discs[0]
            budget = [self.config.max_steps]
            for vertex in path:
                disc = self._walk(disc, complex(vertex), budget)
        logger.debug("taylor_path_followed", discs=len(self._discs))

    def _covering(self, z: complex) -> _Disc | None:
        best: _Disc | None = None
        best_ratio = math.inf
        for disc in self._discs:
            if disc.radius <= 0:
                continue
            ratio = abs(z - disc.center) / disc.radius
            if ratio <= 1.0 and ratio < best_ratio:
                best, best_ratio = disc, ratio
        return best

    def _ensure_covered(self, z: complex) -> _Disc:
        disc = self._covering(z)
        if disc is not None:
            return disc
        with self._lock:
            disc = self._covering(z)
            if disc is not None:
                return disc
            if not self.ode.domain.contains(z):
                raise LDEError("Query point is outside the ODE domain", {"z": z})
            start = min(self._discs, key=lambda d: abs(z - d.center) - d.radius)
            path = self.ode.domain.path(start.center, z)
            disc = start
            budget = [self.config.max_steps]
            for vertex in path[1:]:
                disc = self._walk(disc, complex(vertex), budget)
            logger.debug("taylor_continuation_extended", target=str(z), discs=len(self._discs))
        return self._covering(z) or disc

    def series_at(self, z: complex, order: int) -> CArray:
        """Taylor coefficients at z for every column, shape ``(order + 1, columns)``."""
        z = complex(z)
        disc = self._ensure_covered(z)
        values = _derivatives_at(disc.series, z - disc.center, self.ode.order)
        series = taylor_series(self.ode, z, values, order)
        return series.reshape(order + 1, -1) if series.ndim == 1 else series[: order + 1]


class SolutionEvaluator(Evaluator):
    """One column of a Taylor continuation.

    Attributes:
        ode: Underlying equation
        z0: Initial point
        initial: ``g(z0), ..., g^(k-1)(z0)``
    """

    def __init__(self, continuation: TaylorContinuation, column: int = 0) -> None:
        super().__init__(continuation.ode.domain)
        self.continuation = continuation
        self.column = column

    @property
    def ode(self) -> LinearODE:
        return self.continuation.ode

    @property
    def z0(self) -> complex:
        return self.continuation.z0

    @property
    def initial(self) -> CArray:
        return self.continuation.initial[:, self.column]

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        series = self.continuation.series_at(z, order)
        return ComplexJet(complex(z), series[:, self.column])


def taylor_solve(
    ode: LinearODE,
    z0: complex,
    initial: ArrayLike,
    path: Sequence[complex] | None = None,
    config: SolverConfig | None = None,
) -> SolutionEvaluator:
    """Solve the ODE from k initial values by Taylor continuation.

    Args:
        ode: Equation of order k
        z0: Initial point
        initial: ``g(z0), ..., g^(k-1)(z0)``
        path: Polyline continued eagerly; further points are reached lazily
        config: Solver settings

    Returns:
        Evaluator answering jet queries anywhere the continuation reaches

    Raises:
        StepUnderflowError: Continuation stalled before the end of the path
    """
    values = np.asarray(initial, dtype=np.complex128)
    if values.shape != (ode.order,):
        raise LDEError(
            "Initial data must hold k values", {"order": ode.order, "shape": values.shape}
        )
    continuation = TaylorContinuation(ode, z0, values, config)
    if path is not None:
        continuation.follow(path)
    return SolutionEvaluator(continuation, 0)


def taylor_solve_basis(
    ode: LinearODE,
    z0: complex,
    initial_matrix: ArrayLike,
    path: Sequence[complex] | None = None,
    config: SolverConfig | None = None,
) -> list[SolutionEvaluator]:
    """Solve several initial-value problems sharing one continuation.

    Args:
        initial_matrix: ``(k, n)`` array; column i holds the initial values of solution i
    """
    matrix = np.asarray(initial_matrix, dtype=np.complex128)
    if matrix.ndim != 2 or matrix.shape[0] != ode.order:
        raise LDEError(
            "Initial matrix must have k rows", {"order": ode.order, "shape": matrix.shape}
        )
    continuation = TaylorContinuation(ode, z0, matrix, config)
    if path is not None:
        continuation.follow(path)
    logger.info("taylor_basis_solved", order=ode.order, columns=matrix.shape[1])
    return [SolutionEvaluator(continuation, i) for i in range(matrix.shape[1])]
