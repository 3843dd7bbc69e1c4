"""Wronskians, coefficient recovery from a solution base, and power bases.

Recovery from a base ``g_1, ..., g_k``: with ``y_i = g_i / g_k`` and ``W_j``
the determinant of the derivatives of ``y_1, ..., y_{k-1}`` of orders
``{1, ..., k} \\ {j}``,

    b_j = sum_{i=0}^{k-j} (-1)^i delta_{ki} C(k-i, k-i-j)
          (W_{k-i} / W_k) (W_k^(1/k))^(k-i-j) / W_k^(1/k)

where ``delta_{kk} = 0`` and ``delta_{ki} = 1`` otherwise.

Power bases: if ``f_1, f_2`` solve ``f'' + a f = 0`` then the k products
``f_1^(k-1-m) f_2^m`` solve an order-k equation whose coefficients follow
pointwise from the linear system "every product is a solution".
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike

from ldeconf.jetcalc.exceptions import JetError
from ldeconf.jetcalc.jet import ComplexJet, jet_derivative, jet_pow
from ldeconf.jetcalc.linalg import jet_det, jet_solve
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.exceptions import ConsistencyError, DegenerateBasisError, LDEError
from ldeconf.lde.functions import AnalyticFunction, Evaluator, PowerProduct
from ldeconf.lde.solver import taylor_solve_basis
from ldeconf.utils.config_loader import SolverConfig
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

# Relative residual allowed in the unused product equation.
CONSISTENCY_TOLERANCE = 1e-7
POWER_CACHE_SIZE = 4096


def wronskian(evaluators: Sequence[Evaluator], z: complex) -> complex:
    """``det [g_i^(j)(z)]`` for ``j = 0..n-1``."""
    n = len(evaluators)
    if n == 0:
        raise LDEError("Wronskian of an empty family")
    matrix = np.array(
        [g.jet_at(complex(z), n - 1).derivative_values() for g in evaluators],
        dtype=np.complex128,
    )
    return complex(np.linalg.det(matrix.T))


def wronskian_constant(k: int) -> int:
    """``c_k = prod_{j=2}^{k-1} j^(k-j)``, exact."""
    return math.prod(j ** (k - j) for j in range(2, k))


def wronskian_exponent(k: int) -> int:
    return k * (k - 1) // 2


def wronskian_constancy(evaluators: Sequence[Evaluator], points: Sequence[complex]) -> float:
    """Largest relative deviation of the Wronskian from its mean over the points."""
    values = np.array([wronskian(evaluators, z) for z in points], dtype=np.complex128)
    mean = values.mean()
    if mean == 0:
        return float(np.max(np.abs(values)))
    return float(np.max(np.abs(values - mean)) / abs(mean))


def kim_recover(solutions: Sequence[Evaluator], z: complex) -> list[complex]:
    """Coefficients ``b_0(z), ..., b_{k-2}(z)`` of the equation solved by a base.

    Args:
        solutions: k linearly independent solutions
        z: Point where ``g_k(z) != 0``

    Raises:
        DegenerateBasisError: ``g_k(z) = 0`` or ``W_k(z) = 0``
    """
    k = len(solutions)
    if k < 2:
        raise LDEError("Recovery needs at least two solutions", {"given": k})
    z = complex(z)
    order = 2 * k + 2
    last = solutions[-1].jet_at(z, order)
    if last.value == 0:
        raise DegenerateBasisError("Last solution vanishes at the point", {"z": z})
    ratios = [g.jet_at(z, order) / last for g in solutions[:-1]]
    width = order - k
    derivs = {
        m: [jet_derivative(y, m).truncate(width) for y in ratios] for m in range(1, k + 1)
    }

    def omitted(j: int) -> ComplexJet:
        rows = [derivs[m] for m in range(1, k + 1) if m != j]
        return jet_det(rows)

    w = {j: omitted(j) for j in range(1, k + 1)}
    w_k = w[k]
    if abs(w_k.value) == 0:
        raise DegenerateBasisError("Wronskian of the ratios vanishes", {"z": z})
    root = jet_pow(w_k, 1.0 / k)
    root_derivs = root.derivative_values()
    result: list[complex] = []
    for j in range(k - 1):
        total = 0j
        for i in range(0, min(k - j, k - 1) + 1):
            weight = (-1) ** (2 * k - i) * math.comb(k - i, k - i - j)
            total += (
                weight
                * (w[k - i].value / w_k.value)
                * (root_derivs[k - i - j] / root_derivs[0])
            )
        result.append(complex(total))
    return result


def _default_start(a: AnalyticFunction) -> complex:
    for candidate in (0.0, 1.0, 1j, -1.0, -1j):
        if a.domain.contains(candidate):
            return complex(candidate)
    raise LDEError("No default initial point inside the coefficient domain")


def solve_pair(
    a: AnalyticFunction,
    ics: ArrayLike | None = None,
    z0: complex | None = None,
    config: SolverConfig | None = None,
) -> tuple[Evaluator, Evaluator]:
    """Two solutions of ``f'' + a f = 0``.

    Args:
        ics: ``[[f1(z0), f1'(z0)], [f2(z0), f2'(z0)]]``; the identity by default

    Raises:
        DegenerateBasisError: The initial data are dependent
    """
    z0 = _default_start(a) if z0 is None else complex(z0)
    pairs = np.eye(2, dtype=np.complex128) if ics is None else np.asarray(ics, np.complex128)
    if pairs.shape != (2, 2):
        raise LDEError("Initial conditions must be two (value, derivative) pairs")
    if abs(np.linalg.det(pairs)) == 0:
        raise DegenerateBasisError("Initial condition pairs are dependent", {"z0": z0})
    ode = LinearODE(2, (a,), a.domain)
    f1, f2 = taylor_solve_basis(ode, z0, pairs.T, config=config)
    return f1, f2


def power_products(f1: Evaluator, f2: Evaluator, k: int) -> list[PowerProduct]:
    return [PowerProduct([f1, f2], [k - 1 - m, m]) for m in range(k)]


def _relative_check(coeffs: Sequence[complex], derivs: Sequence[complex], k: int) -> float:
    terms = [c * d for c, d in zip(coeffs, derivs[: k - 1], strict=True)]
    total = derivs[k] + sum(terms)
    scale = max([abs(t) for t in terms] + [0.0]) + abs(derivs[k])
    return abs(total) / scale if scale > 0 else abs(total)


def power_basis_from_pair(
    f1: Evaluator, f2: Evaluator, k: int
) -> tuple[LinearODE, list[PowerProduct]]:
    """Order-k equation solved by the power products of two independent solutions.

    Coefficients at a point solve the first k - 1 product equations (the last
    k - 1 if that system is singular); the remaining one is checked.

    Raises:
        ConsistencyError: The unused equation fails by more than 1e-7 relative
        DegenerateBasisError: Both square systems are singular at the point
    """
    if k < 2:
        raise LDEError("Power basis needs k >= 2", {"k": k})
    products = power_products(f1, f2, k)

    @lru_cache(maxsize=POWER_CACHE_SIZE)
    def jets_at(z: complex, order: int) -> tuple[ComplexJet, ...]:
        derivs = []
        for product in products:
            jet = product.jet_at(z, order + k)
            derivs.append([jet_derivative(jet, j).truncate(order) for j in range(k + 1)])
        for rows, spare in ((range(k - 1), k - 1), (range(1, k), 0)):
            matrix = [[derivs[m][j] for j in range(k - 1)] for m in rows]
            rhs = [-derivs[m][k] for m in rows]
            try:
                coeffs = jet_solve(matrix, rhs)
            except JetError:
                continue
            values = [c.value for c in coeffs]
            check = _relative_check(values, [d.value for d in derivs[spare]], k)
            if check > CONSISTENCY_TOLERANCE:
                raise ConsistencyError(
                    "Unused product equation does not hold",
                    residual=check,
                    tolerance=CONSISTENCY_TOLERANCE,
                )
            return tuple(coeffs)
        raise DegenerateBasisError("Product derivative systems are singular", {"z": z})

    def coefficient(index: int) -> AnalyticFunction:
        return AnalyticFunction(
            lambda z, order: jets_at(complex(z), order)[index],
            f1.domain,
            name=f"power_basis_a{index}(k={k})",
        )

    ode = LinearODE(k, tuple(coefficient(j) for j in range(k - 1)), f1.domain)
    return ode, products


def power_basis(
    a: AnalyticFunction,
    k: int,
    ics: ArrayLike | None = None,
    z0: complex | None = None,
    config: SolverConfig | None = None,
) -> tuple[LinearODE, list[PowerProduct]]:
    """Solve ``f'' + a f = 0`` and build the order-k equation of the power products.

    Returns:
        The order-k equation and its k product solutions ``f_1^(k-1-m) f_2^m``
    """
    f1, f2 = solve_pair(a, ics, z0, config)
    ode, products = power_basis_from_pair(f1, f2, k)
    logger.info("power_basis_built", k=k, domain=a.domain.kind)
    return ode, products


def wronskian_identity_check(
    a: AnalyticFunction,
    k: int,
    z: complex,
    ics: ArrayLike | None = None,
    z0: complex | None = None,
    config: SolverConfig | None = None,
) -> tuple[complex, complex]:
    """Wronskian of the k power products and ``c_k W(f_1, f_2)^(k(k-1)/2)`` at z."""
    f1, f2 = solve_pair(a, ics, z0, config)
    lhs = wronskian(power_products(f1, f2, k), z)
    rhs = wronskian_constant(k) * wronskian([f1, f2], z) ** wronskian_exponent(k)
    return lhs, complex(rhs)
