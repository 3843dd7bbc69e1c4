"""Transformation of a linear ODE under a conformal map of the disc.

If ``f`` solves ``f^(k) + sum a_n f^(n) = 0`` on ``T(D)``, then
``g = (f o T) h`` with ``h = (T')^((1-k)/2)`` solves an equation of the same
normalized form on the disc. Expanding ``g^(j)`` with Leibniz and Faa di Bruno
gives, for every ``n``,

    (a_n o T) (T')^(k-n) = sum_{j=n}^{k} b_j M_{n,j}

    M_{n,j} = sum_{i=n}^{j} C(j, i) B_{i,n}(T', T'', ...) / (T')^n * h^(j-i) / h

with ``b_k = a_k = 1`` and ``a_{k-1} = 0``. ``M_{n,n} = 1``, so the system is
triangular and is solved from ``n = k - 1`` downward. ``b_{k-1}`` vanishes for
this choice of ``h``; it is computed anyway and logged.
"""

from __future__ import annotations

import cmath
import math
from functools import lru_cache

import numpy as np
from numpy.typing import ArrayLike, NDArray

from ldeconf.conformal.domains import UnitDisc
from ldeconf.conformal.exceptions import OutsideDiscError
from ldeconf.conformal.maps import ConformalMapBase, log_derivative_branch
from ldeconf.jetcalc.bell import bell_polynomial_table
from ldeconf.jetcalc.jet import ComplexJet, jet_compose, jet_derivative, jet_pow
from ldeconf.lde.equation import LinearODE
from ldeconf.lde.exceptions import BranchInconsistencyError, DomainMismatchError
from ldeconf.lde.functions import AnalyticFunction, Evaluator
from ldeconf.utils.logger import get_logger

logger = get_logger(__name__)

CArray = NDArray[np.complex128]
FArray = NDArray[np.float64]

# Relative mismatch between the closed-form and the path-continued branch of h.
BRANCH_JUMP_LIMIT = 0.1
BRANCH_SAMPLES = 64
BRANCH_PROBE_RADIUS = 0.95
BRANCH_PROBES = 16

# Cached transformed-coefficient jets per ODE.
TRANSFORM_CACHE_SIZE = 4096


def h_exponent(k: int) -> float:
    return (1 - k) / 2


def _log_derivative_offset(T: ConformalMapBase) -> complex:
    """Shift taking the closed-form log T' onto the branch anchored at 0."""
    return log_derivative_branch(T, 0.0) - complex(T.log_derivative_array(0.0))


def log_derivative_values(T: ConformalMapBase, z: ArrayLike) -> CArray:
    """log T'(z) on the branch continued from the principal value at 0, vectorised."""
    return T.log_derivative_array(z) + _log_derivative_offset(T)


def h_values(T: ConformalMapBase, k: int, z: ArrayLike) -> CArray:
    """``(T')^((1-k)/2)`` on the anchored branch, vectorised."""
    return np.exp(h_exponent(k) * log_derivative_values(T, z))


def h_branch_value(T: ConformalMapBase, k: int, z: complex) -> complex:
    return cmath.exp(h_exponent(k) * log_derivative_branch(T, z))


def h_jet(T: ConformalMapBase, k: int, z: complex, order: int) -> ComplexJet:
    """Jet of ``h = (T')^((1-k)/2)`` at z on the anchored branch."""
    derivative = jet_derivative(T.jet(complex(z), order + 1), 1)
    return jet_pow(derivative, h_exponent(k), branch_ref=h_branch_value(T, k, z))


def check_h_branch(
    T: ConformalMapBase, k: int, z: complex, samples: int = BRANCH_SAMPLES
) -> None:
    """Compare the closed-form branch of h with its continuation along [0, z].

    Raises:
        BranchInconsistencyError: The two differ by more than 10% somewhere on the segment
    """
    points = np.linspace(0.0, 1.0, samples) * complex(z)
    derivative = T.derivative_array(points)
    phase = np.unwrap(np.angle(derivative))
    walked = np.exp(h_exponent(k) * (np.log(np.abs(derivative)) + 1j * phase))
    closed = h_values(T, k, points)
    jumps = np.abs(closed - walked) / np.abs(walked)
    worst = int(np.argmax(jumps))
    if jumps[worst] > BRANCH_JUMP_LIMIT:
        raise BranchInconsistencyError(
            "Branch of (T')^beta is not continuous along the path",
            point=complex(points[worst]),
            jump=float(jumps[worst]),
        )


def _bracket_matrix(T: ConformalMapBase, k: int, z: complex, order: int) -> list[list[object]]:
    """``M[n][j]`` jets of the given order for ``0 <= n <= j <= k``."""
    t_jet = T.jet(z, order + k + 1)
    first = jet_derivative(t_jet, 1)
    args = [jet_derivative(t_jet, m).truncate(order) for m in range(1, k + 1)]
    bell = bell_polynomial_table(k, args)
    h = jet_pow(first.truncate(order + k), h_exponent(k), branch_ref=h_branch_value(T, k, z))
    h_base = h.truncate(order)
    h_ratio = [jet_derivative(h, m).truncate(order) / h_base for m in range(k + 1)]
    t1 = args[0]
    t1_powers = [ComplexJet.constant(1.0, z, order)]
    for _ in range(k):
        t1_powers.append(t1_powers[-1] * t1)
    matrix: list[list[object]] = [[None] * (k + 1) for _ in range(k + 1)]
    for n in range(k + 1):
        for j in range(n, k + 1):
            total = ComplexJet.constant(0.0, z, order)
            for i in range(n, j + 1):
                entry = bell[i][n]
                if isinstance(entry, int):
                    if entry == 0:
                        continue
                    entry = ComplexJet.constant(entry, z, order)
                total = total + math.comb(j, i) * (entry / t1_powers[n]) * h_ratio[j - i]
            matrix[n][j] = total
    return matrix


def transformed_coefficient_jets(
    ode: LinearODE, T: ConformalMapBase, z: complex, order: int
) -> list[ComplexJet]:
    """Jets of ``b_0, ..., b_{k-1}`` at z; the last entry is the vanishing diagnostic.

    Raises:
        OutsideDiscError: |z| >= 1
    """
    k = ode.order
    z = complex(z)
    if not abs(z) < 1.0:
        raise OutsideDiscError(z, T.kind)
    t_jet = T.jet(z, order)
    w = complex(t_jet.coeffs[0])
    t1 = jet_derivative(T.jet(z, order + 1), 1)
    matrix = _bracket_matrix(T, k, z, order)
    b: list[ComplexJet | None] = [None] * (k + 1)
    b[k] = ComplexJet.constant(1.0, z, order)
    for n in range(k - 1, -1, -1):
        if n == k - 1:
            lhs = ComplexJet.constant(0.0, z, order)
        else:
            a_jet = jet_compose(ode.coeffs[n].jet_at(w, order), t_jet)
            lhs = a_jet * t1 ** (k - n)
        for j in range(n + 1, k + 1):
            entry = matrix[n][j]
            coefficient = b[j]
            assert isinstance(entry, ComplexJet) and coefficient is not None
            lhs = lhs - coefficient * entry
        b[n] = lhs
    result = [jet for jet in b[:k] if jet is not None]
    logger.debug("transform_top_coefficient", z=str(z), magnitude=abs(result[k - 1].value))
    return result


def transform_ode(ode: LinearODE, T: ConformalMapBase) -> LinearODE:
    """The equation on the disc solved by the pushforwards ``(f o T) h``.

    Args:
        ode: Equation on a domain containing T(D)
        T: Catalog map

    Returns:
        Order-k equation on the unit disc whose coefficients are evaluated
        pointwise from jets of T, h and the original coefficients

    Raises:
        DomainMismatchError: T(0) is outside the ODE domain
    """
    k = ode.order
    center = complex(T.eval_array(0.0))
    if not ode.domain.contains(center):
        raise DomainMismatchError(
            "Map image is not inside the ODE domain", {"kind": T.kind, "T(0)": center}
        )

    @lru_cache(maxsize=TRANSFORM_CACHE_SIZE)
    def jets_at(z: complex, order: int) -> tuple[ComplexJet, ...]:
        return tuple(transformed_coefficient_jets(ode, T, z, order))

    def coefficient(index: int) -> AnalyticFunction:
        return AnalyticFunction(
            lambda z, order: jets_at(complex(z), order)[index],
            UnitDisc(),
            name=f"transformed_b{index}[{T.describe()}]",
        )

    coeffs = tuple(coefficient(n) for n in range(k - 1))
    logger.info("ode_transformed", order=k, map=T.describe())
    return LinearODE(k, coeffs, UnitDisc())


def schwarzian_reduction(a: AnalyticFunction, T: ConformalMapBase) -> AnalyticFunction:
    """``(a o T)(T')^2 + S_T / 2``, the disc coefficient for second order equations."""

    def jet_fn(z: complex, order: int) -> ComplexJet:
        t_jet = T.jet(z, order + 3)
        t1 = jet_derivative(t_jet, 1).truncate(order)
        t2 = jet_derivative(t_jet, 2).truncate(order)
        t3 = jet_derivative(t_jet, 3).truncate(order)
        schwarz = t3 / t1 - 1.5 * (t2 / t1) ** 2
        inner = t_jet.truncate(order)
        a_jet = jet_compose(a.jet_at(complex(inner.coeffs[0]), order), inner)
        return a_jet * t1 * t1 + 0.5 * schwarz

    return AnalyticFunction(jet_fn, UnitDisc(), name=f"schwarzian_reduction[{T.describe()}]")


class PushforwardEvaluator(Evaluator):
    """``g = (f o T) (T')^((1-k)/2)`` on the unit disc.

    Attributes:
        base: Evaluator f on a domain containing T(D)
        T: Catalog map
        k: ODE order fixing the exponent of h
    """

    def __init__(self, base: Evaluator, T: ConformalMapBase, k: int) -> None:
        super().__init__(UnitDisc())
        self.base = base
        self.T = T
        self.k = k
        self.beta = h_exponent(k)
        self._offset = _log_derivative_offset(T)

    def jet_at(self, z: complex, order: int) -> ComplexJet:
        z = complex(z)
        t_jet = self.T.jet(z, order + 1)
        inner = t_jet.truncate(order)
        f_jet = self.base.jet_at(complex(inner.coeffs[0]), order)
        h = jet_pow(
            jet_derivative(t_jet, 1),
            self.beta,
            branch_ref=h_branch_value(self.T, self.k, z),
        )
        return jet_compose(f_jet, inner) * h

    def _log_derivative(self, z: CArray) -> CArray:
        return self.T.log_derivative_array(z) + self._offset

    def values(self, z: ArrayLike) -> CArray:
        z = np.asarray(z, dtype=np.complex128)
        return self.base.values(self.T.eval_array(z)) * np.exp(self.beta * self._log_derivative(z))

    def log_derivative(self, z: ArrayLike) -> CArray:
        z = np.asarray(z, dtype=np.complex128)
        outer = self.base.log_derivative(self.T.eval_array(z)) * self.T.derivative_array(z)
        return outer + self.beta * self.T.pre_schwarzian_array(z)

    def log_abs(self, z: ArrayLike) -> FArray:
        z = np.asarray(z, dtype=np.complex128)
        return self.base.log_abs(self.T.eval_array(z)) + self.beta * self._log_derivative(z).real

    def __add__(self, other: Evaluator) -> Evaluator:
        if isinstance(other, PushforwardEvaluator) and (other.T, other.k) == (self.T, self.k):
            return PushforwardEvaluator(self.base + other.base, self.T, self.k)
        return super().__add__(other)


def pushforward_solution(f: Evaluator, T: ConformalMapBase, k: int) -> PushforwardEvaluator:
    """Pushforward of a solution on T(D) to the disc.

    The branch of h is principal at 0; it is checked against its continuation
    along rays to a ring of probe points.

    Raises:
        DomainMismatchError: T(0) is outside the domain of f
        BranchInconsistencyError: The branch of h is not continuous
    """
    center = complex(T.eval_array(0.0))
    if not f.domain.contains(center):
        raise DomainMismatchError(
            "Map image is not inside the solution domain", {"kind": T.kind, "T(0)": center}
        )
    for theta in np.linspace(0.0, 2 * math.pi, BRANCH_PROBES, endpoint=False):
        check_h_branch(T, k, BRANCH_PROBE_RADIUS * cmath.exp(1j * theta))
    return PushforwardEvaluator(f, T, k)
