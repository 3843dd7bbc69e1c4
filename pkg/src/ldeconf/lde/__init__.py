"""Normalized linear ODEs, their conformal transformation and solution bases."""

from ldeconf.lde.equation import LinearODE, max_residual, residual
from ldeconf.lde.examples import (
    Example51DiscSolution,
    Example51Solution,
    ExponentialSum,
    InnerFunctionProbe,
    characteristic_roots,
    constant_ode,
    example51_coefficient,
    example51_disc_coefficient,
    exponential_basis,
    lattice_zeros_example51,
    ode_from_roots,
)
from ldeconf.lde.exceptions import (
    BranchInconsistencyError,
    ConsistencyError,
    DegenerateBasisError,
    DomainMismatchError,
    InsufficientOrderError,
    LDEError,
    StepUnderflowError,
)
from ldeconf.lde.functions import (
    AnalyticFunction,
    Evaluator,
    LinearCombination,
    PowerProduct,
    constant_function,
)
from ldeconf.lde.serializers import InitialConditions, ODESerializer, ODESpec
from ldeconf.lde.solver import SolutionEvaluator, taylor_solve, taylor_solve_basis
from ldeconf.lde.transform import (
    PushforwardEvaluator,
    pushforward_solution,
    schwarzian_reduction,
    transform_ode,
)
from ldeconf.lde.wronskian import (
    kim_recover,
    power_basis,
    power_basis_from_pair,
    wronskian,
    wronskian_constancy,
    wronskian_identity_check,
)

__all__ = [
    "AnalyticFunction",
    "BranchInconsistencyError",
    "ConsistencyError",
    "DegenerateBasisError",
    "DomainMismatchError",
    "Evaluator",
    "Example51DiscSolution",
    "Example51Solution",
    "ExponentialSum",
    "InitialConditions",
    "InnerFunctionProbe",
    "InsufficientOrderError",
    "LDEError",
    "LinearCombination",
    "LinearODE",
    "ODESerializer",
    "ODESpec",
    "PowerProduct",
    "PushforwardEvaluator",
    "SolutionEvaluator",
    "StepUnderflowError",
    "characteristic_roots",
    "constant_function",
    "constant_ode",
    "example51_coefficient",
    "example51_disc_coefficient",
    "exponential_basis",
    "kim_recover",
    "lattice_zeros_example51",
    "max_residual",
    "ode_from_roots",
    "power_basis",
    "power_basis_from_pair",
    "pushforward_solution",
    "residual",
    "schwarzian_reduction",
    "taylor_solve",
    "taylor_solve_basis",
    "transform_ode",
    "wronskian",
    "wronskian_constancy",
    "wronskian_identity_check",
]
