"""Exact seminormed (smallest semicopula-based) integrals on finite capacity spaces,
and a checker for their translation invariance."""

from ._checks import ATOL, VIOLATION_TOL, DomainError, InvalidInstanceError, StructuralError
from .capacity import (
    Capacity,
    FiniteSpace,
    Instance,
    MeasurableFunction,
    level_set_measure,
    random_capacity,
    random_function,
    random_instance,
    shift_function,
    validate_capacity,
    witness_instance,
)
from .estimator import SeminormedIntegralTransformer
from .integral import IntegralResult, grid_oracle, seminormed_integral, shilkret_integral, sugeno_integral
from .invariance import (
    InvarianceVerdict,
    InvarianceWitness,
    check_invariance,
    functional_residual,
    synthesize_counterexample,
    translation_residual_instance,
    verify_witness,
)
from .semicopula import (
    DRASTIC,
    LUKASIEWICZ,
    MIN,
    PRODUCT,
    Semicopula,
    ValidationReport,
    builtin_semicopulas,
    evaluate,
    from_function,
    from_table,
    lukasiewicz_gap,
    validate_semicopula,
    yager,
)

__version__ = "0.1.0"
