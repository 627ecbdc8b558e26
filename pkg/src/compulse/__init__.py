"""Composite pulse synthesis, series expansion and error-order certification."""

from .su2 import (
    IDENTITY,
    MODEL_KINDS,
    OFF_RESONANCE,
    PULSE_LENGTH,
    SIGMA_X,
    SIGMA_Y,
    SIGMA_Z,
    SIMULTANEOUS,
    ErrorModel,
    PauliDecomposition,
    Pulse,
    adjoint,
    compose,
    fidelity,
    pauli_decompose,
    propagator,
    rotation,
)
from .series import (
    DEFAULT_DEGREE,
    ErrorTermReport,
    MatrixSeries,
    ScalarSeries,
    compose_analytic,
    fidelity_series,
    leading_error,
    propagator_series,
    residual,
    sequence_series,
)
from .sequences import (
    CATALOG,
    CATALOG_MODELS,
    CATALOG_ORDERS,
    CorpseAngles,
    PulseSequence,
    SolverFailure,
    bb1,
    build,
    corpse,
    corpse_angles,
    or_corrected,
    or_pure_error,
    ple_pure_error,
    shift_phases,
    short_corpse,
    sk_corrected,
    solve_third_order,
)
from .verify import (
    CrossoverResult,
    SurfaceFit,
    SweepResult,
    crossover_scan,
    estimate_order,
    fidelity_surface,
    fit_leading_coefficient,
    geometric_grid,
    inverse_quality,
)

__version__ = "0.1.0"

__all__ = [
    "IDENTITY",
    "SIGMA_X",
    "SIGMA_Y",
    "SIGMA_Z",
    "MODEL_KINDS",
    "PULSE_LENGTH",
    "OFF_RESONANCE",
    "SIMULTANEOUS",
    "Pulse",
    "ErrorModel",
    "PauliDecomposition",
    "rotation",
    "propagator",
    "compose",
    "adjoint",
    "fidelity",
    "pauli_decompose",
    "DEFAULT_DEGREE",
    "ScalarSeries",
    "MatrixSeries",
    "ErrorTermReport",
    "compose_analytic",
    "propagator_series",
    "sequence_series",
    "residual",
    "leading_error",
    "fidelity_series",
    "PulseSequence",
    "CorpseAngles",
    "SolverFailure",
    "CATALOG",
    "CATALOG_MODELS",
    "CATALOG_ORDERS",
    "bb1",
    "sk_corrected",
    "solve_third_order",
    "corpse",
    "short_corpse",
    "corpse_angles",
    "ple_pure_error",
    "or_pure_error",
    "or_corrected",
    "shift_phases",
    "build",
    "SweepResult",
    "CrossoverResult",
    "SurfaceFit",
    "estimate_order",
    "fit_leading_coefficient",
    "crossover_scan",
    "inverse_quality",
    "fidelity_surface",
    "geometric_grid",
]
