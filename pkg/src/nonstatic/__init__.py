"""Closed-form toolkit for nonstatic light waves in the coherent state.

A light mode in a static medium can still carry a breathing wave packet:
its width collapses (nodes) and expands (bellies) periodically while the
total energy, the amplitude modulus and the Mandel Q parameter stay
constant.  This package evaluates the complete closed-form description --
envelope function, phase integral, position/momentum/number-state wave
functions, energies, fluctuations, Bogoliubov coefficients, Wigner
distribution -- plus quadrature-based oracles and an invariant suite.

All operations are pure functions of their inputs; results are immutable
records built on numpy arrays, so batch evaluation parallelizes trivially
and reproduces bit-identical output regardless of scheduling.
"""

__version__ = "0.1.0"

from .core import (
    KIND_BELLY,
    KIND_GENERIC,
    KIND_NODE,
    ClassicalState,
    CoherentAmplitude,
    ModelParams,
    NonstaticSample,
    amplitude,
    amplitude_from_classical,
    amplitude_values,
    classical_trajectory,
    critical_times,
    eval_f,
    f_of_t,
    fddot_of_t,
    fdot_of_t,
    nonstaticity_measure,
    phase_integral,
    reduce_phase,
    zeta_of_t,
)
from .errors import (
    AccuracyError,
    CapabilityError,
    ParameterError,
    UndefinedStatisticsError,
)
from .observables import (
    BogoliubovPair,
    ObservableSeries,
    bogoliubov,
    energies,
    expectation_p,
    expectation_q,
    fluctuations,
    mandel_q,
    observable_series,
)
from .validation import run_invariant_suite
from .wavefunctions import (
    DEFAULT_N_MAX,
    ComplexField,
    QuadratureGrid,
    coherent_p,
    coherent_p_values,
    coherent_q,
    coherent_q_values,
    fock_q,
    hermite_functions,
)
from .wigner import (
    EllipseSummary,
    PhaseSpaceGrid,
    covariance,
    ellipse_track,
    wigner_closed,
    wigner_numeric,
)

__all__ = [
    "AccuracyError",
    "BogoliubovPair",
    "CapabilityError",
    "ClassicalState",
    "CoherentAmplitude",
    "ComplexField",
    "DEFAULT_N_MAX",
    "EllipseSummary",
    "KIND_BELLY",
    "KIND_GENERIC",
    "KIND_NODE",
    "ModelParams",
    "NonstaticSample",
    "ObservableSeries",
    "ParameterError",
    "PhaseSpaceGrid",
    "QuadratureGrid",
    "UndefinedStatisticsError",
    "amplitude",
    "amplitude_from_classical",
    "amplitude_values",
    "bogoliubov",
    "classical_trajectory",
    "coherent_p",
    "coherent_p_values",
    "coherent_q",
    "coherent_q_values",
    "covariance",
    "critical_times",
    "ellipse_track",
    "energies",
    "eval_f",
    "expectation_p",
    "expectation_q",
    "f_of_t",
    "fddot_of_t",
    "fdot_of_t",
    "fluctuations",
    "fock_q",
    "hermite_functions",
    "mandel_q",
    "nonstaticity_measure",
    "observable_series",
    "phase_integral",
    "reduce_phase",
    "run_invariant_suite",
    "wigner_closed",
    "wigner_numeric",
    "zeta_of_t",
]
