"""Frechet extreme-value distribution moments and shape-parameter inference."""

__version__ = "0.1.0"

from .errors import (
    DegenerateFitError,
    DomainError,
    EmptyInputError,
    FrechetFitError,
    GammaRangeError,
    InsufficientDataError,
    NoConvergenceError,
    ParseError,
    PoleError,
    UndefinedMomentError,
)
from .estimation import (
    CubicCoefficients,
    EstimateResult,
    Method,
    SampleStats,
    alpha_exact,
    alpha_order1,
    alpha_order2,
    fit_location_scale,
    sample_stats,
)
from .frechet import (
    FrechetParams,
    FrechetShape,
    MomentReport,
    cdf,
    centered_moment,
    excess_kurtosis,
    moment_report,
    normalized_centered_moment,
    pdf,
    quantile,
    raw_moment,
    shape_variance,
    skewness,
    variance,
)
from .sampling_io import SamplerConfig, read_samples, sample, write_samples
from .special_functions import (
    CONSTANTS,
    LAURENT,
    LaurentCoefficients,
    MathConstants,
    gamma,
    gamma_laurent,
    gamma_plus_one_taylor,
    log_gamma,
)

__all__ = [
    "__version__",
    "FrechetFitError", "DomainError", "PoleError", "GammaRangeError",
    "UndefinedMomentError", "NoConvergenceError", "DegenerateFitError",
    "InsufficientDataError", "ParseError", "EmptyInputError",
    "MathConstants", "LaurentCoefficients", "CONSTANTS", "LAURENT",
    "gamma", "log_gamma", "gamma_laurent", "gamma_plus_one_taylor",
    "FrechetShape", "FrechetParams", "MomentReport",
    "pdf", "cdf", "quantile", "raw_moment", "centered_moment",
    "normalized_centered_moment", "skewness", "excess_kurtosis",
    "variance", "shape_variance", "moment_report",
    "Method", "EstimateResult", "CubicCoefficients", "SampleStats",
    "alpha_order1", "alpha_order2", "alpha_exact",
    "fit_location_scale", "sample_stats",
    "SamplerConfig", "sample", "read_samples", "write_samples",
]
