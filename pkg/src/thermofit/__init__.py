"""thermofit: least-squares curve fitting and thermal analysis for heat sinks.

Fits lines (ordinary and weighted least squares, regression on either axis)
and first-order thermal step-response curves to temperature/time series,
reports goodness of fit via the correlation coefficient, and predicts
junction temperatures from thermal-resistance catalogs.
"""

from .dataset import Sample, Series, Violation, builtin_series, builtin_profiles, parse_csv, to_csv, validate
from .regression import (
    Axis,
    FitClass,
    LinearFit,
    SummaryStats,
    classify_fit,
    correlation,
    ols_fit,
    predict,
    residuals,
    sse,
    summarize,
    wls_fit,
)
from .report import FitReport, build_report, render_json, render_text
from .stepmodel import (
    JacobianMode,
    NlFit,
    StepModelParams,
    default_init,
    gauss_newton,
    gradient_descent,
    jacobian,
    model_eval,
    model_sse,
    sse_gradient,
)
from .thermal import (
    PENTIUM_D_915,
    HeatSinkEntry,
    PackageEntry,
    ProcessorSpec,
    builtin_heatsinks,
    builtin_packages,
    junction_temperature,
    max_power,
    select_heatsink,
)

__version__ = "0.1.0"

__all__ = [
    "Axis",
    "FitClass",
    "FitReport",
    "HeatSinkEntry",
    "JacobianMode",
    "LinearFit",
    "NlFit",
    "PENTIUM_D_915",
    "PackageEntry",
    "ProcessorSpec",
    "Sample",
    "Series",
    "StepModelParams",
    "SummaryStats",
    "Violation",
    "build_report",
    "builtin_heatsinks",
    "builtin_packages",
    "builtin_series",
    "builtin_profiles",
    "classify_fit",
    "correlation",
    "default_init",
    "gauss_newton",
    "gradient_descent",
    "jacobian",
    "junction_temperature",
    "max_power",
    "model_eval",
    "model_sse",
    "ols_fit",
    "parse_csv",
    "predict",
    "render_json",
    "render_text",
    "residuals",
    "select_heatsink",
    "sse",
    "sse_gradient",
    "summarize",
    "to_csv",
    "validate",
    "wls_fit",
]
