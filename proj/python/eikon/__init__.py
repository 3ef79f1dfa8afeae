from ._core import (
    EikonError,
    Shape,
    c1_margin,
    chi_estimate,
    differentiability_test,
    gradient,
    is_medial,
    nearest_points,
    sample_signed_distance,
    signed_distance,
    solve_fmm,
    spiral_ratio_sequence,
    trace,
    unsigned_distance,
)

__all__ = [
    "EikonError",
    "Shape",
    "c1_margin",
    "chi_estimate",
    "differentiability_test",
    "gradient",
    "is_medial",
    "nearest_points",
    "sample_signed_distance",
    "signed_distance",
    "solve_fmm",
    "spiral_ratio_sequence",
    "trace",
    "unsigned_distance",
]
