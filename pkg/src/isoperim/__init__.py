"""Isoperimetry of disconnected regular n-gons in constant-curvature planes."""

from .analysis import (
    AnalysisDomain,
    SplitFunctionParams,
    central_difference,
    check_concave_split,
    equal_split_margin,
    half_side,
    half_side_d1,
    half_side_d2,
    half_side_d3,
    spherical_half_side,
    spherical_half_side_d2,
    split_objective,
)
from .configurations import (
    Configuration,
    CounterexampleResult,
    MergeStep,
    SplitAssessment,
    Verdict,
    assess_two_split,
    brute_force_min,
    counterexample_triangles,
    euclidean_pythagoras_check,
    merge_chain,
    total_area,
    total_perimeter,
)
from .errors import (
    ArgumentError,
    BracketError,
    ConvergenceError,
    DomainError,
    ResourceError,
)
from .geometry import (
    Geometry,
    RegularPolygon,
    angle_from_area,
    area_bounds,
    area_from_angle,
    perimeter,
    side_length,
    validate_area,
)
from .threshold import ThresholdResult, critical_angle, find_root_bisect, inflection_point

__version__ = "0.1.0"

__all__ = [
    "AnalysisDomain",
    "ArgumentError",
    "BracketError",
    "Configuration",
    "ConvergenceError",
    "CounterexampleResult",
    "DomainError",
    "Geometry",
    "MergeStep",
    "RegularPolygon",
    "ResourceError",
    "SplitAssessment",
    "SplitFunctionParams",
    "ThresholdResult",
    "Verdict",
    "angle_from_area",
    "area_bounds",
    "area_from_angle",
    "assess_two_split",
    "brute_force_min",
    "central_difference",
    "check_concave_split",
    "counterexample_triangles",
    "critical_angle",
    "equal_split_margin",
    "euclidean_pythagoras_check",
    "find_root_bisect",
    "half_side",
    "half_side_d1",
    "half_side_d2",
    "half_side_d3",
    "inflection_point",
    "merge_chain",
    "perimeter",
    "side_length",
    "spherical_half_side",
    "spherical_half_side_d2",
    "split_objective",
    "total_area",
    "total_perimeter",
    "validate_area",
]
