"""Lateral type-2 fuzzy data points with interpolating B-spline curve bundles.

The pipeline runs in four stages: fuzzy data, alpha-cut, type-reduction,
defuzzification. Each stage exists both at the point level (ops) and lifted
to whole curves (bundle); the two commute because every stage is an affine
combination and interpolation is linear.
"""

from .points import (
    CHANNELS,
    LEFT_CHANNELS,
    RIGHT_CHANNELS,
    CrispPoint,
    Dataset,
    FuzzyDataPoint,
    ValidationError,
    ValidationReport,
    validate_dataset,
    validate_point,
)
from .ops import (
    AlphaCutPoint,
    PipelineRecord,
    ReducedPoint,
    alpha_cut,
    defuzzify,
    run_point_pipeline,
    type_reduce,
)
from .bspline import (
    DegenerateChordError,
    KnotVector,
    ParamChoice,
    SolverError,
    SplineCurve,
    average_knots,
    basis,
    collocation_matrix,
    eval_curve,
    parametrize,
    sample_curve,
    solve_interpolation,
)
from .bundle import (
    STAGE_CHANNELS,
    STAGE_ORDER,
    FuzzyCurveBundle,
    Stage,
    StageError,
    apply_alpha_cut,
    apply_defuzzification,
    apply_type_reduction,
    build_bundle,
    run_curve_pipeline,
    stage_data,
)
from .dataio import (
    DatasetFormatError,
    dataset_from_json,
    load_dataset,
    load_worked_example,
    save_dataset,
)
from .report import format_point, format_value, stage_table_csv, stage_table_text
from .render import export_bundles, sample_rows, write_svg

__version__ = "0.1.0"

__all__ = [
    "CHANNELS",
    "LEFT_CHANNELS",
    "RIGHT_CHANNELS",
    "CrispPoint",
    "Dataset",
    "FuzzyDataPoint",
    "ValidationError",
    "ValidationReport",
    "validate_dataset",
    "validate_point",
    "AlphaCutPoint",
    "PipelineRecord",
    "ReducedPoint",
    "alpha_cut",
    "defuzzify",
    "run_point_pipeline",
    "type_reduce",
    "DegenerateChordError",
    "KnotVector",
    "ParamChoice",
    "SolverError",
    "SplineCurve",
    "average_knots",
    "basis",
    "collocation_matrix",
    "eval_curve",
    "parametrize",
    "sample_curve",
    "solve_interpolation",
    "STAGE_CHANNELS",
    "STAGE_ORDER",
    "FuzzyCurveBundle",
    "Stage",
    "StageError",
    "apply_alpha_cut",
    "apply_defuzzification",
    "apply_type_reduction",
    "build_bundle",
    "run_curve_pipeline",
    "stage_data",
    "DatasetFormatError",
    "dataset_from_json",
    "load_dataset",
    "load_worked_example",
    "save_dataset",
    "format_point",
    "format_value",
    "stage_table_csv",
    "stage_table_text",
    "export_bundles",
    "sample_rows",
    "write_svg",
    "__version__",
]
