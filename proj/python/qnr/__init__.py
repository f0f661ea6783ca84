"""Quadratic numerical range of 2x2 block matrices."""

from ._core import (
    BlockMatrix,
    DimensionMismatch,
    EmptySet,
    InvalidArgument,
    IoError,
    ParseError,
    QnrError,
    SplitOutOfRange,
    compute_qnr,
    concentration_experiment,
    full_spectrum,
    generate,
    hausdorff,
    load_block_matrix,
    matrix_to_json,
    objective,
    operator_norm,
    perturbation_bound,
    random_sampling,
    reduce,
    seek_boundary,
    split_eigenvalues,
)

__all__ = [
    "BlockMatrix",
    "DimensionMismatch",
    "EmptySet",
    "InvalidArgument",
    "IoError",
    "ParseError",
    "QnrError",
    "SplitOutOfRange",
    "compute_qnr",
    "concentration_experiment",
    "full_spectrum",
    "generate",
    "hausdorff",
    "load_block_matrix",
    "matrix_to_json",
    "objective",
    "operator_norm",
    "perturbation_bound",
    "random_sampling",
    "reduce",
    "seek_boundary",
    "split_eigenvalues",
]
