"""Supervised dimensionality reduction by local Fisher discriminant
analysis, with a kernelized variant for non-linear structure and a
semi-supervised variant for partially labeled data."""

from .affinity import (
    LaplacianPair,
    cross_sqdist,
    laplacian,
    local_scaling_affinity,
    local_sigmas,
    pairwise_sqdist,
)
from .errors import (
    BadBeta,
    BadK,
    BadRank,
    BadSigma,
    ConvergenceFailure,
    DatasetError,
    DimMismatch,
    KernelModelNotTransformable,
    LocalFisherError,
    MissingLabel,
    ModelFormatError,
    NonFiniteInput,
    NotPositiveDefinite,
    NumericalError,
    TooFewLabeledPerClass,
    ValidationError,
)
from .kernel import (
    fit_klfda,
    gauss_kernel_matrix,
    kernel_sqdist,
    median_pairwise_distance,
    transform_klfda,
)
from .labels import LabelEncoding, encode_labels
from .lfda import (
    EmbeddingModel,
    WeightMatrices,
    apply_metric,
    build_weights,
    fit_lfda,
    scatter_from_weights,
    transform,
)
from .matcore import EigenSolution, cholesky, gen_sym_eigen, sym_eigen, symmetrize
from .model_io import ModelBundle, load_model, save_model
from .semi import SelfConfig, discard_labels, fit_self, total_scatter

__version__ = "0.1.0"

__all__ = [
    "BadBeta",
    "BadK",
    "BadRank",
    "BadSigma",
    "ConvergenceFailure",
    "DatasetError",
    "DimMismatch",
    "EigenSolution",
    "EmbeddingModel",
    "KernelModelNotTransformable",
    "LabelEncoding",
    "LaplacianPair",
    "LocalFisherError",
    "MissingLabel",
    "ModelBundle",
    "ModelFormatError",
    "NonFiniteInput",
    "NotPositiveDefinite",
    "NumericalError",
    "SelfConfig",
    "TooFewLabeledPerClass",
    "ValidationError",
    "WeightMatrices",
    "apply_metric",
    "build_weights",
    "cholesky",
    "cross_sqdist",
    "discard_labels",
    "encode_labels",
    "fit_klfda",
    "fit_lfda",
    "fit_self",
    "gauss_kernel_matrix",
    "gen_sym_eigen",
    "kernel_sqdist",
    "laplacian",
    "load_model",
    "local_scaling_affinity",
    "local_sigmas",
    "median_pairwise_distance",
    "pairwise_sqdist",
    "save_model",
    "scatter_from_weights",
    "sym_eigen",
    "symmetrize",
    "total_scatter",
    "transform",
    "transform_klfda",
]
