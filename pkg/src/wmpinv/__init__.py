"""Exact weighted pseudoinverses of univariate rational and polynomial
matrices.

Two independent computation paths are provided: a rational-function path
(``greville``) that grows the pseudoinverse column by column, and a
coefficient path (``poly_greville``) that carries every quantity as
polynomial coefficient sequences over a single scalar denominator.  Both
are exact; ``verify`` checks the four weighted Penrose identities and the
agreement of the paths.
"""

from .errors import (
    DegenerateWeightError,
    MatrixParseError,
    PoleError,
    SingularMatrixError,
)
from .greville import (
    PartitionState,
    WeightedProblem,
    bordering_inverse,
    bordering_step,
    column_pinv_init,
    partition_stages,
    weighted_pinv,
)
from .matrices import PrincipalPartition, RfMatrix, constant_matrix
from .matrixio import format_entry, format_matrix, parse_entry, parse_matrix_file
from .poly_greville import (
    MatrixPolyFraction,
    PolyMatrix,
    PolyPartitionState,
    fraction_simplify,
)
from .scalars import Poly, RatFun, poly_gcd
from .verify import (
    EvalConsistencyReport,
    PenroseReport,
    cross_path_check,
    eval_consistency_check,
    penrose_check,
)

__all__ = [
    "DegenerateWeightError",
    "EvalConsistencyReport",
    "MatrixParseError",
    "MatrixPolyFraction",
    "PartitionState",
    "PenroseReport",
    "Poly",
    "PolyMatrix",
    "PolyPartitionState",
    "PoleError",
    "PrincipalPartition",
    "RatFun",
    "RfMatrix",
    "SingularMatrixError",
    "WeightedProblem",
    "bordering_inverse",
    "bordering_step",
    "column_pinv_init",
    "constant_matrix",
    "cross_path_check",
    "eval_consistency_check",
    "format_entry",
    "format_matrix",
    "fraction_simplify",
    "parse_entry",
    "parse_matrix_file",
    "partition_stages",
    "penrose_check",
    "poly_gcd",
    "weighted_pinv",
]

__version__ = "0.1.0"
