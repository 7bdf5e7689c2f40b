"""Exact reflection lengths and minimal reflection factorizations in the
general linear and general affine groups over prime fields and Q."""

from .affine import (
    AffineMap,
    AffineSubspace,
    ELLIPTIC,
    HYPERBOLIC,
    PARABOLIC,
    classify,
    factor_minimal_affine,
    fix_aff,
    fix_lin,
    include_at,
    is_affine_reflection,
    make_affine_reflection,
    mov,
    project,
    reflection_length_affine,
)
from .factorization import (
    INDETERMINATE,
    FactorizationReport,
    OrderedFactorization,
    factor_minimal_gl,
    factorization_report,
    is_reduced,
    length_from_factorization,
    reflection_length_gl,
    s_spaces,
)
from .fields import GF, QQ, PrimeField, RationalField
from .linalg import (
    AffineSolutionSet,
    LinearForm,
    Matrix,
    SubspaceBasis,
    Vector,
    image_basis,
    kernel_basis,
    rref,
    solve,
    subspace_contains,
    subspace_intersect,
    subspace_sum,
)
from .reflection import (
    Reflection,
    ReflectionKind,
    classify_reflection,
    make_reflection,
    matrix_of,
    reflection_from_matrix,
)

__version__ = "0.1.0"
