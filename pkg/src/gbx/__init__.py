"""Generalized bicomplex numbers, their hyperquadric Lie groups and tensor product surfaces."""

from gbx.algebra import (
    ONE,
    UNIT_I,
    UNIT_IJ,
    UNIT_J,
    AlgebraParams,
    ConjugationKind,
    GBCNumber,
    NormForm,
    add,
    conjugate,
    general_inverse,
    multiply,
    norm_form,
    rep_matrix,
    scale,
)
from gbx.errors import (
    CaseMismatch,
    Degenerate,
    FormMismatch,
    GBXError,
    IndexNotInBasis,
    MeshExportError,
    NotInvertible,
    NotOnHyperquadric,
)
from gbx.hyperquadric import (
    HyperquadricKind,
    HyperquadricPoint,
    MetricForm,
    constraint_value,
    group_inverse,
    group_product,
    membership,
    metric_eval,
    metric_form,
    unit_membership,
)
from gbx.lie import TangentVector, basis_field, bracket, constraint_tangency, lie_basis, pushforward
from gbx.mesh import MeshFormat, export_mesh
from gbx.surfaces import (
    CurveKind,
    FundamentalForm,
    PlanarCurve,
    TensorRule,
    TensorSurface,
    diagonal_curve,
    evaluate_surface,
    fundamental_form,
    homomorphism_check,
    orthonormal_frame,
    permitted_kinds,
    surface_field_match,
    tangent_vectors,
)
from gbx.verify import (
    ConfigError,
    RunConfig,
    VerificationReport,
    run_algebra_suite,
    run_group_suite,
    run_surface_suite,
)

__version__ = "0.1.0"
