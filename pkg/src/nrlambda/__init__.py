"""Exact lambda-ring, necklace-ring and ghost-ring arithmetic for exterior
powers of finite-group characters."""

from .errors import (
    AlgebraError,
    CertificateViolation,
    HorizonExceeded,
    IntegralityViolation,
    InternalDisagreement,
    InvalidHom,
    LengthMismatch,
    NonDivisible,
    NotDivisor,
    NotIntegerValued,
    NotMAS,
    NotTShaped,
    ParseError,
    QAlgebraRequired,
    RingMismatch,
    SizeLimit,
    UnknownSupport,
)
from .numeric import (
    QQ,
    ZZ,
    Cyclotomic,
    Hom,
    Ring,
    coprime_part,
    cyclotomic_polynomial,
    cyclotomic_ring,
    divisors,
    embed_hom,
    galois_hom,
    identity_hom,
    mobius,
    parse_scalar,
    format_scalar,
    scalar_arith,
)
from .ghost import GhostVec
from .necklace import (
    NeckVec,
    delta,
    finite_support_certificate,
    necklace_M,
    phi,
    phi_inv,
    trunc_product_entry,
)
from .series import (
    LambdaSeries,
    enr,
    enr_inv,
    lam_add,
    lam_mul,
    lam_neg,
    product_form,
    z,
    z_inv,
)
from .characters import (
    ClassFunction,
    PowerGroup,
    class_function,
    cyclic_group,
    permutation_character,
    product_character,
    product_group,
    sign_character,
    symmetric_group,
    trivial_character,
)
from .symrep import (
    MASMatrix,
    Permutation,
    chi_closed,
    det_series,
    enr_cycle_power,
    enr_full_cycle,
    lam_series_sigma,
    p_matrix,
    parse_permutation,
    relations_check,
    rep_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraError",
    "CertificateViolation",
    "HorizonExceeded",
    "IntegralityViolation",
    "InternalDisagreement",
    "InvalidHom",
    "LengthMismatch",
    "NonDivisible",
    "NotDivisor",
    "NotIntegerValued",
    "NotMAS",
    "NotTShaped",
    "ParseError",
    "QAlgebraRequired",
    "RingMismatch",
    "SizeLimit",
    "UnknownSupport",
    "QQ",
    "ZZ",
    "Cyclotomic",
    "Hom",
    "Ring",
    "coprime_part",
    "cyclotomic_polynomial",
    "cyclotomic_ring",
    "divisors",
    "embed_hom",
    "galois_hom",
    "identity_hom",
    "mobius",
    "parse_scalar",
    "format_scalar",
    "scalar_arith",
    "GhostVec",
    "NeckVec",
    "delta",
    "finite_support_certificate",
    "necklace_M",
    "phi",
    "phi_inv",
    "trunc_product_entry",
    "LambdaSeries",
    "enr",
    "enr_inv",
    "lam_add",
    "lam_mul",
    "lam_neg",
    "product_form",
    "z",
    "z_inv",
    "ClassFunction",
    "PowerGroup",
    "class_function",
    "cyclic_group",
    "permutation_character",
    "product_character",
    "product_group",
    "sign_character",
    "symmetric_group",
    "trivial_character",
    "MASMatrix",
    "Permutation",
    "chi_closed",
    "det_series",
    "enr_cycle_power",
    "enr_full_cycle",
    "lam_series_sigma",
    "p_matrix",
    "parse_permutation",
    "relations_check",
    "rep_matrix",
    "__version__",
]
