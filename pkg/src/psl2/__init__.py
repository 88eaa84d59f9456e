from .isometry import (
    IsometryClass,
    classify,
    commutator,
    conjugate,
    element_order,
    fricke_commutator_trace,
    is_elliptic,
    is_hyperbolic,
    is_involution,
    is_trivial,
    length_from_trace,
    order_bound,
    sl_order,
    translation_length,
)
from .matrix import ProjectiveMatrix

__all__ = [
    "IsometryClass",
    "ProjectiveMatrix",
    "classify",
    "commutator",
    "conjugate",
    "element_order",
    "fricke_commutator_trace",
    "is_elliptic",
    "is_hyperbolic",
    "is_involution",
    "is_trivial",
    "length_from_trace",
    "order_bound",
    "sl_order",
    "translation_length",
]
