"""Exact computations with graded Hecke algebras of type A, multisegments and
principal series of GL(n, C): translation functors against Jacquet functors."""

from .scalar import Scalar, as_scalar
from .segments import (
    EMPTY, Multisegment, Segment, make_segment, negate_conjugate, truncate_left,
    truncate_right,
)
from .kring import KElement, cojac_k, hermitian_dual_k, jac_k, k_multiply
from .realside import (
    Direction, KHCElement, Weight, gamma_k, integral_weyl_classes, multisegment_of,
    translate_k, verify_kgroup_commutativity,
)
from .modules import (
    HModule, check_relations, cojacquet, evaluation, gamma_module, hermitian_dual_mod,
    induce, jacquet, spectrum_y1, steinberg, trivial_module, y_weight_multiset,
)

__version__ = "0.1.0"
