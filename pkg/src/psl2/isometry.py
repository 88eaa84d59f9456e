"""Translation length, isometry type and finite-order detection."""

import math
from dataclasses import dataclass
from typing import Literal, Union

from src.errors import ContractViolation
from src.localfield import Scalar
from src.psl2.matrix import ProjectiveMatrix

Order = Union[int, float]


@dataclass(frozen=True)
class IsometryClass:
    tag: Literal["elliptic", "hyperbolic"]
    length: int

    def __post_init__(self):
        if self.length % 2 or self.length < 0:
            raise ValueError(f"translation length must be even and nonnegative, got {self.length}")
        if (self.tag == "hyperbolic") != (self.length > 0):
            raise ValueError(f"{self.tag} isometry cannot have length {self.length}")


def length_from_trace(trace: Scalar) -> int:
    v = trace.valuation()
    if v == math.inf or v >= 0:
        return 0
    return -2 * v


def translation_length(A: ProjectiveMatrix) -> int:
    """l(A) = -2 min(0, v(tr A))."""
    return length_from_trace(A.trace())


def classify(A: ProjectiveMatrix) -> IsometryClass:
    length = translation_length(A)
    return IsometryClass("hyperbolic" if length else "elliptic", length)


def is_hyperbolic(A: ProjectiveMatrix) -> bool:
    return translation_length(A) > 0


def is_elliptic(A: ProjectiveMatrix) -> bool:
    return translation_length(A) == 0


def is_trivial(A: ProjectiveMatrix) -> bool:
    return A.is_identity()


def order_bound(q: int) -> int:
    return max(q + 1, 5)


def element_order(A: ProjectiveMatrix) -> Order:
    """Smallest n with A^n = +-I among n <= max(q+1, 5), else math.inf."""
    if is_hyperbolic(A):
        return math.inf
    field = A.field
    bound = max(order_bound(field.q), field.p)
    power = A
    for n in range(1, bound + 1):
        if power.is_identity():
            return n
        power = power * A
    return math.inf


def sl_order(A: ProjectiveMatrix) -> Order:
    """Order of the chosen SL_2 representative (n or 2n for PSL_2 order n)."""
    n = element_order(A)
    if n == math.inf:
        return n
    return n if (A**n).is_sl_identity() else 2 * n


def commutator(A: ProjectiveMatrix, B: ProjectiveMatrix) -> ProjectiveMatrix:
    return A * B * A.inverse() * B.inverse()


def conjugate(A: ProjectiveMatrix, C: ProjectiveMatrix) -> ProjectiveMatrix:
    """C A C^-1."""
    return C * A * C.inverse()


def is_involution(A: ProjectiveMatrix) -> bool:
    if A.is_identity():
        raise ContractViolation("is_involution is undefined on the identity")
    return A.trace().is_zero()


def fricke_commutator_trace(tr_a: Scalar, tr_b: Scalar, tr_ab: Scalar) -> Scalar:
    """tr[A, B] as a polynomial in tr A, tr B and tr AB."""
    return tr_a * tr_a + tr_b * tr_b + tr_ab * tr_ab - tr_a * tr_b * tr_ab - 2
