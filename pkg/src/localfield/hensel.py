"""Hensel lifting of simple residue roots and roots of unity."""

import logging
from dataclasses import dataclass
from typing import TYPE_CHECKING, Optional, Sequence, Tuple

from src.errors import HenselError
from src.localfield.scalars import Digits, Scalar

if TYPE_CHECKING:
    from src.localfield.field import LocalField

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class DigitExpansion:
    """A root given by its uniformiser digits below `precision`.

    `value` is the truncated root as a scalar; `exact` is set when `value` is the
    root itself (no truncation happened).
    """

    digits: Digits
    precision: int
    value: Scalar
    exact: bool = False

    def truncate(self, precision: int) -> "DigitExpansion":
        if precision > self.precision and not self.exact:
            raise HenselError(f"cannot extend a {self.precision}-digit expansion to {precision}")
        kept = tuple((i, c) for i, c in self.digits if i < precision)
        field = self.value.field
        return DigitExpansion(kept, precision, field.from_digits(kept), exact=False)

    def leading_digit(self) -> int:
        for position, digit in self.digits:
            if position == 0:
                return digit
        return 0


def evaluate(coeffs: Sequence[Scalar], x: Scalar) -> Scalar:
    """Horner evaluation of sum coeffs[i] x^i."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * x + c
    return acc


def derivative(coeffs: Sequence[Scalar]) -> Tuple[Scalar, ...]:
    return tuple(c * i for i, c in enumerate(coeffs) if i > 0)


def truncate(x: Scalar, precision: int) -> Scalar:
    return x.field.from_digits(x.digits(precision))


def hensel_lift(field: "LocalField", coeffs, r0: int, precision: int) -> DigitExpansion:
    """Lift the simple residue root r0 of the polynomial sum coeffs[i] λ^i to precision N.

    coeffs are ascending and may be ints, Fractions or base scalars of `field`;
    all must have nonnegative valuation.
    """
    if precision < 1:
        raise HenselError(f"precision must be positive, got {precision}")
    poly = tuple(field.coerce(c) for c in coeffs)
    if len(poly) < 2:
        raise HenselError("constant polynomial has no roots")
    if any(c.valuation() < 0 for c in poly):
        raise HenselError("coefficients must lie in the valuation ring")
    deriv = derivative(poly)
    r = field.lift_residue(r0)

    if evaluate(poly, r).valuation() < 1:
        raise HenselError(f"{field.residue.render(r0)} is not a root of the residue polynomial")
    if evaluate(deriv, r).valuation() > 0:
        raise HenselError(f"{field.residue.render(r0)} is a repeated residue root")

    # Newton steps at least double the number of correct digits
    for _ in range(precision.bit_length() + 2):
        value = evaluate(poly, r)
        if value.valuation() >= precision:
            break
        r = truncate(r - value / evaluate(deriv, r), precision)
    else:
        raise HenselError(f"Newton iteration did not reach precision {precision}")

    exact = evaluate(poly, r).is_zero()
    logger.debug("hensel_lift r0=%s N=%d -> %s", r0, precision, r)
    return DigitExpansion(r.digits(precision), precision, r, exact=exact)


def primitive_root_of_unity(n: int, field: "LocalField", precision: Optional[int] = None) -> Optional[DigitExpansion]:
    """A primitive n-th root of unity, or None when n does not divide q - 1."""
    if n < 1:
        raise HenselError(f"order must be positive, got {n}")
    if n % field.p == 0:
        raise HenselError(f"order {n} is divisible by the residue characteristic {field.p}")
    precision = precision or field.precision
    if (field.q - 1) % n:
        return None

    if n == 1 or n == 2:
        value = field.base(1 if n == 1 else -1)
        return DigitExpansion(value.digits(precision), precision, value, exact=True)

    r0 = field.residue.element_of_order(n)
    if field.kind == "laurent":
        value = field.constant(r0)
        return DigitExpansion(value.digits(precision), precision, value, exact=True)

    coeffs = [-1] + [0] * (n - 1) + [1]
    return hensel_lift(field, coeffs, r0, precision)
