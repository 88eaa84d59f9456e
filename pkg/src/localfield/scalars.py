"""Exact scalars of the working local field.

Three representations share one interface:

* ``PadicNumber``: a rational number viewed inside Q_p.
* ``LaurentNumber``: a rational function in t over F_q viewed inside F_q((t)).
* ``QuadNumber``: x + y*s with x, y of the base kind and s = sqrt(d) for the
  configured split extension datum d.

All values are immutable; arithmetic returns new objects.
"""

import math
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import TYPE_CHECKING, List, Sequence, Tuple, Union

import galois

from src.errors import FieldMismatchError, MalformedScalarError, NegativeValuationError

if TYPE_CHECKING:
    from src.localfield.field import LocalField

INF = math.inf

Digits = Tuple[Tuple[int, int], ...]
Number = Union[int, Fraction]


def _p_adic_order(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


class Scalar(ABC):
    __slots__ = ("field",)

    def __init__(self, field: "LocalField"):
        self.field = field

    @abstractmethod
    def valuation(self) -> Union[int, float]:
        """v(x) as an int, or math.inf for zero."""

    @abstractmethod
    def is_zero(self) -> bool: ...

    @abstractmethod
    def digits(self, upto: int) -> Digits:
        """Nonzero (position, residue digit) pairs of the expansion below position `upto`."""

    @abstractmethod
    def sort_key(self) -> tuple: ...

    @abstractmethod
    def inverse(self) -> "Scalar": ...

    @abstractmethod
    def _add(self, other: "Scalar") -> "Scalar": ...

    @abstractmethod
    def _mul(self, other: "Scalar") -> "Scalar": ...

    @abstractmethod
    def __neg__(self) -> "Scalar": ...

    def residue(self) -> int:
        if self.valuation() < 0:
            raise NegativeValuationError(f"{self} has negative valuation; no residue")
        for position, digit in self.digits(1):
            if position == 0:
                return digit
        return 0

    def is_one(self) -> bool:
        return self == 1

    def _coerce(self, other):
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            if type(other) is type(self):
                return other
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            return self.field.base(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(other)

    def __radd__(self, other):
        return self.__add__(other)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._add(-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._add(-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._mul(other.inverse())

    def __rtruediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other._mul(self.inverse())

    def __pow__(self, n: int) -> "Scalar":
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __repr__(self) -> str:
        return f"{type(self).__name__}({self})"


class PadicNumber(Scalar):
    __slots__ = ("value",)

    def __init__(self, field: "LocalField", value: Number):
        super().__init__(field)
        self.value = Fraction(value)

    def valuation(self):
        if self.value == 0:
            return INF
        p = self.field.p
        return _p_adic_order(self.value.numerator, p) - _p_adic_order(self.value.denominator, p)

    def is_zero(self) -> bool:
        return self.value == 0

    def digits(self, upto: int) -> Digits:
        v = self.valuation()
        if v == INF or v >= upto:
            return ()
        p = self.field.p
        unit = self.value / Fraction(p) ** v
        modulus = p ** (upto - v)
        n = unit.numerator * pow(unit.denominator, -1, modulus) % modulus
        out = []
        position = v
        while n:
            n, c = divmod(n, p)
            if c:
                out.append((position, c))
            position += 1
        return tuple(out)

    def sort_key(self) -> tuple:
        return (0, self.value)

    def inverse(self) -> "PadicNumber":
        if self.value == 0:
            raise ZeroDivisionError("inverse of zero")
        return PadicNumber(self.field, 1 / self.value)

    def _add(self, other: "PadicNumber") -> "PadicNumber":
        return PadicNumber(self.field, self.value + other.value)

    def _mul(self, other: "PadicNumber") -> "PadicNumber":
        return PadicNumber(self.field, self.value * other.value)

    def __neg__(self) -> "PadicNumber":
        return PadicNumber(self.field, -self.value)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.value == other
        if isinstance(other, PadicNumber):
            return self.value == other.value
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __str__(self) -> str:
        return str(self.value)


def _strip(coeffs: Sequence[int]) -> Tuple[int, ...]:
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _lowest(coeffs: Tuple[int, ...]) -> int:
    for i, c in enumerate(coeffs):
        if c:
            return i
    raise ValueError("zero polynomial has no lowest term")


class LaurentNumber(Scalar):
    """num/den with num, den in F_q[t] (ascending int coefficient tuples), gcd 1, den monic."""

    __slots__ = ("num", "den")

    def __init__(self, field: "LocalField", num: Tuple[int, ...], den: Tuple[int, ...] = (1,)):
        super().__init__(field)
        self.num = num
        self.den = den

    @classmethod
    def from_polys(cls, field: "LocalField", num: galois.Poly, den: galois.Poly) -> "LaurentNumber":
        num_c = _strip(int(c) for c in reversed(num.coeffs))
        den_c = _strip(int(c) for c in reversed(den.coeffs))
        if not den_c:
            raise ZeroDivisionError("rational function with zero denominator")
        if not num_c:
            return cls(field, (), (1,))
        g = galois.gcd(num, den)
        if g.degree > 0:
            num, den = num // g, den // g
        lead = den.coeffs[0]
        if int(lead) != 1:
            inv = lead**-1
            num = galois.Poly(num.coeffs * inv)
            den = galois.Poly(den.coeffs * inv)
        return cls(
            field,
            _strip(int(c) for c in reversed(num.coeffs)),
            _strip(int(c) for c in reversed(den.coeffs)),
        )

    def _polys(self) -> Tuple[galois.Poly, galois.Poly]:
        gf = self.field.residue.gf
        num = galois.Poly(list(self.num) or [0], field=gf, order="asc")
        den = galois.Poly(list(self.den), field=gf, order="asc")
        return num, den

    def valuation(self):
        if not self.num:
            return INF
        return _lowest(self.num) - _lowest(self.den)

    def is_zero(self) -> bool:
        return not self.num

    def is_polynomial(self) -> bool:
        return self.den == (1,)

    def digits(self, upto: int) -> Digits:
        v = self.valuation()
        if v == INF or v >= upto:
            return ()
        rf = self.field.residue
        n1 = self.num[_lowest(self.num):]
        d1 = self.den[_lowest(self.den):]
        inv0 = rf.inv(d1[0])
        series: List[int] = []
        for k in range(upto - v):
            acc = n1[k] if k < len(n1) else 0
            for j in range(1, min(k, len(d1) - 1) + 1):
                acc = rf.sub(acc, rf.mul(d1[j], series[k - j]))
            series.append(rf.mul(acc, inv0))
        return tuple((v + k, c) for k, c in enumerate(series) if c)

    def sort_key(self) -> tuple:
        return (0, self.num, self.den)

    def inverse(self) -> "LaurentNumber":
        if not self.num:
            raise ZeroDivisionError("inverse of zero")
        num, den = self._polys()
        return LaurentNumber.from_polys(self.field, den, num)

    def _add(self, other: "LaurentNumber") -> "LaurentNumber":
        if not other.num:
            return self
        if not self.num:
            return other
        a, b = self._polys()
        c, d = other._polys()
        if self.den == other.den:
            return LaurentNumber.from_polys(self.field, a + c, b)
        return LaurentNumber.from_polys(self.field, a * d + c * b, b * d)

    def _mul(self, other: "LaurentNumber") -> "LaurentNumber":
        if not self.num or not other.num:
            return self.field.zero_base
        a, b = self._polys()
        c, d = other._polys()
        return LaurentNumber.from_polys(self.field, a * c, b * d)

    def __neg__(self) -> "LaurentNumber":
        rf = self.field.residue
        return LaurentNumber(self.field, tuple(rf.neg(c) for c in self.num), self.den)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = self.field.base(other)
        if isinstance(other, LaurentNumber):
            return self.num == other.num and self.den == other.den
        return NotImplemented

    def __hash__(self) -> int:
        if self.den == (1,) and len(self.num) <= 1:
            # constants hash like the ints that coerce to them
            return hash(self.num[0] if self.num else 0)
        return hash((self.num, self.den))

    def __str__(self) -> str:
        if not self.num:
            return "0"
        rf = self.field.residue
        low = _lowest(self.den)
        if len(self.den) - 1 == low:
            return _render_poly(self.num, -low, rf)
        return f"({_render_poly(self.num, 0, rf)})/({_render_poly(self.den, 0, rf)})"


def _render_poly(coeffs: Tuple[int, ...], shift: int, rf) -> str:
    terms = []
    for i, c in enumerate(coeffs):
        if not c:
            continue
        e = i + shift
        if e == 0:
            terms.append(rf.render(c))
            continue
        mono = "t" if e == 1 else f"t^{e}"
        terms.append(mono if c == 1 else f"{rf.render(c)}*{mono}")
    return " + ".join(terms) if terms else "0"


class QuadNumber(Scalar):
    """x + y*s, s = sqrt(d) in a split quadratic extension of the base domain."""

    __slots__ = ("x", "y")

    def __init__(self, field: "LocalField", x: Scalar, y: Scalar):
        super().__init__(field)
        if isinstance(x, QuadNumber) or isinstance(y, QuadNumber):
            raise MalformedScalarError("QuadNumber components must lie in the base domain")
        self.x = x
        self.y = y

    def _coerce(self, other):
        if isinstance(other, QuadNumber):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return other
        if isinstance(other, Scalar):
            if other.field is not self.field and other.field != self.field:
                raise FieldMismatchError(f"{self.field} vs {other.field}")
            return QuadNumber(self.field, other, self.field.zero_base)
        if isinstance(other, (int, Fraction)):
            return QuadNumber(self.field, self.field.base(other), self.field.zero_base)
        return NotImplemented

    def _approx(self, precision: int) -> Scalar:
        return self.x + self.y * self.field.sqrt_d(precision)

    def valuation(self):
        if self.y.is_zero():
            return self.x.valuation()
        if self.x.is_zero():
            return self.y.valuation()
        vy = self.y.valuation()
        precision = max(self.field.precision, 8)
        while True:
            v = self._approx(precision).valuation()
            if v < vy + precision:
                return v
            precision *= 2

    def is_zero(self) -> bool:
        return self.x.is_zero() and self.y.is_zero()

    def digits(self, upto: int) -> Digits:
        if self.y.is_zero():
            return self.x.digits(upto)
        vy = self.y.valuation()
        if vy >= upto:
            return self.x.digits(upto)
        # margin of 4 extra digits guards carries in the truncated root
        return self._approx(upto - vy + 4).digits(upto)

    def sort_key(self) -> tuple:
        return (1, self.x.sort_key(), self.y.sort_key())

    def conjugate(self) -> "QuadNumber":
        return QuadNumber(self.field, self.x, -self.y)

    def norm(self) -> Scalar:
        return self.x * self.x - self.field.ext_d * self.y * self.y

    def inverse(self) -> "QuadNumber":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        n = self.norm().inverse()
        return QuadNumber(self.field, self.x * n, -(self.y * n))

    def _add(self, other: "QuadNumber") -> "QuadNumber":
        return QuadNumber(self.field, self.x + other.x, self.y + other.y)

    def _mul(self, other: "QuadNumber") -> "QuadNumber":
        x = self.x * other.x + self.field.ext_d * self.y * other.y
        y = self.x * other.y + self.y * other.x
        return QuadNumber(self.field, x, y)

    def __neg__(self) -> "QuadNumber":
        return QuadNumber(self.field, -self.x, -self.y)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.y.is_zero() and self.x == other
        if isinstance(other, QuadNumber):
            return self.x == other.x and self.y == other.y
        if isinstance(other, Scalar):
            return self.y.is_zero() and self.x == other
        return NotImplemented

    def __hash__(self) -> int:
        if self.y.is_zero():
            return hash(self.x)
        return hash((self.x, self.y))

    def __str__(self) -> str:
        if self.y.is_zero():
            return str(self.x)
        ys = "s" if self.y == 1 else f"({self.y})*s"
        if self.x.is_zero():
            return ys
        return f"({self.x}) + {ys}"
