import itertools
import logging
import math
import threading
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Optional, Tuple, Union

import galois

from src.errors import MalformedScalarError
from src.localfield.config import FieldConfig
from src.localfield.residue import ResidueField
from src.localfield.scalars import LaurentNumber, PadicNumber, QuadNumber, Scalar

logger = logging.getLogger(__name__)
# first misses on _lifted_sqrt_d must not race
_SQRT_LOCK = threading.RLock()

ScalarLike = Union[int, Fraction, str, Scalar]


def _is_rational_square(x: Fraction) -> bool:
    if x < 0:
        return False
    n, d = x.numerator, x.denominator
    return _isqrt_exact(n) and _isqrt_exact(d)


def _isqrt_exact(n: int) -> bool:
    r = math.isqrt(n)
    return r * r == n


class LocalField:
    """Runtime view of a FieldConfig: uniformiser, residue field, parsing and the
    optional split extension s = sqrt(d).

    Build through `get_field` so equal configs share one instance.
    """

    def __init__(self, config: FieldConfig):
        self.config = config
        self.kind = config.kind
        self.p = config.p
        self.f = config.f
        self.q = config.q
        self.precision = config.hensel_precision
        self.residue = ResidueField(config.p, config.f, config.residue_modulus)

        self.zero_base = self.base(0)
        self.one_base = self.base(1)

        self.ext_d: Optional[Scalar] = None
        self.chosen_root_residue: Optional[int] = None
        if config.ext is not None:
            self._init_ext()

    def __repr__(self) -> str:
        return f"LocalField({self.config.label})"

    def __str__(self) -> str:
        return self.config.label

    def __eq__(self, other) -> bool:
        return isinstance(other, LocalField) and other.config == self.config

    def __hash__(self) -> int:
        return hash(self.config)

    @property
    def is_qp(self) -> bool:
        return self.config.is_qp

    @property
    def has_ext(self) -> bool:
        return self.ext_d is not None

    def _init_ext(self) -> None:
        from src.localfield.grammar import parse_scalar

        if self.p == 2:
            raise MalformedScalarError("sqrt(d) is never unramified over a field of characteristic or residue characteristic 2")
        d = parse_scalar(self.without_ext, self.config.ext.d)
        if d.valuation() != 0:
            raise MalformedScalarError(f"extension datum d = {d} must be a unit, v(d) = {d.valuation()}")
        roots = self.residue.sqrt_all(d.residue())
        if not roots:
            raise MalformedScalarError(f"d = {d} is not a square mod pi: the extension is not split")
        if self._base_is_square(d):
            raise MalformedScalarError(f"d = {d} is already a square in the base domain")
        chosen = self.config.ext.chosen_root_residue
        if chosen is None:
            chosen = min(roots)
        elif chosen not in roots:
            raise MalformedScalarError(f"chosen_root_residue {chosen} does not square to {d.residue()}")
        # d is rebuilt in this field so that its arithmetic stays field-consistent
        self.ext_d = self.parse_base(self.config.ext.d)
        self.chosen_root_residue = chosen

    def _base_is_square(self, d: Scalar) -> bool:
        if isinstance(d, PadicNumber):
            return _is_rational_square(d.value)
        num, den = d._polys()
        # num and den are coprime, so num/den is a square exactly when num * den is
        return self._poly_is_square(num * den)

    def _poly_is_square(self, poly: galois.Poly) -> bool:
        lead = poly.coeffs[0]
        if not self.residue.is_square(int(lead)):
            return False
        if poly.degree == 0:
            return True
        # factors() only accepts monic polynomials
        monic = poly // galois.Poly([lead], field=poly.field)
        _, multiplicities = monic.factors()
        return all(m % 2 == 0 for m in multiplicities)

    @cached_property
    def without_ext(self) -> "LocalField":
        if self.config.ext is None:
            return self
        return get_field(self.config.without_ext())

    # --- constructors -------------------------------------------------

    def base(self, value: Union[int, Fraction]) -> Scalar:
        if self.kind == "padic":
            return PadicNumber(self, value)
        value = Fraction(value)
        num = self.residue.from_int(value.numerator)
        den = self.residue.from_int(value.denominator)
        if den == 0:
            raise MalformedScalarError(f"{value} has no image in characteristic {self.p}")
        c = self.residue.mul(num, self.residue.inv(den))
        return LaurentNumber(self, (c,) if c else (), (1,))

    def constant(self, r: int) -> Scalar:
        """Teichmuller-free lift of a residue element: the int itself, or the constant r in F_q[t]."""
        if not 0 <= r < self.q:
            raise MalformedScalarError(f"{r} is not a residue field element of F_{self.q}")
        if self.kind == "padic":
            return PadicNumber(self, r)
        return LaurentNumber(self, (r,) if r else (), (1,))

    lift_residue = constant

    @cached_property
    def uniformiser(self) -> Scalar:
        if self.kind == "padic":
            return PadicNumber(self, self.p)
        return LaurentNumber(self, (0, 1), (1,))

    @property
    def pi(self) -> Scalar:
        return self.uniformiser

    @cached_property
    def t(self) -> Scalar:
        if self.kind != "laurent":
            raise MalformedScalarError("t is only defined for kind 'laurent'")
        return self.uniformiser

    @cached_property
    def s(self) -> QuadNumber:
        if not self.has_ext:
            raise MalformedScalarError(f"{self} has no quadratic extension datum")
        return QuadNumber(self, self.zero_base, self.one_base)

    @property
    def zero(self) -> Scalar:
        return self.zero_base

    @property
    def one(self) -> Scalar:
        return self.one_base

    def quad(self, x: ScalarLike, y: ScalarLike) -> QuadNumber:
        if not self.has_ext:
            raise MalformedScalarError(f"{self} has no quadratic extension datum")
        return QuadNumber(self, self.coerce(x), self.coerce(y))

    def from_digits(self, digits: Iterable[Tuple[int, int]]) -> Scalar:
        acc = self.zero_base
        pi = self.uniformiser
        for position, c in digits:
            acc = acc + self.constant(c) * pi**position
        return acc

    def parse(self, text: str) -> Scalar:
        from src.localfield.grammar import parse_scalar

        return parse_scalar(self, text)

    def parse_base(self, text: str) -> Scalar:
        value = self.parse(text)
        if isinstance(value, QuadNumber):
            if not value.y.is_zero():
                raise MalformedScalarError(f"{text!r} is not in the base domain")
            return value.x
        return value

    def coerce(self, value: ScalarLike) -> Scalar:
        if isinstance(value, Scalar):
            if value.field is not self and value.field != self:
                if value.field == self.without_ext or self.without_ext == value.field:
                    # re-home a base scalar from the extension-free field
                    return self.parse_base(str(value))
                raise MalformedScalarError(f"scalar {value} belongs to {value.field}, not {self}")
            return value
        if isinstance(value, str):
            return self.parse(value)
        if isinstance(value, (int, Fraction)):
            return self.base(value)
        raise MalformedScalarError(f"cannot interpret {value!r} as a scalar of {self}")

    # --- valuation-ring helpers ----------------------------------------

    def residue_ring(self, k: int) -> Iterator[Scalar]:
        """Representatives of O/pi^k: sums c_i pi^i over all digit tuples, i < k."""
        pi_powers = [self.uniformiser**i for i in range(k)]
        for digits in itertools.product(range(self.q), repeat=k):
            acc = self.zero_base
            for c, power in zip(digits, pi_powers):
                if c:
                    acc = acc + self.constant(c) * power
            yield acc

    def sqrt_residue(self, a: int) -> Tuple[int, ...]:
        return tuple(self.residue.sqrt_all(a))

    def is_square(self, x: Scalar) -> bool:
        """Square test in the completion for units and for even-valuation elements (odd p)."""
        v = x.valuation()
        if v == math.inf:
            return True
        if v % 2:
            return False
        if self.p == 2:
            raise MalformedScalarError("square test in residue characteristic 2 is not supported")
        unit = x / self.uniformiser**v
        return self.residue.is_square(unit.residue())

    def sqrt_d(self, precision: int) -> Scalar:
        """Base scalar S with S = sqrt(d) mod pi^precision and residue(S) = chosen_root_residue."""
        if not self.has_ext:
            raise MalformedScalarError(f"{self} has no quadratic extension datum")
        with _SQRT_LOCK:
            return _lifted_sqrt_d(self, precision)


@lru_cache(maxsize=None)
def _lifted_sqrt_d(field: LocalField, precision: int) -> Scalar:
    from src.localfield.hensel import hensel_lift

    d = field.ext_d
    expansion = hensel_lift(field, [-d, 0, 1], field.chosen_root_residue, precision)
    logger.debug("sqrt(%s) to %d digits", d, precision)
    return expansion.value


@lru_cache(maxsize=None)
def get_field(config: FieldConfig) -> LocalField:
    return LocalField(config)
