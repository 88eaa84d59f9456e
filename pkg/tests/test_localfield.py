from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

import pytest
from pydantic import ValidationError

from src.errors import HenselError, MalformedScalarError, NegativeValuationError, ParseError
from src.localfield import (
    FieldConfig,
    ResidueField,
    get_field,
    hensel_lift,
    parse_scalar,
    primitive_root_of_unity,
    residue,
    valuation,
)
from src.localfield.scalars import Scalar
from tests.conftest import make_field, random_scalar


def test_padic_valuation_and_residue(q5):
    assert valuation(q5.base(Fraction(25, 3))) == 2
    assert valuation(q5.base(Fraction(1, 5))) == -1
    assert valuation(q5.zero) == float("inf")
    assert residue(q5.base(7)) == 2
    with pytest.raises(NegativeValuationError):
        q5.base(Fraction(1, 5)).residue()


def test_padic_digits(q5):
    assert q5.base(7).digits(3) == ((0, 2), (1, 1))
    assert q5.base(-1).digits(3) == ((0, 4), (1, 4), (2, 4))
    assert q5.base(Fraction(1, 5)).digits(1) == ((-1, 1),)


def test_laurent_arithmetic_and_digits(f5):
    t = f5.t
    x = (1 + t) / (1 - t)
    assert x * (1 - t) == 1 + t
    assert x.inverse() * x == 1
    # (1 + t)/(1 - t) = 1 + 2t + 2t^2 + ...
    assert x.digits(3) == ((0, 1), (1, 2), (2, 2))
    assert (t**2 / (1 + t)).valuation() == 2
    assert (t**-3).valuation() == -3


@pytest.mark.parametrize(
    "text",
    ["1/5 + pi", "-3 + 2*pi^2", "(1 + pi)^-1", "7/25"],
)
def test_padic_print_parse_roundtrip(q5, text):
    x = q5.parse(text)
    assert q5.parse(str(x)) == x


@pytest.mark.parametrize("text", ["1 + t", "t^-2 + 3*t", "(1 + t)/(1 - t)", "2*t^-1"])
def test_laurent_print_parse_roundtrip(f5, text):
    x = f5.parse(text)
    assert f5.parse(str(x)) == x


def test_grammar_accepts_unicode_minus(q5):
    assert parse_scalar(q5, "−3") == -3
    assert parse_scalar(q5, 12) == 12


def test_grammar_residue_generator(f9):
    X = f9.parse("X")
    assert X * X == -1
    assert f9.parse(str(X + 2)) == X + 2


@pytest.mark.parametrize(
    "text, column",
    [
        ("1 + / 2", 4),
        ("1/(5 - 5)", 2),
        ("2 + foo", 4),
        ("(1 + 2", 6),
        ("t + 1", 0),
    ],
)
def test_parse_errors_carry_the_column(q5, text, column):
    with pytest.raises(ParseError) as info:
        q5.parse(text)
    assert info.value.column == column
    assert "^" in info.value.annotated()


def test_field_config_validation():
    with pytest.raises(ValidationError):
        FieldConfig(kind="padic", p=4)
    with pytest.raises(ValidationError):
        FieldConfig(kind="padic", p=5, f=2)
    with pytest.raises(ValidationError):
        FieldConfig(kind="laurent", p=3, f=2, residue_modulus=(1, 0, 2))  # X^2 + 2 = (X-1)(X+1)
    cfg = FieldConfig(kind="laurent", p=3, f=2)
    assert cfg.residue_modulus == (1, 0, 1)
    assert cfg.q == 9
    assert cfg.label == "F_9((t))"


def test_residue_field_f9():
    rf = ResidueField(3, 2, (1, 0, 1))
    X = rf.generator
    assert rf.mul(X, X) == 2
    assert rf.multiplicative_order(rf.primitive_element) == 8
    assert sorted(rf.sqrt_all(2)) == [3, 6]
    assert rf.element_of_order(4) is not None
    assert rf.element_of_order(5) is None


def test_split_extension_over_q5():
    F = make_field("padic", 5, ext={"d": "-1"})
    s = F.s
    assert s * s == -1
    assert F.chosen_root_residue == 2
    assert s.residue() == 2
    # sqrt(-1) = 2 + 1*5 + 2*25 + ... in Z_5
    assert (s - 2).valuation() == 1
    assert (s - 7).valuation() == 2
    assert (s - 57).valuation() == 3
    assert s.digits(3) == ((0, 2), (1, 1), (2, 2))
    assert (s.conjugate() * s) == 1


def test_extension_rejections():
    with pytest.raises(MalformedScalarError):
        make_field("padic", 5, ext={"d": "2"})
    with pytest.raises(MalformedScalarError):
        make_field("padic", 5, ext={"d": "4"})
    with pytest.raises(MalformedScalarError):
        make_field("padic", 5, ext={"d": "5"})
    with pytest.raises(MalformedScalarError):
        make_field("padic", 2, ext={"d": "-7"})


def test_extension_scalars_recognised_in_grammar():
    F = make_field("padic", 5, ext={"d": "-601/576"})
    a = F.parse("s")
    assert a * a == F.parse("-601/576")
    assert F.coerce(make_field("padic", 5).base(3)) == 3


def test_hensel_lift_sqrt2_in_q7(q7):
    expansion = hensel_lift(q7, [-2, 0, 1], 3, 8)
    assert expansion.truncate(2).digits == ((0, 3), (1, 1))
    assert expansion.leading_digit() == 3
    assert (expansion.value**2 - 2).valuation() >= 8
    assert not expansion.exact


def test_hensel_lift_errors(q5):
    with pytest.raises(HenselError):
        hensel_lift(q5, [-2, 0, 1], 1, 5)
    with pytest.raises(HenselError):
        hensel_lift(q5, [0, 0, 1], 0, 5)
    with pytest.raises(HenselError):
        hensel_lift(q5, [Fraction(1, 5), 1], 0, 5)


def test_primitive_roots_of_unity(q5):
    root = primitive_root_of_unity(4, q5, precision=12)
    lam = root.value
    assert (lam**4 - 1).valuation() >= 12
    assert (lam**2 + 1).valuation() >= 12
    assert primitive_root_of_unity(3, q5) is None
    assert primitive_root_of_unity(2, q5).value == -1
    with pytest.raises(HenselError):
        primitive_root_of_unity(5, q5)


def test_primitive_root_is_exact_over_laurent():
    F = make_field("laurent", 7)
    root = primitive_root_of_unity(3, F)
    assert root.exact
    assert root.value**3 == 1
    assert root.value != 1


def test_fields_are_cached():
    a = get_field(FieldConfig(kind="padic", p=5))
    b = get_field(FieldConfig(kind="padic", p=5))
    assert a is b


def test_is_square(q5, q7):
    assert q5.is_square(q5.base(-1))
    assert not q5.is_square(q5.base(2))
    assert not q5.is_square(q5.base(5))
    assert q7.is_square(q7.base(2 * 49))


@pytest.mark.parametrize("kind, p", [("padic", 5), ("laurent", 5), ("laurent", 3)])
def test_pi_is_the_uniformiser(kind, p):
    F = make_field(kind, p)
    assert isinstance(F.pi, Scalar)
    assert F.pi == F.uniformiser
    assert F.pi.valuation() == 1


def test_laurent_extension_with_non_monic_datum():
    # 4t^4 + 4t^2 + 4 = 4 (t^2 + t + 1)(t^2 - t + 1) over F_5
    F = make_field("laurent", 5, ext={"d": "4*t^4 + 4*t^2 + 4"})
    assert F.s * F.s == F.parse("4*t^4 + 4*t^2 + 4")
    assert F.s.residue() == F.chosen_root_residue


def test_laurent_non_monic_square_is_rejected():
    # 4 + 3t + 4t^2 = (2 + 2t)^2 over F_5
    with pytest.raises(MalformedScalarError, match="already a square"):
        make_field("laurent", 5, ext={"d": "4 + 3*t + 4*t^2"})


def test_hensel_sqrt_minus_one_in_q5(q5):
    expansion = hensel_lift(q5, [1, 0, 1], 2, 3)
    assert expansion.digits == ((0, 2), (1, 1), (2, 2))
    assert expansion.value == 57


def test_hensel_cube_root_of_unity_in_q7(q7):
    expansion = hensel_lift(q7, [1, 1, 1], 2, 1)
    assert expansion.value == 2
    assert expansion.leading_digit() == 2


@pytest.mark.parametrize("coeffs, r0", [([1, 0, 1], 2), ([1, 0, 1], 3), ([-6, 0, 1], 1)])
def test_hensel_digits_are_stable_under_precision(q5, coeffs, r0):
    long = hensel_lift(q5, coeffs, r0, 10)
    for k in range(1, 10):
        short = hensel_lift(q5, coeffs, r0, k)
        assert long.truncate(k).digits == short.digits
        assert (long.value - short.value).valuation() >= k


@pytest.mark.parametrize("kind, p, f", [("padic", 5, 1), ("padic", 3, 1), ("laurent", 5, 1), ("laurent", 3, 2)])
def test_residue_is_a_ring_morphism(rng, kind, p, f):
    F = make_field(kind, p, f)
    rf = F.residue
    for _ in range(60):
        x = random_scalar(F, rng, 0, 2)
        y = random_scalar(F, rng, 0, 2)
        assert residue(x + y) == rf.add(residue(x), residue(y))
        assert residue(x * y) == rf.mul(residue(x), residue(y))
        assert residue(x - y) == rf.sub(residue(x), residue(y))


def test_sqrt_d_is_shared_across_threads():
    F = make_field("padic", 5, ext={"d": "-1"})
    with ThreadPoolExecutor(max_workers=4) as pool:
        roots = list(pool.map(lambda _: F.sqrt_d(12), range(16)))
    assert all(r is roots[0] for r in roots)
    assert (roots[0] ** 2 + 1).valuation() >= 12
    assert F.sqrt_d(12) is roots[0]
