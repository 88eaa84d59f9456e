import numpy as np
import pytest

from src.localfield import FieldConfig, LocalField, get_field
from src.psl2 import ProjectiveMatrix


def make_field(kind: str = "padic", p: int = 5, f: int = 1, **extra) -> LocalField:
    return get_field(FieldConfig(kind=kind, p=p, f=f, **extra))


def mat(field: LocalField, rows) -> ProjectiveMatrix:
    return ProjectiveMatrix.from_rows(field, rows)


def random_scalar(field: LocalField, rng: np.random.Generator, low: int = -2, high: int = 2, unit: bool = False):
    """A nonzero scalar with valuation in [low, high]: a random unit times pi^k."""
    k = 0 if unit else int(rng.integers(low, high + 1))
    if field.kind == "padic":
        u = int(rng.integers(1, field.p)) + field.p * int(rng.integers(0, field.p**2))
        return field.base(u) * field.pi**k
    lead = int(rng.integers(1, field.q))
    coeffs = [field.constant(lead)] + [field.constant(int(rng.integers(0, field.q))) for _ in range(2)]
    u = coeffs[0] + coeffs[1] * field.t + coeffs[2] * field.t**2
    return u * field.pi**k


def random_sl2(field: LocalField, rng: np.random.Generator, low: int = -2, high: int = 2) -> ProjectiveMatrix:
    """Random determinant-one matrix: a, b, c random, d = (1 + bc)/a."""
    a = random_scalar(field, rng, low, high)
    b = random_scalar(field, rng, low, high)
    c = random_scalar(field, rng, low, high)
    d = (1 + b * c) / a
    return ProjectiveMatrix(a, b, c, d)


@pytest.fixture
def rng():
    return np.random.default_rng(20240517)


@pytest.fixture
def q2():
    return make_field("padic", 2)


@pytest.fixture
def q3():
    return make_field("padic", 3)


@pytest.fixture
def q5():
    return make_field("padic", 5)


@pytest.fixture
def q7():
    return make_field("padic", 7)


@pytest.fixture
def f3():
    return make_field("laurent", 3)


@pytest.fixture
def f5():
    return make_field("laurent", 5)


@pytest.fixture
def f9():
    return make_field("laurent", 3, 2)
