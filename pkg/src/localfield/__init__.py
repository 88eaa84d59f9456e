from .config import FieldConfig, QuadExtConfig
from .field import LocalField, get_field
from .grammar import parse_scalar
from .hensel import DigitExpansion, hensel_lift, primitive_root_of_unity
from .residue import ResidueField
from .scalars import INF, LaurentNumber, PadicNumber, QuadNumber, Scalar


def valuation(x: Scalar):
    return x.valuation()


def residue(x: Scalar) -> int:
    return x.residue()


__all__ = [
    "INF",
    "DigitExpansion",
    "FieldConfig",
    "LaurentNumber",
    "LocalField",
    "PadicNumber",
    "QuadExtConfig",
    "QuadNumber",
    "ResidueField",
    "Scalar",
    "get_field",
    "hensel_lift",
    "parse_scalar",
    "primitive_root_of_unity",
    "residue",
    "valuation",
]
