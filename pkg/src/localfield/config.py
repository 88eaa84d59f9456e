from typing import Literal, Optional, Tuple

import galois
from pydantic import BaseModel, ConfigDict, field_validator, model_validator

# Irreducible moduli m(X) for the residue fields F_p[X]/(m) with f > 1, q <= 32.
# Coefficients are listed from the leading term down, as galois.Poly expects.
DEFAULT_MODULI = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 0, 1, 1),
    (2, 4): (1, 0, 0, 1, 1),
    (2, 5): (1, 0, 0, 1, 0, 1),
    (3, 2): (1, 0, 1),
    (3, 3): (1, 0, 2, 1),
    (5, 2): (1, 0, 2),
}

MAX_TABLE_ORDER = 4096


class QuadExtConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: str
    chosen_root_residue: Optional[int] = None


class FieldConfig(BaseModel):
    """Descriptor of the working local field.

    kind "padic" is Q_p (f must be 1); kind "laurent" is F_q((t)) with q = p^f.
    An optional split quadratic extension adjoins s = sqrt(d).
    """

    model_config = ConfigDict(frozen=True)

    kind: Literal["padic", "laurent"]
    p: int
    f: int = 1
    residue_modulus: Optional[Tuple[int, ...]] = None
    ext: Optional[QuadExtConfig] = None
    hensel_precision: int = 20

    @field_validator("p")
    @classmethod
    def _prime(cls, value: int) -> int:
        if value < 2 or not galois.is_prime(value):
            raise ValueError(f"p must be prime, got {value}")
        return value

    @field_validator("f", "hensel_precision")
    @classmethod
    def _positive(cls, value: int) -> int:
        if value < 1:
            raise ValueError(f"must be a positive integer, got {value}")
        return value

    @model_validator(mode="before")
    @classmethod
    def _default_modulus(cls, data):
        if not isinstance(data, dict):
            return data
        f = data.get("f", 1)
        p = data.get("p")
        if data.get("residue_modulus") is None and isinstance(p, int) and isinstance(f, int) and f > 1:
            if (p, f) in DEFAULT_MODULI:
                data = {**data, "residue_modulus": DEFAULT_MODULI[(p, f)]}
            elif galois.is_prime(p):
                conway = galois.conway_poly(p, f)
                data = {**data, "residue_modulus": tuple(int(c) for c in conway.coeffs)}
        return data

    @model_validator(mode="after")
    def _consistent(self) -> "FieldConfig":
        if self.kind == "padic" and self.f != 1:
            raise ValueError("kind 'padic' models Q_p exactly and requires f = 1")
        if self.f > 1:
            if self.p**self.f > MAX_TABLE_ORDER:
                raise ValueError(f"residue field of order {self.p ** self.f} is too large")
            modulus = self.residue_modulus
            if modulus is None or len(modulus) != self.f + 1:
                raise ValueError(f"residue_modulus must have degree f = {self.f}")
            poly = galois.Poly(list(modulus), field=galois.GF(self.p))
            if not poly.is_irreducible():
                raise ValueError(f"residue_modulus {list(modulus)} is not irreducible over F_{self.p}")
        return self

    @property
    def q(self) -> int:
        return self.p**self.f

    @property
    def is_qp(self) -> bool:
        return self.kind == "padic"

    def without_ext(self) -> "FieldConfig":
        return self.model_copy(update={"ext": None})

    def with_ext(self, d: str, chosen_root_residue: Optional[int] = None) -> "FieldConfig":
        ext = QuadExtConfig(d=d, chosen_root_residue=chosen_root_residue)
        return self.model_copy(update={"ext": ext})

    @property
    def label(self) -> str:
        if self.kind == "padic":
            base = f"Q_{self.p}"
        else:
            base = f"F_{self.q}((t))"
        if self.ext is not None:
            base += f"(sqrt({self.ext.d}))"
        return base
