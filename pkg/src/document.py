"""YAML input documents: a field block, the matrices A and B, and run options."""

from pathlib import Path
from typing import List, Optional, Tuple, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, field_validator

from src.localfield import FieldConfig, LocalField, get_field
from src.psl2 import ProjectiveMatrix

MatrixRows = List[List[str]]


class DocumentOptions(BaseModel):
    model_config = ConfigDict(frozen=True, extra="forbid")

    radius: int = Field(default=4, ge=0)
    cap: Optional[int] = Field(default=None, ge=1)


class InputDocument(BaseModel):
    """A decision problem as stored on disk.

    Scalars are strings in the scalar grammar; YAML numbers are accepted and
    converted with str().
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    field: FieldConfig
    A: MatrixRows
    B: Optional[MatrixRows] = None
    options: DocumentOptions = DocumentOptions()

    @field_validator("A", "B", mode="before")
    @classmethod
    def _two_by_two(cls, value):
        if value is None:
            return value
        if not isinstance(value, (list, tuple)) or len(value) != 2:
            raise ValueError("a matrix is a list of two rows")
        rows = []
        for row in value:
            if not isinstance(row, (list, tuple)) or len(row) != 2:
                raise ValueError("each matrix row has two entries")
            rows.append([str(x) for x in row])
        return rows

    @classmethod
    def load(cls, path: Union[str, Path]) -> "InputDocument":
        with open(path, "r") as f:
            data = yaml.safe_load(f)
        return cls.model_validate(data)

    def dump(self) -> str:
        data = self.model_dump(mode="json", exclude_none=True)
        return yaml.safe_dump(data, sort_keys=False, allow_unicode=True)

    def with_overrides(
        self, radius: Optional[int] = None, cap: Optional[int] = None, precision: Optional[int] = None
    ) -> "InputDocument":
        options = self.options.model_copy(
            update={k: v for k, v in (("radius", radius), ("cap", cap)) if v is not None}
        )
        field = self.field
        if precision is not None:
            field = FieldConfig.model_validate({**field.model_dump(), "hensel_precision": precision})
        return self.model_copy(update={"options": options, "field": field})

    def local_field(self) -> LocalField:
        return get_field(self.field)

    def matrices(self) -> Tuple[ProjectiveMatrix, Optional[ProjectiveMatrix]]:
        """Build A and B over the document's field; the determinant is checked here."""
        field = self.local_field()
        A = ProjectiveMatrix.from_rows(field, self.A)
        B = None if self.B is None else ProjectiveMatrix.from_rows(field, self.B)
        return A, B
