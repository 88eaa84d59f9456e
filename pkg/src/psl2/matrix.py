from typing import Iterator, Sequence, Tuple

from src.errors import DeterminantError, FieldMismatchError
from src.localfield import LocalField, QuadNumber, Scalar


def _normalize(x: Scalar) -> Scalar:
    if isinstance(x, QuadNumber) and x.y.is_zero():
        return x.x
    return x


class ProjectiveMatrix:
    """An element of PSL_2(K): a determinant-one matrix [[a, b], [c, d]] taken up to sign."""

    __slots__ = ("a", "b", "c", "d", "field", "_key")

    def __init__(self, a: Scalar, b: Scalar, c: Scalar, d: Scalar, check: bool = True):
        field = a.field
        for entry in (b, c, d):
            if entry.field is not field and entry.field != field:
                raise FieldMismatchError(f"entries over {field} and {entry.field}")
        self.field = field
        self.a, self.b, self.c, self.d = (_normalize(x) for x in (a, b, c, d))
        if check and not self.determinant().is_one():
            raise DeterminantError(f"determinant of {self.rows()} is {self.determinant()}, not 1")
        self._key = None

    @classmethod
    def from_rows(cls, field: LocalField, rows: Sequence[Sequence]) -> "ProjectiveMatrix":
        if len(rows) != 2 or any(len(row) != 2 for row in rows):
            raise DeterminantError(f"expected a 2x2 array, got {rows!r}")
        (a, b), (c, d) = [[field.coerce(x) for x in row] for row in rows]
        return cls(a, b, c, d)

    @classmethod
    def identity(cls, field: LocalField) -> "ProjectiveMatrix":
        return cls(field.one, field.zero, field.zero, field.one, check=False)

    @classmethod
    def diagonal(cls, x: Scalar) -> "ProjectiveMatrix":
        field = x.field
        return cls(x, field.zero, field.zero, x.inverse(), check=False)

    def determinant(self) -> Scalar:
        return self.a * self.d - self.b * self.c

    def trace(self) -> Scalar:
        return self.a + self.d

    def entries(self) -> Tuple[Scalar, Scalar, Scalar, Scalar]:
        return self.a, self.b, self.c, self.d

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.entries())

    def rows(self) -> Tuple[Tuple[str, str], Tuple[str, str]]:
        return ((str(self.a), str(self.b)), (str(self.c), str(self.d)))

    def __mul__(self, other: "ProjectiveMatrix") -> "ProjectiveMatrix":
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        return ProjectiveMatrix(
            self.a * other.a + self.b * other.c,
            self.a * other.b + self.b * other.d,
            self.c * other.a + self.d * other.c,
            self.c * other.b + self.d * other.d,
            check=False,
        )

    def inverse(self) -> "ProjectiveMatrix":
        # adjugate of a determinant-one matrix
        return ProjectiveMatrix(self.d, -self.b, -self.c, self.a, check=False)

    def __neg__(self) -> "ProjectiveMatrix":
        return ProjectiveMatrix(-self.a, -self.b, -self.c, -self.d, check=False)

    def __pow__(self, n: int) -> "ProjectiveMatrix":
        if n < 0:
            return self.inverse() ** (-n)
        result = ProjectiveMatrix.identity(self.field)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def equals_exactly(self, other: "ProjectiveMatrix") -> bool:
        return all(x == y for x, y in zip(self.entries(), other.entries()))

    def is_identity(self) -> bool:
        """True for +I and -I."""
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d and (self.a == 1 or self.a == -1)

    def is_sl_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == 1 and self.d == 1

    def canonical(self) -> "ProjectiveMatrix":
        """The sign representative whose first nonzero entry has the smaller sort key."""
        for entry in self.entries():
            if entry.is_zero():
                continue
            if (-entry).sort_key() < entry.sort_key():
                return -self
            return self
        return self

    def sort_key(self) -> tuple:
        if self._key is None:
            self._key = tuple(x.sort_key() for x in self.canonical().entries())
        return self._key

    def __eq__(self, other) -> bool:
        if not isinstance(other, ProjectiveMatrix):
            return NotImplemented
        if self.equals_exactly(other):
            return True
        return all(x == -y for x, y in zip(self.entries(), other.entries()))

    def __hash__(self) -> int:
        return hash(tuple(self.canonical().entries()))

    def __repr__(self) -> str:
        (a, b), (c, d) = self.rows()
        return f"[[{a}, {b}], [{c}, {d}]]"
