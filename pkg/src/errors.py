class NonArchError(Exception):
    """Base class for every error raised by the package."""


class FieldMismatchError(NonArchError):
    pass


class MalformedScalarError(NonArchError):
    pass


class NegativeValuationError(NonArchError):
    pass


class HenselError(NonArchError):
    pass


class ParseError(NonArchError):
    """Raised by the scalar grammar; `column` is 0-based within `text`."""

    def __init__(self, message: str, text: str = "", column: int = 0):
        self.message = message
        self.text = text
        self.column = column
        super().__init__(self.annotated())

    def annotated(self) -> str:
        if not self.text:
            return self.message
        caret = " " * self.column + "^"
        return f"{self.message} at column {self.column}\n  {self.text}\n  {caret}"


class DeterminantError(NonArchError):
    pass


class ContractViolation(NonArchError):
    pass


class ClassificationError(NonArchError):
    pass


class ExampleUnavailable(NonArchError):
    pass
