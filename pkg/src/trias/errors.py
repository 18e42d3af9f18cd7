class TriasError(Exception):
    """Base class for every error raised by this package."""


class DimensionError(TriasError, ValueError):
    """Shapes or ambient dimensions of the operands do not agree."""


class PreconditionError(TriasError, ValueError):
    """An operation was called outside its documented domain."""


class ConstraintError(PreconditionError):
    """A catalog entry was instantiated with forbidden parameter values."""


class ParseError(TriasError):
    def __init__(self, message, path=None, line=None, column=None):
        self.message = message
        self.path = path
        self.line = line
        self.column = column
        super().__init__(str(self))

    def __str__(self):
        where = self.path or "<input>"
        if self.line is not None:
            where += f":{self.line}"
            if self.column is not None:
                where += f":{self.column}"
        return f"{where}: {self.message}"
