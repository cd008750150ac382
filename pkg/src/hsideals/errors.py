class InputError(ValueError):
    """Malformed or inconsistent input (bad permutation, unparseable file, ...)."""


class DimensionError(InputError):
    """Two objects live in polynomial rings with different variable counts."""


class ResourceCapError(RuntimeError):
    """A configured size cap would be exceeded."""

    def __init__(self, what, cap, actual=None):
        self.what = what
        self.cap = cap
        self.actual = actual
        msg = f"{what} exceeds cap {cap}"
        if actual is not None:
            msg += f" (got {actual})"
        super().__init__(msg)


class ParseError(InputError):
    def __init__(self, msg, line=None, col=None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}"
            if col is not None:
                where += f", column {col}"
            where += ": "
        super().__init__(where + msg)
