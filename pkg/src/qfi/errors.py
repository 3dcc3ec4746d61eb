"""Exception types raised by the toolkit.

Every domain error carries a ``witness`` dict so the CLI can report the
offending values in its JSON error object.
"""


class QfiError(Exception):
    """Base class for domain errors."""

    def __init__(self, message, **witness):
        super().__init__(message)
        self.witness = witness

    @property
    def name(self):
        return type(self).__name__

    def to_json(self):
        return {"error": self.name, "message": str(self), "witness": self.witness}


class ParseError(QfiError, ValueError):
    """Malformed ideal text; ``position`` is the character offset."""

    def __init__(self, message, position=None, **witness):
        super().__init__(message, position=position, **witness)
        self.position = position


class NonSquarefree(ParseError):
    pass


class IndexOutOfRange(ParseError):
    pass


class EmptyIdeal(ParseError):
    pass


class UnitGenerator(ParseError):
    pass


class InvalidType(QfiError, ValueError):
    pass


class DimensionMismatch(QfiError):
    def __init__(self, dim_facet, dim_nonface):
        super().__init__(
            f"dim facet complex = {dim_facet} but dim non-face complex = {dim_nonface}",
            dim_facet=dim_facet,
            dim_nonface=dim_nonface,
        )
        self.dim_facet = dim_facet
        self.dim_nonface = dim_nonface


class NotEquigenerated(QfiError):
    pass


class DegreeTooSmall(QfiError):
    pass


class NotFullSupport(QfiError):
    pass


class MixedDegrees(QfiError):
    pass


class FullGeneratorDegree(QfiError):
    pass


class TooLarge(QfiError):
    pass


class SpecTooLarge(QfiError):
    pass


class RTooLarge(QfiError):
    pass


class SymmetryCapExceeded(QfiError):
    pass


class InconsistencyError(QfiError, AssertionError):
    """Two routes that must agree did not."""
