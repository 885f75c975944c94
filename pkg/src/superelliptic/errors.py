"""Exception types shared across the package."""


class DomainError(ValueError):
    """Input is outside the mathematical domain of an operation."""


class CharacteristicError(DomainError):
    """The field characteristic makes a required constant non-invertible."""


class SingularCurveError(DomainError):
    """The defining polynomial has a repeated root (discriminant zero)."""


class UnsupportedCaseError(DomainError):
    """The requested case exists but is outside what this package computes."""


class NotInAtlasError(DomainError):
    """No embedded atlas data covers the queried genus."""


class ParseError(ValueError):
    """A document (JSON curve, point, divisor) failed to parse."""
