"""Typed domain errors.  The CLI reports these by class name with exit code 2."""


class DomainError(ValueError):
    pass


class DimensionDrop(DomainError):
    pass


class ZeroColumn(DomainError):
    pass


class BadParams(DomainError):
    pass


class NotFullDimensional(DomainError):
    pass


class NotInternal(DomainError):
    pass


class NotADecomposition(DomainError):
    pass


class TooFewLeaves(DomainError):
    pass


class InvalidTriangulation(DomainError):
    pass


class TooLarge(DomainError):
    pass


class CoincidentPoints(DomainError):
    pass


class NotGeneric(DomainError):
    pass


class OnArrangement(DomainError):
    pass


class ChartMismatch(DomainError):
    pass


class NotNormalized(DomainError):
    pass


class DoesNotFit(DomainError):
    pass


class SizeMismatch(DomainError):
    pass


class BadIndices(DomainError):
    pass


class BadWeight(DomainError):
    pass
