"""Exception types shared across Stable Sections."""


class StableSectionsError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(StableSectionsError, ValueError):
    """An operation was called outside its precondition."""


class DimensionMismatchError(InvalidInputError):
    """Matrix and vector shapes do not fit together."""


class RingMismatchError(InvalidInputError):
    """Operands live in different cohomology rings."""


class DegreeCapError(InvalidInputError):
    """A degree exceeds the configured Steenrod algebra cap."""


class ModuleParseError(StableSectionsError):
    """A module interchange document could not be parsed."""
