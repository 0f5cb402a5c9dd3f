"""Exception types shared across the package."""


class PlacementError(Exception):
    """Base class for all errors raised by this package."""


class InputError(PlacementError, ValueError):
    """An argument is outside its accepted domain (bad coordinate, negative distance, ...)."""


class ValidationError(PlacementError, ValueError):
    """A dataset, matrix, or report violates one of its invariants."""


class ParseError(ValidationError):
    """A file could not be parsed; carries the offending position when known."""

    def __init__(self, message, line=None, column=None):
        super().__init__(message)
        self.line = line
        self.column = column


class UnknownLocationError(PlacementError, KeyError):
    """An ISO code was not found in the location set at hand."""

    __str__ = BaseException.__str__  # drop KeyError's repr-quoting


class UnknownModelError(PlacementError, KeyError):
    """A latency-model id was not found in the registry or scenario."""

    __str__ = BaseException.__str__


class GeocodeError(PlacementError):
    """Base class for geocoding failures."""


class GeocodeTransportError(GeocodeError):
    """The geocoding endpoint could not be reached after retries."""


class GeocodeNotFoundError(GeocodeError):
    """The geocoding endpoint returned zero results for the query."""


class GeocodeProtocolError(GeocodeError):
    """The geocoding endpoint answered with something we cannot interpret."""
