"""Exception hierarchy shared by all modules."""


class UnfoldkitError(Exception):
    """Base class for every domain error raised by the library."""


# complex construction and queries
class EmptyInputError(UnfoldkitError):
    pass


class NonPureError(UnfoldkitError):
    pass


class DuplicateFacetError(UnfoldkitError):
    pass


class NotAFaceError(UnfoldkitError):
    pass


class VertexClashError(UnfoldkitError):
    pass


class NotPseudomanifoldError(UnfoldkitError):
    pass


class NotStronglyConnectedError(UnfoldkitError):
    pass


class NotLocallyStronglyConnectedError(UnfoldkitError):
    pass


class NotNiceError(UnfoldkitError):
    pass


# colorings
class ImproperColoringError(UnfoldkitError):
    pass


# projectivities
class NotNeighborsError(UnfoldkitError):
    pass


class InvalidPathError(UnfoldkitError):
    pass


class DisconnectedLinkError(UnfoldkitError):
    pass


# unfolding
class PseudoSimplicialViolationError(UnfoldkitError):
    pass


class NotSimplicialError(UnfoldkitError):
    """Raised when a component of an unfolding is not a simplicial complex.

    ``witness`` holds two labeled facets whose common face is ambiguous.
    """

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class PathMismatchError(UnfoldkitError):
    pass


# prescription / extension
class NotSeparatingError(UnfoldkitError):
    pass


class TargetMismatchError(UnfoldkitError):
    pass


class NotSphereLikeError(UnfoldkitError):
    pass


class NotRegularError(UnfoldkitError):
    pass


class BoundaryNotSphereLikeError(UnfoldkitError):
    pass


# gallery / io
class ParseError(UnfoldkitError):
    """Malformed complex document; ``field`` names the offending entry."""

    def __init__(self, message, field=None, line=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field!r}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.field = field
        self.line = line


class UnknownNameError(UnfoldkitError):
    pass


class BadParamsError(UnfoldkitError):
    pass
