"""Exception types raised by the geometry kernel."""


class GeometryError(ValueError):
    """Base class for violated geometric preconditions."""


class ZeroVector(GeometryError):
    pass


class ImproperPoint(GeometryError):
    pass


class IdenticalPoints(GeometryError):
    pass


class IdenticalLines(GeometryError):
    pass


class DimensionMismatch(GeometryError):
    pass


class SingularMatrix(GeometryError):
    pass


class DegenerateFrame(GeometryError):
    pass


class NotDistinct(GeometryError):
    pass


class NotCollinear(GeometryError):
    pass


class NoImage(GeometryError):
    """The point lies on the plane through the center parallel to the image plane."""


class CenterInput(GeometryError):
    pass


class CenterOnPlane(GeometryError):
    pass


class DirectionParallel(GeometryError):
    pass


class EmptyScene(GeometryError):
    pass


class ParseError(ValueError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message, lineno=None, source=None):
        self.lineno = lineno
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if lineno is not None:
            where += f"{lineno}:"
        super().__init__(f"{where} {message}" if where else message)
