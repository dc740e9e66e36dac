"""Exception types shared across the workbench."""


class HomoglabError(Exception):
    """Base class for all workbench errors."""


class InvalidParameter(HomoglabError, ValueError):
    pass


class NonUnitGenerator(HomoglabError, ValueError):
    pass


class ClosureExceedsLimit(HomoglabError, RuntimeError):
    pass


class NonUnitInput(HomoglabError, ValueError):
    pass


class NonUnitPoint(HomoglabError, ValueError):
    pass


class NonOrthogonalInput(HomoglabError, ValueError):
    pass


class NotClosed(HomoglabError, ValueError):
    pass


class NonCoprimeExponent(HomoglabError, ValueError):
    pass


class NotClifford(HomoglabError, ValueError):
    pass


class NotInGroup(HomoglabError, ValueError):
    pass


class NotASubalgebra(HomoglabError, ValueError):
    pass


class InvalidCoefficients(InvalidParameter):
    pass


class ZeroField(HomoglabError, ValueError):
    pass


class UnsupportedType(HomoglabError, ValueError):
    pass


class ZeroVector(HomoglabError, ValueError):
    pass


class EmptyAmbient(HomoglabError, ValueError):
    pass


class ModelMismatch(HomoglabError, ValueError):
    pass


class ParseError(HomoglabError, ValueError):
    pass
