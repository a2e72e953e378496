"""Exception types raised across the package."""


class BicliffError(Exception):
    pass


class DimensionMismatch(BicliffError, ValueError):
    pass


class NotScalar(BicliffError, ValueError):
    """A matrix expected to be a multiple of the identity is not."""


class NonFinite(BicliffError, ArithmeticError):
    pass


class NullVector(BicliffError, ZeroDivisionError):
    """The paravector has zero norm and therefore no inverse (point at infinity)."""


class NoMatch(BicliffError, LookupError):
    """A matrix is not a signed product of the primitive units."""


class NotClosed(BicliffError, AssertionError):
    pass


class NotParavector(BicliffError, ValueError):
    pass


class MapsToInfinity(BicliffError, ZeroDivisionError):
    pass


class GridTooSmall(BicliffError, ValueError):
    pass


class PoleOnGrid(BicliffError, ValueError):
    pass
