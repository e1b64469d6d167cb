"""Exception types shared across the package."""


class TwistAlgError(Exception):
    pass


class InvalidElementError(TwistAlgError, ValueError):
    """A group element index is outside [0, order)."""


class ContextMismatchError(TwistAlgError, ValueError):
    """Operands live over different (group, twist) contexts or scalar modes."""


class UnsupportedTwistError(TwistAlgError, ValueError):
    """The operation needs a twist law (invertive / proper) the table lacks."""


class TableFormatError(TwistAlgError, ValueError):
    """A sign table violates the +/-1 or unitality constraints."""


class BladeParseError(TwistAlgError, ValueError):
    """Malformed blade text."""


class IncompleteEnumerationError(TwistAlgError, RuntimeError):
    """An operation required a complete enumeration but got a partial one."""
