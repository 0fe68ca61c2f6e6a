"""Exception hierarchy shared by the vbridge modules."""


class VBridgeError(Exception):
    """Base class for all library errors."""


class GaussCodeError(VBridgeError, ValueError):
    """Raised when a Gauss code cannot be turned into a valid diagram."""


class MalformedToken(GaussCodeError):
    pass


class DuplicateRole(GaussCodeError):
    pass


class SignMismatch(GaussCodeError):
    pass


class DanglingChord(GaussCodeError):
    pass


class UnknownChord(VBridgeError, KeyError):
    pass


class CutOutOfRange(VBridgeError, IndexError):
    pass


class InapplicableMove(VBridgeError, ValueError):
    pass


class UnknownGenerator(VBridgeError, KeyError):
    pass


class NoAuxiliaryGenerator(VBridgeError, ValueError):
    pass


class RingMismatch(VBridgeError, TypeError):
    pass


class PresentationSyntaxError(VBridgeError, ValueError):
    pass


class GroebnerLimitExceeded(VBridgeError, RuntimeError):
    """A Gröbner basis computation ran past its work limit; the question stays undecided."""
