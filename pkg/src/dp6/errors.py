"""Exception hierarchy shared by every module of the package."""


class Dp6Error(Exception):
    """Base class for all domain errors raised by dp6."""


class HomomorphismFailure(Dp6Error):
    pass


class NotAGroup(Dp6Error):
    pass


class ZeroDivisor(Dp6Error, ArithmeticError):
    """An inversion hit a non-unit; the modulus is reducible."""


class NoPrimitiveElement(Dp6Error):
    pass


class NotInvertible(Dp6Error):
    pass


class DegenerateFrame(Dp6Error):
    pass


class Indeterminate(Dp6Error):
    """The Cremona map was evaluated at one of its base points."""


class NotMonomial(Dp6Error):
    pass


class DuplicateAlpha(Dp6Error):
    pass


class SolverExhausted(Dp6Error):
    pass


class NotTorusValued(Dp6Error):
    pass


class Obstruction(Dp6Error):
    """A torus cocycle could not be lifted to an honest U-valued cocycle.

    ``defect`` maps pairs ``(s, t)`` of automorphism indices to the scalar
    ``a(s, t)`` of the lifted 2-cocycle.  ``provable`` is True only when the
    defect class is certified nontrivial; otherwise the search was merely
    bounded.
    """

    def __init__(self, message, defect=None, provable=False):
        super().__init__(message)
        self.defect = defect or {}
        self.provable = provable


class DegenerateInput(Dp6Error):
    pass


class NotGaloisStable(Dp6Error):
    pass


class NotAnAction(Dp6Error):
    pass


class NotQuadratic(Dp6Error):
    pass


class ParseError(Dp6Error):
    pass
