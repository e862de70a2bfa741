"""Exception hierarchy shared by every module of the package."""


class ConwayError(Exception):
    """Base class for all errors raised by pconway."""


class StarUndefined(ConwayError):
    """Star requested on an element outside the star domain."""


class Overflow(ConwayError, OverflowError):
    """Bounded natural-number arithmetic left its range."""


class ShapeMismatch(ConwayError, ValueError):
    pass


class NotSquare(ShapeMismatch):
    pass


class BadSplit(ConwayError, ValueError):
    pass


class NotBijective(ConwayError, ValueError):
    pass


class SizeMismatch(ConwayError, ValueError):
    pass


class AlphabetMismatch(ConwayError, ValueError):
    pass


class WordTooLong(ConwayError, ValueError):
    pass


class NotProper(StarUndefined):
    pass


class NotCycleFree(StarUndefined):
    pass


class CoefficientStarUndefined(StarUndefined):
    pass


class CommutationViolated(ConwayError):
    pass


class UnknownLetter(ConwayError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class PreconditionViolated(ConwayError):
    pass


class IllStarred(StarUndefined):
    pass


class ExprSyntaxError(ConwayError):
    """Malformed rational expression; ``pos`` is the 0-based offset."""

    def __init__(self, msg, pos):
        super().__init__(f"{msg} at position {pos}")
        self.pos = pos


class FormatError(ConwayError, ValueError):
    """Malformed JSON automaton or Cayley table."""
