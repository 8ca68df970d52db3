"""Exception hierarchy shared by all modules."""


class SignedCircError(Exception):
    """Base class for errors raised by this package."""


class ParseError(SignedCircError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


class NotAWalk(SignedCircError):
    pass


class StructureMismatch(SignedCircError):
    pass


class NotDegenerate(SignedCircError):
    def __init__(self, k, vertex=None, degree=None):
        self.k = k
        msg = f"graph is not {k}-degenerate"
        if vertex is not None:
            msg += f" (minimum remaining degree {degree} at vertex {vertex})"
        super().__init__(msg)


class NonSimpleInput(SignedCircError):
    pass


class NotPositiveEdge(SignedCircError):
    pass


class OutOfRange(SignedCircError):
    pass


class DomainMismatch(SignedCircError):
    pass


class EpsOutOfRange(SignedCircError):
    pass


class BadRadius(SignedCircError):
    pass


class InvalidInputColoring(SignedCircError):
    pass


class InvalidColoring(SignedCircError):
    pass


class PositiveLoopInContraction(SignedCircError):
    pass


class VerificationFailure(SignedCircError):
    """A constructed certificate failed its mandatory re-verification."""
