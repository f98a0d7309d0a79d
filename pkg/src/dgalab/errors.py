"""Exception types shared across the package."""


class DgaError(Exception):
    """Base class for every error raised by this package."""


class MixedRings(DgaError):
    """Two values from different coefficient rings were combined."""


class NotAUnit(DgaError):
    pass


class SignatureMismatch(DgaError):
    pass


class MissingImage(DgaError):
    pass


class NegativeDegreeGenerator(DgaError):
    pass


class MissingValue(DgaError):
    pass


class IllFormedAuto(DgaError):
    """Elementary automorphism violating the unit / homogeneity / occurrence rules."""


class NoRelabelPossible(DgaError):
    pass


class IndexOutOfRange(DgaError):
    pass


class EmptyPresentation(DgaError):
    pass


class NotGroupReduction(DgaError):
    pass


class InvalidShift(DgaError):
    pass


class InternalVerificationFailure(DgaError):
    """A synthesized object failed its own re-verification; indicates a bug."""


class KindMismatch(DgaError):
    pass


class MalformedCertificate(DgaError):
    pass


class RingMismatch(DgaError):
    pass


class DuplicateGenerator(DgaError):
    pass


class UnknownGenerator(DgaError):
    pass


class ParseError(DgaError):
    """Syntax error in a presentation file or polynomial string."""

    def __init__(self, message, line=None, column=None, expected=()):
        self.message = message
        self.line = line
        self.column = column
        self.expected = tuple(expected)
        loc = ""
        if line is not None:
            loc = f"line {line}, col {column}: "
        exp = ""
        if self.expected:
            exp = " (expected: " + ", ".join(self.expected) + ")"
        super().__init__(f"{loc}{message}{exp}")
