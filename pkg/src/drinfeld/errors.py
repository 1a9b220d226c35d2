"""Exception hierarchy.

Every error raised by the library derives from :class:`DrinfeldError`.
Errors that signal a *mathematical* failure (a map that is not an isogeny,
a module that is not Drinfeld, ...) derive from :class:`MathematicalError`;
the CLI maps those to exit code 1 and everything input-related to exit code 2.
"""


class DrinfeldError(Exception):
    pass


class MathematicalError(DrinfeldError):
    pass


class MalformedInput(DrinfeldError):
    pass


class NotIrreducible(MalformedInput):
    pass


class NonUnitLeadingCoefficient(MathematicalError):
    pass


class PreconditionViolated(MathematicalError):
    pass


class SingularLeadingMatrix(MathematicalError):
    pass


class NotDrinfeld(MathematicalError):
    pass


class NotAMorphism(MathematicalError):
    pass


class UnsupportedBase(MathematicalError):
    pass


class UnsupportedShape(MathematicalError):
    pass


class NotAnIsogeny(MathematicalError):
    pass


class NotAbelian(MathematicalError):
    pass


class NotEffective(MathematicalError):
    pass


class NotEtale(MathematicalError):
    pass


class NotCoprime(MathematicalError):
    pass


class MalformedPresentation(MalformedInput):
    pass


class BaseTooLarge(MathematicalError):
    pass


class ResidueFieldTooSmall(MathematicalError):
    pass


class PrecisionTooLow(MathematicalError):
    pass


class ExtensionCapExceeded(MathematicalError):
    pass
