"""Exception hierarchy shared by every module of the package."""


class DressError(Exception):
    """Base class for all errors raised by :mod:`dressfact`."""


class ZeroInput(DressError, ValueError):
    """An operation that needs a nonzero polynomial or ring element got zero."""


class BothZero(ZeroInput):
    """gcd of two zero polynomials is undefined."""


class ZeroDenominator(DressError, ZeroDivisionError):
    pass


class NotInDress(DressError, ValueError):
    """The fraction is not an element of the minimal Dress ring.

    ``reason`` is one of :data:`DENOMINATOR_HAS_REAL_ROOT` or
    :data:`DEGREE_TOO_LARGE`.
    """

    DENOMINATOR_HAS_REAL_ROOT = "DenominatorHasRealRoot"
    DEGREE_TOO_LARGE = "DegreeTooLarge"

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)


class NotAUnit(DressError, ValueError):
    pass


class PreconditionViolated(DressError, ValueError):
    pass


class UnsupportedIrrationalSharedRoot(PreconditionViolated):
    """The shared root to peel off is irrational, so no factor over Q exists."""


class SearchExhausted(DressError, RuntimeError):
    """A certified search ran out of halving steps before succeeding."""


class NotRowForm(DressError, ValueError):
    pass


class NotSingular(DressError, ValueError):
    pass


class NoApplicableRule(DressError):
    """No factorization rule fired.

    This never means that no factorization exists. ``diagnostics`` maps each
    rule name to the precondition that failed for it.
    """

    def __init__(self, diagnostics: dict[str, str]):
        self.diagnostics = dict(diagnostics)
        lines = [f"{rule}: {why}" for rule, why in self.diagnostics.items()]
        super().__init__("no applicable rule\n  " + "\n  ".join(lines))


class ParseError(DressError, ValueError):
    pass
