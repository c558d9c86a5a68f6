"""Exception types shared across the ramlab modules.

Every error raised by the library derives from RamlabError.  Errors carry a
short machine-readable ``code`` (the class name) used by the CLI when it
serialises task failures.
"""


class RamlabError(Exception):
    """Base class for all ramlab errors."""

    @property
    def code(self) -> str:
        return type(self).__name__


# -- exact arithmetic ---------------------------------------------------------

class ZeroGerm(RamlabError):
    """A Laurent germ that is zero to its precision was inverted."""


class PrecisionExhausted(RamlabError):
    """A valuation or polar part could not be certified at any tried precision."""


# -- ideals -------------------------------------------------------------------

class NotZeroDimensional(RamlabError):
    """A zero-dimensional ideal was required but the standard-monomial basis is infinite."""


class UnsupportedIdealShape(RamlabError):
    """Exact thickness computation needs a principal, monomial or zero-dimensional ideal."""


class NotContaining(RamlabError):
    """Assisted-mode verification failed: the ideal is not contained in the claimed radical."""


class NotInRadical(RamlabError):
    """Assisted-mode verification failed: a claimed radical generator is not in the radical."""


# -- local geometry -----------------------------------------------------------

class NotOnCurve(RamlabError):
    """The point does not lie on the curve."""


class SingularAtPoint(RamlabError):
    """Hensel parametrisation requires a nonvanishing partial derivative at the point."""


# -- blowups ------------------------------------------------------------------

class NotFixingCenter(RamlabError):
    """The automorphism does not fix the blowup center."""


class NotRegularOnChart(RamlabError):
    """The transported automorphism maps the chart's exceptional line out of the chart."""


class UnresolvableWithoutExtension(RamlabError):
    """A singular point has coordinates outside the working field; resolution aborted."""


# -- ramification -------------------------------------------------------------

class CurveInDivisor(RamlabError):
    """The curve is contained in the extension divisor."""


class GenericFiberSingular(RamlabError):
    """The generic fiber of the test function cannot be Hensel-parametrised exactly."""


class NotAutomorphism(RamlabError):
    """The substitution is not an automorphism of the trait."""


class LineInDivisor(RamlabError):
    """The line is contained in the extension divisor."""


class SemicontinuityViolation(RamlabError):
    """Internal consistency check failed: special dimtot exceeds generic dimtot."""


# -- bounds -------------------------------------------------------------------

class NotMonic(RamlabError):
    """The presentation polynomial must be monic in the adjoined variable."""


class AnnihilatorCapExceeded(RamlabError):
    """No power of the divisor generator entered the annihilator below the cap."""


class InvalidIx(RamlabError):
    """The local intersection number i_x must be 1 or 2."""


# -- sweeps -------------------------------------------------------------------

class NotVanishing(RamlabError):
    """The test function does not vanish at the base point."""


class IsolationUndecidable(RamlabError):
    """The isolation system has solutions outside the working field; no verdict."""


class NoTestFunctionFound(RamlabError):
    """No certified transverse test function was found among the candidates."""


# -- cli ----------------------------------------------------------------------

class ManifestError(RamlabError):
    """A manifest failed to parse or validate; carries a source position."""

    def __init__(self, message: str, line: int = 0, column: int = 0):
        super().__init__(message)
        self.message = message
        self.line = line
        self.column = column

    def __str__(self) -> str:
        if self.line:
            return f"{self.line}:{self.column}: {self.message}"
        return self.message
