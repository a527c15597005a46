"""Exception hierarchy shared by the library and the CLI exit-code mapping."""


class PPIError(Exception):
    """Base class for all errors raised by ppindex."""


class InputError(PPIError, ValueError):
    """Malformed operand: wrong shape, non-finite entries, bad integer arguments."""


class PreconditionError(PPIError):
    """A domain-level precondition failed (e.g. a power is not a partial isometry).

    ``power`` names the offending exponent when one is known.
    """

    def __init__(self, message, power=None):
        super().__init__(message)
        self.power = power


class InfeasibleError(PreconditionError):
    """Witness requested for a (j, k, n) triple that admits none."""

    def __init__(self, message, verdict):
        super().__init__(message)
        self.verdict = verdict


class NumericError(PPIError):
    """A computed object failed its own integrity checks beyond tolerance."""

    def __init__(self, message, residuals=None):
        super().__init__(message)
        self.residuals = dict(residuals or {})


class ToleranceDiagnosticError(NumericError):
    """Discrete decisions came out mutually inconsistent.

    This can only happen when the tolerance policy misclassifies a singular
    value or a projection residual. ``power`` and ``singular_values`` point at
    the computation that is most likely responsible.
    """

    def __init__(self, message, power=None, singular_values=None, residuals=None):
        super().__init__(message, residuals)
        self.power = power
        self.singular_values = singular_values
