"""Exception types shared across the library."""


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


class SingularTimeError(DomainError):
    """Propagation time too close to t = 0 where kernels are distributions."""


class FocalSingularityError(DomainError):
    """Magnetic kernel evaluated at a transverse refocusing time (sin(w t) ~ 0)."""


class DegenerateFieldError(ValueError):
    """A field with (numerically) zero norm cannot be normalized."""


class StepCountError(RuntimeError):
    """Split-step norm drift exceeded tolerance; more steps are needed."""


class GridLeakWarning(UserWarning):
    """More than 0.1% of the norm escaped the destination grid."""


class ConfigError(ValueError):
    """Scenario config failed validation; collects every error, not just the first.

    ``errors`` is a list of (line_number, message) pairs; line 0 marks
    file-level problems (e.g. a missing required section).
    """

    def __init__(self, errors):
        self.errors = list(errors)
        lines = [f"line {ln}: {msg}" if ln else msg for ln, msg in self.errors]
        super().__init__("invalid scenario config:\n  " + "\n  ".join(lines))
