class LeibnizError(Exception):
    """Base class for mathematical failures (CLI exit code 1)."""


class NotNilpotent(LeibnizError):
    pass


class NonSplit(LeibnizError):
    """A splitting step needs an extension of the rationals."""


class PostconditionFailed(LeibnizError):
    pass


class PreconditionFailed(LeibnizError):
    pass


class HypothesisFailed(PreconditionFailed):
    pass


class NoConjugator(LeibnizError):
    pass


class NotAModule(PreconditionFailed):
    pass


class FormatError(ValueError):
    """Malformed algebra or map file (CLI exit code 2)."""
