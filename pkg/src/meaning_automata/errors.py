"""Exception types raised across the package."""


class MeaningAutomataError(Exception):
    """Base class for all package errors."""


class AlphabetViolation(MeaningAutomataError, ValueError):
    pass


class AlphabetMismatch(MeaningAutomataError, ValueError):
    pass


class IncompleteMachine(MeaningAutomataError, ValueError):
    pass


class NondeterministicMachine(MeaningAutomataError, ValueError):
    pass


class ParseError(MeaningAutomataError, ValueError):
    """Malformed text input. ``line`` is 1-based, or None when not line-specific."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DuplicateId(MeaningAutomataError, ValueError):
    pass


class ExtensionOutOfRange(MeaningAutomataError, ValueError):
    pass


class UnknownSentence(MeaningAutomataError, LookupError):
    pass


class WidthTooSmall(MeaningAutomataError, ValueError):
    pass


class HourOutOfRange(MeaningAutomataError, ValueError):
    pass


class UnknownCorpus(MeaningAutomataError, LookupError):
    pass


class EmptyCorpus(MeaningAutomataError, ValueError):
    pass


class InvalidRounds(MeaningAutomataError, ValueError):
    pass


class UnknownMeasure(MeaningAutomataError, ValueError):
    pass


class UnknownMachine(MeaningAutomataError, LookupError):
    pass


class EquivalenceCheckFailed(MeaningAutomataError, RuntimeError):
    pass


class CheckFailed(MeaningAutomataError):
    """One or more reproduction checks failed; ``measures`` names them."""

    def __init__(self, measures):
        self.measures = list(measures)
        super().__init__("failed checks: " + ", ".join(self.measures))
