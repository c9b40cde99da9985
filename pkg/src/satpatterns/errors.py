"""Exception hierarchy shared by every module of the package."""


class SatPatternsError(Exception):
    """Base class for all errors raised by satpatterns."""


# clause canonicalization


class CanonFailure(SatPatternsError):
    """A literal list could not be turned into a canonical 3SAT clause."""


class TautologyError(CanonFailure):
    """Clause contains both x and not-x; it is vacuously true."""


class TooManyLiteralsError(CanonFailure):
    """More than three distinct variables in one clause."""


class EmptyClauseError(CanonFailure):
    """Clause with no literals."""


class VariableOutOfRange(SatPatternsError):
    pass


class UnassignedVariable(SatPatternsError, KeyError):
    pass


# oracles / miner


class TooManyVariables(SatPatternsError):
    """Instance is too large for an exhaustive procedure."""


class TooManyVariablesForCanon(TooManyVariables):
    pass


class DimensionMismatch(SatPatternsError):
    pass


class BoundsTooLarge(SatPatternsError):
    pass


class SoundnessViolation(SatPatternsError):
    """A pattern-matching instance was found satisfiable."""


# parsers


class ParseError(SatPatternsError):
    pass


class MalformedHeader(ParseError):
    pass


class LiteralOutOfRange(ParseError):
    pass


class UnterminatedClause(ParseError):
    pass


class FormulaSyntaxError(ParseError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position
