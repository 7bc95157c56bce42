"""Exception hierarchy. Each class carries the CLI exit code it maps to."""


class EngineError(Exception):
    exit_code = 4


class ParseError(EngineError):
    exit_code = 1


class InvalidOrder(ParseError):
    pass


class DimensionError(EngineError):
    exit_code = 1


class UnsupportedParameters(EngineError):
    exit_code = 1


class NotArithmetic(EngineError):
    exit_code = 2


class LikelyInfinite(EngineError):
    exit_code = 2


class ConditionViolated(EngineError):
    exit_code = 3


class NonDegeneracyViolated(ConditionViolated):
    pass


class SearchFailed(ConditionViolated):
    pass


class InternalInvariantViolation(EngineError):
    exit_code = 4


class NotARootSystem(InternalInvariantViolation):
    pass


class NotFiniteType(InternalInvariantViolation):
    pass


class RecoveryMismatch(InternalInvariantViolation):
    pass


class EmbeddingMismatch(InternalInvariantViolation):
    pass


class ManinCheckFailed(InternalInvariantViolation):
    pass
