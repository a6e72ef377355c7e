from src.common.exceptions import EngineError


class InvalidAmbientError(EngineError, ValueError):
    pass


class AmbientMismatchError(EngineError, ValueError):
    pass


class FactorIndexError(EngineError, IndexError):
    pass


class ExponentError(EngineError, ValueError):
    pass


class NonNilpotentError(EngineError, ValueError):
    pass
