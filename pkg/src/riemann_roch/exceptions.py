from src.common.exceptions import EngineError


class InternalConsistencyError(EngineError):
    """An exact computation produced a value that must be impossible (an arithmetic bug)."""


class ParityError(EngineError, ValueError):
    pass


class InvalidCompleteIntersectionError(EngineError, ValueError):
    pass
