from src.common.exceptions import EngineError


class UsageError(EngineError, ValueError):
    pass
