from src.common.exceptions import EngineError


class InvalidRankError(EngineError, ValueError):
    pass


class BundleParseError(EngineError, ValueError):
    def __init__(self, message: str, token: str):
        self.token = token
        super().__init__(message)
