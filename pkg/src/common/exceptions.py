class EngineError(Exception):
    """Base class for every error raised by the intersection engine."""

    def __init__(self, message: str):
        self.message = message
        super().__init__(self.message)
