from src.common.exceptions import EngineError


class NotK3Error(EngineError, ValueError):
    pass


class InvalidPolarizationError(EngineError, ValueError):
    pass


class GenusOutOfRangeError(EngineError, ValueError):
    def __init__(self, genus: int):
        self.genus = genus
        super().__init__(
            f"genus {genus} is out of range: the constructions cover g >= 8; "
            "the small genus case is covered by [PSY]"
        )


class SearchBoundsError(EngineError, ValueError):
    pass


class ReferenceDataError(EngineError):
    pass
