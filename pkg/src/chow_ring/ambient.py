from pydantic import BaseModel, ConfigDict, Field, ValidationError, model_validator

from src.chow_ring.exceptions import InvalidAmbientError


class AmbientSpace(BaseModel):
    """A product of projective spaces P^m1 x ... x P^mk.

    The factor dimensions fix the Chow ring presentation
    Z[h1, ..., hk] / (h1^(m1+1), ..., hk^(mk+1)).
    """

    model_config = ConfigDict(frozen=True)

    dims: tuple[int, ...] = Field(description="Factor dimensions m_i, each >= 1")

    def __init__(self, **data):
        try:
            super().__init__(**data)
        except ValidationError as exc:
            detail = exc.errors()[0]["msg"]
            raise InvalidAmbientError(f"invalid ambient {data.get('dims')!r}: {detail}") from exc

    @model_validator(mode="after")
    def validate_dims(self):
        if not self.dims:
            raise ValueError("an ambient space needs at least one factor")
        if any(m < 1 for m in self.dims):
            raise ValueError(f"factor dimensions must be positive: {list(self.dims)}")
        return self

    @property
    def factor_count(self) -> int:
        return len(self.dims)

    @property
    def dimension(self) -> int:
        return sum(self.dims)

    @property
    def top_exponents(self) -> tuple[int, ...]:
        return self.dims

    def label(self) -> str:
        return " x ".join(f"P^{m}" for m in self.dims)

    def __str__(self) -> str:
        return ",".join(str(m) for m in self.dims)
