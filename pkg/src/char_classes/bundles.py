from typing import Sequence

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.char_classes.exceptions import BundleParseError


class Multidegree(BaseModel):
    """The line bundle O_P(d1, ..., dk) on a product of projective spaces."""

    model_config = ConfigDict(frozen=True)

    degs: tuple[int, ...] = Field(description="One integer degree per ambient factor")

    @model_validator(mode="after")
    def validate_degs(self):
        if not self.degs:
            raise ValueError("a multidegree needs at least one entry")
        return self

    @classmethod
    def of(cls, *degs: int) -> "Multidegree":
        return cls(degs=tuple(degs))

    @classmethod
    def zero(cls, length: int) -> "Multidegree":
        return cls(degs=(0,) * length)

    @classmethod
    def parse(cls, text: str) -> "Multidegree":
        tokens = [token.strip() for token in text.split(",")]
        degs = []
        for token in tokens:
            try:
                degs.append(int(token))
            except ValueError:
                raise BundleParseError(
                    f"invalid integer {token!r} in multidegree {text!r}", token
                ) from None
        return cls(degs=tuple(degs))

    def __len__(self) -> int:
        return len(self.degs)

    def __add__(self, other: "Multidegree") -> "Multidegree":
        return Multidegree(degs=tuple(a + b for a, b in zip(self.degs, other.degs, strict=True)))

    def __sub__(self, other: "Multidegree") -> "Multidegree":
        return Multidegree(degs=tuple(a - b for a, b in zip(self.degs, other.degs, strict=True)))

    def is_nonnegative(self) -> bool:
        return all(d >= 0 for d in self.degs)

    def is_zero(self) -> bool:
        return all(d == 0 for d in self.degs)

    def __str__(self) -> str:
        return ",".join(str(d) for d in self.degs)


class SplitBundle(BaseModel):
    """A direct sum of line bundles, given by its summands' multidegrees."""

    model_config = ConfigDict(frozen=True)

    summands: tuple[Multidegree, ...] = Field(description="Summand line bundles, at least one")

    @model_validator(mode="after")
    def validate_summands(self):
        if not self.summands:
            raise ValueError("a split bundle needs at least one summand")
        lengths = {len(summand) for summand in self.summands}
        if len(lengths) != 1:
            raise ValueError(f"summands disagree on the number of factors: {sorted(lengths)}")
        return self

    @classmethod
    def of(cls, *summands: Sequence[int]) -> "SplitBundle":
        return cls(summands=tuple(Multidegree(degs=tuple(s)) for s in summands))

    @classmethod
    def parse(cls, text: str) -> "SplitBundle":
        parts = [part for part in text.split(";")]
        if not text.strip() or any(not part.strip() for part in parts):
            raise BundleParseError(f"empty summand in bundle {text!r}", text)
        summands = tuple(Multidegree.parse(part) for part in parts)
        if len({len(s) for s in summands}) != 1:
            raise BundleParseError(f"summands of {text!r} have different lengths", text)
        return cls(summands=summands)

    @property
    def rank(self) -> int:
        return len(self.summands)

    @property
    def factor_count(self) -> int:
        return len(self.summands[0])

    def direct_sum(self, other: "SplitBundle") -> "SplitBundle":
        return SplitBundle(summands=self.summands + other.summands)

    def canonical(self) -> "SplitBundle":
        return SplitBundle(summands=tuple(sorted(self.summands, key=lambda s: s.degs)))

    def sort_key(self) -> tuple[tuple[int, ...], ...]:
        return tuple(s.degs for s in self.summands)

    def __str__(self) -> str:
        return ";".join(str(s) for s in self.summands)
