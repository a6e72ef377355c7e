from typing import Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.char_classes import Multidegree, SplitBundle
from src.chow_ring import AmbientSpace
from src.riemann_roch.exceptions import InvalidCompleteIntersectionError


def complete_intersection_violations(ambient: AmbientSpace, bundle: SplitBundle) -> list[str]:
    violations = []
    if bundle.factor_count != ambient.factor_count:
        violations.append(
            f"bundle summands have {bundle.factor_count} entries, ambient has {ambient.factor_count} factors"
        )
        return violations
    if bundle.rank >= ambient.dimension:
        violations.append(f"rank {bundle.rank} is not below dim P = {ambient.dimension}")
    for summand in bundle.summands:
        if not summand.is_nonnegative():
            violations.append(f"summand O({summand}) has a negative degree")
        elif summand.is_zero():
            violations.append(f"summand O({summand}) is trivial")
    return violations


class CompleteIntersection(BaseModel):
    """Zero locus S = Z(s) of a general section of a split bundle on the ambient."""

    model_config = ConfigDict(frozen=True)

    ambient: AmbientSpace
    bundle: SplitBundle

    @model_validator(mode="after")
    def validate_bundle(self):
        violations = complete_intersection_violations(self.ambient, self.bundle)
        if violations:
            raise ValueError("; ".join(violations))
        return self

    @classmethod
    def build(cls, ambient: AmbientSpace, bundle: SplitBundle) -> "CompleteIntersection":
        violations = complete_intersection_violations(ambient, bundle)
        if violations:
            raise InvalidCompleteIntersectionError(
                f"not a complete intersection on {ambient.label()}: " + "; ".join(violations)
            )
        return cls(ambient=ambient, bundle=bundle)


class SectionCount(BaseModel):
    """chi(S, O_S(D)), labelled h0 only where the higher cohomology is assumed to vanish."""

    model_config = ConfigDict(frozen=True)

    twist: Multidegree
    value: int
    label: Literal["h0", "chi"] = Field(description="h0 when every degree is >= 0 and D != 0")
    vanishing_assumed: bool
