from functools import lru_cache
from pathlib import Path
from typing import Any, Dict

import yaml
from pydantic import BaseModel, Field

from src.char_classes import SplitBundle
from src.chow_ring import AmbientSpace, make_ambient
from src.k3_families.exceptions import ReferenceDataError
from src.k3_families.models import CaseLabel

REFERENCE_CASES_PATH = Path(__file__).with_name("reference_cases.yaml")


class PrintedValues(BaseModel):
    degree_formula: str = Field(description="Degree 2g-2 as printed, e.g. 2(3a+1)")
    degree_slope: int
    degree_intercept: int
    h0_normal_addends: list[int] = Field(description="Printed h0(O_S(d_i)), in summand order")
    h0_normal: int
    h0_tangent: int
    moduli_dim: int
    lattice: list[list[int]]


class ReferenceCase(BaseModel):
    label: CaseLabel
    n: int = Field(ge=2, description="Ambient is P^1 x P^n")
    bundle: str = Field(description="Bundle in CLI syntax, e.g. 1,1;1,3")
    residue: int = Field(ge=0, le=2, description="g mod 3 covered by this case")
    degree_constant: int = Field(description="c in 2g-2 = 2(3a+c)")
    projection_degree: int
    description: str
    printed: PrintedValues

    @property
    def ambient(self) -> AmbientSpace:
        return make_ambient([1, self.n])

    @property
    def split_bundle(self) -> SplitBundle:
        return SplitBundle.parse(self.bundle)

    def twist_for_genus(self, genus: int) -> int:
        return (genus - 1 - self.degree_constant) // 3


class KnownDiscrepancy(BaseModel):
    location: str
    printed_value: int
    computed_value: int


class ReferenceCases(BaseModel):
    cases: list[ReferenceCase] = Field(default_factory=list)
    known_discrepancies: list[KnownDiscrepancy] = Field(default_factory=list)

    @classmethod
    def load(cls, path: Path = REFERENCE_CASES_PATH) -> "ReferenceCases":
        if not path.exists():
            raise ReferenceDataError(f"Reference data not found: {path}")
        try:
            with open(path, "r") as file:
                yaml_data: Dict[Any, Any] = yaml.safe_load(file)
            return ReferenceCases(**yaml_data)
        except Exception as e:
            raise ReferenceDataError(f"Error loading reference data: {str(e)}")

    def by_label(self, label: CaseLabel) -> ReferenceCase:
        for case in self.cases:
            if case.label == label:
                return case
        raise ReferenceDataError(f"No reference case labelled {label.value}")

    def by_residue(self, residue: int) -> ReferenceCase:
        for case in self.cases:
            if case.residue == residue:
                return case
        raise ReferenceDataError(f"No reference case for g = {residue} mod 3")

    def matching(self, ambient: AmbientSpace, bundle: SplitBundle) -> ReferenceCase | None:
        for case in self.cases:
            if case.ambient == ambient and case.split_bundle.canonical() == bundle.canonical():
                return case
        return None


@lru_cache(maxsize=1)
def reference_cases() -> ReferenceCases:
    return ReferenceCases.load()
