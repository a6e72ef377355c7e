from enum import Enum
from typing import Optional

from pydantic import BaseModel, ConfigDict, Field, model_validator

from src.char_classes import Multidegree, SplitBundle
from src.chow_ring import AmbientSpace, ChowClass
from src.riemann_roch import SectionCount


class CaseLabel(Enum):
    I = "I"
    II = "II"
    III = "III"
    OTHER = "other"


class RestrictedPairing(BaseModel):
    """Intersection numbers h_i|S . h_j|S = integrate(h_i * h_j * [S])."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    ambient: AmbientSpace
    fundamental_class: ChowClass
    matrix: tuple[tuple[int, ...], ...]

    @model_validator(mode="after")
    def validate_matrix(self):
        k = self.ambient.factor_count
        if len(self.matrix) != k or any(len(row) != k for row in self.matrix):
            raise ValueError(f"pairing matrix must be {k}x{k}")
        for i in range(k):
            for j in range(i):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError(f"pairing matrix is not symmetric at ({i}, {j})")
        return self


class FamilySpec(BaseModel):
    """One family of K3 surfaces: ambient, defining bundle and polarization twist."""

    model_config = ConfigDict(frozen=True)

    ambient: AmbientSpace
    bundle: SplitBundle
    polarization: Multidegree
    label: CaseLabel = CaseLabel.OTHER
    description: Optional[str] = None

    @model_validator(mode="after")
    def validate_shape(self):
        if self.bundle.rank != self.ambient.dimension - 2:
            raise ValueError(
                f"rank {self.bundle.rank} bundle on {self.ambient.label()} does not cut out surfaces"
            )
        if self.bundle.factor_count != self.ambient.factor_count:
            raise ValueError("bundle summands do not match the ambient factors")
        if len(self.polarization) != self.ambient.factor_count:
            raise ValueError("polarization does not match the ambient factors")
        return self

    def sort_key(self) -> tuple:
        return (self.ambient.dims, self.bundle.sort_key(), self.polarization.degs)

    def title(self) -> str:
        case = f"Case {self.label.value}" if self.label != CaseLabel.OTHER else "Family"
        return f"{case}: {self.ambient.label()}, E = {self.bundle}, L = O({self.polarization})"


class CheckResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    passed: bool
    details: tuple[str, ...] = ()


class Certificate(BaseModel):
    """Machine-checked hypotheses for the Franchetta property of the family over P(V)."""

    model_config = ConfigDict(frozen=True)

    k3_condition: CheckResult
    global_generation: CheckResult
    mp_surjective: CheckResult
    assumptions: tuple[str, ...] = Field(min_length=1)
    sections_of_bundle: Optional[int] = Field(
        default=None, description="dim V = h0(P, E), when E is globally generated"
    )

    @property
    def passed(self) -> bool:
        return self.k3_condition.passed and self.global_generation.passed and self.mp_surjective.passed

    @property
    def parameter_space_dim(self) -> Optional[int]:
        if self.sections_of_bundle is None:
            return None
        return self.sections_of_bundle - 1


class NormalSections(BaseModel):
    model_config = ConfigDict(frozen=True)

    total: int
    breakdown: tuple[SectionCount, ...]


class Discrepancy(BaseModel):
    model_config = ConfigDict(frozen=True)

    printed_value: int
    computed_value: int
    location: str


class DegreeFormula(BaseModel):
    """(a*h_1 + h_2 + ...)^2 . [S] as quadratic + linear * a + constant * 1 in the twist a."""

    model_config = ConfigDict(frozen=True)

    quadratic: int
    linear: int
    constant: int

    def at(self, a: int) -> int:
        return self.quadratic * a * a + self.linear * a + self.constant


class VerificationReport(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: FamilySpec
    genus: int
    degree: int
    degree_formula: DegreeFormula
    pairing: RestrictedPairing
    picard_lattice: tuple[tuple[int, int], tuple[int, int]]
    lattice_discriminant: int
    projection_degree: int
    h0_normal: NormalSections
    h0_tangent: int
    moduli_dim: int
    certificate: Certificate
    discrepancies: tuple[Discrepancy, ...] = ()

    @model_validator(mode="after")
    def validate_bookkeeping(self):
        if self.degree != 2 * self.genus - 2:
            raise ValueError(f"degree {self.degree} != 2g - 2 for g = {self.genus}")
        if self.moduli_dim != self.h0_normal.total - self.h0_tangent:
            raise ValueError("moduli dimension is not h0(N) - h0(T_P|S)")
        return self
