"""Adjunction, restricted intersection numbers, genus and deformation counts."""

from sympy import Matrix

from src.char_classes import Multidegree, SplitBundle, c1, det_bundle, top_chern
from src.char_classes.exceptions import InvalidRankError
from src.chow_ring import AmbientSpace, generator, integrate, integrate_product
from src.common.log import get_logger
from src.k3_families.exceptions import InvalidPolarizationError, NotK3Error
from src.k3_families.models import (
    CheckResult,
    DegreeFormula,
    NormalSections,
    RestrictedPairing,
)
from src.riemann_roch import CompleteIntersection, euler_char_ci, section_count
from src.riemann_roch.exceptions import InternalConsistencyError, ParityError

logger = get_logger("k3_families.geometry")


def anticanonical(ambient: AmbientSpace) -> Multidegree:
    return Multidegree.of(*(m + 1 for m in ambient.dims))


def check_k3(ambient: AmbientSpace, bundle: SplitBundle) -> CheckResult:
    """Adjunction test: rank(E) = dim P - 2, det E = -K_P, every summand globally generated."""
    if bundle.factor_count != ambient.factor_count:
        return CheckResult(
            passed=False,
            details=(
                f"bundle summands have {bundle.factor_count} entries, "
                f"{ambient.label()} has {ambient.factor_count} factors",
            ),
        )

    violations = []
    if bundle.rank != ambient.dimension - 2:
        violations.append(f"rank {bundle.rank} != dim P - 2 = {ambient.dimension - 2}")
    det, anti = det_bundle(bundle), anticanonical(ambient)
    if det != anti:
        violations.append(f"det E = O({det}) != -K_P = O({anti})")
    for summand in bundle.summands:
        if not summand.is_nonnegative():
            violations.append(f"summand O({summand}) has a negative degree")
        elif summand.is_zero():
            violations.append(f"summand O({summand}) is trivial")

    if violations:
        return CheckResult(passed=False, details=tuple(violations))
    return CheckResult(
        passed=True,
        details=(
            f"rank {bundle.rank} = dim P - 2",
            f"det E = O({det}) = -K_P",
            "all summands have non-negative, nonzero degrees",
        ),
    )


def structure_sheaf_chi(ambient: AmbientSpace, bundle: SplitBundle) -> int:
    """chi(O_S) of the zero locus; 2 for a connected K3, 0 for an abelian surface."""
    variety = CompleteIntersection.build(ambient, bundle)
    return euler_char_ci(variety, Multidegree.zero(ambient.factor_count))


def is_connected_k3(ambient: AmbientSpace, bundle: SplitBundle) -> bool:
    return check_k3(ambient, bundle).passed and structure_sheaf_chi(ambient, bundle) == 2


def _require_k3(ambient: AmbientSpace, bundle: SplitBundle) -> None:
    result = check_k3(ambient, bundle)
    if not result.passed:
        raise NotK3Error(
            f"E = {bundle} on {ambient.label()} does not cut out K3 surfaces: " + "; ".join(result.details)
        )
    chi = structure_sheaf_chi(ambient, bundle)
    if chi != 2:
        raise NotK3Error(
            f"E = {bundle} on {ambient.label()} does not cut out a connected K3 surface: "
            f"chi(O_S) = {chi} != 2"
        )


def restricted_pairing(ambient: AmbientSpace, bundle: SplitBundle) -> RestrictedPairing:
    if bundle.rank != ambient.dimension - 2:
        raise InvalidRankError(
            f"rank {bundle.rank} bundle on {ambient.label()} does not cut out surfaces"
        )
    fundamental = top_chern(ambient, bundle)
    k = ambient.factor_count
    rows = []
    for i in range(k):
        row = []
        for j in range(k):
            value = integrate_product(generator(ambient, i) * generator(ambient, j), fundamental)
            if value.denominator != 1:
                raise InternalConsistencyError(f"non-integral intersection number {value}")
            row.append(int(value.numerator))
        rows.append(tuple(row))
    logger.debug(f"[S] = {fundamental.to_text()}, pairing {rows}")
    return RestrictedPairing(ambient=ambient, fundamental_class=fundamental, matrix=tuple(rows))


def polarization_degree(ambient: AmbientSpace, bundle: SplitBundle, polarization: Multidegree) -> int:
    line = c1(ambient, polarization)
    value = integrate(line * line * top_chern(ambient, bundle))
    if value.denominator != 1:
        raise InternalConsistencyError(f"non-integral polarization degree {value}")
    return int(value.numerator)


def polarization_genus(ambient: AmbientSpace, bundle: SplitBundle, polarization: Multidegree) -> int:
    _require_k3(ambient, bundle)
    degree = polarization_degree(ambient, bundle, polarization)
    if degree % 2:
        raise ParityError(f"L^2 = {degree} is odd for L = O({polarization}) on E = {bundle}")
    return 1 + degree // 2


def twist(ambient: AmbientSpace, a: int) -> Multidegree:
    """The polarization O_P(a, 1) on a two-factor ambient."""
    if ambient.factor_count != 2:
        raise InvalidPolarizationError(
            f"the twist O(a,1) needs a two-factor ambient, got {ambient.label()}"
        )
    if a < 1:
        raise InvalidPolarizationError(f"twist a must be >= 1, got {a}")
    return Multidegree.of(a, 1)


def genus_of(ambient: AmbientSpace, bundle: SplitBundle, a: int) -> int:
    return polarization_genus(ambient, bundle, twist(ambient, a))


def degree_formula(pairing: RestrictedPairing) -> DegreeFormula:
    m = pairing.matrix
    # (a h_1 + h_2 + ... + h_k)^2 . [S], expanded in a
    rest = range(1, len(m))
    return DegreeFormula(
        quadratic=m[0][0],
        linear=2 * sum(m[0][j] for j in rest),
        constant=sum(m[i][j] for i in rest for j in rest),
    )


def lattice_discriminant(pairing: RestrictedPairing) -> int:
    return int(Matrix(pairing.matrix).det())


def h0_tangent_restricted(ambient: AmbientSpace) -> int:
    # h0(T_P^m) = (m+1)^2 - 1 from the Euler sequence
    return sum(m * (m + 2) for m in ambient.dims)


def h0_normal(variety: CompleteIntersection) -> NormalSections:
    _require_k3(variety.ambient, variety.bundle)
    breakdown = tuple(section_count(variety, summand) for summand in variety.bundle.summands)
    return NormalSections(total=sum(s.value for s in breakdown), breakdown=breakdown)


def moduli_dimension(variety: CompleteIntersection) -> int:
    return h0_normal(variety).total - h0_tangent_restricted(variety.ambient)
