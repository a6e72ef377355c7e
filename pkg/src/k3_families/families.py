from src.common.log import get_logger
from src.k3_families.exceptions import GenusOutOfRangeError
from src.k3_families.geometry import twist
from src.k3_families.models import FamilySpec
from src.k3_families.reference import ReferenceCase, reference_cases

logger = get_logger("k3_families.families")

MIN_GENUS = 8


def family_from_case(case: ReferenceCase, a: int) -> FamilySpec:
    ambient = case.ambient
    return FamilySpec(
        ambient=ambient,
        bundle=case.split_bundle,
        polarization=twist(ambient, a),
        label=case.label,
        description=case.description,
    )


def family_for_genus(genus: int) -> FamilySpec:
    """The construction covering ``genus``: one case per residue of g mod 3."""
    if genus < MIN_GENUS:
        raise GenusOutOfRangeError(genus)
    case = reference_cases().by_residue(genus % 3)
    a = case.twist_for_genus(genus)
    logger.debug(f"g = {genus}: Case {case.label.value} with a = {a}")
    return family_from_case(case, a)
