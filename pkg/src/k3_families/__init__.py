from src.k3_families.certificate import franchetta_certificate
from src.k3_families.families import family_for_genus
from src.k3_families.geometry import (
    anticanonical,
    check_k3,
    degree_formula,
    genus_of,
    h0_normal,
    h0_tangent_restricted,
    is_connected_k3,
    lattice_discriminant,
    moduli_dimension,
    polarization_genus,
    restricted_pairing,
)
from src.k3_families.models import (
    CaseLabel,
    Certificate,
    CheckResult,
    Discrepancy,
    FamilySpec,
    RestrictedPairing,
    VerificationReport,
)
from src.k3_families.report import build_report, verify_paper
from src.k3_families.search import search_families

__all__ = [
    "CaseLabel",
    "Certificate",
    "CheckResult",
    "Discrepancy",
    "FamilySpec",
    "RestrictedPairing",
    "VerificationReport",
    "anticanonical",
    "build_report",
    "check_k3",
    "degree_formula",
    "family_for_genus",
    "franchetta_certificate",
    "genus_of",
    "h0_normal",
    "h0_tangent_restricted",
    "is_connected_k3",
    "lattice_discriminant",
    "moduli_dimension",
    "polarization_genus",
    "restricted_pairing",
    "search_families",
    "verify_paper",
]
