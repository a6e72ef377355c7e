from src.common.log import get_logger
from src.k3_families.certificate import franchetta_certificate
from src.k3_families.families import family_from_case
from src.k3_families.geometry import (
    degree_formula,
    h0_normal,
    h0_tangent_restricted,
    lattice_discriminant,
    polarization_genus,
    restricted_pairing,
)
from src.k3_families.models import (
    Discrepancy,
    FamilySpec,
    NormalSections,
    RestrictedPairing,
    VerificationReport,
)
from src.k3_families.reference import ReferenceCase, reference_cases
from src.riemann_roch import CompleteIntersection, k3_riemann_roch_h0
from src.riemann_roch.exceptions import InternalConsistencyError

logger = get_logger("k3_families.report")


def cross_check_normal_sections(
    variety: CompleteIntersection, normal: NormalSections, pairing: RestrictedPairing
) -> None:
    """Koszul and K3 Riemann-Roch must agree on every summand of the normal bundle."""
    for count in normal.breakdown:
        expected = k3_riemann_roch_h0(variety, count.twist, pairing)
        if expected != count.value:
            raise InternalConsistencyError(
                f"h0(O_S({count.twist})): Koszul gives {count.value}, K3 Riemann-Roch gives {expected}"
            )


def compare_with_printed(report: VerificationReport, case: ReferenceCase) -> list[Discrepancy]:
    printed = case.printed
    prefix = f"Case {case.label.value}"
    checks = []
    for count, value in zip(report.h0_normal.breakdown, printed.h0_normal_addends, strict=True):
        checks.append((value, count.value, f"{prefix} h^0(O_S({count.twist}))"))
    checks += [
        (printed.h0_normal, report.h0_normal.total, f"{prefix} h^0(N_S/P)"),
        (printed.h0_tangent, report.h0_tangent, f"{prefix} h^0(T_P|S)"),
        (printed.moduli_dim, report.moduli_dim, f"{prefix} moduli dimension"),
        (printed.degree_slope, report.degree_formula.linear, f"{prefix} degree slope in a"),
        (printed.degree_intercept, report.degree_formula.constant, f"{prefix} degree constant term"),
        (0, report.degree_formula.quadratic, f"{prefix} degree a^2 term"),
        (case.projection_degree, report.projection_degree, f"{prefix} degree of S in P^{case.n}"),
    ]
    for i, row in enumerate(printed.lattice):
        for j, value in enumerate(row):
            checks.append((value, report.picard_lattice[i][j], f"{prefix} lattice entry ({i},{j})"))
    return [
        Discrepancy(printed_value=p, computed_value=c, location=where)
        for p, c, where in checks
        if p != c
    ]


def build_report(family: FamilySpec, case: ReferenceCase | None = None) -> VerificationReport:
    ambient, bundle = family.ambient, family.bundle
    variety = CompleteIntersection.build(ambient, bundle)
    genus = polarization_genus(ambient, bundle, family.polarization)
    pairing = restricted_pairing(ambient, bundle)
    normal = h0_normal(variety)
    cross_check_normal_sections(variety, normal, pairing)
    tangent = h0_tangent_restricted(ambient)

    m = pairing.matrix
    report = VerificationReport(
        family=family,
        genus=genus,
        degree=2 * genus - 2,
        degree_formula=degree_formula(pairing),
        pairing=pairing,
        picard_lattice=((m[0][0], m[0][-1]), (m[-1][0], m[-1][-1])),
        lattice_discriminant=lattice_discriminant(pairing),
        projection_degree=m[-1][-1],
        h0_normal=normal,
        h0_tangent=tangent,
        moduli_dim=normal.total - tangent,
        certificate=franchetta_certificate(ambient, bundle),
    )
    if case is not None:
        discrepancies = compare_with_printed(report, case)
        for d in discrepancies:
            logger.warning(f"{d.location}: printed {d.printed_value}, computed {d.computed_value}")
        report = report.model_copy(update={"discrepancies": tuple(discrepancies)})
    logger.info(f"report built for {family.title()}: g = {genus}, moduli {report.moduli_dim}")
    return report


def verify_paper(a: int = 2) -> list[VerificationReport]:
    """Reports for the three published constructions at twist ``a``."""
    return [build_report(family_from_case(case, a), case) for case in reference_cases().cases]
