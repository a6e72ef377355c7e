from src.char_classes import SplitBundle
from src.chow_ring import AmbientSpace, ChowClass, generator, monomial_basis
from src.common.log import get_logger
from src.k3_families.geometry import check_k3, structure_sheaf_chi
from src.k3_families.models import Certificate, CheckResult
from src.riemann_roch import euler_char_ambient_closed

logger = get_logger("k3_families.certificate")

STANDING_ASSUMPTIONS = (
    "a generic member of the family is smooth (Bertini)",
    "the polarization O_P(a,1) is very ample",
    "higher cohomology of O_S(D) vanishes wherever h0 is read off chi",
)


def monomial_text(exps) -> str:
    factors = [f"h{i + 1}" if e == 1 else f"h{i + 1}^{e}" for i, e in enumerate(exps) if e > 0]
    return "*".join(factors) if factors else "1"


def check_global_generation(ambient: AmbientSpace, bundle: SplitBundle) -> CheckResult:
    if bundle.factor_count != ambient.factor_count:
        return CheckResult(passed=False, details=("bundle does not match the ambient factors",))
    details, passed = [], True
    for summand in bundle.summands:
        if not summand.is_nonnegative():
            passed = False
            details.append(f"O({summand}) has a negative degree")
        elif summand.is_zero():
            passed = False
            details.append(f"O({summand}) is trivial")
        else:
            details.append(f"O({summand}) is globally generated")
    return CheckResult(passed=passed, details=tuple(details))


def check_k3_fibers(ambient: AmbientSpace, bundle: SplitBundle) -> CheckResult:
    adjunction = check_k3(ambient, bundle)
    if not adjunction.passed:
        return adjunction
    chi = structure_sheaf_chi(ambient, bundle)
    if chi != 2:
        return CheckResult(
            passed=False,
            details=(*adjunction.details, f"chi(O_S) = {chi} != 2, the zero locus is not a connected K3"),
        )
    return CheckResult(passed=True, details=(*adjunction.details, "chi(O_S) = 2"))


def check_mp_surjective(ambient: AmbientSpace) -> CheckResult:
    """Sym^2 CH^1(P) -> CH^2(P): exhibit every degree-2 basis monomial as h_i * h_j."""
    basis = monomial_basis(ambient, 2)
    if not basis:
        return CheckResult(passed=True, details=("CH^2(P) = 0",))
    details, passed = [], True
    for exps in basis:
        i = next(index for index, e in enumerate(exps) if e > 0)
        rest = list(exps)
        rest[i] -= 1
        j = next(index for index, e in enumerate(rest) if e > 0)
        product = generator(ambient, i) * generator(ambient, j)
        if product != ChowClass(ambient, {exps: 1}):
            passed = False
            details.append(f"{monomial_text(exps)} is not h{i + 1} * h{j + 1}")
        else:
            details.append(f"{monomial_text(exps)} = h{i + 1} * h{j + 1}")
    return CheckResult(passed=passed, details=tuple(details))


def franchetta_certificate(ambient: AmbientSpace, bundle: SplitBundle) -> Certificate:
    global_generation = check_global_generation(ambient, bundle)
    sections = None
    if global_generation.passed:
        # h0 = chi for non-negative twists on a product of projective spaces
        sections = sum(euler_char_ambient_closed(ambient, s) for s in bundle.summands)
    certificate = Certificate(
        k3_condition=check_k3_fibers(ambient, bundle),
        global_generation=global_generation,
        mp_surjective=check_mp_surjective(ambient),
        assumptions=STANDING_ASSUMPTIONS,
        sections_of_bundle=sections,
    )
    logger.debug(f"certificate for E = {bundle} on {ambient.label()}: passed={certificate.passed}")
    return certificate
