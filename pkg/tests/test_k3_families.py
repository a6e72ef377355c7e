from pathlib import Path

import hypothesis.strategies as st
from hypothesis import given
from pytest import mark, param, raises

from src.char_classes import Multidegree, SplitBundle
from src.char_classes.exceptions import InvalidRankError
from src.chow_ring import ChowClass, make_ambient
from src.k3_families import (
    CaseLabel,
    FamilySpec,
    anticanonical,
    build_report,
    check_k3,
    degree_formula,
    family_for_genus,
    franchetta_certificate,
    genus_of,
    h0_normal,
    h0_tangent_restricted,
    lattice_discriminant,
    moduli_dimension,
    polarization_genus,
    restricted_pairing,
    verify_paper,
)
from src.k3_families.certificate import STANDING_ASSUMPTIONS, check_mp_surjective, monomial_text
from src.k3_families.exceptions import (
    GenusOutOfRangeError,
    InvalidPolarizationError,
    NotK3Error,
    ReferenceDataError,
)
from src.k3_families.families import MIN_GENUS, family_from_case
from src.k3_families.geometry import is_connected_k3, polarization_degree, structure_sheaf_chi, twist
from src.k3_families.reference import ReferenceCases, reference_cases
from src.k3_families.serialize import family_from_dict, family_to_dict
from src.riemann_roch import CompleteIntersection
from tests.cases import case_data, case_variety, md


class TestAnticanonical:
    def test_degrees(self) -> None:
        assert anticanonical(make_ambient([1, 2])) == md(2, 3)
        assert anticanonical(make_ambient([1, 4])) == md(2, 5)
        assert anticanonical(make_ambient([2, 2, 1])) == md(3, 3, 2)


class TestCheckK3:
    @mark.parametrize("label", ["I", "II", "III"])
    def test_cases_pass(self, *, label) -> None:
        result = check_k3(*case_data(label))
        assert result.passed
        assert result.details[2] == "all summands have non-negative, nonzero degrees"

    def test_case_two_details(self) -> None:
        assert check_k3(*case_data("II")).details == (
            "rank 2 = dim P - 2",
            "det E = O(2,4) = -K_P",
            "all summands have non-negative, nonzero degrees",
        )

    @mark.parametrize(
        ("dims", "bundle", "detail"),
        [
            param([1, 2], "3,3", "det E = O(3,3) != -K_P = O(2,3)", id="wrong determinant"),
            param([1, 3], "2,4", "rank 1 != dim P - 2 = 2", id="wrong rank"),
            param([1, 3], "-1,1;3,3", "summand O(-1,1) has a negative degree", id="negative"),
            param([1, 3], "0,0;2,4", "summand O(0,0) is trivial", id="trivial"),
        ],
    )
    def test_failures(self, *, dims, bundle, detail) -> None:
        result = check_k3(make_ambient(dims), SplitBundle.parse(bundle))
        assert not result.passed
        assert detail in result.details

    def test_factor_mismatch(self) -> None:
        assert not check_k3(make_ambient([1, 2]), SplitBundle.parse("1,1,1")).passed

    @mark.parametrize(
        ("dims", "bundle", "chi"),
        [
            param([2, 2], "3,0;0,3", 0, id="abelian surface"),
            param([1, 3], "2,0;0,4", 4, id="two disjoint K3 surfaces"),
            param([1, 3], "1,1;1,3", 2, id="connected"),
        ],
    )
    def test_adjunction_alone_misses_disconnected_loci(self, *, dims, bundle, chi) -> None:
        ambient, split = make_ambient(dims), SplitBundle.parse(bundle)
        assert check_k3(ambient, split).passed
        assert structure_sheaf_chi(ambient, split) == chi
        assert is_connected_k3(ambient, split) == (chi == 2)


class TestRestrictedPairing:
    @mark.parametrize(
        ("label", "fundamental", "matrix"),
        [
            param("I", {(1, 0): 2, (0, 1): 3}, ((0, 3), (3, 2))),
            param("II", {(1, 1): 4, (0, 2): 3}, ((0, 3), (3, 4))),
            param("III", {(1, 2): 6, (0, 3): 3}, ((0, 3), (3, 6))),
        ],
    )
    def test_cases(self, *, label, fundamental, matrix) -> None:
        ambient, bundle = case_data(label)
        pairing = restricted_pairing(ambient, bundle)
        assert pairing.fundamental_class == ChowClass(ambient, fundamental)
        assert pairing.matrix == matrix
        assert lattice_discriminant(pairing) == -9

    def test_not_a_surface(self) -> None:
        with raises(InvalidRankError):
            _ = restricted_pairing(make_ambient([1, 3]), SplitBundle.parse("2,4"))

    def test_degree_formula(self) -> None:
        formulas = [degree_formula(restricted_pairing(*case_data(label))) for label in ("I", "II", "III")]
        assert [(f.quadratic, f.linear, f.constant) for f in formulas] == [(0, 6, 2), (0, 6, 4), (0, 6, 6)]
        assert formulas[1].at(33) == 202


class TestGenus:
    @mark.parametrize(
        ("label", "a", "genus"),
        [
            param("I", 2, 8),
            param("II", 2, 9),
            param("III", 2, 10),
            param("I", 1, 5),
            param("III", 32, 100),
            param("II", 33, 102),
        ],
    )
    def test_genus_of(self, *, label, a, genus) -> None:
        assert genus_of(*case_data(label), a) == genus

    def test_general_polarization(self) -> None:
        ambient, bundle = case_data("II")
        # (2h1 + 3h2)^2 . [S] = 12*3 + 9*4
        assert polarization_genus(ambient, bundle, md(2, 3)) == 37

    def test_not_k3(self) -> None:
        with raises(NotK3Error):
            _ = genus_of(make_ambient([1, 2]), SplitBundle.parse("3,3"), 2)

    def test_three_factor_ambient(self) -> None:
        with raises(InvalidPolarizationError):
            _ = genus_of(make_ambient([1, 1, 2]), SplitBundle.parse("2,2,3;0,0,0"), 2)

    def test_twist_must_be_positive(self) -> None:
        with raises(InvalidPolarizationError):
            _ = twist(make_ambient([1, 2]), 0)

    @given(label=st.sampled_from(["I", "II", "III"]), a=st.integers(min_value=1, max_value=200))
    def test_degree_is_linear_in_twist(self, label: str, a: int) -> None:
        constant = {"I": 1, "II": 2, "III": 3}[label]
        assert 2 * genus_of(*case_data(label), a) - 2 == 2 * (3 * a + constant)


class TestFamilyForGenus:
    @mark.parametrize(
        ("genus", "label", "a"),
        [
            param(8, CaseLabel.I, 2),
            param(9, CaseLabel.II, 2),
            param(10, CaseLabel.III, 2),
            param(11, CaseLabel.I, 3),
            param(100, CaseLabel.III, 32),
        ],
    )
    def test_examples(self, *, genus, label, a) -> None:
        family = family_for_genus(genus)
        assert family.label == label
        assert family.polarization == md(a, 1)

    @mark.parametrize("genus", range(MIN_GENUS, 201))
    def test_every_genus_is_covered(self, *, genus) -> None:
        family = family_for_genus(genus)
        assert polarization_genus(family.ambient, family.bundle, family.polarization) == genus
        assert family.polarization.degs[0] >= 1
        assert polarization_degree(family.ambient, family.bundle, family.polarization) == 2 * genus - 2
        assert check_k3(family.ambient, family.bundle).passed
        assert franchetta_certificate(family.ambient, family.bundle).passed
        assert moduli_dimension(CompleteIntersection.build(family.ambient, family.bundle)) == 18

    @mark.parametrize("genus", [-3, 0, 2, 7])
    def test_small_genus(self, *, genus) -> None:
        with raises(GenusOutOfRangeError, match=r"\[PSY\]"):
            _ = family_for_genus(genus)


class TestNormalSections:
    @mark.parametrize(
        ("label", "breakdown", "total"),
        [
            param("I", [29], 29),
            param("II", [7, 29], 36),
            param("III", [29, 8, 8], 45),
        ],
    )
    def test_cases(self, *, label, breakdown, total) -> None:
        normal = h0_normal(case_variety(label))
        assert [count.value for count in normal.breakdown] == breakdown
        assert normal.total == total
        assert all(count.label == "h0" and count.vanishing_assumed for count in normal.breakdown)

    def test_requires_k3(self) -> None:
        variety = CompleteIntersection.build(make_ambient([1, 3]), SplitBundle.parse("1,1;1,1"))
        with raises(NotK3Error):
            _ = h0_normal(variety)

    @mark.parametrize(("dims", "bundle"), [param([2, 2], "3,0;0,3"), param([1, 3], "2,0;0,4")])
    def test_requires_connected_k3(self, *, dims, bundle) -> None:
        variety = CompleteIntersection.build(make_ambient(dims), SplitBundle.parse(bundle))
        with raises(NotK3Error, match=r"chi\(O_S\) = \d != 2"):
            _ = h0_normal(variety)

    @mark.parametrize(("dims", "expected"), [param([1, 2], 11), param([1, 3], 18), param([1, 4], 27)])
    def test_tangent(self, *, dims, expected) -> None:
        assert h0_tangent_restricted(make_ambient(dims)) == expected

    @mark.parametrize("label", ["I", "II", "III"])
    def test_moduli_two_ways(self, *, label) -> None:
        variety = case_variety(label)
        assert moduli_dimension(variety) == 18
        assert h0_normal(variety).total - h0_tangent_restricted(variety.ambient) == 18

    @given(data=st.data())
    def test_permutation_invariance(self, data) -> None:
        label = data.draw(st.sampled_from(["II", "III"]))
        ambient, bundle = case_data(label)
        shuffled = SplitBundle(summands=tuple(data.draw(st.permutations(bundle.summands))))
        variety = CompleteIntersection.build(ambient, shuffled)
        assert h0_normal(variety).total == h0_normal(case_variety(label)).total
        assert genus_of(ambient, shuffled, 2) == genus_of(ambient, bundle, 2)


class TestCertificate:
    @mark.parametrize(("label", "sections"), [param("I", 30), param("II", 48), param("III", 55)])
    def test_cases_pass(self, *, label, sections) -> None:
        certificate = franchetta_certificate(*case_data(label))
        assert certificate.passed
        assert certificate.sections_of_bundle == sections
        assert certificate.parameter_space_dim == sections - 1
        assert certificate.assumptions == STANDING_ASSUMPTIONS

    def test_mp_details(self) -> None:
        assert check_mp_surjective(make_ambient([1, 2])).details == ("h2^2 = h2 * h2", "h1*h2 = h1 * h2")
        assert check_mp_surjective(make_ambient([1])).details == ("CH^2(P) = 0",)

    def test_monomial_text(self) -> None:
        assert monomial_text((1, 2)) == "h1*h2^2"
        assert monomial_text((0, 0)) == "1"

    def test_negative_summand_fails(self) -> None:
        certificate = franchetta_certificate(make_ambient([1, 3]), SplitBundle.parse("-1,1;3,3"))
        assert not certificate.passed
        assert not certificate.global_generation.passed
        assert certificate.global_generation.details[0] == "O(-1,1) has a negative degree"
        assert certificate.sections_of_bundle is None
        assert certificate.parameter_space_dim is None

    def test_wrong_determinant_fails(self) -> None:
        certificate = franchetta_certificate(make_ambient([1, 2]), SplitBundle.parse("3,3"))
        assert certificate.global_generation.passed
        assert not certificate.k3_condition.passed
        assert not certificate.passed

    def test_abelian_surface_fails(self) -> None:
        certificate = franchetta_certificate(make_ambient([2, 2]), SplitBundle.parse("3,0;0,3"))
        assert certificate.global_generation.passed
        assert not certificate.k3_condition.passed
        expected = "chi(O_S) = 0 != 2, the zero locus is not a connected K3"
        assert certificate.k3_condition.details[-1] == expected
        assert not certificate.passed

    def test_k3_condition_records_chi(self) -> None:
        assert franchetta_certificate(*case_data("III")).k3_condition.details[-1] == "chi(O_S) = 2"


class TestReport:
    def test_build_report_without_case(self) -> None:
        report = build_report(family_for_genus(100))
        assert report.genus == 100
        assert report.degree == 198
        assert report.moduli_dim == 18
        assert report.projection_degree == 6
        assert report.picard_lattice == ((0, 3), (3, 6))
        assert report.discrepancies == ()

    def test_rejects_disconnected_zero_locus(self) -> None:
        family = FamilySpec(
            ambient=make_ambient([1, 3]),
            bundle=SplitBundle.parse("2,0;0,4"),
            polarization=md(1, 1),
        )
        with raises(NotK3Error):
            _ = build_report(family)

    def test_verify_paper(self) -> None:
        reports = verify_paper()
        assert [r.family.label for r in reports] == [CaseLabel.I, CaseLabel.II, CaseLabel.III]
        assert [r.genus for r in reports] == [8, 9, 10]
        assert [r.degree for r in reports] == [14, 16, 18]
        assert [r.moduli_dim for r in reports] == [18, 18, 18]
        assert [r.h0_tangent for r in reports] == [11, 18, 27]
        assert [r.projection_degree for r in reports] == [2, 4, 6]
        assert all(r.certificate.passed for r in reports)

    def test_only_case_two_addend_differs(self) -> None:
        reports = verify_paper()
        assert reports[0].discrepancies == ()
        assert reports[2].discrepancies == ()
        (discrepancy,) = reports[1].discrepancies
        assert discrepancy.location == "Case II h^0(O_S(1,1))"
        assert (discrepancy.printed_value, discrepancy.computed_value) == (9, 7)

    @mark.parametrize("a", [1, 3, 7])
    def test_other_twists(self, *, a) -> None:
        for report in verify_paper(a):
            assert report.degree == report.degree_formula.at(a)
            assert report.moduli_dim == 18


class TestReferenceCases:
    def test_loaded(self) -> None:
        cases = reference_cases()
        assert [c.label for c in cases.cases] == [CaseLabel.I, CaseLabel.II, CaseLabel.III]
        assert cases.by_residue(0).label == CaseLabel.II
        assert cases.by_label(CaseLabel.III).split_bundle == SplitBundle.parse("0,3;1,1;1,1")
        assert len(cases.known_discrepancies) == 1

    def test_matching_ignores_summand_order(self) -> None:
        case = reference_cases().matching(make_ambient([1, 3]), SplitBundle.parse("1,3;1,1"))
        assert case is not None and case.label == CaseLabel.II
        assert reference_cases().matching(make_ambient([1, 3]), SplitBundle.parse("2,2;0,2")) is None

    def test_missing_file(self, tmp_path: Path) -> None:
        with raises(ReferenceDataError, match="not found"):
            _ = ReferenceCases.load(tmp_path / "absent.yaml")

    def test_malformed_file(self, tmp_path: Path) -> None:
        path = tmp_path / "broken.yaml"
        path.write_text("cases:\n  - label: IV\n")
        with raises(ReferenceDataError):
            _ = ReferenceCases.load(path)

    def test_family_from_case(self) -> None:
        family = family_from_case(reference_cases().by_label(CaseLabel.I), 4)
        assert family.polarization == md(4, 1)
        assert family.description.startswith("double cover of P^2")


class TestFamilySpec:
    def test_title(self) -> None:
        assert family_for_genus(8).title() == "Case I: P^1 x P^2, E = 2,3, L = O(2,1)"
        other = FamilySpec(
            ambient=make_ambient([1, 3]),
            bundle=SplitBundle.parse("1,2;1,2"),
            polarization=md(1, 1),
        )
        assert other.title() == "Family: P^1 x P^3, E = 1,2;1,2, L = O(1,1)"

    def test_rejects_non_surfaces(self) -> None:
        with raises(ValueError):
            _ = FamilySpec(
                ambient=make_ambient([1, 3]),
                bundle=SplitBundle.parse("2,4"),
                polarization=Multidegree.of(1, 1),
            )

    def test_dict_form(self) -> None:
        family = family_for_genus(9)
        data = family_to_dict(family)
        assert data["ambient"] == [1, 3]
        assert data["bundle"] == "1,1;1,3"
        assert data["polarization"] == "2,1"
        assert data["label"] == "II"
        assert family_from_dict(data) == family
