import hypothesis.strategies as st
from hypothesis import given, settings
from pytest import mark, param, raises
from sympy import QQ

from src.char_classes import (
    Multidegree,
    SplitBundle,
    c1,
    chern_character,
    det_bundle,
    todd_ambient,
    todd_series_coefficients,
    top_chern,
    total_chern,
)
from src.char_classes.exceptions import BundleParseError, InvalidRankError
from src.chow_ring import ChowClass, grade_component, integrate, make_ambient
from src.chow_ring.exceptions import AmbientMismatchError
from tests.cases import md
from tests.strategies import ambients, multidegrees, split_bundles


class TestC1:
    def test_line_bundle(self, p1p3) -> None:
        ambient, p, h = p1p3
        assert c1(ambient, md(1, 3)) == p + 3 * h
        assert c1(ambient, md(0, 0)).is_zero()
        assert c1(ambient, md(-2, 1)) == h - 2 * p

    def test_length_mismatch(self, p1p3) -> None:
        ambient, _, _ = p1p3
        with raises(AmbientMismatchError):
            _ = c1(ambient, md(1, 2, 3))


class TestTotalChern:
    def test_two_summands(self, p1p3) -> None:
        ambient, p, h = p1p3
        bundle = SplitBundle.parse("1,1;1,3")
        assert total_chern(ambient, bundle) == 1 + 2 * p + 4 * h + 4 * p * h + 3 * h**2

    @given(data=st.data())
    def test_whitney(self, data) -> None:
        ambient = data.draw(ambients())
        e = data.draw(split_bundles(ambient))
        f = data.draw(split_bundles(ambient))
        assert total_chern(ambient, e.direct_sum(f)) == total_chern(ambient, e) * total_chern(ambient, f)


class TestTopChern:
    @mark.parametrize(
        ("dims", "bundle", "expected"),
        [
            param([1, 2], "2,3", {(1, 0): 2, (0, 1): 3}),
            param([1, 3], "1,1;1,3", {(1, 1): 4, (0, 2): 3}),
            param([1, 4], "0,3;1,1;1,1", {(1, 2): 6, (0, 3): 3}),
        ],
    )
    def test_fundamental_classes(self, *, dims, bundle, expected) -> None:
        ambient = make_ambient(dims)
        assert top_chern(ambient, SplitBundle.parse(bundle)) == ChowClass(ambient, expected)

    def test_rank_too_large(self) -> None:
        ambient = make_ambient([1, 1])
        with raises(InvalidRankError):
            _ = top_chern(ambient, SplitBundle.parse("1,0;0,1;1,1"))

    @given(data=st.data())
    def test_top_degree_piece_of_total(self, data) -> None:
        ambient = data.draw(ambients())
        bundle = data.draw(split_bundles(ambient, max_rank=min(3, ambient.dimension)))
        assert top_chern(ambient, bundle) == grade_component(total_chern(ambient, bundle), bundle.rank)


class TestDetBundle:
    def test_sum_of_degrees(self) -> None:
        assert det_bundle(SplitBundle.parse("0,3;1,1;1,1")) == md(2, 5)
        assert det_bundle(SplitBundle.parse("2,3")) == md(2, 3)

    @given(data=st.data())
    def test_additive(self, data) -> None:
        ambient = data.draw(ambients())
        e = data.draw(split_bundles(ambient))
        f = data.draw(split_bundles(ambient))
        assert det_bundle(e.direct_sum(f)) == det_bundle(e) + det_bundle(f)

    @given(data=st.data())
    def test_c1_of_det_is_first_chern_class(self, data) -> None:
        ambient = data.draw(ambients())
        bundle = data.draw(split_bundles(ambient))
        assert c1(ambient, det_bundle(bundle)) == grade_component(total_chern(ambient, bundle), 1)


class TestChernCharacter:
    def test_rank_and_c1(self, p1p3) -> None:
        ambient, p, h = p1p3
        ch = chern_character(ambient, SplitBundle.parse("1,1;1,3"))
        assert grade_component(ch, 0) == 2
        assert grade_component(ch, 1) == 2 * p + 4 * h
        assert grade_component(ch, 2) == 4 * p * h + 5 * h**2

    @settings(max_examples=150)
    @given(data=st.data())
    def test_multiplicative_on_lines(self, data) -> None:
        ambient = data.draw(ambients())
        a = data.draw(multidegrees(ambient))
        b = data.draw(multidegrees(ambient))

        def ch(d: Multidegree):
            return chern_character(ambient, SplitBundle(summands=(d,)))

        assert ch(a + b) == ch(a) * ch(b)

    @given(data=st.data())
    def test_additive(self, data) -> None:
        ambient = data.draw(ambients())
        e = data.draw(split_bundles(ambient))
        f = data.draw(split_bundles(ambient))
        assert chern_character(ambient, e.direct_sum(f)) == chern_character(ambient, e) + chern_character(
            ambient, f
        )


class TestTodd:
    def test_series_coefficients(self) -> None:
        assert todd_series_coefficients(4) == (QQ(1), QQ(1, 2), QQ(1, 12), QQ(0), QQ(-1, 720))

    def test_projective_plane(self) -> None:
        ambient = make_ambient([2])
        h = ChowClass(ambient, {(1,): 1})
        assert todd_ambient(ambient) == 1 + h * QQ(3, 2) + h**2

    @mark.parametrize("dims", [param([1]), param([1, 2]), param([1, 4]), param([2, 3]), param([1, 1, 2])])
    def test_low_degree_parts(self, *, dims) -> None:
        ambient = make_ambient(dims)
        todd = todd_ambient(ambient)
        assert grade_component(todd, 0) == 1
        anticanonical = ChowClass(
            ambient,
            {tuple(1 if j == i else 0 for j in range(len(dims))): m + 1 for i, m in enumerate(dims)},
        )
        assert grade_component(todd, 1) == anticanonical * QQ(1, 2)
        # chi(O_P) = 1
        assert integrate(todd) == 1


class TestParsing:
    def test_multidegree(self) -> None:
        assert Multidegree.parse("1, -3") == md(1, -3)
        assert str(md(0, 3)) == "0,3"

    def test_bundle(self) -> None:
        bundle = SplitBundle.parse("0,3;1,1;1,1")
        assert bundle.rank == 3
        assert bundle.factor_count == 2
        assert str(bundle) == "0,3;1,1;1,1"
        assert str(SplitBundle.parse("1,3;1,1").canonical()) == "1,1;1,3"

    @mark.parametrize(
        ("text", "token"),
        [param("1,x", "x"), param("1,,2", ""), param("a", "a")],
    )
    def test_multidegree_errors(self, *, text, token) -> None:
        with raises(BundleParseError) as excinfo:
            _ = Multidegree.parse(text)
        assert excinfo.value.token == token

    @mark.parametrize("text", [param(""), param("1,1;"), param("1,1;2")])
    def test_bundle_errors(self, *, text) -> None:
        with raises(BundleParseError):
            _ = SplitBundle.parse(text)
