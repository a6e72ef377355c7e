"""Characteristic classes of split bundles and of the ambient tangent bundle."""

from functools import lru_cache, reduce

from sympy import QQ, factorial

from src.char_classes.bundles import Multidegree, SplitBundle
from src.char_classes.exceptions import InvalidRankError
from src.chow_ring import AmbientSpace, ChowClass, evaluate_series, exp_class, generator
from src.chow_ring.exceptions import AmbientMismatchError
from src.common.log import get_logger

logger = get_logger("char_classes")


def _check_length(ambient: AmbientSpace, degs: Multidegree) -> None:
    if len(degs) != ambient.factor_count:
        raise AmbientMismatchError(
            f"multidegree ({degs}) has {len(degs)} entries, {ambient.label()} has {ambient.factor_count} factors"
        )


def c1(ambient: AmbientSpace, line: Multidegree) -> ChowClass:
    _check_length(ambient, line)
    terms = {}
    for i, d in enumerate(line.degs):
        exps = tuple(1 if j == i else 0 for j in range(ambient.factor_count))
        terms[exps] = d
    return ChowClass(ambient, terms)


def total_chern(ambient: AmbientSpace, bundle: SplitBundle) -> ChowClass:
    one = ChowClass.one(ambient)
    return reduce(lambda acc, s: acc * (one + c1(ambient, s)), bundle.summands, one)


def top_chern(ambient: AmbientSpace, bundle: SplitBundle) -> ChowClass:
    """Fundamental class of the zero locus of a general section: the product of the c1's."""
    if bundle.rank > ambient.dimension:
        raise InvalidRankError(
            f"bundle of rank {bundle.rank} exceeds dim {ambient.label()} = {ambient.dimension}"
        )
    one = ChowClass.one(ambient)
    return reduce(lambda acc, s: acc * c1(ambient, s), bundle.summands, one)


def det_bundle(bundle: SplitBundle) -> Multidegree:
    return reduce(lambda acc, s: acc + s, bundle.summands[1:], bundle.summands[0])


def chern_character(ambient: AmbientSpace, bundle: SplitBundle) -> ChowClass:
    return reduce(
        lambda acc, s: acc + exp_class(c1(ambient, s)),
        bundle.summands,
        ChowClass.zero(ambient),
    )


@lru_cache(maxsize=None)
def todd_series_coefficients(n: int) -> tuple:
    """Coefficients q_0..q_n of x / (1 - e^-x).

    Inverts the series (1 - e^-x) / x = sum (-1)^k x^k / (k+1)!.
    """
    f = [QQ((-1) ** k, int(factorial(k + 1))) for k in range(n + 1)]
    q = [QQ.one]
    for m in range(1, n + 1):
        q.append(-sum((f[k] * q[m - k] for k in range(1, m + 1)), QQ.zero))
    return tuple(q)


@lru_cache(maxsize=64)
def todd_ambient(ambient: AmbientSpace) -> ChowClass:
    series = todd_series_coefficients(ambient.dimension)
    todd = ChowClass.one(ambient)
    for i, m in enumerate(ambient.dims):
        # Euler sequence: td(T_P^m) = Q(h)^(m+1)
        todd = todd * evaluate_series(generator(ambient, i), series) ** (m + 1)
    logger.debug(f"td({ambient.label()}) = {todd.to_text()}")
    return todd
