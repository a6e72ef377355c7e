"""Ring operations on Chow classes of products of projective spaces.

All coefficients live in sympy's exact rational domain ``QQ``; nothing here
touches floating point.
"""

import itertools
from typing import Sequence

from sympy import QQ

from src.chow_ring.ambient import AmbientSpace
from src.chow_ring.chow_class import ChowClass, ExponentVector
from src.chow_ring.exceptions import (
    AmbientMismatchError,
    FactorIndexError,
    InvalidAmbientError,
    NonNilpotentError,
)


def make_ambient(dims: Sequence[int]) -> AmbientSpace:
    dims = list(dims)
    if not dims:
        raise InvalidAmbientError("an ambient space needs at least one factor")
    for m in dims:
        if isinstance(m, bool) or not isinstance(m, int) or m < 1:
            raise InvalidAmbientError(f"factor dimensions must be positive integers, got {dims}")
    return AmbientSpace(dims=tuple(dims))


def generator(ambient: AmbientSpace, index: int) -> ChowClass:
    if not 0 <= index < ambient.factor_count:
        raise FactorIndexError(
            f"factor index {index} out of range for {ambient.label()} ({ambient.factor_count} factors)"
        )
    exps = tuple(1 if i == index else 0 for i in range(ambient.factor_count))
    return ChowClass(ambient, {exps: 1})


def add(x: ChowClass, y: ChowClass) -> ChowClass:
    return x + y


def mul(x: ChowClass, y: ChowClass) -> ChowClass:
    return x * y


def integrate(x: ChowClass):
    """Degree map: the coefficient of the top monomial h1^m1 ... hk^mk."""
    return x.coefficient(x.ambient.top_exponents)


def integrate_product(x: ChowClass, y: ChowClass):
    """``integrate(mul(x, y))`` without forming the full product."""
    if x.ambient != y.ambient:
        raise AmbientMismatchError(
            f"classes live on different ambients: {x.ambient.label()} vs {y.ambient.label()}"
        )
    top = x.ambient.top_exponents
    total = QQ.zero
    for exps, coeff in x.terms.items():
        complement = tuple(m - e for m, e in zip(top, exps))
        total += coeff * y.coefficient(complement)
    return total


def grade_component(x: ChowClass, degree: int) -> ChowClass:
    return ChowClass(x.ambient, {e: c for e, c in x.terms.items() if sum(e) == degree})


def monomial_basis(ambient: AmbientSpace, degree: int) -> list[ExponentVector]:
    """Exponent vectors of total degree ``degree`` within the truncation bounds, in lex order."""
    ranges = [range(m + 1) for m in ambient.dims]
    return [exps for exps in itertools.product(*ranges) if sum(exps) == degree]


def evaluate_series(x: ChowClass, coefficients: Sequence) -> ChowClass:
    """Sum of coefficients[d] * x^d for d up to dim(P); x must be nilpotent."""
    if x.constant_term() != 0:
        raise NonNilpotentError(f"series evaluation needs a class without degree-0 part, got {x.to_text()}")
    top = min(len(coefficients) - 1, x.ambient.dimension)
    result = ChowClass.zero(x.ambient)
    # Horner from the highest retained degree
    for d in range(top, -1, -1):
        result = result * x + coefficients[d]
    return result


def exp_class(x: ChowClass) -> ChowClass:
    n = x.ambient.dimension
    coefficients = [QQ.one]
    for d in range(1, n + 1):
        coefficients.append(coefficients[-1] / d)
    return evaluate_series(x, coefficients)
