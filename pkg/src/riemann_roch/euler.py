"""Euler characteristics on the ambient and on complete intersections.

Three independent routes are kept side by side:

* ``euler_char_ambient``: Hirzebruch-Riemann-Roch, integrating ch(L) * td(T_P);
* ``euler_char_ambient_closed``: the product of binomial polynomials C(d_i + m_i, m_i);
* ``euler_char_ci``: the Koszul alternating sum over subsets of the bundle summands.
"""

import itertools
from typing import Callable, Protocol, Sequence

from sympy import factorial, rf

from src.char_classes import Multidegree, c1, todd_ambient
from src.chow_ring import AmbientSpace, exp_class, integrate_product
from src.chow_ring.exceptions import AmbientMismatchError
from src.common.log import get_logger
from src.riemann_roch.exceptions import InternalConsistencyError, ParityError
from src.riemann_roch.models import CompleteIntersection, SectionCount

logger = get_logger("riemann_roch")


class PairingMatrix(Protocol):
    matrix: Sequence[Sequence[int]]


def euler_char_ambient(ambient: AmbientSpace, line: Multidegree) -> int:
    value = integrate_product(exp_class(c1(ambient, line)), todd_ambient(ambient))
    if value.denominator != 1:
        msg = f"HRR gave non-integral chi({ambient.label()}, O({line})) = {value}"
        logger.error(msg)
        raise InternalConsistencyError(msg)
    return int(value.numerator)


def euler_char_ambient_closed(ambient: AmbientSpace, line: Multidegree) -> int:
    if len(line) != ambient.factor_count:
        raise AmbientMismatchError(
            f"multidegree ({line}) has {len(line)} entries, {ambient.label()} has {ambient.factor_count} factors"
        )
    value = 1
    for d, m in zip(line.degs, ambient.dims):
        # (d+1)(d+2)...(d+m) / m!, the binomial polynomial extended to all integers d
        value *= rf(d + 1, m) / factorial(m)
    return int(value)


def euler_char_ci(
    variety: CompleteIntersection,
    twist: Multidegree,
    ambient_chi: Callable[[AmbientSpace, Multidegree], int] = euler_char_ambient_closed,
) -> int:
    summands = variety.bundle.summands
    total = 0
    for size in range(len(summands) + 1):
        for subset in itertools.combinations(range(len(summands)), size):
            shifted = twist
            for index in subset:
                shifted = shifted - summands[index]
            term = ambient_chi(variety.ambient, shifted)
            total += (-1) ** size * term
    return total


def section_count(variety: CompleteIntersection, twist: Multidegree) -> SectionCount:
    value = euler_char_ci(variety, twist)
    as_h0 = twist.is_nonnegative() and not twist.is_zero()
    return SectionCount(
        twist=twist,
        value=value,
        label="h0" if as_h0 else "chi",
        vanishing_assumed=as_h0,
    )


def restricted_self_intersection(pairing: PairingMatrix, twist: Multidegree) -> int:
    matrix = pairing.matrix
    if len(matrix) != len(twist):
        raise AmbientMismatchError(
            f"multidegree ({twist}) does not match a {len(matrix)}x{len(matrix)} pairing"
        )
    return sum(
        twist.degs[i] * twist.degs[j] * matrix[i][j]
        for i in range(len(matrix))
        for j in range(len(matrix))
    )


def k3_riemann_roch_h0(
    variety: CompleteIntersection, twist: Multidegree, pairing: PairingMatrix
) -> int:
    """h0(O_S(D)) = 2 + D_S^2 / 2 on a K3 surface, higher cohomology assumed to vanish."""
    square = restricted_self_intersection(pairing, twist)
    if square % 2:
        raise ParityError(
            f"D_S^2 = {square} is odd for D = ({twist}) on {variety.ambient.label()}; "
            "the surface is not K3 or the pairing is corrupted"
        )
    return 2 + square // 2
