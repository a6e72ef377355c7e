from types import MappingProxyType
from typing import Any, Iterable, Mapping, Sequence

from sympy import QQ

from src.chow_ring.ambient import AmbientSpace
from src.chow_ring.exceptions import AmbientMismatchError, ExponentError

ExponentVector = tuple[int, ...]


def coefficient_text(value) -> str:
    numerator, denominator = int(value.numerator), int(value.denominator)
    if denominator == 1:
        return str(numerator)
    return f"{numerator}/{denominator}"


class ChowClass:
    """An element of the Chow ring of an ambient product of projective spaces.

    Terms are kept in canonical sparse form: no zero coefficients, no monomial
    beyond the truncation bound, keys sorted lexicographically. Instances are
    immutable; every operation returns a new class.
    """

    __slots__ = ("_ambient", "_terms")

    def __init__(self, ambient: AmbientSpace, terms: Mapping[Sequence[int], Any] | None = None):
        bounds = ambient.dims
        accumulated: dict[ExponentVector, Any] = {}
        for exps, coeff in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != len(bounds):
                raise ExponentError(
                    f"exponent vector {list(exps)} has {len(exps)} entries, ambient has {len(bounds)} factors"
                )
            if any(e < 0 for e in exps):
                raise ExponentError(f"negative exponent in {list(exps)}")
            if any(e > m for e, m in zip(exps, bounds)):
                continue
            accumulated[exps] = accumulated.get(exps, QQ.zero) + QQ.convert(coeff)
        self._ambient = ambient
        self._terms = _canonical(accumulated)

    @classmethod
    def _from_canonical(cls, ambient: AmbientSpace, terms: dict) -> "ChowClass":
        obj = cls.__new__(cls)
        obj._ambient = ambient
        obj._terms = _canonical(terms)
        return obj

    @classmethod
    def zero(cls, ambient: AmbientSpace) -> "ChowClass":
        return cls._from_canonical(ambient, {})

    @classmethod
    def one(cls, ambient: AmbientSpace) -> "ChowClass":
        return cls._from_canonical(ambient, {(0,) * ambient.factor_count: QQ.one})

    @classmethod
    def from_structured(cls, ambient: AmbientSpace, data: Iterable[Mapping[str, Any]]) -> "ChowClass":
        return cls(
            ambient,
            {tuple(item["exps"]): QQ(int(item["numerator"]), int(item["denominator"])) for item in data},
        )

    @property
    def ambient(self) -> AmbientSpace:
        return self._ambient

    @property
    def terms(self) -> Mapping[ExponentVector, Any]:
        return MappingProxyType(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def coefficient(self, exps: Sequence[int]):
        return self._terms.get(tuple(exps), QQ.zero)

    def constant_term(self):
        return self.coefficient((0,) * self._ambient.factor_count)

    def _check_ambient(self, other: "ChowClass") -> None:
        if self._ambient != other._ambient:
            raise AmbientMismatchError(
                f"classes live on different ambients: {self._ambient.label()} vs {other._ambient.label()}"
            )

    def __add__(self, other):
        if not isinstance(other, ChowClass):
            return self + self._lift(other)
        self._check_ambient(other)
        terms = dict(self._terms)
        for exps, coeff in other._terms.items():
            terms[exps] = terms.get(exps, QQ.zero) + coeff
        return ChowClass._from_canonical(self._ambient, terms)

    __radd__ = __add__

    def __neg__(self):
        return ChowClass._from_canonical(self._ambient, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        if not isinstance(other, ChowClass):
            other = self._lift(other)
        return self + (-other)

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, ChowClass):
            scalar = QQ.convert(other)
            return ChowClass._from_canonical(self._ambient, {e: c * scalar for e, c in self._terms.items()})
        self._check_ambient(other)
        bounds = self._ambient.dims
        product: dict[ExponentVector, Any] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                exps = tuple(a + b for a, b in zip(e1, e2))
                if any(e > m for e, m in zip(exps, bounds)):
                    continue
                product[exps] = product.get(exps, QQ.zero) + c1 * c2
        return ChowClass._from_canonical(self._ambient, product)

    __rmul__ = __mul__

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int) or exponent < 0:
            raise ExponentError(f"classes can only be raised to non-negative integer powers, got {exponent}")
        result = ChowClass.one(self._ambient)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            exponent >>= 1
            if exponent:
                base = base * base
        return result

    def _lift(self, scalar) -> "ChowClass":
        return ChowClass.one(self._ambient) * scalar

    def __eq__(self, other) -> bool:
        if isinstance(other, ChowClass):
            return self._ambient == other._ambient and self._terms == other._terms
        if isinstance(other, int) and not isinstance(other, bool):
            return self == self._lift(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._ambient, tuple(self._terms.items())))

    def to_text(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, coeff in self._terms.items():
            factors = [f"h{i + 1}^{e}" for i, e in enumerate(exps) if e > 0]
            parts.append(f"{coefficient_text(coeff)} * {'*'.join(factors) if factors else '1'}")
        return " + ".join(parts)

    def to_structured(self) -> list[dict[str, Any]]:
        return [
            {
                "exps": list(exps),
                "numerator": int(coeff.numerator),
                "denominator": int(coeff.denominator),
            }
            for exps, coeff in self._terms.items()
        ]

    def __str__(self) -> str:
        return self.to_text()

    def __repr__(self) -> str:
        return f"ChowClass({self._ambient.label()}: {self.to_text()})"


def _canonical(terms: dict) -> dict:
    return {exps: terms[exps] for exps in sorted(terms) if terms[exps] != 0}
