from src.chow_ring.ambient import AmbientSpace
from src.chow_ring.chow_class import ChowClass, ExponentVector
from src.chow_ring.operations import (
    add,
    evaluate_series,
    exp_class,
    generator,
    grade_component,
    integrate,
    integrate_product,
    make_ambient,
    monomial_basis,
    mul,
)

__all__ = [
    "AmbientSpace",
    "ChowClass",
    "ExponentVector",
    "add",
    "evaluate_series",
    "exp_class",
    "generator",
    "grade_component",
    "integrate",
    "integrate_product",
    "make_ambient",
    "monomial_basis",
    "mul",
]
