from src.char_classes.bundles import Multidegree, SplitBundle
from src.char_classes.classes import (
    c1,
    chern_character,
    det_bundle,
    todd_ambient,
    todd_series_coefficients,
    top_chern,
    total_chern,
)

__all__ = [
    "Multidegree",
    "SplitBundle",
    "c1",
    "chern_character",
    "det_bundle",
    "todd_ambient",
    "todd_series_coefficients",
    "top_chern",
    "total_chern",
]
