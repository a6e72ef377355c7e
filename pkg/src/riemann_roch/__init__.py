from src.riemann_roch.euler import (
    euler_char_ambient,
    euler_char_ambient_closed,
    euler_char_ci,
    k3_riemann_roch_h0,
    restricted_self_intersection,
    section_count,
)
from src.riemann_roch.models import CompleteIntersection, SectionCount

__all__ = [
    "CompleteIntersection",
    "SectionCount",
    "euler_char_ambient",
    "euler_char_ambient_closed",
    "euler_char_ci",
    "k3_riemann_roch_h0",
    "restricted_self_intersection",
    "section_count",
]
